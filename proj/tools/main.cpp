#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "chaoscalc/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"chaoscalc: densities on subsets of N, multivalued linear relation algebra, "
               "and finite-horizon chaos classification of orbit pairs"};
  app.require_subcommand(1);

  using chaoscalc::cmd::Int;

  // density
  std::string set_spec, csv_path;
  Int horizon = 100000, window = 1000, stride = 1000;
  bool exact = false;
  auto* density = app.add_subcommand("density", "density profile of a symbolic set");
  density->add_option("set", set_spec, "set spec, e.g. periodic:2:{0}")->required();
  density->add_option("--horizon", horizon, "scan horizon N");
  density->add_option("--window", window, "Banach window length S");
  density->add_flag("--exact", exact, "closed-form profile instead of estimates");
  density->add_option("--csv", csv_path, "write a prefix-ratio series CSV here");
  density->add_option("--stride", stride, "CSV stride");

  // classify
  std::string scenario_path, verdict_path, stats_path;
  auto* classify = app.add_subcommand("classify", "chaos verdict for a scenario file");
  classify->add_option("scenario", scenario_path, "scenario JSON path")->required();
  classify->add_option("--verdict", verdict_path, "write the verdict JSON here");
  classify->add_option("--stats", stats_path, "write the density-stats CSV here");

  // examples
  std::string preset;
  Int examples_horizon = 100000;
  auto* examples = app.add_subcommand("examples", "reproduce a named example preset");
  examples->add_option("preset", preset, "preset id")->required();
  examples->add_option("--horizon", examples_horizon, "horizon");

  // lattice
  int samples = 200;
  std::uint64_t seed = 7;
  bool self_test = false;
  auto* lattice = app.add_subcommand("lattice", "implication-lattice check on random scenarios");
  lattice->add_option("--samples", samples, "number of scenarios");
  lattice->add_option("--seed", seed, "base seed");
  lattice->add_flag("--self-test", self_test, "inject a violation and report the edge");

  // orbit
  std::string orbit_scenario, orbit_csv;
  auto* orbit = app.add_subcommand("orbit", "emit per-step seminorms and distances");
  orbit->add_option("scenario", orbit_scenario, "scenario JSON path")->required();
  orbit->add_option("--csv", orbit_csv, "write the orbit CSV here");

  CLI11_PARSE(app, argc, argv);

  chaoscalc::cmd::Result result;
  try {
    if (app.got_subcommand(density)) {
      result = chaoscalc::cmd::cmd_density(set_spec, horizon, window, exact, csv_path, stride);
    } else if (app.got_subcommand(classify)) {
      result = chaoscalc::cmd::cmd_classify(scenario_path, verdict_path, stats_path);
    } else if (app.got_subcommand(examples)) {
      result = chaoscalc::cmd::cmd_examples(preset, examples_horizon);
    } else if (app.got_subcommand(lattice)) {
      result = chaoscalc::cmd::cmd_lattice(samples, seed, self_test);
    } else if (app.got_subcommand(orbit)) {
      result = chaoscalc::cmd::cmd_orbit(orbit_scenario, orbit_csv);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cout << result.output;
  return result.exit_code;
}
