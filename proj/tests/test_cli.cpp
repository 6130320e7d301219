#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "chaoscalc/commands.hpp"
#include "chaoscalc/presets.hpp"

using namespace chaoscalc;

namespace {

std::string temp_path(const std::string& name) {
  return std::string("cli_test_") + name;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::trunc);
  out << text;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const char* kAlternatingScenario = R"({
  "operator": {"kind": "alternating", "matrices": [[[1.0]], [[0.0]]]},
  "metric": "norm:euclidean",
  "vectors": [[1.0], [2.0]],
  "policy": {"kind": "canonical"},
  "config": {"horizon": 4000, "window": 40},
  "seed": 7
})";

}  // namespace

TEST_CASE("cmd_density emits the profile JSON") {
  auto r = cmd::cmd_density("periodic:2:{0}", 100000, 1000, true, "", 1000);
  CHECK(r.exit_code == cmd::kOk);
  CHECK(r.output.find("\"lower\":0.5") != std::string::npos);
  CHECK(r.output.find("\"mode\":\"exact\"") != std::string::npos);

  auto est = cmd::cmd_density("periodic:2:{0}", 20000, 100, false, "", 1000);
  CHECK(est.exit_code == cmd::kOk);
  CHECK(est.output.find("\"mode\":\"estimated\"") != std::string::npos);

  auto bad = cmd::cmd_density("bad:::", 1000, 10, false, "", 10);
  CHECK(bad.exit_code == cmd::kParseError);

  auto ncf = cmd::cmd_density(
      "inter(blocks:pos=geom(1,2):len=linear,blocks:pos=geom(1,3):len=linear)", 1000, 10, true,
      "", 10);
  CHECK(ncf.exit_code == cmd::kOk);
  CHECK(ncf.output.find("not_closed_form") != std::string::npos);
}

TEST_CASE("cmd_density writes a ratio CSV") {
  std::string csv = temp_path("ratio.csv");
  auto r = cmd::cmd_density("finite:{1}", 1000, 10, false, csv, 500);
  CHECK(r.exit_code == cmd::kOk);
  auto body = read_text(csv);
  CHECK(body.rfind("n,ratio\n", 0) == 0);
  CHECK(body.find("500,0.002") != std::string::npos);
  std::remove(csv.c_str());
}

TEST_CASE("cmd_classify on a scenario file") {
  std::string sc = temp_path("scenario.json");
  write_text(sc, kAlternatingScenario);
  std::string verdict = temp_path("verdict.json");
  std::string stats = temp_path("stats.csv");
  auto r = cmd::cmd_classify(sc, verdict, stats);
  CHECK(r.exit_code == cmd::kOk);
  CHECK(r.output.find("\"LY\": true") != std::string::npos);
  CHECK(r.output.find("\"sLY\": false") != std::string::npos);
  CHECK(read_text(stats).rfind("sigma,", 0) == 0);

  // malformed scenario: parse exit code
  std::string bad = temp_path("bad.json");
  write_text(bad, "{\"operator\": {\"kind\": \"nope\"}}");
  CHECK(cmd::cmd_classify(bad, "", "").exit_code == cmd::kParseError);
  CHECK(cmd::cmd_classify("no_such_file.json", "", "").exit_code == cmd::kParseError);

  std::remove(sc.c_str());
  std::remove(bad.c_str());
  std::remove(verdict.c_str());
  std::remove(stats.c_str());
}

TEST_CASE("cmd_classify reports a domain exit") {
  // member relation defined on span{e1} only; vector e2 exits at k=1
  const char* scenario = R"({
    "operator": {"kind": "explicit", "relations": [
      {"graph_basis": {"x_cols": [[1.0],[0.0]], "y_cols": [[1.0],[0.0]]}}
    ]},
    "metric": "norm:euclidean",
    "vectors": [[0.0, 1.0], [0.0, 2.0]],
    "config": {"horizon": 100, "window": 10},
    "seed": 7
  })";
  std::string sc = temp_path("domain.json");
  write_text(sc, scenario);
  auto r = cmd::cmd_classify(sc, "", "");
  CHECK(r.exit_code == cmd::kDomainError);
  CHECK(r.output.find("k=1") != std::string::npos);
  std::remove(sc.c_str());
}

TEST_CASE("cmd_examples runs the presets") {
  auto alt = cmd::cmd_examples("alternating", 20000);
  CHECK(alt.exit_code == cmd::kOk);
  CHECK(alt.output.find("ALL PASS") != std::string::npos);

  auto reci = cmd::cmd_examples("reci", 2000);
  CHECK(reci.exit_code == cmd::kOk);

  auto eigen = cmd::cmd_examples("eigen-witness", 2000);
  CHECK(eigen.exit_code == cmd::kOk);

  auto blockset = cmd::cmd_examples("blockset-banach", 100000);
  CHECK(blockset.exit_code == cmd::kOk);

  CHECK(cmd::cmd_examples("nope", 1000).exit_code == cmd::kParseError);
}

TEST_CASE("cmd_lattice and its self-test") {
  auto r = cmd::cmd_lattice(20, 7, false);
  CHECK(r.exit_code == cmd::kOk);
  CHECK(r.output.find("total violations: 0") != std::string::npos);

  // determinism: identical report bytes on replay
  auto r2 = cmd::cmd_lattice(20, 7, false);
  CHECK(r.output == r2.output);

  auto st = cmd::cmd_lattice(1, 7, true);
  CHECK(st.exit_code != cmd::kOk);
  CHECK(st.output.find("DC->") != std::string::npos);
}

TEST_CASE("cmd_orbit CSV") {
  std::string sc = temp_path("orbit_scenario.json");
  const char* scenario = R"({
    "operator": {"kind": "constant", "matrix": [[0.5]]},
    "metric": "norm:euclidean",
    "vectors": [[1.0]],
    "config": {"horizon": 16, "window": 4},
    "seed": 7
  })";
  write_text(sc, scenario);
  auto r = cmd::cmd_orbit(sc, "");
  CHECK(r.exit_code == cmd::kOk);
  CHECK(r.output.rfind("k,p_1\n", 0) == 0);
  CHECK(r.output.find("1,0.5\n") != std::string::npos);
  CHECK(r.output.find("2,0.25\n") != std::string::npos);
  std::remove(sc.c_str());

  // eigen-witness style scenario: the p_1 column doubles each row
  const char* doubling = R"({
    "operator": {"kind": "relation_powers", "relation": {"matrix": [[2.0, 0.0], [0.0, 0.25]]}},
    "metric": "norm:euclidean",
    "vectors": [[1.0, 0.0]],
    "config": {"horizon": 12, "window": 4},
    "seed": 7
  })";
  std::string sc2 = temp_path("orbit_doubling.json");
  write_text(sc2, doubling);
  auto r2 = cmd::cmd_orbit(sc2, "");
  CHECK(r2.exit_code == cmd::kOk);
  {
    std::istringstream rows(r2.output);
    std::string line;
    std::getline(rows, line);  // header
    double prev = 1.0;
    for (int k = 1; k <= 12; ++k) {
      std::getline(rows, line);
      double p = std::stod(line.substr(line.find(',') + 1));
      CHECK(p == doctest::Approx(2.0 * prev).epsilon(1e-9));
      prev = p;
    }
  }
  std::remove(sc2.c_str());

  // gated pair scenario: distance column is k|x-y| on the gate, 0 off it
  const char* gated = R"({
    "operator": {"kind": "scalar_gated", "gate": "periodic:2:{1}", "on": "k", "off": 0.0},
    "metric": "norm:euclidean",
    "vectors": [[1.0], [2.0]],
    "config": {"horizon": 10, "window": 2},
    "seed": 7
  })";
  std::string sc3 = temp_path("orbit_gated.json");
  write_text(sc3, gated);
  auto r3 = cmd::cmd_orbit(sc3, "");
  CHECK(r3.exit_code == cmd::kOk);
  CHECK(r3.output.rfind("k,p_1,d\n", 0) == 0);
  CHECK(r3.output.find("1,1,1\n") != std::string::npos);
  CHECK(r3.output.find("2,0,0\n") != std::string::npos);
  CHECK(r3.output.find("3,3,3\n") != std::string::npos);
  std::remove(sc3.c_str());
}

TEST_CASE("command determinism: byte-identical emissions under one seed") {
  std::string sc = temp_path("det_scenario.json");
  write_text(sc, kAlternatingScenario);
  std::string v1 = temp_path("v1.json"), v2 = temp_path("v2.json");
  std::string s1 = temp_path("s1.csv"), s2 = temp_path("s2.csv");
  CHECK(cmd::cmd_classify(sc, v1, s1).exit_code == cmd::kOk);
  CHECK(cmd::cmd_classify(sc, v2, s2).exit_code == cmd::kOk);
  CHECK(read_text(v1) == read_text(v2));
  CHECK(read_text(s1) == read_text(s2));
  for (const auto& p : {sc, v1, v2, s1, s2}) std::remove(p.c_str());
}
