#pragma once

#include <cstdint>
#include <string>

#include "chaoscalc/natset.hpp"

namespace chaoscalc::cmd {

using Int = natset::Int;

// Exit codes shared by every subcommand.
constexpr int kOk = 0;
constexpr int kParseError = 2;
constexpr int kDomainError = 3;
constexpr int kFlagMismatch = 4;

struct Result {
  int exit_code = kOk;
  std::string output;  // text for standard output
};

Result cmd_density(const std::string& set_spec, Int horizon, Int window, bool exact,
                   const std::string& csv_path, Int stride);
Result cmd_classify(const std::string& scenario_path, const std::string& verdict_path,
                    const std::string& stats_path);
Result cmd_examples(const std::string& preset_name, Int horizon);
Result cmd_lattice(int samples, std::uint64_t seed, bool inject_violation);
Result cmd_orbit(const std::string& scenario_path, const std::string& csv_path);

void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace chaoscalc::cmd
