#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chaoscalc/scenario.hpp"

namespace chaoscalc::presets {

using Int = natset::Int;

enum class PresetId { PrimeranA, PrimeranB, Alternating, EigenWitness, Reci, BlocksetBanach };

std::optional<PresetId> preset_from_name(const std::string& name);
std::string preset_name(PresetId id);
std::vector<std::string> preset_names();

/// Classification presets carry an expected flag table; the remaining
/// presets run their own checks inside run_preset.
struct Preset {
  PresetId id;
  scenario::Scenario scenario;
  std::map<classify::Flag, bool> expected_flags;
};

Preset make_preset(PresetId id, Int horizon);

struct PresetRun {
  bool all_pass = false;
  std::string report;  // one PASS/FAIL line per checked item
};

PresetRun run_preset(PresetId id, Int horizon);

}  // namespace chaoscalc::presets
