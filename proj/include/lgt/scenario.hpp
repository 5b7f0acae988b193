#pragma once

// Scenario files: flat "key = value unit" lines, '#' comments, one key per
// line, unknown or repeated keys rejected. Dimensional values must carry a
// unit, e.g. "waist = 20 um", "omega_phi = 5e4 rad/s".

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "lgt/coupling.hpp"
#include "lgt/decoherence.hpp"
#include "lgt/sweep.hpp"

namespace lgt {

struct IndexRange {
  int first = 0;
  int last = 0;

  std::vector<int> values() const;
};

struct Scenario {
  LGMode mode;
  Windmill windmill;
  Cavity cavity;
  DecoherenceInput decoherence;
  PhaseRule phase;
  SpokeRule spokes;
  CouplingOptions coupling;
  IndexRange sweep_l{1, 5};
  IndexRange sweep_p{0, 30};
  IndexRange fig2_l{1, 10};
  int optimize_p_max = 30;
  double feasibility_threshold = kDefaultFeasibilityThreshold;
  std::string output_dir = "out";
  std::uint64_t hash = 0;  // FNV-1a over the canonical key=value listing

  std::string hash_hex() const;
  SweepConfig sweep_config(int threads) const;
};

/// Throws ConfigError naming the offending key or line.
Scenario parse_scenario(std::string_view text, const std::string& origin = "<scenario>");
Scenario load_scenario(const std::filesystem::path& path);

/// Value in SI units for a quantity string such as "20 um" or "50 kHz".
/// kind is one of: length, angle, angular_frequency, rate, mass.
double parse_quantity(std::string_view text, std::string_view kind);

}  // namespace lgt
