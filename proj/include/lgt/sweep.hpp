#pragma once

// (l, p) parameter sweeps and the optimal radial index search.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lgt/coupling.hpp"
#include "lgt/decoherence.hpp"

namespace lgt {

/// How phi' follows l across a sweep.
struct PhaseRule {
  enum class Kind { linear_point, quadratic_point, fixed } kind = Kind::linear_point;
  double value = 0.0;  // used by Kind::fixed

  double offset_for(int l) const;
};

/// Rotor spoke count across a sweep: matched to the optical l (windmill) or
/// held fixed (e.g. the single-rod rotor with one spoke).
struct SpokeRule {
  std::optional<int> fixed;

  int spokes_for(int l) const { return fixed ? *fixed : std::max(1, l < 0 ? -l : l); }
};

struct SweepConfig {
  std::vector<int> l_values;
  std::vector<int> p_values;
  PhaseRule phase;
  SpokeRule spokes;
  DecoherenceInput decoherence;
  CouplingOptions coupling;
  int threads = 1;
};

struct SweepRow {
  int l = 0;
  int p = 0;
  double g = 0.0;        // |g|, rad/s
  double g_ratio = 0.0;  // |g| / B
  double zeta = 0.0;
  std::optional<double> gamma;  // 1/s, present when Gamma_cav is known
  std::string error;            // empty on success

  double g_hz() const;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // l-major, p-minor

  const SweepRow* find(int l, int p) const;
};

/// The mode and rotor a sweep cell uses.
LGMode sweep_mode(const LGMode& mode_template, const SweepConfig& cfg, int l, int p);
Windmill sweep_windmill(const Windmill& wm_template, const SweepConfig& cfg, int l);

/// Cells run on cfg.threads workers; output order and values do not depend on
/// the thread count. Cell failures land in SweepRow::error.
SweepResult sweep(const LGMode& mode_template, const Windmill& wm_template, const Cavity& cavity,
                  const SweepConfig& cfg);

struct OptimalP {
  int p = 0;
  double g = 0.0;  // |g|, rad/s
  double g_ratio = 0.0;
};

/// Exhaustive scan of p in [0, p_max]; ties go to the smaller p.
OptimalP find_optimal_p(const LGMode& mode_template, const Windmill& wm_template, const Cavity& cavity, int l,
                        int p_max, const SweepConfig& cfg);

/// Runs fn(i) for i in [0, n) over the given number of worker threads.
template <class Fn>
void parallel_for(int n, int threads, Fn&& fn);

}  // namespace lgt

#include "lgt/detail/parallel_for.hpp"
