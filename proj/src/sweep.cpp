#include "lgt/sweep.hpp"

#include <cmath>
#include <exception>
#include <stdexcept>

#include "lgt/constants.hpp"
#include "lgt/errors.hpp"

namespace lgt {

double PhaseRule::offset_for(int l) const {
  switch (kind) {
    case Kind::linear_point: return l == 0 ? 0.0 : LGMode::linear_phase_offset(l);
    case Kind::quadratic_point: return 0.0;
    case Kind::fixed: return value;
  }
  return 0.0;
}

double SweepRow::g_hz() const { return g / (2.0 * kPi); }

const SweepRow* SweepResult::find(int l, int p) const {
  for (const auto& row : rows)
    if (row.l == l && row.p == p) return &row;
  return nullptr;
}

LGMode sweep_mode(const LGMode& mode_template, const SweepConfig& cfg, int l, int p) {
  return mode_template.with_indices(l, p).with_phase_offset(cfg.phase.offset_for(l));
}

Windmill sweep_windmill(const Windmill& wm_template, const SweepConfig& cfg, int l) {
  return wm_template.with_spokes(cfg.spokes.spokes_for(l));
}

SweepResult sweep(const LGMode& mode_template, const Windmill& wm_template, const Cavity& cavity,
                  const SweepConfig& cfg) {
  if (cfg.l_values.empty() || cfg.p_values.empty()) throw std::invalid_argument("sweep: ranges must be non-empty");
  SweepResult result;
  const int np = static_cast<int>(cfg.p_values.size());
  const int n = static_cast<int>(cfg.l_values.size()) * np;
  result.rows.resize(static_cast<std::size_t>(n));
  parallel_for(n, cfg.threads, [&](int i) {
    auto& row = result.rows[static_cast<std::size_t>(i)];
    row.l = cfg.l_values[static_cast<std::size_t>(i / np)];
    row.p = cfg.p_values[static_cast<std::size_t>(i % np)];
    try {
      const auto mode = sweep_mode(mode_template, cfg, row.l, row.p);
      const auto wm = sweep_windmill(wm_template, cfg, row.l);
      const auto c = coupling_linear(mode, wm, cavity, cfg.coupling);
      row.g = std::fabs(c.g);
      row.g_ratio = std::fabs(c.g_ratio);
      row.zeta = scattering_ratio(mode, wm, {cavity.equilibrium_angle}, cfg.coupling.quadrature);
      if (cfg.decoherence.gamma_cav) row.gamma = decoherence_rate(cfg.decoherence, row.zeta);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  });
  return result;
}

OptimalP find_optimal_p(const LGMode& mode_template, const Windmill& wm_template, const Cavity& cavity, int l,
                        int p_max, const SweepConfig& cfg) {
  if (p_max < 0) throw std::invalid_argument("find_optimal_p: p_max must be >= 0");
  SweepConfig local = cfg;
  local.l_values = {l};
  local.p_values.clear();
  for (int p = 0; p <= p_max; ++p) local.p_values.push_back(p);
  const auto res = sweep(mode_template, wm_template, cavity, local);
  OptimalP best{-1, -1.0, 0.0};
  for (const auto& row : res.rows) {
    if (!row.error.empty()) throw NumericError("find_optimal_p: cell p=" + std::to_string(row.p) + " failed: " + row.error);
    if (row.g > best.g) best = {row.p, row.g, row.g_ratio};
  }
  return best;
}

}  // namespace lgt
