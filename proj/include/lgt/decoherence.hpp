#pragma once

// Photon-scattering decoherence rescaled to the rotor footprint:
// Gamma_{l,p} = zeta_{l,p} Gamma_cav, where zeta is the fraction of the
// transverse mode power at z = 0 intercepted by the windmill cross-section.
// Gamma_cav itself is an external input.

#include <optional>
#include <string>

#include "lgt/lgmode.hpp"
#include "lgt/quadrature.hpp"
#include "lgt/windmill.hpp"

namespace lgt {

struct DecoherenceInput {
  std::optional<double> gamma_cav;  // 1/s, same convention as g in Hz
  std::string beam_power_note;
};

inline constexpr double kDefaultFeasibilityThreshold = 0.05;

/// zeta in [0, 1]: footprint power over the full-plane power pi w0^2 / 2.
double scattering_ratio(const LGMode& mode, const Windmill& wm, RotorPose pose = {},
                        const quad::Options& opts = {.abs_tol = 1e-12, .rel_tol = 1e-10});

/// The same ratio for a full disk of radius R.
double disk_scattering_ratio(const LGMode& mode, double radius,
                             const quad::Options& opts = {.abs_tol = 1e-12, .rel_tol = 1e-10});

/// zeta * Gamma_cav. Throws std::invalid_argument if zeta is outside [0, 1] or
/// the input carries no Gamma_cav.
double decoherence_rate(const DecoherenceInput& input, double zeta);

/// Gamma / g. g = 0 yields +infinity; negative g or Gamma is rejected.
double feasibility_margin(double g, double gamma);

bool is_feasible(double margin, double threshold = kDefaultFeasibilityThreshold);

/// Gamma_cav that puts the reference scenario's rate at target_rate.
double calibrate_gamma_cav(double reference_zeta, double target_rate);

}  // namespace lgt
