#include "lgt/decoherence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lgt/constants.hpp"
#include "lgt/errors.hpp"

namespace lgt {
namespace {

double full_plane_power(const LGMode& mode) { return 0.5 * kPi * mode.waist() * mode.waist(); }

double converged_radial(const LGMode& mode, double radius, const quad::Options& opts) {
  quad::Options o = opts;
  const auto radial = radial_power(mode, radius, o);
  if (!radial.converged) throw QuadratureError("scattering_ratio: radial quadrature did not converge", radial.rel_error());
  return radial.value;
}

}  // namespace

double scattering_ratio(const LGMode& mode, const Windmill& wm, RotorPose pose, const quad::Options& opts) {
  const double numerator = footprint_angular_integral(wm, pose, mode) * converged_radial(mode, wm.radius(), opts);
  return std::clamp(numerator / full_plane_power(mode), 0.0, 1.0);
}

double disk_scattering_ratio(const LGMode& mode, double radius, const quad::Options& opts) {
  const double angular = angular_integral(mode, 0.0, 2.0 * kPi);
  return std::clamp(angular * converged_radial(mode, radius, opts) / full_plane_power(mode), 0.0, 1.0);
}

double decoherence_rate(const DecoherenceInput& input, double zeta) {
  if (!(zeta >= 0.0 && zeta <= 1.0)) throw std::invalid_argument("decoherence_rate: zeta must lie in [0, 1]");
  if (!input.gamma_cav) throw std::invalid_argument("decoherence_rate: no Gamma_cav supplied");
  if (*input.gamma_cav < 0.0) throw std::invalid_argument("decoherence_rate: Gamma_cav must be >= 0");
  return zeta * *input.gamma_cav;
}

double feasibility_margin(double g, double gamma) {
  if (g < 0.0 || gamma < 0.0) throw std::invalid_argument("feasibility_margin: rates must be non-negative");
  if (gamma == 0.0) return 0.0;
  if (g == 0.0) return std::numeric_limits<double>::infinity();
  return gamma / g;
}

bool is_feasible(double margin, double threshold) { return margin < threshold; }

double calibrate_gamma_cav(double reference_zeta, double target_rate) {
  if (!(reference_zeta > 0.0)) throw std::invalid_argument("calibrate_gamma_cav: reference zeta must be > 0");
  return target_rate / reference_zeta;
}

}  // namespace lgt
