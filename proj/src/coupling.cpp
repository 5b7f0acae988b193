#include "lgt/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lgt/constants.hpp"
#include "lgt/errors.hpp"
#include "lgt/specfun.hpp"

namespace lgt {
namespace {

RotorPose at_equilibrium(const Cavity& cavity, double delta) { return {cavity.equilibrium_angle + delta}; }

quad::Result checked_radial_power(const LGMode& mode, const Windmill& wm, const CouplingOptions& opts) {
  auto radial = radial_power(mode, wm.radius(), opts.quadrature);
  if (radial.rel_error() > opts.overlap_tolerance && radial.abs_error > opts.quadrature.abs_tol)
    throw QuadratureError("radial overlap quadrature exceeded tolerance", radial.rel_error());
  return radial;
}

// -(eps - 1) / (2 N) * (z integral) * (radial integral): everything in Delta
// except the angular footprint factor.
struct ShiftFactors {
  double prefactor = 0.0;
  double rel_error = 0.0;
};

ShiftFactors shift_factors(const LGMode& mode, const Windmill& wm, const Cavity& cavity,
                           const CouplingOptions& opts) {
  const auto radial = checked_radial_power(mode, wm, opts);
  const double z_int = thickness_integral(mode.wavenumber(), wm.thickness(), opts.thickness);
  const double norm = mode_norm_total(mode, cavity);
  return {-(wm.epsilon() - 1.0) * z_int * radial.value / (2.0 * norm), radial.rel_error()};
}

// Largest angular slope any phase offset could produce: sets the scale below
// which a derivative counts as zero.
double max_angular_slope(const LGMode& mode, const Windmill& wm) {
  return wm.wedges() * std::fabs(std::sin(2.0 * mode.abs_l() * wm.half_angle()));
}

}  // namespace

std::string to_string(CouplingMethod m) {
  switch (m) {
    case CouplingMethod::semi_analytic: return "semi-analytic";
    case CouplingMethod::finite_difference: return "finite-difference";
    case CouplingMethod::closed_form_p0: return "closed-form-p0";
  }
  return "unknown";
}

std::string to_string(ThicknessModel m) { return m == ThicknessModel::exact ? "exact" : "thin-slab"; }

double CouplingResult::g_hz() const { return std::fabs(g) / (2.0 * kPi); }

double thickness_integral(double wavenumber, double thickness, ThicknessModel model) {
  if (model == ThicknessModel::thin_slab) return thickness;
  return 0.5 * thickness + std::sin(wavenumber * thickness) / (2.0 * wavenumber);
}

quad::Result dielectric_overlap(const LGMode& mode, const Windmill& wm, RotorPose pose, const CouplingOptions& opts) {
  auto radial = checked_radial_power(mode, wm, opts);
  const double scale = thickness_integral(mode.wavenumber(), wm.thickness(), opts.thickness) *
                       footprint_angular_integral(wm, pose, mode);
  radial.value *= scale;
  radial.abs_error *= std::fabs(scale);
  return radial;
}

double mode_norm_total(const LGMode& mode, const Cavity& cavity) {
  return 0.5 * kPi * mode.waist() * mode.waist() * 0.5 * cavity.length;
}

double frequency_shift(const LGMode& mode, const Windmill& wm, const Cavity& cavity, RotorPose pose,
                       const CouplingOptions& opts) {
  if (wm.epsilon() == 1.0) return 0.0;
  const auto overlap = dielectric_overlap(mode, wm, {cavity.equilibrium_angle + pose.delta}, opts);
  return -(wm.epsilon() - 1.0) * overlap.value / (2.0 * mode_norm_total(mode, cavity));
}

double zero_point_angle(const Windmill& wm, const Cavity& cavity) {
  return std::sqrt(kHbar / (moment_of_inertia(wm) * cavity.omega_phi));
}

double coupling_scale_B(const Windmill& wm, const Cavity& cavity) {
  const double r = wm.radius();
  return (wm.epsilon() - 1.0) * (wm.arc_length() * wm.thickness() / (kPi * r * cavity.length)) * cavity.omega_c0 *
         std::sqrt(kHbar / (wm.total_mass() * r * r * cavity.omega_phi));
}

CouplingResult coupling_finite_difference(const LGMode& mode, const Windmill& wm, const Cavity& cavity,
                                          const CouplingOptions& opts) {
  cavity.validate();
  CouplingResult res;
  res.method = CouplingMethod::finite_difference;
  res.B = coupling_scale_B(wm, cavity);
  if (wm.epsilon() == 1.0) return res;
  const double h = opts.fd_step;
  const double plus = frequency_shift(mode, wm, cavity, {h}, opts);
  const double minus = frequency_shift(mode, wm, cavity, {-h}, opts);
  res.slope = cavity.omega_c0 * (plus - minus) / (2.0 * h);
  res.g = zero_point_angle(wm, cavity) * res.slope;
  res.g_ratio = res.B != 0.0 ? res.g / res.B : 0.0;
  res.quadrature_error = shift_factors(mode, wm, cavity, opts).rel_error;
  return res;
}

CouplingResult coupling_linear(const LGMode& mode, const Windmill& wm, const Cavity& cavity,
                               const CouplingOptions& opts) {
  cavity.validate();
  CouplingResult res;
  res.method = CouplingMethod::semi_analytic;
  res.B = coupling_scale_B(wm, cavity);
  if (wm.epsilon() == 1.0) return res;

  const auto factors = shift_factors(mode, wm, cavity, opts);
  const double angular_slope = footprint_angular_slope(wm, at_equilibrium(cavity, 0.0), mode);
  res.slope = cavity.omega_c0 * factors.prefactor * angular_slope;
  res.g = zero_point_angle(wm, cavity) * res.slope;
  res.g_ratio = res.B != 0.0 ? res.g / res.B : 0.0;
  res.quadrature_error = factors.rel_error;

  const auto fd = coupling_finite_difference(mode, wm, cavity, opts);
  res.g_cross_check = fd.g;
  const double diff = std::fabs(res.g - fd.g);
  const double scale = std::max(std::fabs(res.g), std::fabs(fd.g));
  res.cross_check_diff = scale > 0.0 ? diff / scale : 0.0;
  const double zero_floor = 1e-9 * zero_point_angle(wm, cavity) * cavity.omega_c0 * std::fabs(factors.prefactor) *
                            max_angular_slope(mode, wm);
  if (diff > opts.cross_check_tolerance * scale && diff > zero_floor)
    throw NumericError("coupling_linear: semi-analytic and finite-difference couplings disagree (relative " +
                       std::to_string(res.cross_check_diff) + ")");
  return res;
}

QuadraticCoupling coupling_quadratic(const LGMode& mode, const Windmill& wm, const Cavity& cavity,
                                     const CouplingOptions& opts) {
  cavity.validate();
  QuadraticCoupling res;
  if (wm.epsilon() == 1.0) return res;
  const double h = opts.fd_step_second;
  auto shift = [&](double d) { return frequency_shift(mode, wm, cavity, {d}, opts); };
  const double f0 = shift(0.0);
  const double f1p = shift(h), f1m = shift(-h);
  const double f2p = shift(2.0 * h), f2m = shift(-2.0 * h);
  const double f4p = shift(4.0 * h), f4m = shift(-4.0 * h);
  const double d2_h = (-f2p + 16.0 * f1p - 30.0 * f0 + 16.0 * f1m - f2m) / (12.0 * h * h);
  const double d2_2h = (-f4p + 16.0 * f2p - 30.0 * f0 + 16.0 * f2m - f4m) / (48.0 * h * h);

  res.second_derivative = cavity.omega_c0 * d2_h;
  const double zpa = zero_point_angle(wm, cavity);
  res.coefficient = 0.5 * zpa * zpa * res.second_derivative;

  // Richardson estimate of the O(h^4) truncation plus a rounding floor.
  const double truncation = std::fabs(d2_h - d2_2h) / 15.0;
  const double rounding = 64.0 * 2.2e-16 * std::fabs(f0) / (12.0 * h * h);
  const auto factors = shift_factors(mode, wm, cavity, opts);
  const double scale = std::fabs(factors.prefactor) * wm.wedges() * 2.0 * std::max(1, mode.abs_l()) *
                       std::fabs(std::sin(2.0 * std::max(1, mode.abs_l()) * wm.half_angle()));
  const double reference = std::max(std::fabs(d2_h), 1e-4 * scale);
  res.rel_error = reference > 0.0 ? (truncation + rounding) / reference : 0.0;
  if (res.rel_error > opts.quadratic_tolerance)
    throw NumericError("coupling_quadratic: stencil noise estimate " + std::to_string(res.rel_error) +
                       " exceeds tolerance");
  return res;
}

double closed_form_ratio_p0(int l, double r_over_w0) {
  if (l == 0) throw std::invalid_argument("closed_form_ratio_p0: l = 0 has no (|l|-1)!");
  if (!(r_over_w0 >= 0.0)) throw std::invalid_argument("closed_form_ratio_p0: R/w0 must be >= 0");
  const int al = std::abs(l);
  const double a = al + 1.0;
  const double x = 2.0 * r_over_w0 * r_over_w0;
  // Gamma(a) - Gamma(a, x) is the lower incomplete gamma; evaluated directly to avoid cancellation.
  const double numerator = std::isinf(x) ? specfun::gamma_complete(a) : specfun::gamma_lower_incomplete(a, x);
  const double denominator = (1.0 / al) * specfun::factorial(al - 1) * 1.0;  // (1 + delta_l0) = 1 for l != 0
  return numerator / denominator;
}

CouplingResult coupling_analytic_p0(const LGMode& mode, const Windmill& wm, const Cavity& cavity) {
  if (mode.p() != 0) throw std::invalid_argument("coupling_analytic_p0: requires p = 0");
  if (mode.l() == 0) throw std::invalid_argument("coupling_analytic_p0: requires l != 0");
  cavity.validate();
  CouplingResult res;
  res.method = CouplingMethod::closed_form_p0;
  res.B = coupling_scale_B(wm, cavity);
  res.g_ratio = closed_form_ratio_p0(mode.l(), wm.radius() / mode.waist());
  res.g = res.B * res.g_ratio;
  return res;
}

}  // namespace lgt
