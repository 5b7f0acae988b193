#pragma once

// Optomechanical coupling between the windmill and the standing LG mode.
//
// The dielectric pulls the cavity resonance by
//
//   omega_c(delta) / omega_c0 = 1 + Delta(delta),
//   Delta = -(eps - 1) int_V |psi|^2 dV / (2 int_cavity |psi|^2 dV),
//
// and the linear coupling is g = sqrt(hbar / (I omega_phi)) d omega_c / d delta
// at the equilibrium angle. The volume integral factorizes into an exact
// thickness integral of cos^2(kz), a closed-form angular integral per wedge,
// and a 1-D radial quadrature.
//
// Units: every omega and g is angular (rad/s). Hz-equivalents are g / 2 pi.

#include <string>

#include "lgt/cavity.hpp"
#include "lgt/lgmode.hpp"
#include "lgt/quadrature.hpp"
#include "lgt/windmill.hpp"

namespace lgt {

enum class ThicknessModel { exact, thin_slab };
enum class CouplingMethod { semi_analytic, finite_difference, closed_form_p0 };

std::string to_string(CouplingMethod m);
std::string to_string(ThicknessModel m);

struct CouplingOptions {
  quad::Options quadrature{.abs_tol = 1e-10, .rel_tol = 1e-10, .initial_panels = 1, .max_panels = 20000};
  double fd_step = 1e-5;           // rad, first derivative
  double fd_step_second = 1e-4;    // rad, second derivative
  ThicknessModel thickness = ThicknessModel::exact;
  double overlap_tolerance = 1e-8;      // relative, quadrature acceptance
  double cross_check_tolerance = 1e-4;  // relative, semi-analytic vs finite difference
  double quadratic_tolerance = 1e-2;    // relative, stencil noise
};

struct CouplingResult {
  double g = 0.0;        // rad/s, signed
  double g_ratio = 0.0;  // g / B; 0 when B vanishes (eps = 1)
  CouplingMethod method = CouplingMethod::semi_analytic;
  double quadrature_error = 0.0;  // relative
  double slope = 0.0;             // d omega_c / d delta, rad/s per rad
  double B = 0.0;                 // rad/s
  double g_cross_check = 0.0;     // finite-difference g, when computed
  double cross_check_diff = 0.0;  // relative disagreement of the two paths

  double g_hz() const;  // |g| / 2 pi
};

struct QuadraticCoupling {
  double coefficient = 0.0;        // (1/2) (hbar / (I omega_phi)) d^2 omega_c / d delta^2, rad/s
  double second_derivative = 0.0;  // d^2 omega_c / d delta^2, rad/s per rad^2
  double rel_error = 0.0;          // stencil noise estimate
};

/// int cos^2(kz) dz over [-h/2, h/2]: h/2 + sin(kh)/(2k) exactly, or h for thin_slab.
double thickness_integral(double wavenumber, double thickness, ThicknessModel model);

/// int_V |psi|^2 dV over the rotor volume at the given pose (m^3). The (eps - 1)
/// factor is not applied. Throws QuadratureError past options.overlap_tolerance.
quad::Result dielectric_overlap(const LGMode& mode, const Windmill& wm, RotorPose pose,
                                const CouplingOptions& opts = {});

/// int over the cavity of |psi|^2 = (pi w0^2 / 2)(D / 2), flat-beam approximation.
double mode_norm_total(const LGMode& mode, const Cavity& cavity);

/// Relative resonance shift Delta at rotor angle phi_0 + delta.
double frequency_shift(const LGMode& mode, const Windmill& wm, const Cavity& cavity, RotorPose pose,
                       const CouplingOptions& opts = {});

/// sqrt(hbar / (I omega_phi)).
double zero_point_angle(const Windmill& wm, const Cavity& cavity);

/// B = (eps - 1)(s h / (pi R D)) omega_c0 sqrt(hbar / (M R^2 omega_phi)), with M the
/// total rotor mass so that the square root is the zero-point angle.
double coupling_scale_B(const Windmill& wm, const Cavity& cavity);

/// Linear coupling at the equilibrium angle, reported from the edge-difference
/// (Leibniz) derivative and cross-checked by a central difference of
/// frequency_shift. Throws NumericError if the two disagree beyond tolerance.
CouplingResult coupling_linear(const LGMode& mode, const Windmill& wm, const Cavity& cavity,
                               const CouplingOptions& opts = {});

/// Central difference of frequency_shift only.
CouplingResult coupling_finite_difference(const LGMode& mode, const Windmill& wm, const Cavity& cavity,
                                          const CouplingOptions& opts = {});

/// Second-order coupling from a 5-point stencil of frequency_shift. Throws
/// NumericError when the stencil noise estimate exceeds opts.quadratic_tolerance.
QuadraticCoupling coupling_quadratic(const LGMode& mode, const Windmill& wm, const Cavity& cavity,
                                     const CouplingOptions& opts = {});

/// [Gamma(l+1) - Gamma(l+1, 2 (R/w0)^2)] / [l^-1 (l-1)! (1 + delta_l0)] for l >= 1.
double closed_form_ratio_p0(int l, double r_over_w0);

/// Closed-form p = 0 coupling: g = B * closed_form_ratio_p0. Rejects p != 0 and l = 0.
CouplingResult coupling_analytic_p0(const LGMode& mode, const Windmill& wm, const Cavity& cavity);

}  // namespace lgt
