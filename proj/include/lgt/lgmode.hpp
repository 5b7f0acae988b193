#pragma once

// Standing-wave superposition of the counter-rotating LG_{l,p} and LG_{-l,p}
// cavity modes, represented directly by its intensity profile
//
//   |psi|^2 = A (w0/w)^2 u^|l| e^-u [L_p^|l|(u)]^2 cos^2(kz) cos^2(l(phi - phi')),
//   u = 2 r^2 / w(z)^2,  A = 2 p! / ((1 + delta_l0) (|l| + p)!).
//
// The profile is dimensionless; only ratios of its integrals carry physics.

#include <vector>

#include "lgt/quadrature.hpp"

namespace lgt {

struct CylindricalPoint {
  double r = 0.0;
  double phi = 0.0;  // reduced to [0, 2 pi)
  double z = 0.0;

  /// Throws std::invalid_argument for r < 0 or non-finite coordinates.
  static CylindricalPoint make(double r, double phi, double z);
  static CylindricalPoint from_cartesian(double x, double y, double z);
};

class LGMode {
 public:
  /// Throws std::invalid_argument unless wavelength > 0, waist > 0, p >= 0.
  LGMode(int l, int p, double wavelength, double waist, double phase_offset = 0.0);

  int l() const { return l_; }
  int abs_l() const { return l_ < 0 ? -l_ : l_; }
  int p() const { return p_; }
  double wavelength() const { return wavelength_; }
  double waist() const { return waist_; }
  double phase_offset() const { return phase_offset_; }

  double wavenumber() const;
  double rayleigh_range() const;
  /// A_{l,p}; underflows to 0 only for extreme indices, use log_normalization there.
  double normalization() const;
  double log_normalization() const;

  LGMode with_indices(int l, int p) const { return {l, p, wavelength_, waist_, phase_offset_}; }
  LGMode with_phase_offset(double phase) const { return {l_, p_, wavelength_, waist_, phase}; }

  /// phi' = pi / (4|l|), where the angular intensity slope is largest at phi = 0.
  static double linear_phase_offset(int l);

 private:
  int l_;
  int p_;
  double wavelength_;
  double waist_;
  double phase_offset_;
};

double beam_width(const LGMode& mode, double z);

/// |psi|^2 at an arbitrary point.
double intensity(const LGMode& mode, const CylindricalPoint& pt);

/// A u^|l| e^-u [L_p^|l|(u)]^2 as a function of u = 2 r^2 / w^2. Composed in log
/// space once |L| exceeds 1e100.
double radial_profile_u(const LGMode& mode, double u);

/// cos^2(l (phi - phi')).
double angular_factor(const LGMode& mode, double phi);

/// Closed-form integral of angular_factor over [phi_a, phi_b].
double angular_integral(const LGMode& mode, double phi_a, double phi_b);

/// Value of u past which the radial profile is negligible (tail below e^-60 of its mass).
double radial_cutoff_u(const LGMode& mode);

/// Classical turning radius w0 sqrt(|l| + 2p + 1); the outermost lobe sits inside it.
double outer_radius(const LGMode& mode);

/// Innermost radial intensity maximum at z = 0. Closed form w0 sqrt(|l|/2) for p = 0,
/// radial_max_scan otherwise.
double radial_max(const LGMode& mode);

/// 2048-sample scan of [0, w0 sqrt(2(|l| + 2p + 1))] for the first local maximum,
/// refined by golden-section search.
double radial_max_scan(const LGMode& mode);

/// int_0^r_max int_0^2pi |psi|^2 / cos^2(l(phi - phi')) r dr at z = 0, i.e. the
/// radial part of the transverse power inside radius r_max.
quad::Result radial_power(const LGMode& mode, double r_max, const quad::Options& opts = {});

/// Transverse integral of |psi|^2 over the full plane at fixed z. Equals
/// (pi w0^2 / 2) cos^2(kz) for every (l, p). Throws QuadratureError on non-convergence.
double transverse_norm(const LGMode& mode, double z, const quad::Options& opts = {});

struct GridSpec {
  int nx = 512;
  int ny = 512;
  double x_min = -1.0;
  double x_max = 1.0;
  double y_min = -1.0;
  double y_max = 1.0;

  double x(int ix) const { return nx == 1 ? x_min : x_min + (x_max - x_min) * ix / (nx - 1); }
  double y(int iy) const { return ny == 1 ? y_min : y_min + (y_max - y_min) * iy / (ny - 1); }
  static GridSpec square(double half_width, int n);
};

/// Samples at z = 0, row-major with y as the slow index.
struct FieldMap {
  GridSpec grid;
  std::vector<double> values;

  double at(int ix, int iy) const { return values[static_cast<std::size_t>(iy) * grid.nx + ix]; }
};

/// n x n over [-1.2 r_outer, 1.2 r_outer]^2 with r_outer = outer_radius(mode).
GridSpec default_map_grid(const LGMode& mode, int n = 512);

/// Throws std::invalid_argument for non-positive resolution or empty extents.
FieldMap intensity_map(const LGMode& mode, const GridSpec& grid);

/// Interior samples larger than all 8 neighbours (ties broken in scan order)
/// and above rel_threshold times the global maximum.
int count_local_maxima(const FieldMap& map, double rel_threshold = 1e-9);

}  // namespace lgt
