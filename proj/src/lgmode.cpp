#include "lgt/lgmode.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "lgt/constants.hpp"
#include "lgt/errors.hpp"
#include "lgt/specfun.hpp"

namespace lgt {
namespace {

constexpr double kLogComposeThreshold = 1e100;
constexpr int kScanSamples = 2048;

double reduce_angle(double phi) {
  double r = std::fmod(phi, 2.0 * kPi);
  if (r < 0.0) r += 2.0 * kPi;
  if (r >= 2.0 * kPi) r = 0.0;
  return r;
}

double radial_profile_r0(const LGMode& mode, double r) {
  const double w0 = mode.waist();
  return radial_profile_u(mode, 2.0 * r * r / (w0 * w0));
}

double golden_section_max(const LGMode& mode, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = radial_profile_r0(mode, c);
  double fd = radial_profile_r0(mode, d);
  for (int i = 0; i < 200 && (b - a) > 1e-15 * mode.waist(); ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = radial_profile_r0(mode, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = radial_profile_r0(mode, d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

CylindricalPoint CylindricalPoint::make(double r, double phi, double z) {
  if (!std::isfinite(r) || !std::isfinite(phi) || !std::isfinite(z))
    throw std::invalid_argument("CylindricalPoint: coordinates must be finite");
  if (r < 0.0) throw std::invalid_argument("CylindricalPoint: r must be >= 0");
  return {r, reduce_angle(phi), z};
}

CylindricalPoint CylindricalPoint::from_cartesian(double x, double y, double z) {
  return make(std::hypot(x, y), std::atan2(y, x), z);
}

LGMode::LGMode(int l, int p, double wavelength, double waist, double phase_offset)
    : l_(l), p_(p), wavelength_(wavelength), waist_(waist), phase_offset_(phase_offset) {
  if (!(wavelength > 0.0) || !std::isfinite(wavelength))
    throw std::invalid_argument("LGMode: wavelength must be > 0");
  if (!(waist > 0.0) || !std::isfinite(waist)) throw std::invalid_argument("LGMode: waist must be > 0");
  if (p < 0) throw std::invalid_argument("LGMode: radial index p must be >= 0");
  if (!std::isfinite(phase_offset)) throw std::invalid_argument("LGMode: phase offset must be finite");
}

double LGMode::wavenumber() const { return 2.0 * kPi / wavelength_; }

double LGMode::rayleigh_range() const { return kPi * waist_ * waist_ / wavelength_; }

double LGMode::log_normalization() const {
  const double delta = (l_ == 0) ? 1.0 : 0.0;
  return std::log(2.0) + specfun::log_factorial(p_) - std::log(1.0 + delta) -
         specfun::log_factorial(abs_l() + p_);
}

double LGMode::normalization() const {
  if (abs_l() + p_ <= 170) {
    const double delta = (l_ == 0) ? 1.0 : 0.0;
    return 2.0 * specfun::factorial(p_) / ((1.0 + delta) * specfun::factorial(abs_l() + p_));
  }
  return std::exp(log_normalization());
}

double LGMode::linear_phase_offset(int l) {
  if (l == 0) throw std::invalid_argument("linear_phase_offset: l must be non-zero");
  return kPi / (4.0 * std::abs(l));
}

double beam_width(const LGMode& mode, double z) {
  const double ratio = z / mode.rayleigh_range();
  return mode.waist() * std::sqrt(1.0 + ratio * ratio);
}

double radial_profile_u(const LGMode& mode, double u) {
  const int al = mode.abs_l();
  // L_p^0(0) = 1, so the on-axis value of an l = 0 mode is A itself.
  if (u <= 0.0) return al == 0 ? mode.normalization() : 0.0;
  const double lag = specfun::assoc_laguerre(mode.p(), al, u);
  if (lag == 0.0) return 0.0;
  const double log_env = mode.log_normalization() + al * std::log(u) - u;
  if (std::fabs(lag) > kLogComposeThreshold) return std::exp(log_env + 2.0 * std::log(std::fabs(lag)));
  return std::exp(log_env) * lag * lag;
}

double angular_factor(const LGMode& mode, double phi) {
  const double c = std::cos(mode.l() * (phi - mode.phase_offset()));
  return c * c;
}

double angular_integral(const LGMode& mode, double phi_a, double phi_b) {
  const double width = phi_b - phi_a;
  if (mode.l() == 0) return width;
  const double l = mode.l();
  return 0.5 * width + std::cos(l * (phi_a + phi_b - 2.0 * mode.phase_offset())) * std::sin(l * width) / (2.0 * l);
}

double radial_cutoff_u(const LGMode& mode) {
  const double n = mode.abs_l() + 2.0 * mode.p() + 1.0;
  return 2.0 * n + 10.0 * std::sqrt(2.0 * n) + 60.0;
}

double outer_radius(const LGMode& mode) {
  return mode.waist() * std::sqrt(mode.abs_l() + 2.0 * mode.p() + 1.0);
}

double radial_max(const LGMode& mode) {
  if (mode.p() == 0) return mode.waist() * std::sqrt(mode.abs_l() / 2.0);
  return radial_max_scan(mode);
}

double radial_max_scan(const LGMode& mode) {
  const double r_hi = mode.waist() * std::sqrt(2.0 * (mode.abs_l() + 2.0 * mode.p() + 1.0));
  const double dr = r_hi / (kScanSamples - 1);
  std::vector<double> f(kScanSamples);
  for (int i = 0; i < kScanSamples; ++i) f[static_cast<std::size_t>(i)] = radial_profile_r0(mode, dr * i);
  if (f[0] > f[1]) return 0.0;
  for (std::size_t i = 1; i + 1 < f.size(); ++i) {
    if (f[i] >= f[i - 1] && f[i] > f[i + 1])
      return golden_section_max(mode, dr * static_cast<double>(i - 1), dr * static_cast<double>(i + 1));
  }
  throw NumericError("radial_max_scan: no interior maximum found");
}

quad::Result radial_power(const LGMode& mode, double r_max, const quad::Options& opts) {
  if (r_max < 0.0) throw std::invalid_argument("radial_power: r_max must be >= 0");
  const double w0 = mode.waist();
  const double u_max = std::min(2.0 * r_max * r_max / (w0 * w0), radial_cutoff_u(mode));
  quad::Options o = opts;
  o.initial_panels = std::max(o.initial_panels, 4 + mode.p() + mode.abs_l() / 4);
  auto res = quad::integrate([&](double u) { return radial_profile_u(mode, u); }, 0.0, u_max, o);
  // r dr = (w0^2 / 4) du
  const double jac = 0.25 * w0 * w0;
  res.value *= jac;
  res.abs_error *= jac;
  return res;
}

double transverse_norm(const LGMode& mode, double z, const quad::Options& opts) {
  const double c = std::cos(mode.wavenumber() * z);
  const auto radial = radial_power(mode, std::numeric_limits<double>::infinity(), opts);
  if (!radial.converged)
    throw QuadratureError("transverse_norm: radial quadrature did not converge", radial.rel_error());
  const double angular = (mode.l() == 0) ? 2.0 * kPi : kPi;
  return c * c * angular * radial.value;
}

GridSpec GridSpec::square(double half_width, int n) { return {n, n, -half_width, half_width, -half_width, half_width}; }

GridSpec default_map_grid(const LGMode& mode, int n) { return GridSpec::square(1.2 * outer_radius(mode), n); }

FieldMap intensity_map(const LGMode& mode, const GridSpec& grid) {
  if (grid.nx < 1 || grid.ny < 1) throw std::invalid_argument("intensity_map: resolution must be positive");
  if (!(grid.x_max > grid.x_min) || !(grid.y_max > grid.y_min))
    throw std::invalid_argument("intensity_map: grid extents must be positive");
  FieldMap map{grid, std::vector<double>(static_cast<std::size_t>(grid.nx) * grid.ny)};
  for (int iy = 0; iy < grid.ny; ++iy) {
    for (int ix = 0; ix < grid.nx; ++ix) {
      const auto pt = CylindricalPoint::from_cartesian(grid.x(ix), grid.y(iy), 0.0);
      map.values[static_cast<std::size_t>(iy) * grid.nx + ix] = intensity(mode, pt);
    }
  }
  return map;
}

double intensity(const LGMode& mode, const CylindricalPoint& pt) {
  const double w = beam_width(mode, pt.z);
  const double ratio = mode.waist() / w;
  const double u = 2.0 * pt.r * pt.r / (w * w);
  const double axial = std::cos(mode.wavenumber() * pt.z);
  return ratio * ratio * radial_profile_u(mode, u) * axial * axial * angular_factor(mode, pt.phi);
}

int count_local_maxima(const FieldMap& map, double rel_threshold) {
  double global = 0.0;
  for (double v : map.values) global = std::max(global, v);
  const double floor = rel_threshold * global;
  int count = 0;
  for (int iy = 1; iy + 1 < map.grid.ny; ++iy) {
    for (int ix = 1; ix + 1 < map.grid.nx; ++ix) {
      const double v = map.at(ix, iy);
      if (v <= floor) continue;
      bool is_max = true;
      for (int dy = -1; dy <= 1 && is_max; ++dy) {
        for (int dx = -1; dx <= 1; ++dx) {
          if (dx == 0 && dy == 0) continue;
          const double n = map.at(ix + dx, iy + dy);
          const bool earlier = dy < 0 || (dy == 0 && dx < 0);
          if (earlier ? !(v > n) : !(v >= n)) {
            is_max = false;
            break;
          }
        }
      }
      if (is_max) ++count;
    }
  }
  return count;
}

}  // namespace lgt
