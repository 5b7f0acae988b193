#include "lgt/windmill.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "lgt/constants.hpp"

namespace lgt {
namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(4);
  os << v;
  return os.str();
}

double angular_derivative(const LGMode& mode, double phi) {
  return -mode.l() * std::sin(2.0 * mode.l() * (phi - mode.phase_offset()));
}

}  // namespace

Windmill::Windmill(int spokes, double radius, double arc_length, double thickness, double mass_per_spoke,
                   double epsilon)
    : spokes_(spokes),
      radius_(radius),
      arc_length_(arc_length),
      thickness_(thickness),
      mass_per_spoke_(mass_per_spoke),
      epsilon_(epsilon) {
  if (spokes < 1) throw std::invalid_argument("windmill: spokes must be >= 1");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw std::invalid_argument("windmill: radius must be > 0");
  if (!(arc_length > 0.0)) throw std::invalid_argument("windmill: arc length must be > 0");
  if (!(thickness > 0.0)) throw std::invalid_argument("windmill: thickness must be > 0");
  if (!(mass_per_spoke > 0.0)) throw std::invalid_argument("windmill: mass must be > 0");
  if (!(epsilon >= 1.0) || !std::isfinite(epsilon)) throw std::invalid_argument("windmill: epsilon must be >= 1");
  if (!(2.0 * spokes * (arc_length / radius) < 2.0 * kPi))
    throw std::invalid_argument("windmill: wedges overlap (need s < pi R / spokes)");
}

bool contains(const Windmill& wm, RotorPose pose, const CylindricalPoint& pt) {
  if (pt.r > wm.radius() || std::fabs(pt.z) > 0.5 * wm.thickness()) return false;
  const double period = kPi / wm.spokes();
  double d = std::fmod(pt.phi - pose.delta, period);
  if (d < 0.0) d += period;
  if (d > 0.5 * period) d -= period;
  return std::fabs(d) <= wm.half_angle();
}

double moment_of_inertia(const Windmill& wm) {
  return wm.spokes() * wm.mass_per_spoke() * wm.radius() * wm.radius();
}

double cross_section_area(const Windmill& wm) { return wm.spokes() * wm.radius() * wm.arc_length(); }

std::vector<double> wedge_axes(const Windmill& wm, RotorPose pose) {
  std::vector<double> axes(static_cast<std::size_t>(wm.wedges()));
  for (int j = 0; j < wm.wedges(); ++j) axes[static_cast<std::size_t>(j)] = pose.delta + j * kPi / wm.spokes();
  return axes;
}

double footprint_angular_integral(const Windmill& wm, RotorPose pose, const LGMode& mode) {
  const double a = wm.half_angle();
  double sum = 0.0;
  for (double axis : wedge_axes(wm, pose)) sum += angular_integral(mode, axis - a, axis + a);
  return sum;
}

double footprint_angular_slope(const Windmill& wm, RotorPose pose, const LGMode& mode) {
  const double a = wm.half_angle();
  double sum = 0.0;
  for (double axis : wedge_axes(wm, pose)) sum += angular_factor(mode, axis + a) - angular_factor(mode, axis - a);
  return sum;
}

double footprint_angular_curvature(const Windmill& wm, RotorPose pose, const LGMode& mode) {
  const double a = wm.half_angle();
  double sum = 0.0;
  for (double axis : wedge_axes(wm, pose))
    sum += angular_derivative(mode, axis + a) - angular_derivative(mode, axis - a);
  return sum;
}

std::vector<std::vector<std::pair<double, double>>> footprint_outline(const Windmill& wm, RotorPose pose,
                                                                      int arc_points) {
  if (arc_points < 2) throw std::invalid_argument("footprint_outline: arc_points must be >= 2");
  const double a = wm.half_angle();
  const double r = wm.radius();
  std::vector<std::vector<std::pair<double, double>>> outline;
  for (double axis : wedge_axes(wm, pose)) {
    std::vector<std::pair<double, double>> poly;
    poly.emplace_back(0.0, 0.0);
    for (int i = 0; i < arc_points; ++i) {
      const double phi = axis - a + 2.0 * a * i / (arc_points - 1);
      poly.emplace_back(r * std::cos(phi), r * std::sin(phi));
    }
    poly.emplace_back(0.0, 0.0);
    outline.push_back(std::move(poly));
  }
  return outline;
}

std::vector<Warning> validate_perturbative(const Windmill& wm, const LGMode& mode, const Cavity& cavity) {
  std::vector<Warning> out;
  if (wm.arc_length() >= mode.wavelength())
    out.push_back({"s_ge_lambda", "s >= lambda: arc length " + fmt(wm.arc_length()) + " m is not sub-wavelength (" +
                                      fmt(mode.wavelength()) + " m)"});
  if (wm.thickness() >= cavity.length)
    out.push_back({"h_ge_D", "h >= D: thickness " + fmt(wm.thickness()) + " m reaches the cavity length " +
                                 fmt(cavity.length) + " m"});
  if (wm.radius() > 0.6 * mode.waist())
    out.push_back({"R_gt_w0", "R > 0.6 w0: radius " + fmt(wm.radius()) + " m against waist " + fmt(mode.waist()) +
                                  " m"});
  if (mode.rayleigh_range() <= cavity.length)
    out.push_back({"zR_le_D", "z_R <= D: Rayleigh range " + fmt(mode.rayleigh_range()) +
                                  " m does not exceed the cavity length " + fmt(cavity.length) + " m"});
  return out;
}

}  // namespace lgt
