#pragma once

// Windmill rotor: spokes() spokes, each made of two opposed wedges. A wedge is
// a circular sector of radius R and half-angle s / (2R) (outer arc length s),
// extruded to thickness h and centred on z = 0. Wedge axes sit at
// delta + j pi / spokes for j = 0 .. 2 spokes - 1.

#include <string>
#include <utility>
#include <vector>

#include "lgt/cavity.hpp"
#include "lgt/lgmode.hpp"

namespace lgt {

struct RotorPose {
  double delta = 0.0;  // rad
};

class Windmill {
 public:
  /// Throws std::invalid_argument if any invariant fails, including wedge overlap
  /// (2 spokes s / R must stay below 2 pi).
  Windmill(int spokes, double radius, double arc_length, double thickness, double mass_per_spoke,
           double epsilon);

  int spokes() const { return spokes_; }
  int wedges() const { return 2 * spokes_; }
  double radius() const { return radius_; }
  double arc_length() const { return arc_length_; }
  double thickness() const { return thickness_; }
  double mass_per_spoke() const { return mass_per_spoke_; }
  double total_mass() const { return spokes_ * mass_per_spoke_; }
  double epsilon() const { return epsilon_; }
  double half_angle() const { return arc_length_ / (2.0 * radius_); }

  Windmill with_spokes(int n) const { return {n, radius_, arc_length_, thickness_, mass_per_spoke_, epsilon_}; }
  Windmill with_radius(double r) const { return {spokes_, r, arc_length_, thickness_, mass_per_spoke_, epsilon_}; }
  Windmill with_arc_length(double s) const { return {spokes_, radius_, s, thickness_, mass_per_spoke_, epsilon_}; }
  Windmill with_epsilon(double e) const { return {spokes_, radius_, arc_length_, thickness_, mass_per_spoke_, e}; }

 private:
  int spokes_;
  double radius_;
  double arc_length_;
  double thickness_;
  double mass_per_spoke_;
  double epsilon_;
};

bool contains(const Windmill& wm, RotorPose pose, const CylindricalPoint& pt);

/// I = spokes * m * R^2.
double moment_of_inertia(const Windmill& wm);

/// spokes * R * s: 2 spokes sectors of area R s / 2.
double cross_section_area(const Windmill& wm);

/// Axis angles of all 2 * spokes wedges.
std::vector<double> wedge_axes(const Windmill& wm, RotorPose pose);

/// Sum over wedges of the angular integral of cos^2(l(phi - phi')) across the wedge.
double footprint_angular_integral(const Windmill& wm, RotorPose pose, const LGMode& mode);

/// d/d(delta) of footprint_angular_integral, evaluated as the integrand
/// difference at the wedge edges.
double footprint_angular_slope(const Windmill& wm, RotorPose pose, const LGMode& mode);

/// d^2/d(delta)^2 of footprint_angular_integral, same construction.
double footprint_angular_curvature(const Windmill& wm, RotorPose pose, const LGMode& mode);

/// Closed outline of every wedge at z = 0 as (x, y) vertices: apex, arc, apex.
std::vector<std::vector<std::pair<double, double>>> footprint_outline(const Windmill& wm, RotorPose pose,
                                                                      int arc_points = 16);

struct Warning {
  std::string code;
  std::string message;
};

/// Size conditions behind the perturbative frequency shift: s < lambda, h < D,
/// R <= 0.6 w0, plus z_R > D for the flat-beam mode normalization.
std::vector<Warning> validate_perturbative(const Windmill& wm, const LGMode& mode, const Cavity& cavity);

}  // namespace lgt
