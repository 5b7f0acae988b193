#pragma once

namespace lgt {

/// Fabry-Perot cavity hosting the mode and the torsional trap it sits in.
/// All frequencies are angular (rad/s).
struct Cavity {
  double length = 0.0;              // D, m
  double omega_c0 = 0.0;            // equilibrium resonance
  double omega_phi = 0.0;           // torsional trap frequency
  double equilibrium_angle = 0.0;   // phi_0, rad

  /// Throws std::invalid_argument unless length, omega_c0 and omega_phi are > 0.
  void validate() const;

  /// 2 pi c / lambda.
  static double resonance_for_wavelength(double wavelength);
};

}  // namespace lgt
