#include "lgt/cavity.hpp"

#include <cmath>
#include <stdexcept>

#include "lgt/constants.hpp"

namespace lgt {

void Cavity::validate() const {
  if (!(length > 0.0)) throw std::invalid_argument("cavity length must be > 0");
  if (!(omega_c0 > 0.0)) throw std::invalid_argument("omega_c0 must be > 0");
  if (!(omega_phi > 0.0)) throw std::invalid_argument("omega_phi must be > 0");
  if (!std::isfinite(equilibrium_angle)) throw std::invalid_argument("equilibrium angle must be finite");
}

double Cavity::resonance_for_wavelength(double wavelength) { return 2.0 * kPi * kSpeedOfLight / wavelength; }

}  // namespace lgt
