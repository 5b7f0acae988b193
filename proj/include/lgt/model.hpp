#pragma once

// Truncated Fock-space representation of
//   H / hbar = omega_c a^dag a + omega_phi b^dag b + g a^dag a (b + b^dag)
// used to check spectrum-level properties of the coupling, not for dynamics.

#include <Eigen/Dense>

#include "lgt/cavity.hpp"
#include "lgt/coupling.hpp"

namespace lgt {

struct OmSystem {
  double omega_c = 0.0;    // rad/s
  double omega_phi = 0.0;  // rad/s
  double g = 0.0;          // rad/s
};

inline constexpr long kMaxHamiltonianDimension = 10000;

struct TruncatedHamiltonian {
  int n_a_max = 0;
  int n_b_max = 0;
  Eigen::MatrixXd matrix;  // H / hbar in |n_a, n_b>, index n_a (n_b_max + 1) + n_b

  long dimension() const { return static_cast<long>(matrix.rows()); }
  long index(int n_a, int n_b) const { return static_cast<long>(n_a) * (n_b_max + 1) + n_b; }
};

/// Packages the coupling result with the cavity frequencies.
OmSystem assemble(const CouplingResult& coupling, const Cavity& cavity);

/// Throws std::invalid_argument for cutoffs < 1 or a product dimension above 1e4.
TruncatedHamiltonian build_matrix(const OmSystem& sys, int n_a_max, int n_b_max);

/// The fixed-photon-number block of H minus its constant omega_c n, size n_b_max + 1.
Eigen::MatrixXd photon_block(const OmSystem& sys, int n_photons, int n_b_max);

/// Truncated annihilation operator on n_max + 1 levels.
Eigen::MatrixXd annihilation(int n_max);

/// Sorted eigenvalues of a real symmetric matrix.
Eigen::VectorXd eigenvalues(const Eigen::MatrixXd& symmetric);

/// Exact displacement-transform energy shift -g^2 n^2 / omega_phi.
double polaron_shift(const OmSystem& sys, int n_photons);

/// Phonon cutoff that keeps the truncated polaron ground state converged:
/// max(minimum, 40 (g n / omega_phi)^2 + 20).
int polaron_cutoff(const OmSystem& sys, int n_photons, int minimum = 40);

struct PolaronCheck {
  int n_photons = 0;
  int n_b_max = 0;
  double expected = 0.0;  // -g^2 n^2 / omega_phi
  double computed = 0.0;  // lowest eigenvalue of the block, omega_c n removed
  double rel_error = 0.0;
};

PolaronCheck check_polaron(const OmSystem& sys, int n_photons);

}  // namespace lgt
