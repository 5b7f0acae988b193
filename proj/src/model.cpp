#include "lgt/model.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace lgt {

OmSystem assemble(const CouplingResult& coupling, const Cavity& cavity) {
  return {cavity.omega_c0, cavity.omega_phi, coupling.g};
}

TruncatedHamiltonian build_matrix(const OmSystem& sys, int n_a_max, int n_b_max) {
  if (n_a_max < 1 || n_b_max < 1) throw std::invalid_argument("build_matrix: cutoffs must be >= 1");
  const long dim = static_cast<long>(n_a_max + 1) * (n_b_max + 1);
  if (dim > kMaxHamiltonianDimension)
    throw std::invalid_argument("build_matrix: dimension " + std::to_string(dim) + " exceeds cap of 10000");
  TruncatedHamiltonian h{n_a_max, n_b_max, Eigen::MatrixXd::Zero(dim, dim)};
  for (int na = 0; na <= n_a_max; ++na) {
    for (int nb = 0; nb <= n_b_max; ++nb) {
      const long i = h.index(na, nb);
      h.matrix(i, i) = sys.omega_c * na + sys.omega_phi * nb;
      if (nb < n_b_max) {
        const long j = h.index(na, nb + 1);
        const double v = sys.g * na * std::sqrt(nb + 1.0);
        h.matrix(i, j) = v;
        h.matrix(j, i) = v;
      }
    }
  }
  return h;
}

Eigen::MatrixXd photon_block(const OmSystem& sys, int n_photons, int n_b_max) {
  if (n_photons < 0 || n_b_max < 1) throw std::invalid_argument("photon_block: invalid photon number or cutoff");
  Eigen::MatrixXd block = Eigen::MatrixXd::Zero(n_b_max + 1, n_b_max + 1);
  for (int nb = 0; nb <= n_b_max; ++nb) {
    block(nb, nb) = sys.omega_phi * nb;
    if (nb < n_b_max) {
      const double v = sys.g * n_photons * std::sqrt(nb + 1.0);
      block(nb, nb + 1) = v;
      block(nb + 1, nb) = v;
    }
  }
  return block;
}

Eigen::MatrixXd annihilation(int n_max) {
  if (n_max < 1) throw std::invalid_argument("annihilation: n_max must be >= 1");
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_max + 1, n_max + 1);
  for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return a;
}

Eigen::VectorXd eigenvalues(const Eigen::MatrixXd& symmetric) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetric, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigenvalues: solver did not converge");
  return solver.eigenvalues();  // ascending
}

double polaron_shift(const OmSystem& sys, int n_photons) {
  return -sys.g * sys.g * n_photons * n_photons / sys.omega_phi;
}

int polaron_cutoff(const OmSystem& sys, int n_photons, int minimum) {
  const double alpha = sys.g * n_photons / sys.omega_phi;
  return std::max(minimum, static_cast<int>(std::ceil(40.0 * alpha * alpha)) + 20);
}

PolaronCheck check_polaron(const OmSystem& sys, int n_photons) {
  PolaronCheck c;
  c.n_photons = n_photons;
  c.n_b_max = polaron_cutoff(sys, n_photons);
  c.expected = polaron_shift(sys, n_photons);
  c.computed = eigenvalues(photon_block(sys, n_photons, c.n_b_max))(0);
  c.rel_error = c.expected != 0.0 ? std::fabs(c.computed - c.expected) / std::fabs(c.expected)
                                  : std::fabs(c.computed);
  return c;
}

}  // namespace lgt
