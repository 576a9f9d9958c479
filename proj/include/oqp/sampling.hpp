#pragma once

#include "oqp/linalg.hpp"
#include "oqp/rng.hpp"

#include <vector>

namespace oqp {

inline ComplexVector random_ket(int d, SplitMix64& rng) {
  ComplexVector k(d);
  for (int i = 0; i < d; ++i) k(i) = Complex(rng.normal(), rng.normal());
  k.normalize();
  return k;
}

// Full-rank random state, ρ = GG†/Tr[GG†] with G a complex Ginibre matrix.
inline DensityOperator random_density_operator(int d, SplitMix64& rng) {
  ComplexMatrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  rho = (rho + rho.adjoint().eval()) / 2.0;  // scrub round-off asymmetry
  return DensityOperator(std::move(rho));
}

// Uniform over the solid Bloch ball (valid qubit states exactly).
inline BlochVector random_qubit_bloch_ball(SplitMix64& rng) {
  const double r = std::cbrt(rng.uniform());
  const double cos_t = rng.uniform(-1.0, 1.0);
  const double sin_t = std::sqrt(std::max(0.0, 1.0 - cos_t * cos_t));
  const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
  BlochVector v(3);
  v << r * sin_t * std::cos(phi), r * sin_t * std::sin(phi), r * cos_t;
  return v;
}

// Haar-distributed unitary: QR of a Ginibre matrix with phase-fixed R diagonal.
inline ComplexMatrix random_unitary(int d, SplitMix64& rng) {
  ComplexMatrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    q.col(j) *= (std::abs(rjj) > 0.0) ? rjj / std::abs(rjj) : Complex(1.0, 0.0);
  }
  return q;
}

inline Eigen::MatrixXd random_orthogonal(int n, SplitMix64& rng) {
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.normal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j)
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  return q;
}

// Flat Dirichlet weights (normalized unit exponentials).
inline std::vector<double> random_simplex(int n, SplitMix64& rng) {
  std::vector<double> w(n);
  double total = 0.0;
  for (double& x : w) {
    x = rng.exponential();
    total += x;
  }
  for (double& x : w) x /= total;
  return w;
}

}  // namespace oqp
