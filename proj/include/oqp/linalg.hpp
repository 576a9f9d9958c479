#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace oqp {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using BlochVector = Eigen::VectorXd;

// Tolerances shared across modules.
namespace tol {
inline constexpr double hermitian = 1e-10;       // max-entry deviation from M = M†
inline constexpr double trace_one = 1e-10;       // |Tr ρ − 1|
inline constexpr double positivity = 1e-10;      // eigenvalues may dip to −positivity
inline constexpr double negativity_eps = 1e-12;  // table entries in [−eps, 0) count as zero
inline constexpr double imag_residue = 1e-9;     // max |Im W| the transform may leave behind
}  // namespace tol

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline ComplexMatrix identity(int d) { return ComplexMatrix::Identity(d, d); }

inline bool is_hermitian(const ComplexMatrix& m, double eps = tol::hermitian) {
  return m.rows() == m.cols() && (m - m.adjoint()).cwiseAbs().maxCoeff() <= eps;
}

inline double min_eigenvalue(const ComplexMatrix& hermitian_matrix) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_matrix,
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

inline Eigen::VectorXd eigenvalues(const ComplexMatrix& hermitian_matrix) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_matrix,
                                                      Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

// Kronecker product, row-major block convention: (a ⊗ b)(i*p+k, j*q+l) = a(i,j) b(k,l).
inline ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Validated d×d state: Hermitian, unit trace, positive semidefinite (within tol).
class DensityOperator {
 public:
  explicit DensityOperator(ComplexMatrix m) : matrix_(std::move(m)) {
    if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 1)
      throw std::invalid_argument("DensityOperator: matrix must be square and nonempty");
    if (!is_hermitian(matrix_))
      throw Error("DensityOperator: matrix is not Hermitian within tolerance");
    const Complex tr = matrix_.trace();
    if (std::abs(tr.real() - 1.0) > tol::trace_one || std::abs(tr.imag()) > tol::trace_one)
      throw Error("DensityOperator: trace is not 1 within tolerance");
    const double lo = min_eigenvalue(matrix_);
    if (lo < -tol::positivity)
      throw Error("DensityOperator: smallest eigenvalue " + std::to_string(lo) +
                  " violates positivity");
  }

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

inline DensityOperator pure_state(const ComplexVector& ket) {
  ComplexVector k = ket.normalized();
  return DensityOperator(k * k.adjoint());
}

// Traceless Hermitian operator basis λ_1..λ_{d²−1} with Tr[λ_i λ_j] = d δ_ij
// (λ_0 = identity is implied and never stored).
struct HermitianBasis {
  int dim = 0;
  std::vector<ComplexMatrix> elements;

  int size() const { return static_cast<int>(elements.size()); }
};

// Generalized Gell-Mann matrices rescaled by √(d/2) so Tr[λ_i λ_j] = d δ_ij.
// Order: symmetric pairs (j<k lexicographic), antisymmetric pairs, diagonal.
// For d = 2 this is exactly {σx, σy, σz}.
inline HermitianBasis gell_mann_basis(int d) {
  if (d < 2) throw std::invalid_argument("gell_mann_basis: d must be >= 2");
  const double scale = std::sqrt(d / 2.0);
  HermitianBasis basis;
  basis.dim = d;
  basis.elements.reserve(static_cast<std::size_t>(d) * d - 1);
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      m(j, k) = scale;
      m(k, j) = scale;
      basis.elements.push_back(m);
    }
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      ComplexMatrix m = ComplexMatrix::Zero(d, d);
      m(j, k) = Complex(0.0, -scale);
      m(k, j) = Complex(0.0, scale);
      basis.elements.push_back(m);
    }
  for (int l = 1; l < d; ++l) {
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    const double norm = scale * std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
    for (int m_idx = 0; m_idx < l; ++m_idx) m(m_idx, m_idx) = norm;
    m(l, l) = -norm * static_cast<double>(l);
    basis.elements.push_back(m);
  }
  return basis;
}

// ρ_j = Tr[λ_j ρ], real for Hermitian inputs.
inline BlochVector bloch_vector(const DensityOperator& rho, const HermitianBasis& basis) {
  if (rho.dim() != basis.dim)
    throw std::invalid_argument("bloch_vector: dimension mismatch");
  BlochVector v(basis.size());
  for (int j = 0; j < basis.size(); ++j)
    v(j) = (basis.elements[j] * rho.matrix()).trace().real();
  return v;
}

inline ComplexMatrix matrix_from_bloch(const BlochVector& v, const HermitianBasis& basis) {
  if (v.size() != basis.size())
    throw std::invalid_argument("matrix_from_bloch: component count mismatch");
  ComplexMatrix m = identity(basis.dim);
  for (int j = 0; j < basis.size(); ++j) m += v(j) * basis.elements[j];
  return m / static_cast<double>(basis.dim);
}

// ρ = (1/d)(1 + Σ_j v_j λ_j). Positivity is verified, not assumed: for d > 2 the
// valid Bloch vectors are a strict subset of the ball.
inline DensityOperator state_from_bloch(const BlochVector& v, const HermitianBasis& basis) {
  ComplexMatrix m = matrix_from_bloch(v, basis);
  const double lo = min_eigenvalue(m);
  if (lo < -tol::positivity)
    throw Error("state_from_bloch: reconstruction is not positive semidefinite "
                "(min eigenvalue " + std::to_string(lo) + ")");
  return DensityOperator(std::move(m));
}

}  // namespace oqp
