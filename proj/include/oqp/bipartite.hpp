#pragma once

// Two-qudit quasiprobability and the marginal entanglement witness.
//
// Each side measures a full set of d+1 mutually unbiased bases. In the Bloch
// representation the joint table is
//
//   W(a,b) = d^(−2(d+1)) (1 + Σ_k α_k(a_k)·ρ^A + Σ_l β_l(b_l)·ρ^B
//                           + Σ_kl α_k(a_k)·S·β_l(b_l)),
//
// and summing over outcome pairs with fixed differences c_j = a_j − b_j (mod d)
// gives the marginal
//
//   W_m(c) = d^(−(d+1)) (1 + Tr[S·M(c)]),
//   M(c)   = d^(−1) Σ_k Σ_x β_k(x − c_k mod d) α_k(x)ᵀ,
//
// which is nonnegative on every separable state. A negative W_m(c) witnesses
// entanglement; for Werner states the witness fires exactly above
// p = 1/(d+1) when Bob's bases are the conjugates of Alice's.

#include "oqp/linalg.hpp"
#include "oqp/measurements.hpp"
#include "oqp/sampling.hpp"
#include "oqp/sequential.hpp"

#include <optional>
#include <vector>

namespace oqp {

// State on dimension d² with factor ordering A ⊗ B.
struct BipartiteState {
  int local_dim = 0;
  DensityOperator state;
};

inline BipartiteState bipartite_state(int d, DensityOperator rho) {
  if (rho.dim() != d * d)
    throw std::invalid_argument("bipartite_state: state dimension must be d²");
  return BipartiteState{d, std::move(rho)};
}

// S_jk = Tr[(λ_j^A ⊗ λ_k^B) ρ] plus the local Bloch vectors.
struct CorrelationMatrix {
  Eigen::MatrixXd S;
  BlochVector rho_a;
  BlochVector rho_b;
};

namespace detail {

// Tr[(A ⊗ B) ρ] without materializing the Kronecker product.
inline Complex pair_expectation(const ComplexMatrix& a, const ComplexMatrix& b,
                                const ComplexMatrix& rho, int d) {
  Complex s = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (a(i, j) == Complex(0.0)) continue;
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
          s += a(i, j) * b(k, l) * rho(j * d + l, i * d + k);
    }
  return s;
}

}  // namespace detail

inline CorrelationMatrix correlation_matrix(const BipartiteState& rho,
                                            const HermitianBasis& basis_a,
                                            const HermitianBasis& basis_b) {
  const int d = rho.local_dim;
  if (basis_a.dim != d || basis_b.dim != d)
    throw std::invalid_argument("correlation_matrix: basis dimension mismatch");
  const int n = basis_a.size();
  const ComplexMatrix eye = identity(d);
  CorrelationMatrix corr{Eigen::MatrixXd(n, n), BlochVector(n), BlochVector(n)};
  for (int j = 0; j < n; ++j) {
    corr.rho_a(j) =
        detail::pair_expectation(basis_a.elements[j], eye, rho.state.matrix(), d).real();
    corr.rho_b(j) =
        detail::pair_expectation(eye, basis_b.elements[j], rho.state.matrix(), d).real();
    for (int k = 0; k < n; ++k)
      corr.S(j, k) = detail::pair_expectation(basis_a.elements[j], basis_b.elements[k],
                                              rho.state.matrix(), d)
                         .real();
  }
  return corr;
}

// Difference tuple c ∈ {0..d−1}^(d+1).
struct ShiftVector {
  std::vector<int> c;
};

// Alice's MUB suite together with Bob's conjugated copy and the matched
// operator bases: Bob's λ matrices are the entrywise transposes of Alice's,
// Bob's kets the entrywise conjugates. Under this convention the maximally
// entangled state has S = 1, and α_k(x)·β_k(y) = d δ_xy − 1.
struct ConjugateMubPair {
  int d = 0;
  std::vector<ProjectorFamily> alice;
  std::vector<ProjectorFamily> bob;
  HermitianBasis basis_a;
  HermitianBasis basis_b;
  std::vector<std::vector<BlochVector>> alphas;  // [observable][outcome]
  std::vector<std::vector<BlochVector>> betas;
};

inline HermitianBasis transposed_basis(const HermitianBasis& basis) {
  HermitianBasis out;
  out.dim = basis.dim;
  for (const ComplexMatrix& m : basis.elements)
    out.elements.push_back(m.transpose());
  return out;
}

inline ConjugateMubPair conjugate_bases(int d) {
  ConjugateMubPair pair;
  pair.d = d;
  pair.alice = mub_bases(d, d + 1);
  for (const ProjectorFamily& fam : pair.alice) {
    std::vector<ComplexVector> kets;
    for (const ComplexVector& k : fam.kets) kets.push_back(k.conjugate());
    pair.bob.push_back(projector_family(std::move(kets)));
  }
  pair.basis_a = gell_mann_basis(d);
  pair.basis_b = transposed_basis(pair.basis_a);
  pair.alphas = alpha_vectors(pair.alice, pair.basis_a);
  pair.betas = alpha_vectors(pair.bob, pair.basis_b);
  return pair;
}

// Joint table over (a_1..a_{d+1}, b_1..b_{d+1}) from the Bloch data. Requires
// full MUB suites on both sides; equals the generic engine run on the
// composite system with the 2(d+1) local observables.
inline QuasiTable bipartite_quasiprobability(const BipartiteState& rho,
                                             const std::vector<ProjectorFamily>& alice,
                                             const std::vector<ProjectorFamily>& bob) {
  const int d = rho.local_dim;
  const int K = d + 1;
  if (static_cast<int>(alice.size()) != K || static_cast<int>(bob.size()) != K)
    throw std::invalid_argument("bipartite_quasiprobability: need d+1 bases per side");
  if (!mutually_unbiased(alice) || !mutually_unbiased(bob))
    throw Error("bipartite_quasiprobability: bases are not mutually unbiased");

  const HermitianBasis basis_a = gell_mann_basis(d);
  const HermitianBasis basis_b = gell_mann_basis(d);
  const auto alphas = alpha_vectors(alice, basis_a);
  const auto betas = alpha_vectors(bob, basis_b);
  const CorrelationMatrix corr = correlation_matrix(rho, basis_a, basis_b);

  std::vector<std::vector<double>> da(K, std::vector<double>(d));
  std::vector<std::vector<double>> db(K, std::vector<double>(d));
  for (int k = 0; k < K; ++k)
    for (int a = 0; a < d; ++a) {
      da[k][a] = alphas[k][a].dot(corr.rho_a);
      db[k][a] = betas[k][a].dot(corr.rho_b);
    }
  // cross[k][a][l][b] = α_k(a)·S·β_l(b)
  std::vector<double> cross(static_cast<std::size_t>(K) * d * K * d);
  auto cross_at = [&](int k, int a, int l, int b) -> double& {
    return cross[((static_cast<std::size_t>(k) * d + a) * K + l) * d + b];
  };
  for (int k = 0; k < K; ++k)
    for (int a = 0; a < d; ++a) {
      const Eigen::VectorXd sa = corr.S.transpose() * alphas[k][a];
      for (int l = 0; l < K; ++l)
        for (int b = 0; b < d; ++b) cross_at(k, a, l, b) = sa.dot(betas[l][b]);
    }

  TableShape shape(2 * K, d);
  QuasiTable w{shape, std::vector<double>(shape.size())};
  const double scale = 1.0 / static_cast<double>(shape.size());
  std::vector<int> idx(2 * K);
  for (std::int64_t flat = 0; flat < shape.size(); ++flat) {
    shape.unravel(flat, idx);
    double acc = 1.0;
    for (int k = 0; k < K; ++k) acc += da[k][idx[k]] + db[k][idx[K + k]];
    for (int k = 0; k < K; ++k)
      for (int l = 0; l < K; ++l) acc += cross_at(k, idx[k], l, idx[K + l]);
    w.values[flat] = scale * acc;
  }
  return w;
}

// M(c) = d^(−1) Σ_k Σ_x β_k(x − c_k mod d) α_k(x)ᵀ.
inline Eigen::MatrixXd witness_map(const std::vector<std::vector<BlochVector>>& alphas,
                                   const std::vector<std::vector<BlochVector>>& betas,
                                   const ShiftVector& c) {
  const int K = static_cast<int>(alphas.size());
  const int d = static_cast<int>(alphas.front().size());
  if (static_cast<int>(c.c.size()) != K)
    throw std::invalid_argument("witness_map: shift vector length != d+1");
  const Eigen::Index n = alphas.front().front().size();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int k = 0; k < K; ++k)
    for (int x = 0; x < d; ++x) {
      const int shifted = ((x - c.c[k]) % d + d) % d;
      m += betas[k][shifted] * alphas[k][x].transpose();
    }
  return m / static_cast<double>(d);
}

// W_m(c) = d^(−(d+1)) (1 + Tr[S·M(c)]).
inline double marginal_witness(const CorrelationMatrix& corr,
                               const std::vector<std::vector<BlochVector>>& alphas,
                               const std::vector<std::vector<BlochVector>>& betas,
                               const ShiftVector& c) {
  const int K = static_cast<int>(alphas.size());
  const int d = static_cast<int>(alphas.front().size());
  const Eigen::MatrixXd m = witness_map(alphas, betas, c);
  double norm = 1.0;
  for (int k = 0; k < K; ++k) norm /= d;
  return norm * (1.0 + corr.S.cwiseProduct(m.transpose()).sum());
}

struct WitnessMinimum {
  double value = 0.0;
  ShiftVector argmin;
};

// Exhaustive minimum of W_m over all d^(d+1) shift vectors. Tr[S·M(c)]
// decomposes into per-observable terms t_k(c_k), precomputed once; the
// enumeration reports the lexicographically first minimizer.
inline WitnessMinimum min_marginal_witness(
    const CorrelationMatrix& corr,
    const std::vector<std::vector<BlochVector>>& alphas,
    const std::vector<std::vector<BlochVector>>& betas) {
  const int K = static_cast<int>(alphas.size());
  const int d = static_cast<int>(alphas.front().size());
  std::vector<std::vector<double>> t(K, std::vector<double>(d));
  for (int k = 0; k < K; ++k)
    for (int ck = 0; ck < d; ++ck) {
      double acc = 0.0;
      for (int x = 0; x < d; ++x) {
        const int shifted = ((x - ck) % d + d) % d;
        acc += alphas[k][x].dot(corr.S * betas[k][shifted]);
      }
      t[k][ck] = acc / static_cast<double>(d);
    }

  double norm = 1.0;
  for (int k = 0; k < K; ++k) norm /= d;

  WitnessMinimum best;
  best.value = std::numeric_limits<double>::infinity();
  std::vector<int> c(K, 0);
  while (true) {
    double trace = 0.0;
    for (int k = 0; k < K; ++k) trace += t[k][c[k]];
    const double value = norm * (1.0 + trace);
    if (value < best.value) {
      best.value = value;
      best.argmin.c = c;
    }
    int i = K - 1;
    while (i >= 0 && c[i] == d - 1) c[i--] = 0;
    if (i < 0) break;
    ++c[i];
  }
  return best;
}

// p |ψ_MES⟩⟨ψ_MES| + (1−p)/d² · 1, with |ψ_MES⟩ = d^(−1/2) Σ_n |n⟩⊗|n⟩.
inline BipartiteState werner_state(int d, double p) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("werner_state: p must lie in [0, 1]");
  ComplexVector mes = ComplexVector::Zero(d * d);
  for (int n = 0; n < d; ++n) mes(n * d + n) = 1.0 / std::sqrt(static_cast<double>(d));
  ComplexMatrix rho = p * (mes * mes.adjoint()) +
                      ((1.0 - p) / (d * d)) * identity(d * d);
  return bipartite_state(d, DensityOperator(std::move(rho)));
}

struct WernerScanPoint {
  double p = 0.0;
  double min_value = 0.0;
  ShiftVector argmin;
};

struct WernerScanResult {
  std::vector<WernerScanPoint> points;
  std::optional<double> crossing;  // p where min_c W_m changes sign
};

namespace detail {

inline double werner_min_witness(int d, double p, const ConjugateMubPair& pair) {
  const BipartiteState rho = werner_state(d, p);
  const CorrelationMatrix corr = correlation_matrix(rho, pair.basis_a, pair.basis_b);
  return min_marginal_witness(corr, pair.alphas, pair.betas).value;
}

}  // namespace detail

// min_c W_m per grid point, plus the bisected zero crossing when the scanned
// interval brackets a sign change. Under conjugate bases the minimum is
// d^(−(d+1)) (1 − p(d+1)), crossing at p = 1/(d+1).
inline WernerScanResult werner_threshold_scan(int d, const std::vector<double>& p_grid) {
  if (!is_prime(d)) throw std::invalid_argument("werner_threshold_scan: d must be prime");
  const ConjugateMubPair pair = conjugate_bases(d);
  WernerScanResult result;
  for (double p : p_grid) {
    const BipartiteState rho = werner_state(d, p);
    const CorrelationMatrix corr = correlation_matrix(rho, pair.basis_a, pair.basis_b);
    WitnessMinimum m = min_marginal_witness(corr, pair.alphas, pair.betas);
    result.points.push_back({p, m.value, m.argmin});
  }
  for (std::size_t i = 0; i + 1 < result.points.size(); ++i) {
    double lo = result.points[i].p, hi = result.points[i + 1].p;
    double flo = result.points[i].min_value, fhi = result.points[i + 1].min_value;
    if (flo == 0.0) {
      result.crossing = lo;
      break;
    }
    if (flo * fhi < 0.0) {
      for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = detail::werner_min_witness(d, mid, pair);
        if (fmid == 0.0) {
          lo = hi = mid;
          break;
        }
        if ((fmid < 0.0) == (flo < 0.0)) {
          lo = mid;
          flo = fmid;
        } else {
          hi = mid;
        }
      }
      result.crossing = 0.5 * (lo + hi);
      break;
    }
  }
  return result;
}

// Dirichlet-weighted mixture of at most d² random pure product states.
inline BipartiteState random_separable_state(int d, SplitMix64& rng) {
  const int terms = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(d) * d));
  const std::vector<double> weights = random_simplex(terms, rng);
  ComplexMatrix rho = ComplexMatrix::Zero(d * d, d * d);
  for (int j = 0; j < terms; ++j) {
    const ComplexVector a = random_ket(d, rng);
    const ComplexVector b = random_ket(d, rng);
    const ComplexMatrix pa = a * a.adjoint();
    const ComplexMatrix pb = b * b.adjoint();
    rho += weights[j] * tensor_product(pa, pb);
  }
  rho = (rho + rho.adjoint().eval()) / 2.0;
  return bipartite_state(d, DensityOperator(std::move(rho)));
}

}  // namespace oqp
