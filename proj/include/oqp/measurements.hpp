#pragma once

#include "oqp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace oqp {

// One measurement: D Kraus operators A(0..D−1) with Σ_a A†(a)A(a) = 1.
struct KrausSet {
  int dim = 0;
  int outcomes = 0;
  std::vector<ComplexMatrix> ops;
};

// Time-ordered list of measurements; list order is the measurement chronology.
// All sets share the Hilbert dimension and the outcome count D (D may differ
// from dim for POVMs).
struct ObservableSuite {
  int dim = 0;
  int outcomes = 0;
  std::vector<KrausSet> sets;

  int count() const { return static_cast<int>(sets.size()); }
};

inline ObservableSuite make_suite(std::vector<KrausSet> sets) {
  if (sets.empty()) throw std::invalid_argument("make_suite: no observables");
  ObservableSuite suite;
  suite.dim = sets.front().dim;
  suite.outcomes = sets.front().outcomes;
  for (const KrausSet& s : sets) {
    if (s.dim != suite.dim || s.outcomes != suite.outcomes)
      throw std::invalid_argument("make_suite: all sets must share dim and outcome count");
  }
  suite.sets = std::move(sets);
  return suite;
}

// Orthonormal basis of d kets; as a Kraus set each operator is |a⟩⟨a|.
struct ProjectorFamily {
  int dim = 0;
  std::vector<ComplexVector> kets;

  KrausSet to_kraus() const {
    KrausSet ks;
    ks.dim = dim;
    ks.outcomes = static_cast<int>(kets.size());
    for (const ComplexVector& k : kets) ks.ops.push_back(k * k.adjoint());
    return ks;
  }
};

inline ProjectorFamily projector_family(std::vector<ComplexVector> kets) {
  if (kets.empty()) throw std::invalid_argument("projector_family: empty basis");
  ProjectorFamily fam;
  fam.dim = static_cast<int>(kets.front().size());
  if (static_cast<int>(kets.size()) != fam.dim)
    throw std::invalid_argument("projector_family: need exactly dim kets");
  for (std::size_t x = 0; x < kets.size(); ++x)
    for (std::size_t y = 0; y < kets.size(); ++y) {
      const Complex overlap = kets[x].adjoint() * kets[y];
      const double expect = (x == y) ? 1.0 : 0.0;
      if (std::abs(overlap - expect) > 1e-12)
        throw Error("projector_family: kets are not orthonormal to 1e-12");
    }
  fam.kets = std::move(kets);
  return fam;
}

inline ObservableSuite suite_from_bases(const std::vector<ProjectorFamily>& bases) {
  std::vector<KrausSet> sets;
  sets.reserve(bases.size());
  for (const ProjectorFamily& b : bases) sets.push_back(b.to_kraus());
  return make_suite(std::move(sets));
}

inline bool is_prime(int n) {
  if (n < 2) return false;
  for (int p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

namespace detail {

inline std::vector<ProjectorFamily> pauli_bases() {
  const double s = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  ComplexVector xp(2), xm(2), yp(2), ym(2), z0(2), z1(2);
  xp << s, s;        // σx = +1
  xm << s, -s;       // σx = −1
  yp << s, i * s;    // σy = +1
  ym << s, -i * s;   // σy = −1
  z0 << 1.0, 0.0;
  z1 << 0.0, 1.0;
  return {projector_family({xp, xm}), projector_family({yp, ym}),
          projector_family({z0, z1})};
}

}  // namespace detail

// Mutually unbiased bases for prime d, bases listed in measurement order.
// d = 2: Pauli eigenbases σx, σy, σz. Odd prime d: the quadratic-phase bases
// ⟨n|a⟩_k = ω^(a n + k n²)/√d for k = 1..d, then the computational basis.
// K < d+1 takes the first K in that order.
inline std::vector<ProjectorFamily> mub_bases(int d, int K) {
  if (!is_prime(d))
    throw std::invalid_argument("mub_bases: d must be prime (composite constructions unsupported)");
  if (K < 1 || K > d + 1)
    throw std::invalid_argument("mub_bases: K must satisfy 1 <= K <= d+1");
  std::vector<ProjectorFamily> all;
  if (d == 2) {
    all = detail::pauli_bases();
  } else {
    for (int k = 1; k <= d; ++k) {
      std::vector<ComplexVector> kets;
      for (int a = 0; a < d; ++a) {
        ComplexVector v(d);
        for (int n = 0; n < d; ++n) {
          const long long phase = (static_cast<long long>(a) * n +
                                   static_cast<long long>(k) * n * n) % d;
          v(n) = std::polar(1.0 / std::sqrt(static_cast<double>(d)),
                            2.0 * std::numbers::pi * static_cast<double>(phase) / d);
        }
        kets.push_back(v);
      }
      all.push_back(projector_family(std::move(kets)));
    }
    std::vector<ComplexVector> comp;
    for (int a = 0; a < d; ++a) {
      ComplexVector v = ComplexVector::Zero(d);
      v(a) = 1.0;
      comp.push_back(v);
    }
    all.push_back(projector_family(std::move(comp)));
  }
  all.resize(K);
  return all;
}

inline ObservableSuite mub_suite(int d, int K) { return suite_from_bases(mub_bases(d, K)); }

// Eigenbases of σ1 = cosθ σx − sinθ σy and σ2 = −sinθ σx + cosθ σy, outcome a
// labelling the (−1)^a eigenvector. Mutually biased for θ ≠ π/4.
inline std::vector<ProjectorFamily> biased_qubit_bases(double theta) {
  if (!(theta > 0.0 && theta < std::numbers::pi / 2.0))
    throw std::invalid_argument("biased_qubit_bases: need 0 < theta < pi/2");
  const double s = 1.0 / std::sqrt(2.0);
  auto equatorial = [&](double phi) {
    // eigenbasis of cosφ σx + sinφ σy
    ComplexVector plus(2), minus(2);
    plus << s, std::polar(s, phi);
    minus << s, -std::polar(s, phi);
    return projector_family({plus, minus});
  };
  return {equatorial(-theta), equatorial(std::numbers::pi / 2.0 + theta)};
}

inline ObservableSuite biased_qubit_suite(double theta) {
  return suite_from_bases(biased_qubit_bases(theta));
}

// Bloch images of a projective basis: α(a)_j = Tr[λ_j |a⟩⟨a|]. Σ_a α(a) = 0,
// and within one basis α(x)·α(y) = d δ_xy − 1.
inline std::vector<BlochVector> alpha_vectors(const ProjectorFamily& basis,
                                              const HermitianBasis& hbasis) {
  if (basis.dim != hbasis.dim)
    throw std::invalid_argument("alpha_vectors: dimension mismatch");
  std::vector<BlochVector> out;
  out.reserve(basis.kets.size());
  for (const ComplexVector& ket : basis.kets) {
    BlochVector v(hbasis.size());
    for (int j = 0; j < hbasis.size(); ++j) {
      const Complex value = ket.adjoint() * hbasis.elements[j] * ket;
      v(j) = value.real();
    }
    out.push_back(std::move(v));
  }
  return out;
}

// Alpha vectors for every basis in a suite, indexed [observable][outcome].
inline std::vector<std::vector<BlochVector>> alpha_vectors(
    const std::vector<ProjectorFamily>& bases, const HermitianBasis& hbasis) {
  std::vector<std::vector<BlochVector>> out;
  out.reserve(bases.size());
  for (const ProjectorFamily& b : bases) out.push_back(alpha_vectors(b, hbasis));
  return out;
}

struct KrausValidation {
  double completeness_deviation = 0.0;  // max-entry |ΣA†A − 1|
  double min_positivity = 0.0;          // smallest eigenvalue over all A†A
  bool ok(double eps = 1e-10) const {
    return completeness_deviation <= eps && min_positivity >= -eps;
  }
};

// Report-only check of the completeness relation and per-operator positivity.
inline KrausValidation validate_kraus(const KrausSet& set) {
  KrausValidation report;
  ComplexMatrix sum = ComplexMatrix::Zero(set.dim, set.dim);
  double min_eig = std::numeric_limits<double>::infinity();
  for (const ComplexMatrix& a : set.ops) {
    ComplexMatrix ada = a.adjoint() * a;
    sum += ada;
    min_eig = std::min(min_eig, min_eigenvalue(ada));
  }
  report.completeness_deviation = (sum - identity(set.dim)).cwiseAbs().maxCoeff();
  report.min_positivity = set.ops.empty() ? 0.0 : min_eig;
  return report;
}

// |⟨a_j|a_k⟩|² = 1/d for all vector pairs of distinct bases.
inline bool mutually_unbiased(const std::vector<ProjectorFamily>& bases,
                              double eps = 1e-10) {
  if (bases.empty()) return false;
  const int d = bases.front().dim;
  for (std::size_t j = 0; j < bases.size(); ++j)
    for (std::size_t k = j + 1; k < bases.size(); ++k)
      for (const ComplexVector& u : bases[j].kets)
        for (const ComplexVector& v : bases[k].kets) {
          const Complex overlap = u.adjoint() * v;
          if (std::abs(std::norm(overlap) - 1.0 / d) > eps) return false;
        }
  return true;
}

}  // namespace oqp
