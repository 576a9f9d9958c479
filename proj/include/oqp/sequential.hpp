#pragma once

// Sequential-measurement statistics for K observables with D outcomes each.
//
// A measurement setup selects a subset of the observables; the selected ones
// are applied consecutively in suite order (earliest first) with state update
// in between. The characteristic table collects, for every selector
// n ∈ {0..D−1}^K (n_k = 0 meaning "A_k not measured"),
//
//     χ(n) = Σ_a ω^(n·a) p(a | setup of n),   ω = exp(2πi/D),
//
// and the quasiprobability table is its inverse transform
//
//     W(a) = D^(−K) Σ_n ω^(−a·n) χ(n),
//
// which is real, sums to 1, and reproduces every χ(n) through the forward
// transform. Negative entries of W are what separates the quantum statistics
// from any joint classical description of the same consecutive measurements.

#include "oqp/linalg.hpp"
#include "oqp/measurements.hpp"

#include <algorithm>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

namespace oqp {

// Dense K-axis table geometry, every axis of length D, row-major with axis 0
// slowest. Sizes beyond the 10^6 cap are rejected rather than approximated.
class TableShape {
 public:
  static constexpr std::int64_t kMaxSize = 1'000'000;

  TableShape(int num_axes, int outcomes) : K_(num_axes), D_(outcomes) {
    if (K_ < 1) throw std::invalid_argument("TableShape: need at least one axis");
    if (D_ < 2) throw std::invalid_argument("TableShape: need at least two outcomes");
    size_ = 1;
    for (int k = 0; k < K_; ++k) {
      size_ *= D_;
      if (size_ > kMaxSize)
        throw Error("TableShape: D^K exceeds the 10^6 dense-table cap");
    }
  }

  int axes() const { return K_; }
  int outcomes() const { return D_; }
  std::int64_t size() const { return size_; }

  std::int64_t ravel(std::span<const int> idx) const {
    std::int64_t flat = 0;
    for (int k = 0; k < K_; ++k) flat = flat * D_ + idx[k];
    return flat;
  }

  void unravel(std::int64_t flat, std::span<int> out) const {
    for (int k = K_ - 1; k >= 0; --k) {
      out[k] = static_cast<int>(flat % D_);
      flat /= D_;
    }
  }

  bool operator==(const TableShape& other) const {
    return K_ == other.K_ && D_ == other.D_;
  }

 private:
  int K_;
  int D_;
  std::int64_t size_;
};

namespace detail {

// In-place length-D transform along every axis:
//   y[n] = Σ_a ω^(sign · n · a) x[a].
inline void dft_all_axes(std::vector<Complex>& v, const TableShape& shape, int sign) {
  const int D = shape.outcomes();
  std::vector<Complex> w(D);
  for (int m = 0; m < D; ++m)
    w[m] = std::polar(1.0, sign * 2.0 * std::numbers::pi * m / D);
  std::vector<Complex> slice(D), out(D);
  std::int64_t stride = shape.size();
  for (int axis = 0; axis < shape.axes(); ++axis) {
    stride /= D;
    const std::int64_t block = stride * D;
    for (std::int64_t base = 0; base < shape.size(); base += block)
      for (std::int64_t inner = 0; inner < stride; ++inner) {
        for (int a = 0; a < D; ++a) slice[a] = v[base + inner + a * stride];
        for (int n = 0; n < D; ++n) {
          Complex acc = 0.0;
          for (int a = 0; a < D; ++a) acc += w[(n * a) % D] * slice[a];
          out[n] = acc;
        }
        for (int n = 0; n < D; ++n) v[base + inner + n * stride] = out[n];
      }
  }
}

}  // namespace detail

// Which observables a setup measures: n_k ≠ 0 selects A_k.
struct SetupSelector {
  std::vector<int> n;

  std::vector<int> support() const {
    std::vector<int> s;
    for (std::size_t k = 0; k < n.size(); ++k)
      if (n[k] != 0) s.push_back(static_cast<int>(k));
    return s;
  }

  static SetupSelector from_mask(unsigned mask, int K) {
    SetupSelector sel;
    sel.n.assign(K, 0);
    for (int k = 0; k < K; ++k)
      if (mask & (1u << k)) sel.n[k] = 1;
    return sel;
  }
};

struct CharacteristicTable {
  TableShape shape;
  std::vector<Complex> values;

  Complex at(std::initializer_list<int> idx) const {
    return values[shape.ravel(std::span<const int>(idx.begin(), idx.size()))];
  }
};

struct QuasiTable {
  TableShape shape;
  std::vector<double> values;

  double at(std::initializer_list<int> idx) const {
    return values[shape.ravel(std::span<const int>(idx.begin(), idx.size()))];
  }
  double sum() const {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  double min_entry() const { return *std::min_element(values.begin(), values.end()); }
};

// Outcome statistics of one setup: probabilities over tuples of the selected
// observables' outcomes, selected indices in chronological order, row-major.
struct JointDistribution {
  std::vector<int> indices;
  int outcomes = 0;
  std::vector<double> p;
};

// Probabilities from the time-ordered composition of the selected Kraus maps.
// Branch weights are tracked unnormalized: the trace of each leaf IS the joint
// probability, so zero-probability branches need no special casing.
inline JointDistribution joint_distribution(const DensityOperator& rho,
                                            const ObservableSuite& suite,
                                            const SetupSelector& sel) {
  if (rho.dim() != suite.dim)
    throw std::invalid_argument("joint_distribution: state/suite dimension mismatch");
  if (static_cast<int>(sel.n.size()) != suite.count())
    throw std::invalid_argument("joint_distribution: selector length != observable count");
  for (int nk : sel.n)
    if (nk < 0 || nk >= suite.outcomes)
      throw std::invalid_argument("joint_distribution: selector component out of range");

  JointDistribution joint;
  joint.indices = sel.support();
  joint.outcomes = suite.outcomes;
  const int m = static_cast<int>(joint.indices.size());
  std::int64_t size = 1;
  for (int i = 0; i < m; ++i) size *= suite.outcomes;
  joint.p.assign(size, 0.0);

  const int D = suite.outcomes;
  auto recurse = [&](auto&& self, const ComplexMatrix& state, int depth,
                     std::int64_t base) -> void {
    if (depth == m) {
      joint.p[base] = std::max(state.trace().real(), 0.0);
      return;
    }
    const KrausSet& ks = suite.sets[joint.indices[depth]];
    for (int a = 0; a < D; ++a) {
      ComplexMatrix next = ks.ops[a] * state * ks.ops[a].adjoint();
      self(self, next, depth + 1, base * D + a);
    }
  };
  recurse(recurse, rho.matrix(), 0, 0);
  return joint;
}

// χ(n) for all D^K selectors. Each setup's joint distribution is computed once
// and Fourier-transformed; the entries with every component nonzero are the
// selectors belonging to that setup. χ(0,…,0) = 1 (trace of a valid state).
inline CharacteristicTable characteristic_function(const DensityOperator& rho,
                                                   const ObservableSuite& suite) {
  const int K = suite.count();
  if (K > 20)
    throw std::invalid_argument("characteristic_function: too many observables");
  TableShape shape(K, suite.outcomes);
  CharacteristicTable chi{shape, std::vector<Complex>(shape.size(), Complex(0.0))};
  const int D = suite.outcomes;

  std::vector<std::int64_t> strides(K);
  {
    std::int64_t s = 1;
    for (int k = K - 1; k >= 0; --k) {
      strides[k] = s;
      s *= D;
    }
  }

  for (unsigned mask = 0; mask < (1u << K); ++mask) {
    SetupSelector sel = SetupSelector::from_mask(mask, K);
    JointDistribution joint = joint_distribution(rho, suite, sel);
    const int m = static_cast<int>(joint.indices.size());
    if (m == 0) {
      chi.values[0] = 1.0;
      continue;
    }
    TableShape sub(m, D);
    std::vector<Complex> hat(joint.p.begin(), joint.p.end());
    detail::dft_all_axes(hat, sub, +1);
    // scatter the all-nonzero entries into the dense table
    std::vector<int> ns(m, 1);
    while (true) {
      std::int64_t flat_full = 0, flat_sub = 0;
      for (int i = 0; i < m; ++i) {
        flat_full += static_cast<std::int64_t>(ns[i]) * strides[joint.indices[i]];
        flat_sub = flat_sub * D + ns[i];
      }
      chi.values[flat_full] = hat[flat_sub];
      int i = m - 1;
      while (i >= 0 && ns[i] == D - 1) ns[i--] = 1;
      if (i < 0) break;
      ++ns[i];
    }
  }
  return chi;
}

// W(a) = D^(−K) Σ_n ω^(−a·n) χ(n). The imaginary residue of the transform is
// checked against tolerance and discarded.
inline QuasiTable quasiprobability(const CharacteristicTable& chi) {
  if (std::abs(chi.values[0] - Complex(1.0)) > 1e-8)
    throw Error("quasiprobability: χ(0,…,0) must be 1");
  std::vector<Complex> buf = chi.values;
  detail::dft_all_axes(buf, chi.shape, -1);
  const double scale = 1.0 / static_cast<double>(chi.shape.size());
  QuasiTable w{chi.shape, std::vector<double>(chi.shape.size())};
  double max_imag = 0.0;
  for (std::int64_t i = 0; i < chi.shape.size(); ++i) {
    buf[i] *= scale;
    max_imag = std::max(max_imag, std::abs(buf[i].imag()));
    w.values[i] = buf[i].real();
  }
  if (max_imag > tol::imag_residue)
    throw Error("quasiprobability: imaginary residue " + std::to_string(max_imag) +
                " signals an inconsistent characteristic table");
  return w;
}

// χ(n) = Σ_a ω^(n·a) W(a); exact inverse of the transform above.
inline CharacteristicTable inverse_transform(const QuasiTable& w) {
  CharacteristicTable chi{w.shape, std::vector<Complex>(w.values.begin(), w.values.end())};
  detail::dft_all_axes(chi.values, chi.shape, +1);
  return chi;
}

// N = ½ Σ_a (|W(a)| − W(a)); entries within negativity_eps of zero count as zero.
inline double nonclassicality(const QuasiTable& w) {
  double n = 0.0;
  for (double v : w.values)
    if (v < -tol::negativity_eps) n -= v;
  return n;
}

// Sum W over the axes not kept; kept axes stay in their original order.
inline QuasiTable marginal(const QuasiTable& w, std::vector<int> keep) {
  if (keep.empty()) throw std::invalid_argument("marginal: keep set is empty");
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
    throw std::invalid_argument("marginal: duplicate index");
  if (keep.front() < 0 || keep.back() >= w.shape.axes())
    throw std::invalid_argument("marginal: index out of range");

  TableShape out_shape(static_cast<int>(keep.size()), w.shape.outcomes());
  QuasiTable out{out_shape, std::vector<double>(out_shape.size(), 0.0)};
  std::vector<int> idx(w.shape.axes()), kept(keep.size());
  for (std::int64_t flat = 0; flat < w.shape.size(); ++flat) {
    w.shape.unravel(flat, idx);
    for (std::size_t i = 0; i < keep.size(); ++i) kept[i] = idx[keep[i]];
    out.values[out_shape.ravel(kept)] += w.values[flat];
  }
  return out;
}

// Closed form for suites of mutually unbiased bases:
//   W(a) = d^(−K) (1 + Σ_k α_k(a_k)·ρ).
// alphas[k][a] are the outcome Bloch vectors of observable k; the caller
// guarantees complementarity (the equivalence with the generic transform is
// what the tests check).
inline QuasiTable mub_closed_form(const BlochVector& rho_bloch,
                                  const std::vector<std::vector<BlochVector>>& alphas) {
  if (alphas.empty()) throw std::invalid_argument("mub_closed_form: no observables");
  const int K = static_cast<int>(alphas.size());
  const int d = static_cast<int>(alphas.front().size());
  std::vector<std::vector<double>> dots(K, std::vector<double>(d));
  for (int k = 0; k < K; ++k) {
    if (static_cast<int>(alphas[k].size()) != d)
      throw std::invalid_argument("mub_closed_form: ragged outcome count");
    for (int a = 0; a < d; ++a) {
      if (alphas[k][a].size() != rho_bloch.size())
        throw std::invalid_argument("mub_closed_form: Bloch dimension mismatch");
      dots[k][a] = alphas[k][a].dot(rho_bloch);
    }
  }
  TableShape shape(K, d);
  QuasiTable w{shape, std::vector<double>(shape.size())};
  const double scale = 1.0 / static_cast<double>(shape.size());
  std::vector<int> idx(K);
  for (std::int64_t flat = 0; flat < shape.size(); ++flat) {
    shape.unravel(flat, idx);
    double acc = 1.0;
    for (int k = 0; k < K; ++k) acc += dots[k][idx[k]];
    w.values[flat] = scale * acc;
  }
  return w;
}

}  // namespace oqp
