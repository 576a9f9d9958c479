#pragma once

// Local hidden variables with noninvasive measurability: a single nonnegative
// joint distribution p_cl over all K observables' outcomes explains every
// setup's expectations at once. For such a model the quasiprobability
// transform returns p_cl itself, so it is positive semidefinite; a negative
// entry of W therefore rules the model out.

#include "oqp/sequential.hpp"

#include <optional>
#include <string>

namespace oqp {

struct ClassicalJoint {
  TableShape shape;
  std::vector<double> p;
};

inline ClassicalJoint classical_joint(int K, int D, std::vector<double> p) {
  TableShape shape(K, D);
  if (static_cast<std::int64_t>(p.size()) != shape.size())
    throw std::invalid_argument("classical_joint: wrong entry count");
  double sum = 0.0;
  for (double v : p) {
    if (v < 0.0) throw Error("classical_joint: negative probability");
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-10)
    throw Error("classical_joint: probabilities must sum to 1");
  return ClassicalJoint{shape, std::move(p)};
}

// χ_cl(n) = Σ_a ω^(n·a) p_cl(a).
inline CharacteristicTable classical_characteristic(const ClassicalJoint& joint) {
  CharacteristicTable chi{joint.shape,
                          std::vector<Complex>(joint.p.begin(), joint.p.end())};
  detail::dft_all_axes(chi.values, chi.shape, +1);
  chi.values[0] = 1.0;
  return chi;
}

struct RoundTripReport {
  double max_deviation = 0.0;
  bool pass = false;
};

// Constructive direction of the positivity theorem: the quasiprobability of a
// classical model's expectations is the model's own joint distribution.
inline RoundTripReport lhv_roundtrip_check(const ClassicalJoint& joint,
                                           double eps = 1e-12) {
  QuasiTable w = quasiprobability(classical_characteristic(joint));
  RoundTripReport report;
  for (std::int64_t i = 0; i < joint.shape.size(); ++i)
    report.max_deviation = std::max(report.max_deviation,
                                    std::abs(w.values[i] - joint.p[i]));
  report.pass = report.max_deviation <= eps;
  return report;
}

struct LhvVerdict {
  std::string verdict;  // "no-LHV" or "LHV-consistent"
  double min_entry = 0.0;
  std::optional<QuasiTable> model;  // the explicit model p_cl = W when one exists

  bool no_lhv() const { return verdict == "no-LHV"; }
};

// "no-LHV" iff some entry is below −negativity_eps; otherwise the table itself
// is the hidden-variable model and is attached to the verdict.
inline LhvVerdict certify_nonclassical(const QuasiTable& w) {
  LhvVerdict v;
  v.min_entry = w.min_entry();
  if (v.min_entry < -tol::negativity_eps) {
    v.verdict = "no-LHV";
  } else {
    v.verdict = "LHV-consistent";
    v.model = w;
  }
  return v;
}

}  // namespace oqp
