#pragma once

// Monte-Carlo model of the four polarization setups: a single photon runs
// through up to two polarizing-beam-splitter stages (H/V first, D/A second),
// with Bernoulli path loss after each stage and per-detector efficiencies at
// detection. Observable 1 is H/V (a1: 0=H, 1=V), observable 2 is D/A
// (a2: 0=D, 1=A). The estimated characteristic values use detection-conditioned
// frequencies only, so outcome-independent loss cancels from the estimate.

#include "oqp/classical.hpp"
#include "oqp/linalg.hpp"
#include "oqp/rng.hpp"
#include "oqp/sequential.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>

namespace oqp {

struct LossModel {
  double path_loss = 0.0;  // loss probability after each PBS stage
  std::array<std::array<double, 2>, 2> detector_efficiency{{{1.0, 1.0}, {1.0, 1.0}}};
};

struct ExperimentConfig {
  DensityOperator state;   // polarization qubit in the {|H⟩, |V⟩} basis
  std::int64_t shots = 0;  // per setup
  LossModel loss;
  std::uint64_t seed = 0;
};

struct SetupCounts {
  std::array<std::array<std::int64_t, 2>, 2> detected{};  // [a1][a2]
  std::int64_t lost = 0;

  std::int64_t total_detected() const {
    return detected[0][0] + detected[0][1] + detected[1][0] + detected[1][1];
  }
};

// Counts per setup (n1, n2); single-observable setups record the measured index
// and fold the unmeasured one onto 0.
struct CountsTable {
  std::array<SetupCounts, 4> setups{};  // index n1*2 + n2
  std::int64_t shots_per_setup = 0;

  const SetupCounts& setup(int n1, int n2) const { return setups[n1 * 2 + n2]; }
  SetupCounts& setup(int n1, int n2) { return setups[n1 * 2 + n2]; }
};

namespace detail {

// Born probabilities for the two PBS stages. |D⟩ = (|H⟩+|V⟩)/√2.
struct PolarizationTree {
  std::array<double, 2> p_hv{};                  // p(a1)
  std::array<std::array<double, 2>, 2> p_da{};   // p(a2 | a1) after H/V collapse
  std::array<double, 2> p_da_alone{};            // p(a2) with no first stage
};

inline PolarizationTree polarization_tree(const DensityOperator& rho) {
  if (rho.dim() != 2)
    throw std::invalid_argument("photon simulation needs a qubit state");
  const ComplexMatrix& m = rho.matrix();
  PolarizationTree tree;
  tree.p_hv = {m(0, 0).real(), m(1, 1).real()};
  // collapse to |H⟩ or |V⟩ makes the D/A stage unbiased
  tree.p_da = {{{0.5, 0.5}, {0.5, 0.5}}};
  const double re01 = m(0, 1).real();
  tree.p_da_alone = {0.5 + re01, 0.5 - re01};
  return tree;
}

}  // namespace detail

// One Bernoulli cascade per shot: outcome sampling per stage, path loss after
// each traversed stage, detector efficiency at the end. Identical seeds give
// identical counts bit for bit; each setup draws from its own split stream.
inline CountsTable simulate_counts(const ExperimentConfig& cfg) {
  if (cfg.shots <= 0) throw std::invalid_argument("simulate_counts: shots must be positive");
  if (cfg.loss.path_loss < 0.0 || cfg.loss.path_loss > 1.0)
    throw std::invalid_argument("simulate_counts: path loss outside [0, 1]");
  for (const auto& row : cfg.loss.detector_efficiency)
    for (double eff : row)
      if (eff < 0.0 || eff > 1.0)
        throw std::invalid_argument("simulate_counts: detector efficiency outside [0, 1]");

  const detail::PolarizationTree tree = detail::polarization_tree(cfg.state);
  const SplitMix64 root(cfg.seed);
  CountsTable counts;
  counts.shots_per_setup = cfg.shots;

  for (int n1 = 0; n1 < 2; ++n1)
    for (int n2 = 0; n2 < 2; ++n2) {
      SplitMix64 rng = root.split(static_cast<std::uint64_t>(n1 * 2 + n2));
      SetupCounts& sc = counts.setup(n1, n2);
      for (std::int64_t shot = 0; shot < cfg.shots; ++shot) {
        int a1 = 0, a2 = 0;
        bool alive = true;
        if (n1) {
          a1 = rng.bernoulli(tree.p_hv[1]) ? 1 : 0;
          alive = !rng.bernoulli(cfg.loss.path_loss);
        }
        if (alive && n2) {
          const auto& p = n1 ? tree.p_da[a1] : tree.p_da_alone;
          a2 = rng.bernoulli(p[1]) ? 1 : 0;
          alive = !rng.bernoulli(cfg.loss.path_loss);
        }
        if (alive)
          alive = rng.bernoulli(cfg.loss.detector_efficiency[a1][a2]);
        if (alive)
          ++sc.detected[a1][a2];
        else
          ++sc.lost;
      }
    }
  return counts;
}

// χ̃(n1, n2) = Σ_a (−1)^(n1 a1 + n2 a2) N(a1, a2) / N_det, per setup.
inline CharacteristicTable experimental_characteristic(const CountsTable& counts) {
  TableShape shape(2, 2);
  CharacteristicTable chi{shape, std::vector<Complex>(4, Complex(0.0))};
  for (int n1 = 0; n1 < 2; ++n1)
    for (int n2 = 0; n2 < 2; ++n2) {
      const SetupCounts& sc = counts.setup(n1, n2);
      const std::int64_t det = sc.total_detected();
      if (det == 0)
        throw Error("experimental_characteristic: setup (" + std::to_string(n1) + "," +
                    std::to_string(n2) + ") has no detected events");
      double acc = 0.0;
      for (int a1 = 0; a1 < 2; ++a1)
        for (int a2 = 0; a2 < 2; ++a2) {
          const double sign = ((n1 * a1 + n2 * a2) % 2 == 0) ? 1.0 : -1.0;
          acc += sign * static_cast<double>(sc.detected[a1][a2]);
        }
      chi.values[shape.ravel(std::array<int, 2>{n1, n2})] =
          acc / static_cast<double>(det);
    }
  chi.values[0] = 1.0;
  return chi;
}

// W̃(a1, a2) = ¼ Σ_n (−1)^(a1 n1 + a2 n2) χ̃(n1, n2).
inline QuasiTable experimental_quasiprobability(const CharacteristicTable& chi) {
  if (chi.shape.axes() != 2 || chi.shape.outcomes() != 2)
    throw std::invalid_argument("experimental_quasiprobability: expected a 2x2 table");
  return quasiprobability(chi);
}

// Classical detection model: nonnegative p(a1, a2, det) plus a loss mass
// summing to one.
struct ClassicalDetectionTable {
  std::array<std::array<double, 2>, 2> p_detect{};  // [a1][a2]
  double p_loss = 0.0;
};

struct ConditionedCheckReport {
  QuasiTable quasi;
  std::array<std::array<double, 2>, 2> conditional{};
  double max_deviation = 0.0;
  bool pass = false;
};

// Conditioning a classical loss model on detection leaves a legitimate joint
// distribution, and the transform returns exactly that distribution: the
// detection-conditioned quasiprobability stays nonnegative for any classical
// model, loss included.
inline ConditionedCheckReport classical_conditioned_check(
    const ClassicalDetectionTable& table, double eps = 1e-12) {
  double p_det = 0.0;
  for (const auto& row : table.p_detect)
    for (double p : row) {
      if (p < 0.0) throw Error("classical_conditioned_check: negative probability");
      p_det += p;
    }
  if (table.p_loss < 0.0 || std::abs(table.p_loss + p_det - 1.0) > 1e-10)
    throw Error("classical_conditioned_check: loss + detection mass must be 1");
  if (p_det <= 0.0)
    throw Error("classical_conditioned_check: zero detection probability");

  ConditionedCheckReport report{
      QuasiTable{TableShape(2, 2), std::vector<double>(4, 0.0)}, {}, 0.0, false};
  std::vector<double> cond(4);
  for (int a1 = 0; a1 < 2; ++a1)
    for (int a2 = 0; a2 < 2; ++a2) {
      report.conditional[a1][a2] = table.p_detect[a1][a2] / p_det;
      cond[a1 * 2 + a2] = report.conditional[a1][a2];
    }
  const ClassicalJoint joint = classical_joint(2, 2, cond);
  report.quasi = quasiprobability(classical_characteristic(joint));
  for (int a1 = 0; a1 < 2; ++a1)
    for (int a2 = 0; a2 < 2; ++a2)
      report.max_deviation =
          std::max(report.max_deviation,
                   std::abs(report.quasi.at({a1, a2}) - report.conditional[a1][a2]));
  report.pass = report.max_deviation <= eps;
  return report;
}

}  // namespace oqp
