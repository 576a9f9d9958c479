#pragma once

// Scan orchestration: nonclassicality over Bloch-vector grids, Werner
// threshold reports, and the named property suites behind `check`.
//
// Sphere grids inject the 6 axis poles and the 12 face-diagonal midpoints
// (±1,±1,0)-type/√2 exactly, so the analytic optima are sampled without
// grid-resolution slack.

#include "oqp/bipartite.hpp"
#include "oqp/classical.hpp"
#include "oqp/io.hpp"
#include "oqp/linalg.hpp"
#include "oqp/measurements.hpp"
#include "oqp/photon.hpp"
#include "oqp/sampling.hpp"
#include "oqp/sequential.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace oqp {

inline constexpr const char* kVersion = "0.1.0";

struct ScanSpec {
  enum class Family { sphere, ball, list };
  enum class SuiteKind { mub, biased, custom };

  Family family = Family::sphere;
  SuiteKind suite_kind = SuiteKind::mub;
  int mub_count = 2;  // K for the qubit MUB suite
  double theta = 0.0;
  std::optional<ObservableSuite> custom;
  int n_theta = 200;
  int n_phi = 400;
  int n_r = 11;
  std::vector<BlochVector> states;  // list family
};

struct ScanRow {
  BlochVector bloch;
  double nonclassicality = 0.0;
};

struct ScanResult {
  std::vector<ScanRow> rows;
  double max_n = 0.0;
  BlochVector argmax;
  double wall_seconds = 0.0;
};

inline BlochVector bloch3(double x, double y, double z) {
  BlochVector v(3);
  v << x, y, z;
  return v;
}

// Equal-angle sphere directions plus the exactly-injected special points.
inline std::vector<BlochVector> sphere_grid(int n_theta, int n_phi) {
  if (n_theta < 2 || n_phi < 2)
    throw std::invalid_argument("sphere_grid: resolution must be at least 2");
  std::vector<BlochVector> pts;
  pts.reserve(static_cast<std::size_t>(n_theta) * n_phi + 18);
  for (int i = 0; i < n_theta; ++i) {
    const double theta = std::numbers::pi * i / (n_theta - 1);
    for (int j = 0; j < n_phi; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / n_phi;
      pts.push_back(bloch3(std::sin(theta) * std::cos(phi),
                           std::sin(theta) * std::sin(phi), std::cos(theta)));
    }
  }
  for (int axis = 0; axis < 3; ++axis)
    for (double s : {1.0, -1.0}) {
      BlochVector v = BlochVector::Zero(3);
      v(axis) = s;
      pts.push_back(v);
    }
  const double r = 1.0 / std::sqrt(2.0);
  for (double s1 : {1.0, -1.0})
    for (double s2 : {1.0, -1.0}) {
      pts.push_back(bloch3(s1 * r, s2 * r, 0.0));
      pts.push_back(bloch3(s1 * r, 0.0, s2 * r));
      pts.push_back(bloch3(0.0, s1 * r, s2 * r));
    }
  return pts;
}

inline std::vector<BlochVector> ball_grid(int n_r, int n_theta, int n_phi) {
  if (n_r < 2) throw std::invalid_argument("ball_grid: need at least 2 shells");
  std::vector<BlochVector> pts;
  pts.push_back(BlochVector::Zero(3));
  const std::vector<BlochVector> directions = sphere_grid(n_theta, n_phi);
  for (int i = 1; i < n_r; ++i) {
    const double r = static_cast<double>(i) / (n_r - 1);
    for (const BlochVector& dir : directions) pts.push_back(r * dir);
  }
  return pts;
}

namespace detail {

inline double engine_nonclassicality(const BlochVector& bloch,
                                     const ObservableSuite& suite,
                                     const HermitianBasis& basis) {
  const DensityOperator rho = state_from_bloch(bloch, basis);
  return nonclassicality(quasiprobability(characteristic_function(rho, suite)));
}

}  // namespace detail

// N over the requested grid. MUB suites go through the closed form; biased and
// custom suites run the full sequential engine per point.
inline ScanResult scan_nonclassicality(const ScanSpec& spec) {
  const auto start = std::chrono::steady_clock::now();

  std::vector<BlochVector> pts;
  switch (spec.family) {
    case ScanSpec::Family::sphere:
      pts = sphere_grid(spec.n_theta, spec.n_phi);
      break;
    case ScanSpec::Family::ball:
      pts = ball_grid(spec.n_r, spec.n_theta, spec.n_phi);
      break;
    case ScanSpec::Family::list:
      pts = spec.states;
      if (pts.empty()) throw std::invalid_argument("scan: empty state list");
      break;
  }
  if (pts.size() > 5'000'000) throw std::invalid_argument("scan: oversized grid");

  const HermitianBasis basis = gell_mann_basis(2);
  std::vector<std::vector<BlochVector>> alphas;
  std::optional<ObservableSuite> engine_suite;
  switch (spec.suite_kind) {
    case ScanSpec::SuiteKind::mub:
      alphas = alpha_vectors(mub_bases(2, spec.mub_count), basis);
      break;
    case ScanSpec::SuiteKind::biased:
      engine_suite = biased_qubit_suite(spec.theta);
      break;
    case ScanSpec::SuiteKind::custom:
      if (!spec.custom) throw std::invalid_argument("scan: custom suite missing");
      if (spec.custom->dim != 2)
        throw std::invalid_argument("scan: Bloch grids are qubit-only");
      engine_suite = *spec.custom;
      break;
  }

  ScanResult result;
  result.rows.reserve(pts.size());
  result.max_n = -1.0;
  for (const BlochVector& v : pts) {
    double n;
    if (!alphas.empty()) {
      n = nonclassicality(mub_closed_form(v, alphas));
    } else {
      n = detail::engine_nonclassicality(v, *engine_suite, basis);
    }
    result.rows.push_back({v, n});
    if (n > result.max_n) {
      result.max_n = n;
      result.argmax = v;
    }
  }
  result.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

inline void write_scan_csv(std::ostream& os, const ScanResult& result,
                           int precision = 12) {
  os << "rho1,rho2,rho3,N\n";
  for (const ScanRow& row : result.rows) {
    for (int i = 0; i < 3; ++i) os << format_double(row.bloch(i), precision) << ",";
    os << format_double(row.nonclassicality, precision) << "\n";
  }
}

struct WernerReport {
  int d = 0;
  WernerScanResult scan;
  std::optional<double> threshold;  // bisected crossing of min_c W_m
  double wall_seconds = 0.0;
};

// Scan min_c W_m over a p grid and refine the sign change by bisection.
inline WernerReport werner_report(int d, int steps) {
  if (!is_prime(d) || d > 7)
    throw std::invalid_argument("werner_report: supported dimensions are primes <= 7");
  if (steps < 2) throw std::invalid_argument("werner_report: need at least 2 steps");
  const auto start = std::chrono::steady_clock::now();
  std::vector<double> grid;
  for (int i = 0; i <= steps; ++i) grid.push_back(static_cast<double>(i) / steps);
  WernerReport report;
  report.d = d;
  report.scan = werner_threshold_scan(d, grid);
  report.threshold = report.scan.crossing;
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline void write_werner_csv(std::ostream& os, const WernerReport& report,
                             int precision = 12) {
  os << "p,min_c,argmin_c\n";
  for (const WernerScanPoint& pt : report.scan.points) {
    os << format_double(pt.p, precision) << ","
       << format_double(pt.min_value, precision) << ",";
    for (int c : pt.argmin.c) os << c;
    os << "\n";
  }
}

inline Json werner_report_to_json(const WernerReport& report) {
  Json j{{"d", report.d},
         {"analytic_threshold", 1.0 / (report.d + 1)},
         {"wall_seconds", report.wall_seconds}};
  if (report.threshold) j["threshold"] = *report.threshold;
  return j;
}

// ---------------------------------------------------------------------------
// Named property suites (the `check` subcommand).

struct PropertyItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RunReport {
  std::string command;
  std::string version = kVersion;
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;
  std::vector<PropertyItem> items;

  bool all_pass() const {
    for (const PropertyItem& item : items)
      if (!item.pass) return false;
    return true;
  }
};

inline Json run_report_to_json(const RunReport& report) {
  Json items = Json::array();
  for (const PropertyItem& item : report.items)
    items.push_back({{"name", item.name}, {"pass", item.pass}, {"detail", item.detail}});
  return Json{{"command", report.command},
              {"version", report.version},
              {"seed", report.seed},
              {"wall_seconds", report.wall_seconds},
              {"all_pass", report.all_pass()},
              {"items", items}};
}

namespace detail {

inline KrausSet trine_povm() {
  // three sub-normalized qubit projectors at 120° scaled by √(2/3)
  KrausSet ks;
  ks.dim = 2;
  ks.outcomes = 3;
  for (int a = 0; a < 3; ++a) {
    const double phi = 2.0 * std::numbers::pi * a / 3.0;
    ComplexVector ket(2);
    ket << std::cos(phi / 2.0), std::sin(phi / 2.0);
    ks.ops.push_back(std::sqrt(2.0 / 3.0) * (ket * ket.adjoint()));
  }
  return ks;
}

inline ObservableSuite random_povm_suite(int d, int D, int K, SplitMix64& rng) {
  std::vector<KrausSet> sets;
  for (int k = 0; k < K; ++k) {
    std::vector<ComplexMatrix> gs;
    ComplexMatrix total = ComplexMatrix::Zero(d, d);
    for (int a = 0; a < D; ++a) {
      ComplexMatrix g(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
      gs.push_back(g);
      total += g.adjoint() * g;
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(total);
    const ComplexMatrix inv_sqrt = solver.operatorInverseSqrt();
    KrausSet ks;
    ks.dim = d;
    ks.outcomes = D;
    for (ComplexMatrix& g : gs) ks.ops.push_back(g * inv_sqrt);
    sets.push_back(std::move(ks));
  }
  return make_suite(std::move(sets));
}

inline ObservableSuite random_projective_suite(int d, int K, SplitMix64& rng) {
  std::vector<ProjectorFamily> bases;
  for (int k = 0; k < K; ++k) {
    const ComplexMatrix u = random_unitary(d, rng);
    std::vector<ComplexVector> kets;
    for (int a = 0; a < d; ++a) kets.push_back(u.col(a));
    bases.push_back(projector_family(std::move(kets)));
  }
  return suite_from_bases(bases);
}

inline double max_abs_diff(const QuasiTable& a, const QuasiTable& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    m = std::max(m, std::abs(a.values[i] - b.values[i]));
  return m;
}

// Single-index marginals of W vs the observable-alone outcome distributions.
inline double marginal_alone_deviation(const DensityOperator& rho,
                                       const ObservableSuite& suite) {
  const QuasiTable w = quasiprobability(characteristic_function(rho, suite));
  double worst = 0.0;
  for (int k = 0; k < suite.count(); ++k) {
    const QuasiTable m = marginal(w, {k});
    SetupSelector sel;
    sel.n.assign(suite.count(), 0);
    sel.n[k] = 1;
    const JointDistribution alone = joint_distribution(rho, suite, sel);
    for (int a = 0; a < suite.outcomes; ++a)
      worst = std::max(worst, std::abs(m.values[a] - alone.p[a]));
  }
  return worst;
}

}  // namespace detail

inline std::vector<PropertyItem> engine_property_suite(std::uint64_t seed) {
  std::vector<PropertyItem> items;
  SplitMix64 rng(seed);

  {  // closed form vs brute force, d ∈ {2,3}, all K ≤ d+1
    double worst = 0.0;
    for (int d : {2, 3}) {
      const HermitianBasis basis = gell_mann_basis(d);
      for (int K = 1; K <= d + 1; ++K) {
        const auto bases = mub_bases(d, K);
        const auto alphas = alpha_vectors(bases, basis);
        const ObservableSuite suite = suite_from_bases(bases);
        for (int trial = 0; trial < 40; ++trial) {
          const DensityOperator rho = random_density_operator(d, rng);
          const QuasiTable brute = quasiprobability(characteristic_function(rho, suite));
          const QuasiTable closed = mub_closed_form(bloch_vector(rho, basis), alphas);
          worst = std::max(worst, detail::max_abs_diff(brute, closed));
        }
      }
    }
    items.push_back({"mub closed form equals brute-force transform",
                     worst < 1e-10, "max deviation " + format_double(worst, 3)});
  }

  {  // normalization, realness, round trip, single-index marginals
    double worst_norm = 0.0, worst_round = 0.0, worst_marginal = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const int pick = trial % 4;
      ObservableSuite suite;
      int d;
      if (pick == 0) {
        d = 2;
        suite = mub_suite(2, 3);
      } else if (pick == 1) {
        d = 2;
        suite = make_suite({detail::trine_povm(), detail::trine_povm()});
      } else if (pick == 2) {
        d = 3;
        suite = detail::random_projective_suite(3, 3, rng);
      } else {
        d = 2;
        suite = detail::random_povm_suite(2, 3, 2, rng);
      }
      const DensityOperator rho = random_density_operator(d, rng);
      const CharacteristicTable chi = characteristic_function(rho, suite);
      const QuasiTable w = quasiprobability(chi);
      worst_norm = std::max(worst_norm, std::abs(w.sum() - 1.0));
      const CharacteristicTable back = inverse_transform(w);
      for (std::size_t i = 0; i < chi.values.size(); ++i)
        worst_round = std::max(worst_round, std::abs(chi.values[i] - back.values[i]));
      worst_marginal = std::max(worst_marginal, detail::marginal_alone_deviation(rho, suite));
    }
    items.push_back({"quasiprobability normalized over random suites",
                     worst_norm < 1e-10, "max |ΣW − 1| " + format_double(worst_norm, 3)});
    items.push_back({"transform round trip on random suites",
                     worst_round < 1e-10, "max deviation " + format_double(worst_round, 3)});
    items.push_back({"single-index marginals match alone statistics",
                     worst_marginal < 1e-10,
                     "max deviation " + format_double(worst_marginal, 3)});
  }
  return items;
}

inline std::vector<PropertyItem> classical_property_suite(std::uint64_t seed) {
  std::vector<PropertyItem> items;
  SplitMix64 rng(seed);
  const std::vector<std::pair<int, int>> shapes{{2, 2}, {3, 2}, {2, 3}, {4, 3}};
  double worst = 0.0;
  bool fired = false;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto [K, D] = shapes[trial % shapes.size()];
    TableShape shape(K, D);
    const ClassicalJoint joint =
        classical_joint(K, D, random_simplex(static_cast<int>(shape.size()), rng));
    const RoundTripReport rt = lhv_roundtrip_check(joint);
    worst = std::max(worst, rt.max_deviation);
    const QuasiTable w = quasiprobability(classical_characteristic(joint));
    fired = fired || certify_nonclassical(w).no_lhv();
  }
  items.push_back({"classical joints round-trip exactly", worst < 1e-12,
                   "max deviation " + format_double(worst, 3)});
  items.push_back({"certifier silent on classical models", !fired,
                   fired ? "false positive" : "no false positives"});
  return items;
}

inline std::vector<PropertyItem> bipartite_property_suite(std::uint64_t seed) {
  std::vector<PropertyItem> items;
  SplitMix64 rng(seed);

  {  // Bloch-form table vs generic engine on the composite system, d = 2
    const ConjugateMubPair pair = conjugate_bases(2);
    std::vector<KrausSet> sets;
    const ComplexMatrix eye = identity(2);
    for (const ProjectorFamily& fam : pair.alice) {
      KrausSet ks;
      ks.dim = 4;
      ks.outcomes = 2;
      for (const ComplexVector& ket : fam.kets)
        ks.ops.push_back(tensor_product(ket * ket.adjoint(), eye));
      sets.push_back(std::move(ks));
    }
    for (const ProjectorFamily& fam : pair.bob) {
      KrausSet ks;
      ks.dim = 4;
      ks.outcomes = 2;
      for (const ComplexVector& ket : fam.kets)
        ks.ops.push_back(tensor_product(eye, ket * ket.adjoint()));
      sets.push_back(std::move(ks));
    }
    const ObservableSuite composite = make_suite(std::move(sets));
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      const BipartiteState rho =
          (trial == 0) ? werner_state(2, 1.0)
                       : bipartite_state(2, random_density_operator(4, rng));
      const QuasiTable direct = bipartite_quasiprobability(rho, pair.alice, pair.bob);
      const QuasiTable engine =
          quasiprobability(characteristic_function(rho.state, composite));
      worst = std::max(worst, detail::max_abs_diff(direct, engine));
    }
    items.push_back({"bipartite Bloch form equals composite engine", worst < 1e-10,
                     "max deviation " + format_double(worst, 3)});
  }

  {  // witness definition consistency: explicit difference sum vs Tr[S·M(c)]
    const ConjugateMubPair pair = conjugate_bases(2);
    double worst = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
      const BipartiteState rho = bipartite_state(2, random_density_operator(4, rng));
      const QuasiTable w = bipartite_quasiprobability(rho, pair.alice, pair.bob);
      const CorrelationMatrix corr = correlation_matrix(rho, pair.basis_a, pair.basis_b);
      const int K = 3, d = 2;
      std::vector<int> c(K, 0);
      while (true) {
        double direct = 0.0;
        std::vector<int> idx(2 * K);
        for (std::int64_t flat = 0; flat < w.shape.size(); ++flat) {
          w.shape.unravel(flat, idx);
          bool match = true;
          for (int k = 0; k < K; ++k)
            if (((idx[k] - idx[K + k]) % d + d) % d != c[k]) match = false;
          if (match) direct += w.values[flat];
        }
        const double mapped = marginal_witness(corr, pair.alphas, pair.betas, {c});
        worst = std::max(worst, std::abs(direct - mapped));
        int i = K - 1;
        while (i >= 0 && c[i] == d - 1) c[i--] = 0;
        if (i < 0) break;
        ++c[i];
      }
    }
    items.push_back({"marginal witness matches explicit difference sum",
                     worst < 1e-10, "max deviation " + format_double(worst, 3)});
  }

  {  // separable positivity, d = 2: every shift pattern is induced by a
     // unitary or antiunitary conjugation, so the bound holds for all c
    double lowest = 0.0;
    const ConjugateMubPair pair = conjugate_bases(2);
    for (int trial = 0; trial < 100; ++trial) {
      const BipartiteState rho = random_separable_state(2, rng);
      const CorrelationMatrix corr =
          correlation_matrix(rho, pair.basis_a, pair.basis_b);
      lowest = std::min(lowest,
                        min_marginal_witness(corr, pair.alphas, pair.betas).value);
    }
    items.push_back({"witness nonnegative on separable states (d=2)",
                     lowest >= -1e-10, "min value " + format_double(lowest, 3)});
  }

  {  // separable positivity, d = 3, restricted to the displacement-realizable
     // shifts (Z^z X^m gives c_k = z − 2km on the phase bases, m on the
     // computational basis). Positivity FAILS off this set: see the
     // documented counterexample test in the bipartite unit suite.
    const int d = 3;
    const ConjugateMubPair pair = conjugate_bases(d);
    double lowest = 0.0;
    for (int trial = 0; trial < 60; ++trial) {
      const BipartiteState rho = random_separable_state(d, rng);
      const CorrelationMatrix corr =
          correlation_matrix(rho, pair.basis_a, pair.basis_b);
      for (int z = 0; z < d; ++z)
        for (int m = 0; m < d; ++m) {
          ShiftVector c;
          for (int k = 1; k <= d; ++k)
            c.c.push_back((((z - 2 * k * m) % d) + d) % d);
          c.c.push_back(m);
          lowest = std::min(
              lowest, marginal_witness(corr, pair.alphas, pair.betas, c));
        }
    }
    items.push_back({"witness nonnegative on separable states (d=3, realizable shifts)",
                     lowest >= -1e-10, "min value " + format_double(lowest, 3)});
  }

  {  // Werner minimum is the affine bound
    double worst = 0.0;
    for (int d : {2, 3}) {
      const ConjugateMubPair pair = conjugate_bases(d);
      double scale = 1.0;
      for (int k = 0; k < d + 1; ++k) scale /= d;
      for (int i = 0; i <= 20; ++i) {
        const double p = i / 20.0;
        const BipartiteState rho = werner_state(d, p);
        const CorrelationMatrix corr =
            correlation_matrix(rho, pair.basis_a, pair.basis_b);
        const double value = min_marginal_witness(corr, pair.alphas, pair.betas).value;
        worst = std::max(worst, std::abs(value - scale * (1.0 - p * (d + 1))));
      }
    }
    items.push_back({"werner witness minimum is affine in p", worst < 1e-10,
                     "max deviation " + format_double(worst, 3)});
  }
  return items;
}

inline std::vector<PropertyItem> photon_property_suite(std::uint64_t seed) {
  std::vector<PropertyItem> items;
  SplitMix64 rng(seed);

  ComplexVector ket(2);
  ket << std::cos(std::numbers::pi / 8), std::sin(std::numbers::pi / 8);
  const DensityOperator state = pure_state(ket);

  ExperimentConfig cfg{state, 100000, LossModel{}, seed};
  const CountsTable a = simulate_counts(cfg);
  const CountsTable b = simulate_counts(cfg);
  bool identical = true;
  bool conserved = true;
  for (int s = 0; s < 4; ++s) {
    std::int64_t det = 0;
    for (int a1 = 0; a1 < 2; ++a1)
      for (int a2 = 0; a2 < 2; ++a2) {
        identical = identical &&
                    a.setups[s].detected[a1][a2] == b.setups[s].detected[a1][a2];
        det += a.setups[s].detected[a1][a2];
      }
    conserved = conserved && (det + a.setups[s].lost == cfg.shots);
  }
  items.push_back({"identical seeds give identical counts", identical, ""});
  items.push_back({"detected + lost = shots per setup", conserved, ""});

  {  // simulated quasiprobability near the exact transform
    const QuasiTable w =
        experimental_quasiprobability(experimental_characteristic(a));
    const ObservableSuite suite =
        suite_from_bases({mub_bases(2, 3)[2], mub_bases(2, 3)[0]});  // H/V then D/A
    const QuasiTable exact = quasiprobability(characteristic_function(state, suite));
    const double dev = detail::max_abs_diff(w, exact);
    const double band = 5.0 / std::sqrt(static_cast<double>(cfg.shots));
    items.push_back({"simulated table within statistical band of exact table",
                     dev < band, "deviation " + format_double(dev, 3)});
  }

  {  // classical conditioned positivity on random loss models
    bool all_pass = true;
    for (int trial = 0; trial < 200; ++trial) {
      ClassicalDetectionTable table;
      const std::vector<double> weights = random_simplex(5, rng);
      table.p_loss = weights[4];
      table.p_detect = {{{weights[0], weights[1]}, {weights[2], weights[3]}}};
      const ConditionedCheckReport report = classical_conditioned_check(table);
      all_pass = all_pass && report.pass && report.quasi.min_entry() >= 0.0;
    }
    items.push_back({"loss-conditioned classical tables stay nonnegative", all_pass, ""});
  }
  return items;
}

inline RunReport run_property_suite(const std::string& selector, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  report.command = "check " + selector;
  report.seed = seed;
  auto append = [&](std::vector<PropertyItem> items) {
    for (PropertyItem& item : items) report.items.push_back(std::move(item));
  };
  if (selector == "engine" || selector == "all") append(engine_property_suite(seed));
  if (selector == "classical" || selector == "all")
    append(classical_property_suite(seed + 1));
  if (selector == "bipartite" || selector == "all")
    append(bipartite_property_suite(seed + 2));
  if (selector == "photon" || selector == "all") append(photon_property_suite(seed + 3));
  if (report.items.empty())
    throw std::invalid_argument("run_property_suite: unknown suite \"" + selector + "\"");
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace oqp
