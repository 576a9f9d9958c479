#include "oqp/classical.hpp"
#include "oqp/sampling.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace oqp;
using Catch::Matchers::WithinAbs;

TEST_CASE("classical characteristic of named distributions", "[classical]") {
  SECTION("uniform distribution transforms to a delta") {
    const ClassicalJoint uniform = classical_joint(2, 3, std::vector<double>(9, 1.0 / 9.0));
    const CharacteristicTable chi = classical_characteristic(uniform);
    REQUIRE(chi.values[0] == Complex(1.0));
    for (std::int64_t i = 1; i < 9; ++i) REQUIRE(std::abs(chi.values[i]) < 1e-12);
  }

  SECTION("deterministic distribution has unimodular phases") {
    std::vector<double> p(9, 0.0);
    TableShape shape(2, 3);
    const std::vector<int> a0{2, 1};
    p[shape.ravel(a0)] = 1.0;
    const CharacteristicTable chi = classical_characteristic(classical_joint(2, 3, p));
    std::vector<int> n(2);
    for (std::int64_t flat = 0; flat < shape.size(); ++flat) {
      shape.unravel(flat, n);
      REQUIRE_THAT(std::abs(chi.values[flat]), WithinAbs(1.0, 1e-12));
      const double phase = 2.0 * std::numbers::pi * (n[0] * a0[0] + n[1] * a0[1]) / 3.0;
      REQUIRE_THAT(chi.values[flat].real(), WithinAbs(std::cos(phase), 1e-12));
      REQUIRE_THAT(chi.values[flat].imag(), WithinAbs(std::sin(phase), 1e-12));
    }
  }

  SECTION("invalid joints are rejected") {
    REQUIRE_THROWS_AS(classical_joint(2, 2, {0.5, 0.5, 0.5, -0.5}), Error);
    REQUIRE_THROWS_AS(classical_joint(2, 2, {0.5, 0.5, 0.5, 0.5}), Error);
    REQUIRE_THROWS_AS(classical_joint(2, 2, {1.0}), std::invalid_argument);
  }
}

TEST_CASE("hidden-variable round trips", "[classical]") {
  SplitMix64 rng(17);

  SECTION("random joints across table shapes") {
    const std::vector<std::pair<int, int>> shapes{{2, 2}, {3, 2}, {2, 3}, {4, 3}};
    for (int trial = 0; trial < 1000; ++trial) {
      const auto [K, D] = shapes[trial % shapes.size()];
      TableShape shape(K, D);
      const ClassicalJoint joint =
          classical_joint(K, D, random_simplex(static_cast<int>(shape.size()), rng));
      const RoundTripReport report = lhv_roundtrip_check(joint);
      REQUIRE(report.pass);
      REQUIRE(report.max_deviation < 1e-12);
    }
  }

  SECTION("product of independent marginals round-trips and factorizes") {
    const std::vector<double> pa = random_simplex(3, rng);
    const std::vector<double> pb = random_simplex(3, rng);
    std::vector<double> joint_p;
    for (double a : pa)
      for (double b : pb) joint_p.push_back(a * b);
    const ClassicalJoint joint = classical_joint(2, 3, joint_p);
    REQUIRE(lhv_roundtrip_check(joint).pass);
    const QuasiTable w = quasiprobability(classical_characteristic(joint));
    const QuasiTable ma = marginal(w, {0});
    const QuasiTable mb = marginal(w, {1});
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        REQUIRE_THAT(w.at({a, b}), WithinAbs(ma.values[a] * mb.values[b], 1e-12));
  }

  SECTION("mixtures round-trip linearly") {
    TableShape shape(3, 2);
    std::vector<double> p1(8, 0.0), p2(8, 0.0);
    p1[shape.ravel(std::vector<int>{0, 1, 0})] = 1.0;
    p2[shape.ravel(std::vector<int>{1, 1, 1})] = 1.0;
    std::vector<double> mix(8);
    for (int i = 0; i < 8; ++i) mix[i] = 0.3 * p1[i] + 0.7 * p2[i];
    const QuasiTable w =
        quasiprobability(classical_characteristic(classical_joint(3, 2, mix)));
    for (int i = 0; i < 8; ++i) REQUIRE_THAT(w.values[i], WithinAbs(mix[i], 1e-12));
  }
}

TEST_CASE("nonclassicality certification", "[classical]") {
  const HermitianBasis basis = gell_mann_basis(2);
  const ObservableSuite suite = mub_suite(2, 2);
  auto w_of = [&](double x, double y, double z) {
    BlochVector v(3);
    v << x, y, z;
    return quasiprobability(
        characteristic_function(state_from_bloch(v, basis), suite));
  };

  SECTION("diagonal state has no hidden-variable model") {
    const double s = 1.0 / std::sqrt(2.0);
    const LhvVerdict verdict = certify_nonclassical(w_of(s, s, 0));
    REQUIRE(verdict.no_lhv());
    REQUIRE(verdict.verdict == "no-LHV");
    REQUIRE_FALSE(verdict.model.has_value());
    REQUIRE_THAT(verdict.min_entry, WithinAbs((1.0 - std::sqrt(2.0)) / 4.0, 1e-12));
  }

  SECTION("maximally mixed state carries the uniform model") {
    const LhvVerdict verdict = certify_nonclassical(w_of(0, 0, 0));
    REQUIRE(verdict.verdict == "LHV-consistent");
    REQUIRE(verdict.model.has_value());
    for (double v : verdict.model->values) REQUIRE_THAT(v, WithinAbs(0.25, 1e-12));
  }

  SECTION("states inside the classical region are LHV-consistent") {
    const LhvVerdict verdict = certify_nonclassical(w_of(0.5, 0.3, 0));
    REQUIRE(verdict.verdict == "LHV-consistent");
    REQUIRE(verdict.model.has_value());
  }

  SECTION("verdict agrees with the nonclassicality measure") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
      const BlochVector v = random_qubit_bloch_ball(rng);
      const QuasiTable w = w_of(v(0), v(1), v(2));
      REQUIRE(certify_nonclassical(w).no_lhv() ==
              (nonclassicality(w) > tol::negativity_eps));
    }
  }
}
