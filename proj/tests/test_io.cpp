#include "oqp/io.hpp"
#include "oqp/sampling.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

using namespace oqp;
using Catch::Matchers::WithinAbs;

TEST_CASE("state json round trip", "[io]") {
  SplitMix64 rng(3);
  const DensityOperator rho = random_density_operator(3, rng);
  const Json j = state_to_json(rho);
  REQUIRE(j.at("dim") == 3);
  REQUIRE(j.at("matrix").size() == 9);
  const DensityOperator back = state_from_json(j);
  REQUIRE((rho.matrix() - back.matrix()).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("state json accepts the bloch alternative", "[io]") {
  const Json j{{"bloch", {0.3, -0.2, 0.4}}};
  const DensityOperator rho = state_from_json(j);
  const BlochVector v = bloch_vector(rho, gell_mann_basis(2));
  REQUIRE_THAT(v(0), WithinAbs(0.3, 1e-12));
  REQUIRE_THAT(v(1), WithinAbs(-0.2, 1e-12));
  REQUIRE_THAT(v(2), WithinAbs(0.4, 1e-12));

  REQUIRE_THROWS_AS(state_from_json(Json{{"bloch", {0.3, 0.2}}}), Error);
  REQUIRE_THROWS_AS(state_from_json(Json::object()), Error);
}

TEST_CASE("measurement json schema", "[io]") {
  SECTION("mub kind") {
    const Json j{{"kind", "mub"}, {"d", 3}, {"K", 2}};
    const ObservableSuite suite = suite_from_json(j);
    REQUIRE(suite.dim == 3);
    REQUIRE(suite.count() == 2);
    REQUIRE(suite.outcomes == 3);
  }

  SECTION("biased kind") {
    const Json j{{"kind", "biased"}, {"theta", 0.25}};
    const ObservableSuite suite = suite_from_json(j);
    REQUIRE(suite.dim == 2);
    REQUIRE(suite.count() == 2);
  }

  SECTION("custom kind round trip") {
    const ObservableSuite suite = mub_suite(2, 2);
    const ObservableSuite back = suite_from_json(suite_to_json(suite));
    REQUIRE(back.dim == suite.dim);
    REQUIRE(back.count() == suite.count());
    for (int k = 0; k < suite.count(); ++k)
      for (int a = 0; a < suite.outcomes; ++a)
        REQUIRE((suite.sets[k].ops[a] - back.sets[k].ops[a]).cwiseAbs().maxCoeff() <
                1e-15);
  }

  SECTION("unknown kind is rejected") {
    REQUIRE_THROWS_AS(suite_from_json(Json{{"kind", "weak"}}), Error);
  }
}

TEST_CASE("table csv layout", "[io]") {
  QuasiTable w{TableShape(2, 2), {0.5, 0.25, 0.25, 0.0}};
  std::ostringstream os;
  write_quasi_csv(os, w, 6);
  REQUIRE(os.str() ==
          "a1,a2,value\n0,0,0.5\n0,1,0.25\n1,0,0.25\n1,1,0\n");

  CharacteristicTable chi{TableShape(1, 2), {Complex(1.0), Complex(0.0, -0.5)}};
  std::ostringstream cs;
  write_chi_csv(cs, chi, 6);
  REQUIRE(cs.str() == "n1,re,im\n0,1,0\n1,0,-0.5\n");
}

TEST_CASE("verdict and witness json", "[io]") {
  QuasiTable w{TableShape(2, 2), {0.5, 0.5, 0.1, -0.1}};
  const Json no_lhv = verdict_to_json(certify_nonclassical(w));
  REQUIRE(no_lhv.at("verdict") == "no-LHV");
  REQUIRE_FALSE(no_lhv.contains("model"));

  QuasiTable ok{TableShape(2, 2), {0.25, 0.25, 0.25, 0.25}};
  const Json lhv = verdict_to_json(certify_nonclassical(ok));
  REQUIRE(lhv.at("verdict") == "LHV-consistent");
  REQUIRE(lhv.contains("model"));

  WitnessMinimum m{-0.02, {{1, 1, 1}}};
  const Json jw = witness_to_json(m);
  REQUIRE(jw.at("entangled") == true);
  REQUIRE(jw.at("witness_c") == Json::array({1, 1, 1}));
  REQUIRE_THAT(jw.at("value").get<double>(), WithinAbs(-0.02, 1e-15));
}

TEST_CASE("counts csv layout", "[io]") {
  CountsTable counts;
  counts.shots_per_setup = 10;
  counts.setup(1, 1).detected = {{{4, 3}, {2, 1}}};
  std::ostringstream os;
  write_counts_csv(os, counts);
  const std::string text = os.str();
  REQUIRE(text.rfind("setup,a1,a2,count\n", 0) == 0);
  REQUIRE(text.find("11,0,0,4\n") != std::string::npos);
  REQUIRE(text.find("11,1,1,1\n") != std::string::npos);
  REQUIRE(text.find("00,0,0,0\n") != std::string::npos);
}
