#pragma once

// File formats. States: {"dim": d, "matrix": [[re,im],...]} with d² row-major
// [re,im] pairs, or {"bloch": [...]} with d²−1 components (reconstructed in the
// Gell-Mann basis). Measurements: {"kind": "mub"|"biased"|"custom", ...}.
// Tables go to CSV as index-tuple columns plus a value column; the precision
// argument controls printed digits only.

#include "oqp/bipartite.hpp"
#include "oqp/classical.hpp"
#include "oqp/linalg.hpp"
#include "oqp/measurements.hpp"
#include "oqp/photon.hpp"
#include "oqp/sequential.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace oqp {

using Json = nlohmann::json;

inline std::string format_double(double v, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
  return buf;
}

inline Json state_to_json(const DensityOperator& rho) {
  Json pairs = Json::array();
  const ComplexMatrix& m = rho.matrix();
  for (int i = 0; i < rho.dim(); ++i)
    for (int j = 0; j < rho.dim(); ++j)
      pairs.push_back({m(i, j).real(), m(i, j).imag()});
  return Json{{"dim", rho.dim()}, {"matrix", pairs}};
}

inline DensityOperator state_from_json(const Json& j) {
  if (j.contains("matrix")) {
    const int d = j.at("dim").get<int>();
    const Json& pairs = j.at("matrix");
    if (static_cast<int>(pairs.size()) != d * d)
      throw Error("state_from_json: matrix needs d*d [re,im] pairs");
    ComplexMatrix m(d, d);
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < d; ++k) {
        const Json& p = pairs[i * d + k];
        m(i, k) = Complex(p.at(0).get<double>(), p.at(1).get<double>());
      }
    return DensityOperator(std::move(m));
  }
  if (j.contains("bloch")) {
    const std::vector<double> comps = j.at("bloch").get<std::vector<double>>();
    const int d = static_cast<int>(std::lround(std::sqrt(comps.size() + 1.0)));
    if (d * d - 1 != static_cast<int>(comps.size()))
      throw Error("state_from_json: bloch needs d*d-1 components");
    BlochVector v(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) v(i) = comps[i];
    return state_from_bloch(v, gell_mann_basis(d));
  }
  throw Error("state_from_json: need a \"matrix\" or \"bloch\" field");
}

inline Json kraus_to_json(const KrausSet& set) {
  Json ops = Json::array();
  for (const ComplexMatrix& a : set.ops) {
    Json pairs = Json::array();
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j)
        pairs.push_back({a(i, j).real(), a(i, j).imag()});
    ops.push_back(pairs);
  }
  return ops;
}

inline Json suite_to_json(const ObservableSuite& suite) {
  Json kraus = Json::array();
  for (const KrausSet& s : suite.sets) kraus.push_back(kraus_to_json(s));
  return Json{{"kind", "custom"},
              {"d", suite.dim},
              {"K", suite.count()},
              {"D", suite.outcomes},
              {"kraus", kraus}};
}

inline ObservableSuite suite_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "mub") {
    return mub_suite(j.at("d").get<int>(), j.at("K").get<int>());
  }
  if (kind == "biased") {
    return biased_qubit_suite(j.at("theta").get<double>());
  }
  if (kind == "custom") {
    const int d = j.at("d").get<int>();
    const Json& kraus = j.at("kraus");
    std::vector<KrausSet> sets;
    for (const Json& jset : kraus) {
      KrausSet ks;
      ks.dim = d;
      ks.outcomes = static_cast<int>(jset.size());
      for (const Json& jop : jset) {
        if (static_cast<int>(jop.size()) != d * d)
          throw Error("suite_from_json: each Kraus matrix needs d*d [re,im] pairs");
        ComplexMatrix m(d, d);
        for (int i = 0; i < d; ++i)
          for (int k = 0; k < d; ++k)
            m(i, k) = Complex(jop[i * d + k].at(0).get<double>(),
                              jop[i * d + k].at(1).get<double>());
        ks.ops.push_back(std::move(m));
      }
      sets.push_back(std::move(ks));
    }
    return make_suite(std::move(sets));
  }
  throw Error("suite_from_json: unknown kind \"" + kind + "\"");
}

inline Json quasi_to_json(const QuasiTable& w) {
  return Json{{"K", w.shape.axes()},
              {"D", w.shape.outcomes()},
              {"indexing", "row-major"},
              {"values", w.values}};
}

inline Json chi_to_json(const CharacteristicTable& chi) {
  Json values = Json::array();
  for (const Complex& v : chi.values) values.push_back({v.real(), v.imag()});
  return Json{{"K", chi.shape.axes()},
              {"D", chi.shape.outcomes()},
              {"indexing", "row-major"},
              {"values", values}};
}

inline void write_quasi_csv(std::ostream& os, const QuasiTable& w, int precision = 12) {
  for (int k = 0; k < w.shape.axes(); ++k) os << "a" << (k + 1) << ",";
  os << "value\n";
  std::vector<int> idx(w.shape.axes());
  for (std::int64_t flat = 0; flat < w.shape.size(); ++flat) {
    w.shape.unravel(flat, idx);
    for (int v : idx) os << v << ",";
    os << format_double(w.values[flat], precision) << "\n";
  }
}

inline void write_chi_csv(std::ostream& os, const CharacteristicTable& chi,
                          int precision = 12) {
  for (int k = 0; k < chi.shape.axes(); ++k) os << "n" << (k + 1) << ",";
  os << "re,im\n";
  std::vector<int> idx(chi.shape.axes());
  for (std::int64_t flat = 0; flat < chi.shape.size(); ++flat) {
    chi.shape.unravel(flat, idx);
    for (int v : idx) os << v << ",";
    os << format_double(chi.values[flat].real(), precision) << ","
       << format_double(chi.values[flat].imag(), precision) << "\n";
  }
}

inline Json verdict_to_json(const LhvVerdict& v) {
  Json j{{"verdict", v.verdict}, {"min_entry", v.min_entry}};
  if (v.model) j["model"] = quasi_to_json(*v.model);
  return j;
}

inline Json witness_to_json(const WitnessMinimum& m, double eps = 1e-10) {
  return Json{{"entangled", m.value < -eps},
              {"witness_c", m.argmin.c},
              {"value", m.value}};
}

inline void write_counts_csv(std::ostream& os, const CountsTable& counts) {
  os << "setup,a1,a2,count\n";
  for (int n1 = 0; n1 < 2; ++n1)
    for (int n2 = 0; n2 < 2; ++n2)
      for (int a1 = 0; a1 < 2; ++a1)
        for (int a2 = 0; a2 < 2; ++a2)
          os << n1 << n2 << "," << a1 << "," << a2 << ","
             << counts.setup(n1, n2).detected[a1][a2] << "\n";
}

inline Json counts_to_json(const CountsTable& counts) {
  Json setups = Json::array();
  for (int n1 = 0; n1 < 2; ++n1)
    for (int n2 = 0; n2 < 2; ++n2) {
      const SetupCounts& sc = counts.setup(n1, n2);
      setups.push_back({{"n1", n1},
                        {"n2", n2},
                        {"counts", {{sc.detected[0][0], sc.detected[0][1]},
                                    {sc.detected[1][0], sc.detected[1][1]}}},
                        {"lost", sc.lost}});
    }
  return Json{{"shots_per_setup", counts.shots_per_setup}, {"setups", setups}};
}

}  // namespace oqp
