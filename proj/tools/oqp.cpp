// Command-line front end. Subcommands:
//   scan        nonclassicality over a Bloch-vector grid
//   wfunc       quasiprobability table for one state and suite
//   witness     bipartite entanglement witness verdict
//   werner      Werner-state threshold scan and bisection
//   photon-sim  Monte-Carlo polarization experiment
//   check       named property suites
// Exit codes: 0 success, 1 property failure, 2 usage error.

#include "oqp/io.hpp"
#include "oqp/scan.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using oqp::Json;

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw oqp::Error("cannot open output file: " + path);
  return os;
}

Json read_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw oqp::Error("cannot open input file: " + path);
  Json j;
  is >> j;
  return j;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    auto os = open_output(out_path);
    os << text;
  }
}

oqp::LossModel parse_loss_spec(const std::string& spec) {
  oqp::LossModel loss;
  if (spec.empty()) return loss;
  std::stringstream ss(spec);
  std::string entry;
  while (std::getline(ss, entry, ',')) {
    const auto eq = entry.find('=');
    if (eq == std::string::npos)
      throw oqp::Error("loss spec entry needs key=value: " + entry);
    std::string key = entry.substr(0, eq);
    const double value = std::stod(entry.substr(eq + 1));
    key.erase(std::remove_if(key.begin(), key.end(),
                             [](char c) { return c == '[' || c == ']'; }),
              key.end());
    if (key == "path") {
      loss.path_loss = value;
    } else if (key.size() == 5 && key.rfind("det", 0) == 0) {
      const int a1 = key[3] - '0';
      const int a2 = key[4] - '0';
      if (a1 < 0 || a1 > 1 || a2 < 0 || a2 > 1)
        throw oqp::Error("loss spec detector index out of range: " + entry);
      loss.detector_efficiency[a1][a2] = value;
    } else {
      throw oqp::Error("loss spec key must be path or det<a1><a2>: " + entry);
    }
  }
  return loss;
}

oqp::DensityOperator parse_photon_state(const std::string& spec) {
  char* end = nullptr;
  const double angle_deg = std::strtod(spec.c_str(), &end);
  if (end && *end == '\0') {
    // linear polarization at the given angle from |H⟩, degrees
    const double angle = angle_deg * std::numbers::pi / 180.0;
    oqp::ComplexVector ket(2);
    ket << std::cos(angle), std::sin(angle);
    return oqp::pure_state(ket);
  }
  return oqp::state_from_json(read_json_file(spec));
}

struct GlobalOpts {
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "csv";
  double tol = 1e-10;
  int precision = 12;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasiprobability toolkit for sequential qudit measurements"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts opts;
  app.add_option("--seed", opts.seed, "random seed");
  app.add_option("--out", opts.out, "output file (default stdout)");
  app.add_option("--format", opts.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--tol", opts.tol, "witness negativity cutoff");
  app.add_option("--precision", opts.precision, "printed digits (never internal precision)");

  // scan
  auto* scan_cmd = app.add_subcommand("scan", "nonclassicality over a Bloch grid");
  std::string scan_suite = "mub";
  int scan_K = 2;
  double scan_theta = std::numbers::pi / 12;
  std::string scan_family = "sphere";
  std::string scan_grid = "200x400";
  int scan_shells = 11;
  std::string scan_suite_file;
  scan_cmd->add_option("--suite", scan_suite, "mub|biased|custom")
      ->check(CLI::IsMember({"mub", "biased", "custom"}));
  scan_cmd->add_option("--K", scan_K, "number of MUB observables (d=2)");
  scan_cmd->add_option("--theta", scan_theta, "bias angle, radians");
  scan_cmd->add_option("--family", scan_family, "sphere|ball")
      ->check(CLI::IsMember({"sphere", "ball"}));
  scan_cmd->add_option("--grid", scan_grid, "THETAxPHI resolution");
  scan_cmd->add_option("--shells", scan_shells, "radial shells for the ball family");
  scan_cmd->add_option("--suite-json", scan_suite_file, "custom suite JSON file");

  // wfunc
  auto* wfunc_cmd = app.add_subcommand("wfunc", "quasiprobability table for one state");
  std::string wf_state, wf_suite = "mub", wf_suite_file;
  int wf_d = 2, wf_K = 2;
  double wf_theta = std::numbers::pi / 12;
  wfunc_cmd->add_option("--state", wf_state, "state JSON file")->required();
  wfunc_cmd->add_option("--suite", wf_suite, "mub|biased|custom")
      ->check(CLI::IsMember({"mub", "biased", "custom"}));
  wfunc_cmd->add_option("--d", wf_d, "dimension for MUB suites");
  wfunc_cmd->add_option("--K", wf_K, "number of observables");
  wfunc_cmd->add_option("--theta", wf_theta, "bias angle, radians");
  wfunc_cmd->add_option("--suite-json", wf_suite_file, "custom suite JSON file");

  // witness
  auto* witness_cmd = app.add_subcommand("witness", "entanglement witness verdict");
  std::vector<double> witness_werner;
  std::string witness_state;
  int witness_dim = 0;
  witness_cmd->add_option("--werner", witness_werner, "d p (Werner state shortcut)")
      ->expected(2);
  witness_cmd->add_option("--state", witness_state, "bipartite state JSON (dim d²)");
  witness_cmd->add_option("--local-dim", witness_dim, "local dimension d");

  // werner
  auto* werner_cmd = app.add_subcommand("werner", "Werner threshold scan");
  int werner_d = 2, werner_steps = 100;
  werner_cmd->add_option("--d", werner_d, "prime local dimension");
  werner_cmd->add_option("--steps", werner_steps, "p-grid steps");

  // photon-sim
  auto* photon_cmd = app.add_subcommand("photon-sim", "polarization Monte-Carlo");
  std::string photon_state = "22.5";
  std::int64_t photon_shots = 1000000;
  std::string photon_loss;
  photon_cmd->add_option("--state", photon_state,
                         "state JSON file, or linear-polarization angle in degrees");
  photon_cmd->add_option("--shots", photon_shots, "shots per setup");
  photon_cmd->add_option("--loss", photon_loss,
                         "loss spec: path=<p>,det<a1a2>=<p>,...");

  // check
  auto* check_cmd = app.add_subcommand("check", "run a named property suite");
  std::string check_suite = "all";
  check_cmd->add_option("--suite", check_suite, "engine|classical|bipartite|photon|all")
      ->check(CLI::IsMember({"engine", "classical", "bipartite", "photon", "all"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*scan_cmd) {
      oqp::ScanSpec spec;
      spec.family = (scan_family == "ball") ? oqp::ScanSpec::Family::ball
                                            : oqp::ScanSpec::Family::sphere;
      const auto x = scan_grid.find('x');
      if (x == std::string::npos) throw oqp::Error("--grid must look like 200x400");
      spec.n_theta = std::stoi(scan_grid.substr(0, x));
      spec.n_phi = std::stoi(scan_grid.substr(x + 1));
      spec.n_r = scan_shells;
      if (scan_suite == "mub") {
        spec.suite_kind = oqp::ScanSpec::SuiteKind::mub;
        spec.mub_count = scan_K;
      } else if (scan_suite == "biased") {
        spec.suite_kind = oqp::ScanSpec::SuiteKind::biased;
        spec.theta = scan_theta;
      } else {
        spec.suite_kind = oqp::ScanSpec::SuiteKind::custom;
        if (scan_suite_file.empty()) throw oqp::Error("custom suite needs --suite-json");
        spec.custom = oqp::suite_from_json(read_json_file(scan_suite_file));
      }
      const oqp::ScanResult result = oqp::scan_nonclassicality(spec);
      std::ostringstream table;
      oqp::write_scan_csv(table, result, opts.precision);
      emit(opts.out, table.str());
      Json report{{"max_N", result.max_n},
                  {"argmax", {result.argmax(0), result.argmax(1), result.argmax(2)}},
                  {"points", result.rows.size()},
                  {"wall_seconds", result.wall_seconds},
                  {"seed", opts.seed},
                  {"version", oqp::kVersion}};
      if (!opts.out.empty()) std::cout << report.dump(2) << "\n";
      return 0;
    }

    if (*wfunc_cmd) {
      const oqp::DensityOperator rho = oqp::state_from_json(read_json_file(wf_state));
      oqp::ObservableSuite suite;
      if (wf_suite == "mub") {
        suite = oqp::mub_suite(wf_d, wf_K);
      } else if (wf_suite == "biased") {
        suite = oqp::biased_qubit_suite(wf_theta);
      } else {
        if (wf_suite_file.empty()) throw oqp::Error("custom suite needs --suite-json");
        suite = oqp::suite_from_json(read_json_file(wf_suite_file));
      }
      const oqp::QuasiTable w =
          oqp::quasiprobability(oqp::characteristic_function(rho, suite));
      if (opts.format == "json") {
        Json j{{"table", oqp::quasi_to_json(w)},
               {"nonclassicality", oqp::nonclassicality(w)},
               {"verdict", oqp::verdict_to_json(oqp::certify_nonclassical(w))}};
        emit(opts.out, j.dump(2) + "\n");
      } else {
        std::ostringstream table;
        oqp::write_quasi_csv(table, w, opts.precision);
        emit(opts.out, table.str());
        std::cout << "N = " << oqp::format_double(oqp::nonclassicality(w), opts.precision)
                  << "\n";
      }
      return 0;
    }

    if (*witness_cmd) {
      oqp::BipartiteState rho = [&] {
        if (!witness_werner.empty()) {
          const int d = static_cast<int>(witness_werner[0]);
          return oqp::werner_state(d, witness_werner[1]);
        }
        if (witness_state.empty() || witness_dim == 0)
          throw oqp::Error("witness needs --werner d p, or --state with --local-dim");
        return oqp::bipartite_state(
            witness_dim, oqp::state_from_json(read_json_file(witness_state)));
      }();
      const oqp::ConjugateMubPair pair = oqp::conjugate_bases(rho.local_dim);
      const oqp::CorrelationMatrix corr =
          oqp::correlation_matrix(rho, pair.basis_a, pair.basis_b);
      const oqp::WitnessMinimum minimum =
          oqp::min_marginal_witness(corr, pair.alphas, pair.betas);
      emit(opts.out, oqp::witness_to_json(minimum, opts.tol).dump(2) + "\n");
      return 0;
    }

    if (*werner_cmd) {
      const oqp::WernerReport report = oqp::werner_report(werner_d, werner_steps);
      std::ostringstream table;
      oqp::write_werner_csv(table, report, opts.precision);
      emit(opts.out, table.str());
      std::cout << oqp::werner_report_to_json(report).dump(2) << "\n";
      return 0;
    }

    if (*photon_cmd) {
      oqp::ExperimentConfig cfg{parse_photon_state(photon_state), photon_shots,
                                parse_loss_spec(photon_loss), opts.seed};
      const oqp::CountsTable counts = oqp::simulate_counts(cfg);
      std::ostringstream table;
      oqp::write_counts_csv(table, counts);
      emit(opts.out, table.str());
      const oqp::QuasiTable w =
          oqp::experimental_quasiprobability(oqp::experimental_characteristic(counts));
      Json report{{"counts", oqp::counts_to_json(counts)},
                  {"quasiprobability", oqp::quasi_to_json(w)},
                  {"nonclassicality", oqp::nonclassicality(w)},
                  {"seed", opts.seed},
                  {"version", oqp::kVersion}};
      if (!opts.out.empty()) std::cout << report.dump(2) << "\n";
      return 0;
    }

    if (*check_cmd) {
      const oqp::RunReport report = oqp::run_property_suite(check_suite, opts.seed);
      emit(opts.out, oqp::run_report_to_json(report).dump(2) + "\n");
      for (const oqp::PropertyItem& item : report.items)
        std::cerr << (item.pass ? "[PASS] " : "[FAIL] ") << item.name
                  << (item.detail.empty() ? "" : " — " + item.detail) << "\n";
      return report.all_pass() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
