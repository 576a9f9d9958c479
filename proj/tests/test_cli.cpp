#include "oqp/io.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("oqp_cli_test_" + std::to_string(std::rand()));
    fs::create_directories(path);
  }
  ~TempDir() { std::error_code ec; fs::remove_all(path, ec); }
};

int run(const std::string& args) {
  const std::string cmd = std::string(OQP_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("cli exit codes", "[cli]") {
  REQUIRE(run("--help") == 0);
  REQUIRE(run("frobnicate") == 2);
  REQUIRE(run("werner --d 4") == 2);         // composite dimension
  REQUIRE(run("scan --grid bogus") == 2);
  REQUIRE(run("check --suite classical --seed 5") == 0);
}

TEST_CASE("cli scan output is deterministic and carries the optimum", "[cli]") {
  TempDir tmp;
  const auto out1 = tmp.path / "scan1.csv";
  const auto out2 = tmp.path / "scan2.csv";
  const std::string args = "scan --suite mub --K 2 --grid 24x48 --seed 9 --out ";
  REQUIRE(run(args + out1.string()) == 0);
  REQUIRE(run(args + out2.string()) == 0);
  const std::string body = slurp(out1);
  REQUIRE(body == slurp(out2));  // identical command + seed -> identical bytes
  REQUIRE(body.rfind("rho1,rho2,rho3,N", 0) == 0);

  // the injected diagonal point is present with the analytic maximum
  double max_n = 0.0;
  std::istringstream is(body);
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) {
    const auto pos = line.rfind(',');
    max_n = std::max(max_n, std::stod(line.substr(pos + 1)));
  }
  REQUIRE(std::abs(max_n - (std::sqrt(2.0) - 1.0) / 4.0) < 1e-9);
}

TEST_CASE("cli wfunc reads states and emits tables", "[cli]") {
  TempDir tmp;
  const auto state = tmp.path / "state.json";
  {
    std::ofstream os(state);
    os << R"({"bloch": [0.70710678118654752, 0.70710678118654752, 0.0]})";
  }
  const auto table = tmp.path / "w.csv";
  REQUIRE(run("wfunc --state " + state.string() + " --suite mub --d 2 --K 2 --out " +
              table.string()) == 0);
  const std::string body = slurp(table);
  REQUIRE(body.rfind("a1,a2,value", 0) == 0);
  REQUIRE(body.find("1,1,-0.103553390593") != std::string::npos);
}

TEST_CASE("cli witness and werner agree on the threshold", "[cli]") {
  TempDir tmp;
  const auto verdict_below = tmp.path / "below.json";
  const auto verdict_above = tmp.path / "above.json";
  REQUIRE(run("witness --werner 2 0.30 --out " + verdict_below.string()) == 0);
  REQUIRE(run("witness --werner 2 0.40 --out " + verdict_above.string()) == 0);
  const auto below = oqp::Json::parse(slurp(verdict_below));
  const auto above = oqp::Json::parse(slurp(verdict_above));
  REQUIRE(below.at("entangled") == false);
  REQUIRE(above.at("entangled") == true);

  const auto werner_csv = tmp.path / "werner.csv";
  REQUIRE(run("werner --d 2 --steps 20 --out " + werner_csv.string()) == 0);
  const std::string body = slurp(werner_csv);
  REQUIRE(body.rfind("p,min_c,argmin_c", 0) == 0);
  REQUIRE(body.find("\n1,") != std::string::npos);  // p = 1 row present
}

TEST_CASE("cli photon-sim writes the counts schema", "[cli]") {
  TempDir tmp;
  const auto counts = tmp.path / "counts.csv";
  REQUIRE(run("photon-sim --state 22.5 --shots 5000 --seed 21 --loss path=0.2 --out " +
              counts.string()) == 0);
  const std::string body = slurp(counts);
  REQUIRE(body.rfind("setup,a1,a2,count", 0) == 0);
  // 4 setups x 4 slots + header
  REQUIRE(std::count(body.begin(), body.end(), '\n') == 17);

  const auto again = tmp.path / "counts2.csv";
  REQUIRE(run("photon-sim --state 22.5 --shots 5000 --seed 21 --loss path=0.2 --out " +
              again.string()) == 0);
  REQUIRE(body == slurp(again));
}
