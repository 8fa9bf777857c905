#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "specbound/cli.hpp"
#include "test_support.hpp"

using namespace specbound;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::vector<double> parse_doubles(const std::string& line) {
  std::istringstream is(line);
  std::string tag;
  is >> tag;
  std::vector<double> v;
  double x;
  while (is >> x) v.push_back(x);
  return v;
}

}  // namespace

TEST_CASE("cli usage errors exit with 2") {
  CHECK(run_cli({}).code == cli::kExitUsage);
  CHECK(run_cli({"bogus"}).code == cli::kExitUsage);
  CHECK(run_cli({"check"}).code == cli::kExitUsage);  // no graph source
  CHECK(run_cli({"check", "--graph6", "Bw", "--edges", "0-1"}).code == cli::kExitUsage);
  CHECK(run_cli({"exhaustive", "--nmax", "8"}).code == cli::kExitUsage);  // needs --allow-n8
  CHECK(run_cli({"counterexample", "--k", "2", "--n", "5..10"}).code == cli::kExitUsage);
  const CliResult r = run_cli({"spectrum", "--graph6", ":bad"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("error") != std::string::npos);
}

TEST_CASE("cli check on the K_3 family instance") {
  const CliResult r =
      run_cli({"check", "--family", "G", "--p", "1", "--r", "0", "--s", "0", "--k", "2",
               "--matrix", "Q"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("equality") != std::string::npos);
  CHECK(r.out.find("K3") != std::string::npos);
}

TEST_CASE("cli check with propositions for family instances") {
  const CliResult r = run_cli({"check", "--family", "H", "--p", "1", "--r", "2", "--s", "1"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("P3") != std::string::npos);
}

TEST_CASE("cli exhaustive json output") {
  const CliResult r =
      run_cli({"--format", "json", "exhaustive", "--nmax", "4", "--k", "2", "--matrix", "Q"});
  REQUIRE(r.code == cli::kExitOk);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["checked"] == 42);
  CHECK(j["violations"].empty());
  CHECK(j["equalities"].size() == 8);
}

TEST_CASE("cli counterexample and sweep are clean") {
  CHECK(run_cli({"counterexample", "--k", "3", "--n", "5..12"}).code == cli::kExitOk);
  CHECK(run_cli({"sweep", "--p", "1..2", "--r", "1..2", "--s", "1..2", "--props", "P3"}).code ==
        cli::kExitOk);
  // global flags may trail the subcommand
  const CliResult r = run_cli({"counterexample", "--k", "3", "--n", "5..8", "--format", "json"});
  CHECK(r.code == cli::kExitOk);
  CHECK(nlohmann::json::parse(r.out)["checked"] == 4);
}

TEST_CASE("cli charpoly prints the canonical polynomial and comparison") {
  const CliResult r = run_cli({"charpoly", "--family", "G-p0", "--r", "1", "--s", "1"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("-4*x + 10*x^2 - 6*x^3 + x^4") != std::string::npos);
  CHECK(r.out.find("match") != std::string::npos);
  const CliResult rj =
      run_cli({"--format", "json", "charpoly", "--family", "H", "--p", "2", "--r", "2", "--s", "1"});
  const nlohmann::json j = nlohmann::json::parse(rj.out);
  CHECK(j["match"] == true);
}

TEST_CASE("cli spectrum is invariant under relabeling") {
  std::mt19937_64 rng(555);
  const Graph g = spectest::random_connected_graph(rng, 7, 0.4);
  const Graph h = spectest::permuted(g, spectest::random_permutation(rng, 7));
  const CliResult a = run_cli({"spectrum", "--graph6", to_graph6(g), "--matrix", "Q"});
  const CliResult b = run_cli({"spectrum", "--graph6", to_graph6(h), "--matrix", "Q"});
  REQUIRE(a.code == cli::kExitOk);
  const auto va = parse_doubles(a.out), vb = parse_doubles(b.out);
  REQUIRE(va.size() == 7);
  for (std::size_t i = 0; i < va.size(); ++i) CHECK_THAT(va[i], Catch::Matchers::WithinAbs(vb[i], 1e-8));
}

TEST_CASE("cli spectrum all-matrices output") {
  const CliResult r = run_cli({"spectrum", "--graph6", "Bw"});
  CHECK(r.out.find("A:") != std::string::npos);
  CHECK(r.out.find("L:") != std::string::npos);
  CHECK(r.out.find("Q:") != std::string::npos);
}

TEST_CASE("cli csv format and --out") {
  const CliResult r = run_cli({"--format", "csv", "check", "--graph6", "Bw"});
  CHECK(r.out.rfind("kind,k,n,lhs,rhs,verdict,witness", 0) == 0);

  const std::string path = "cli_out_test.json";
  const CliResult w = run_cli({"--format", "json", "--out", path, "check", "--graph6", "Bw"});
  CHECK(w.code == cli::kExitOk);
  std::ifstream in(path);
  REQUIRE(in.good());
  nlohmann::json j;
  in >> j;
  CHECK(j.is_array());
  in.close();
  std::remove(path.c_str());
}

TEST_CASE("cli tolerance override via environment") {
  setenv("SPECBOUND_TOL", "0.5", 1);
  const CliResult r = run_cli({"--format", "json", "check", "--graph6", "Ch"});  // P_4
  unsetenv("SPECBOUND_TOL");
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j[0]["tol"] == 0.5);
}
