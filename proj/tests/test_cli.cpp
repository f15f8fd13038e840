#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hypercone/cli.hpp"

using namespace hypercone;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_matrix(const std::string& name, const nlohmann::json& rows) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << rows.dump();
  return path.string();
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("eig prints exact orthant eigenvalues") {
    Run r = run({"eig", "orthant:3", "1,2,3"});
    CHECK(r.code == kExitHolds);
    auto j = r.json();
    CHECK(j["eigs"] == nlohmann::json::array({3.0, 2.0, 1.0}));
  }

  TEST_CASE("--json prints a single line") {
    Run r = run({"--json", "eig", "psd:2", "1,0,1"});
    CHECK(r.code == kExitHolds);
    CHECK(r.out.find('\n') == r.out.size() - 1);
  }

  TEST_CASE("exit codes") {
    CHECK(run({"eig", "orthant:3", "1,x,3"}).code == kExitParse);
    CHECK(run({"eig", "orthant:3", "1,2"}).code == kExitDimension);
    CHECK(run({"eig", "nosuchcone", "1"}).code == kExitParse);
    CHECK(run({"member", "orthant:3", "1,2,3"}).code == kExitHolds);
    CHECK(run({"member", "orthant:3", "1,-2,3"}).code == kExitFails);
    CHECK(run({"member", "orthant:3", "1,0,3"}).code == kExitHolds);
    CHECK(run({"member", "--float", "orthant:3", "1,1e-12,3"}).code == kExitInconclusive);
    CHECK(run({"deriv", "orthant:3", "--k", "5"}).code == kExitParse);
    CHECK(run({"--help"}).code == kExitHolds);
  }

  TEST_CASE("negative coordinates are points, not options") {
    Run in = run({"member", "orthant:4:k=1", "-1,3,3,3"});
    CHECK(in.code == kExitHolds);
    CHECK(in.json()["membership"] == "In");
    CHECK(run({"member", "orthant:4:k=1", "-5,1,1,1"}).code == kExitFails);
  }

  TEST_CASE("deriv prints the relaxation") {
    Run r = run({"deriv", "orthant:3", "--k", "1"});
    REQUIRE(r.code == kExitHolds);
    CHECK(r.out.find("x") != std::string::npos);
  }

  TEST_CASE("autcheck") {
    std::string diag = write_matrix("hc_diag.json", {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 2}});
    std::string perm = write_matrix("hc_perm.json", {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
    CHECK(run({"autcheck", "orthant:4", diag}).code == kExitHolds);
    CHECK(run({"--k", "1", "autcheck", "orthant:4", diag}).code == kExitFails);
    CHECK(run({"--k", "1", "autcheck", "psd:4", perm}).code == kExitHolds);
    CHECK(run({"--k", "1", "autcheck", "psd:4", diag}).code == kExitFails);
    CHECK(run({"autcheck", "orthant:3", diag}).code == kExitDimension);
    CHECK(run({"autcheck", "orthant:4", "/nonexistent/matrix.json"}).code == kExitParse);
  }

  TEST_CASE("chain, rogcheck and garding") {
    Run c = run({"chain", "orthant:6"});
    CHECK(c.code == kExitHolds);
    CHECK(c.json()["ranks"] == nlohmann::json::array({0, 1, 2, 3, 4, 5, 6}));
    CHECK(run({"chain", "l1"}).code == kExitFails);
    CHECK(run({"rogcheck", "psd:3"}).code == kExitHolds);
    CHECK(run({"rogcheck", "l1"}).code == kExitFails);
    CHECK(run({"garding", "orthant:3", "1,1,1;1,1,1;1,1,4"}).code == kExitHolds);
    CHECK(run({"garding", "orthant:3", "1,1,1;1,0,1;1,1,4"}).code == kExitParse);
  }

  TEST_CASE("suite filter and seed") {
    Run r = run({"--seed", "7", "suite", "--filter", "c01"});
    CHECK(r.code == kExitHolds);
    auto j = r.json();
    CHECK(j["seed"] == 7);
    CHECK(j["checks"].size() == 1);
    CHECK(run({"suite", "--filter", "nomatch"}).code == kExitParse);
  }
}
