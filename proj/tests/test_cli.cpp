#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "fuscat/cli.hpp"
#include "fuscat/io.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = fuscat::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("labels verb lists the graded-lex label set") {
  const RunResult r = run({"labels", "--family", "sp-even", "--n", "3", "--k", "2"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["count"] == 10);
  REQUIRE(j["labels"].size() == 10);
  CHECK(j["labels"][0] == "()");
  CHECK(j["labels"][1] == "(1)");
  CHECK(j["labels"][2] == "(1,1)");
  CHECK(j["labels"][3] == "(2)");
  CHECK(j["labels"][9] == "(2,2,2)");
  CHECK(j["spec"]["ell"] == 12);
}

TEST_CASE("output is byte-identical across repeated runs") {
  const std::vector<std::string> args = {"modular-data", "--family", "so-odd",
                                         "--k",          "2",       "--ell",
                                         "9"};
  const RunResult a = run(args);
  const RunResult b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("modular-data json carries weights as exact fractions") {
  const RunResult r = run({"modular-data", "--family", "sp-even", "--n", "1", "--k", "1"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["h"] == json::array({"0", "1/4"}));
  CHECK(j["labels"] == json::array({"()", "(1)"}));
  CHECK(j["block"].size() == 2);
}

TEST_CASE("level-1 modular data uses the four conventional names") {
  const RunResult r = run({"modular-data", "--family", "so-level1", "--n", "1", "--k", "1"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["labels"] == json::array({"0", "v", "s+", "s-"}));
  CHECK(j["h"] == json::array({"0", "1/2", "1/4", "1/4"}));  // weights are stored mod 1
  CHECK(j.contains("spinor_convention"));
}

TEST_CASE("fusion verb emits nonzero triples in both formats") {
  const RunResult j = run({"fusion", "--family", "sp-even", "--n", "1", "--k", "1"});
  REQUIRE(j.code == 0);
  const json f = json::parse(j.out);
  REQUIRE(f["nonzero"].is_array());
  CHECK(f["nonzero"].size() == 4);  // the Z/2 group table
  const RunResult c = run({"fusion", "--family", "sp-even", "--n", "1", "--k", "1",
                           "--format", "csv"});
  REQUIRE(c.code == 0);
  CHECK(c.out.rfind("a,b,c,coeff\n", 0) == 0);
  CHECK(c.out.find("(1),(1),(),1") != std::string::npos);
}

TEST_CASE("branch csv carries the large worked example verbatim") {
  const RunResult r = run({"branch", "--n", "7", "--k", "6", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("sector,lambda,partner\n", 0) == 0);
  CHECK(r.out.find("L+,(6,6,5,5,5,5,2),(5,1,1,1)\n") != std::string::npos);
}

TEST_CASE("branch respects the sector filter") {
  const RunResult r =
      run({"branch", "--n", "2", "--k", "2", "--format", "csv", "--sector", "L-"});
  REQUIRE(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "sector,lambda,partner");
  int rows = 0;
  while (std::getline(lines, line)) {
    CHECK(line.rfind("L-,", 0) == 0);
    ++rows;
  }
  CHECK(rows == 2);  // odd-box partitions of the 2x2 box: (1) and (2,1)

  const RunResult j =
      run({"branch", "--n", "2", "--k", "2", "--sector", "L0"});
  REQUIRE(j.code == 0);
  const json b = json::parse(j.out);
  CHECK(b["sectors"].size() == 1);
  CHECK(b["sectors"].contains("L0"));
}

TEST_CASE("verify duality passes and reports its matching") {
  const RunResult r = run({"verify", "duality", "--n", "1", "--k", "2"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["pass"] == true);
  CHECK(j["target"] == "duality");
  CHECK(j["left"]["family"] == "sp-even");
  CHECK(!j["matching"].empty());
  CHECK(!j["checks"].empty());
}

TEST_CASE("verify duality-odd runs both exponent cases by default") {
  const RunResult r = run({"verify", "duality-odd", "--n", "1", "--k", "1"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  CHECK(j["pass"] == true);
  REQUIRE(j["reports"].size() == 2);
  CHECK(j["reports"][0]["case"] == 1);
  CHECK(j["reports"][1]["case"] == 2);

  const RunResult one =
      run({"verify", "duality-odd", "--n", "1", "--k", "1", "--case", "2"});
  REQUIRE(one.code == 0);
  CHECK(json::parse(one.out)["reports"].size() == 1);
}

TEST_CASE("verify branching and etale pass on a rectangle") {
  CHECK(run({"verify", "branching", "--n", "2", "--k", "3"}).code == 0);
  CHECK(run({"verify", "etale", "--n", "2", "--k", "3"}).code == 0);
}

TEST_CASE("verify modularity passes for each s-matrix family") {
  CHECK(run({"verify", "modularity", "--family", "sp-even", "--n", "2", "--k", "2"}).code == 0);
  CHECK(run({"verify", "modularity", "--family", "sp-odd", "--n", "2", "--ell", "9"}).code == 0);
  CHECK(run({"verify", "modularity", "--family", "so-odd", "--k", "2", "--ell", "9"}).code == 0);
  CHECK(run({"verify", "modularity", "--family", "so-level1", "--n", "1", "--k", "1"}).code == 2);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"labels", "--family", "sp-even"}).code == 2);
  CHECK(run({"labels", "--family", "nope", "--n", "1", "--k", "1"}).code == 2);
  CHECK(run({"modular-data", "--family", "sp-even", "--n", "1", "--k", "1", "--format",
             "csv"})
            .code == 2);
  CHECK(run({"verify", "nope"}).code == 2);
  CHECK(run({"verify", "duality"}).code == 2);
  CHECK(run({"verify", "duality-odd", "--n", "1", "--k", "1", "--case", "3"}).code == 2);
  CHECK(run({"labels", "--family", "sp-even", "--n", "1", "--k", "1", "--a", "2"}).code ==
        2);  // gcd rule rejects the exponent
}

TEST_CASE("help prints usage and exits cleanly") {
  const RunResult r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Usage") != std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("FUSCAT_TOL tightens defaults and --tol wins over it") {
  ::setenv("FUSCAT_TOL", "1e-30", 1);
  const RunResult strict = run({"verify", "etale", "--n", "2", "--k", "3"});
  CHECK(strict.code == 1);
  CHECK(json::parse(strict.out)["pass"] == false);
  const RunResult relaxed =
      run({"verify", "etale", "--n", "2", "--k", "3", "--tol", "1e-6"});
  CHECK(relaxed.code == 0);
  ::setenv("FUSCAT_TOL", "not-a-number", 1);
  CHECK(run({"verify", "etale", "--n", "2", "--k", "3"}).code == 2);
  ::unsetenv("FUSCAT_TOL");
  CHECK(run({"verify", "etale", "--n", "2", "--k", "3"}).code == 0);
}

TEST_CASE("verify all runs the eight criteria") {
  const RunResult r = run({"verify", "all", "--max-sum", "4"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j["criteria"].size() == 8);
  for (const auto& c : j["criteria"]) {
    CHECK(c["pass"] == true);
    CHECK(c["failures"].empty());
  }
  CHECK(j["max_sum"] == 4);
  CHECK(j["pass"] == true);
}

TEST_CASE("--out writes the payload to a file and keeps stdout empty") {
  const auto path = std::filesystem::temp_directory_path() / "fuscat_cli_out.json";
  const RunResult direct = run({"labels", "--family", "sp-even", "--n", "2", "--k", "2"});
  const RunResult filed = run({"labels", "--family", "sp-even", "--n", "2", "--k", "2",
                               "--out", path.string()});
  REQUIRE(filed.code == 0);
  CHECK(filed.out.empty());
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(content.str() == direct.out);
  std::filesystem::remove(path);
}
