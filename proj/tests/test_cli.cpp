#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int code;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(EDCRG_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(run("bogus").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("bounds at --t 4").code == 2);  // missing --p
  CHECK(run("crg eval --crg x.crg --p 0.5 --format yaml").code == 2);
}

TEST_CASE("domain errors exit with 1") {
  const RunResult r = run("bounds at --t 4 --p 2");
  CHECK(r.code == 1);
  CHECK(contains(r.output, "error:"));
  CHECK(run("crg eval --crg no_such_file.crg --p 0.5").code == 1);
  CHECK(run("bounds qlist --t 9").code == 1);
  CHECK(run("gen --construction nonsense").code == 1);
}

TEST_CASE("point bound query") {
  const RunResult r = run("bounds at --t 4 --p 1/4");
  CHECK(r.code == 0);
  CHECK(contains(r.output, "11/60"));
  CHECK(contains(r.output, "exact = yes"));

  const RunResult j = run("bounds at --t 4 --p 1/4 --format json");
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.output);
  CHECK(doc["upper"]["fraction"] == "11/60");
  CHECK(doc["lower"]["fraction"] == "11/60");
  CHECK(doc["exact"] == true);
  CHECK(doc["p"] == "1/4");
}

TEST_CASE("feasible field sizes") {
  const RunResult none = run("bounds qlist --t 6");
  CHECK(none.code == 0);
  CHECK(contains(none.output, "(none)"));
  const RunResult j = run("bounds qlist --t 7 --format json");
  const auto doc = nlohmann::json::parse(j.output);
  CHECK(doc["q"] == nlohmann::json::array({7, 13}));
}

TEST_CASE("generate then evaluate a CRG") {
  const std::string file = "cli_gq22.crg";
  CHECK(run("gen --construction triangular_complement --params m=6 --out " + file).code == 0);
  const RunResult eval = run("crg eval --crg " + file + " --p 1/5 --format json");
  CHECK(eval.code == 0);
  const auto doc = nlohmann::json::parse(eval.output);
  CHECK(doc["k"] == 15);
  CHECK(doc["f"]["fraction"] == "4/25");  // 12/75 reduced
  CHECK(doc["solution"]["pcore"] == "yes");
  CHECK(doc["solution"]["g"]["fraction"] == "4/25");

  const RunResult forbid4 = run("crg forbid --crg " + file + " --t 4");
  CHECK(forbid4.code == 0);
  CHECK(contains(forbid4.output, "forbids = yes"));
  const RunResult forbid3 = run("crg forbid --crg " + file + " --t 3");
  CHECK(contains(forbid3.output, "forbids = no"));
  std::remove(file.c_str());
}

TEST_CASE("pcore verdict and weights") {
  const std::string file = "cli_matching5.crg";
  CHECK(run("gen --construction matching --params t=5 --out " + file).code == 0);
  const RunResult r = run("crg pcore --crg " + file + " --p 3/10");
  CHECK(r.code == 0);
  CHECK(contains(r.output, "pcore = yes"));
  CHECK(contains(r.output, "g = 1/6"));
  CHECK(contains(r.output, "x(0) = 1/6"));
  std::remove(file.c_str());
}

TEST_CASE("tangency query") {
  const RunResult r = run("bounds tangency --t 4 --d 6");
  CHECK(r.code == 0);
  CHECK(contains(r.output, "p = 13/59"));
  CHECK(contains(r.output, "line value = 10/59"));
  CHECK(contains(r.output, "lower bound = 10/59"));
  CHECK(contains(r.output, "realized = yes"));
}

TEST_CASE("catalog output") {
  const RunResult r = run("bounds catalog --t 5");
  CHECK(r.code == 0);
  CHECK(contains(r.output, "p(1-p)"));
  CHECK(contains(r.output, "1/13 + 5/13 p"));
  CHECK(contains(r.output, "paley(13)"));
  CHECK(run("bounds catalog --t 4").code == 1);
}

TEST_CASE("envelope csv") {
  const std::string file = "cli_envelope.csv";
  CHECK(run("bounds envelope --t 5 --samples 101 --format csv --out " + file).code == 0);
  std::ifstream in(file);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "p,upper,lower,exact,active_upper");
  int lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  CHECK(lines == 101);
  in.close();
  std::remove(file.c_str());
}

TEST_CASE("oracle subcommands") {
  const std::string file = "cli_k23.graph";
  {
    std::ofstream out(file);
    out << "graph 5\ne 0 2\ne 0 3\ne 0 4\ne 1 2\ne 1 3\ne 1 4\n";
  }
  const RunResult dist = run("oracle dist --graph " + file + " --t 3");
  CHECK(dist.code == 0);
  CHECK(contains(dist.output, "distance = 1"));
  std::remove(file.c_str());

  const RunResult gnp = run("oracle gnp --n 6 --p 0 --t 3 --trials 3 --format json");
  CHECK(gnp.code == 0);
  const auto doc = nlohmann::json::parse(gnp.output);
  CHECK(doc["distances"] == nlohmann::json::array({0.0, 0.0, 0.0}));

  const RunResult scan = run("oracle scan --max-k 2 --p 3/10 --t 3");
  CHECK(scan.code == 0);
  CHECK(contains(scan.output, "structure violations = 0"));
  CHECK(contains(scan.output, "min g = 21/100"));
}

TEST_CASE("oracle grid g") {
  const std::string file = "cli_k11.crg";
  CHECK(run("gen --construction gray_clique --params w=1,b=1 --out " + file).code == 0);
  const RunResult r = run("oracle g --crg " + file + " --p 3/10 --resolution 10 --format json");
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["grid_g"].get<double>() == doctest::Approx(0.21).epsilon(1e-12));
  std::remove(file.c_str());
}

TEST_CASE("quick verification suite passes") {
  const RunResult r = run("verify --suite quick");
  CHECK(r.code == 0);
  CHECK(contains(r.output, "PASS"));
  CHECK(!contains(r.output, "FAIL"));
}
