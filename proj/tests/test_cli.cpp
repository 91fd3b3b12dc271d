#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "schemoid/builders.hpp"
#include "schemoid/json_io.hpp"

#include <cstdio>
#include <string>
#include <sys/wait.h>

using namespace schemoid;
using nlohmann::json;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult shell(const std::string& cmd) {
  FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  r.status = WEXITSTATUS(pclose(p));
  return r;
}

RunResult run(const std::string& args) { return shell(std::string(SCHEMOID_LAB_BIN) + " " + args); }

std::string piped(const std::string& first, const std::string& second) {
  return first + " | " + std::string(SCHEMOID_LAB_BIN) + " " + second;
}

json result_of(const RunResult& r) { return json::parse(r.out).at("result"); }

} // namespace

TEST_CASE("output is deterministic and canonical") {
  auto a = run("gen group z3");
  auto b = run("gen group z3");
  CHECK(a.status == 0);
  CHECK(a.out == b.out);
  auto j = json::parse(a.out);
  CHECK(a.out == canonical_dump(j));
  CHECK(j.at("command") == "gen group z3");
}

TEST_CASE("generated fixtures match the library builders") {
  auto r = run("gen group z2");
  REQUIRE(r.status == 0);
  CHECK(result_of(r) == colored_to_json(group_schemoid(FiniteGroup::cyclic(2))));

  r = run("gen simplicial 3 01,12");
  REQUIRE(r.status == 0);
  auto k = SimplicialComplex::closure(3, {{0}, {1}, {2}, {0, 1}, {1, 2}});
  CHECK(result_of(r) == colored_to_json(simplicial_schemoid(k)));

  r = run("scheme gen hamming 2 2");
  REQUIRE(r.status == 0);
  CHECK(result_of(r) == scheme_to_json(hamming_scheme(2, 2)));
}

TEST_CASE("reports from one stage feed the next") {
  auto r = run(piped("scheme gen hamming 2 2", "scheme quo"));
  REQUIRE(r.status == 0);
  auto result = result_of(r);
  CHECK(result.at("status") == "finite");
  CHECK(result.at("kind") == "group");
  CHECK(result.at("multiplication_table").size() == 2);

  r = run(piped("gen group z4", "analyze"));
  REQUIRE(r.status == 0);
  result = result_of(r);
  CHECK(result.at("schemoid") == true);
  CHECK(result.at("colors") == 4);
}

TEST_CASE("cohomology subcommand matches the library") {
  auto r = run(piped("gen group z2", "cohomology --coeff Z/2 --max-degree 3"));
  REQUIRE(r.status == 0);
  auto result = result_of(r);
  REQUIRE(result.size() == 4);
  for (const auto& g : result) {
    CHECK(g.at("rank") == 0);
    CHECK(g.at("torsion") == json::array({"2"}));
  }
}

TEST_CASE("exit codes distinguish failure kinds") {
  CHECK(run("analyze /nonexistent/path").status == 2);
  CHECK(shell("echo not-json | " + std::string(SCHEMOID_LAB_BIN) + " analyze -").status == 2);

  std::string broken = R"({"points": 2, "relations": [[0,1],[1,1]], "adjoint": [0,1]})";
  auto r = shell("echo '" + broken + "' | " + std::string(SCHEMOID_LAB_BIN) + " scheme validate -");
  CHECK(r.status == 1);
  CHECK(result_of(r).at("valid") == false);

  r = run(piped("scheme gen hamming 2 2", "scheme validate"));
  CHECK(r.status == 0);
  CHECK(result_of(r).at("valid") == true);
}

TEST_CASE("caps override via environment") {
  auto r = shell(std::string(SCHEMOID_LAB_BIN) + " gen group z3 | SCHEMOID_LAB_CAPS=1,1 " +
                 SCHEMOID_LAB_BIN + " quotient");
  CHECK(r.status == 3);
  CHECK(result_of(r).at("status") == "undecided");
}

TEST_CASE("golden file in the repository is current") {
  auto r = run(std::string("golden ") + SCHEMOID_REPO_DIR + "/fixtures/golden.json");
  CHECK(r.status == 0);
  auto result = result_of(r);
  CHECK(result.at("match") == true);
  CHECK(result.at("rows").size() == 11);
  CHECK(result.at("mismatches") == json::array());
}
