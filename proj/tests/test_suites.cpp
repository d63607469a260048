#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bispace/suites.hpp"
#include "support/oracles.hpp"

using namespace bispace;

namespace {

const std::filesystem::path kFixtures = BISPACE_TEST_FIXTURES;

SuiteConfig config(int n, std::string_view which, int threads = 1) {
  SuiteConfig c;
  c.n = n;
  c.which = expand_suites(which);
  c.threads = threads;
  return c;
}

const ClaimOutcome& outcome(const Report& r, std::string_view claim) {
  for (const auto& o : r.outcomes) {
    if (o.claim == claim) return o;
  }
  FAIL("no outcome " << claim);
  throw std::logic_error("unreachable");
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct OracleHierarchy {
  bool cont = true, pre = true, semi = true, sp = true;
};

// Pairwise continuity classes straight from the definitions.
OracleHierarchy oracle_classes(const FiniteMap& f, const FiniteBispace& x, const FiniteBispace& y) {
  OracleHierarchy h;
  const int n = x.unit_count();
  for (int i = 1; i <= 2; ++i) {
    const auto ti = oracle::family_of(x.space(i));
    const auto tj = oracle::family_of(x.space(3 - i));
    for (const auto& v : oracle::family_of(y.space(i))) {
      oracle::Points pre;
      for (int p = 0; p < n; ++p) {
        if (v.count(f(p))) pre.insert(p);
      }
      h.cont = h.cont && std::find(ti.begin(), ti.end(), pre) != ti.end();
      h.pre = h.pre && oracle::preopen(ti, tj, n, pre);
      h.semi = h.semi && oracle::semiopen(ti, tj, n, pre);
      h.sp = h.sp && oracle::semipreopen(ti, tj, n, pre);
    }
  }
  return h;
}

}  // namespace

TEST_CASE("suite selection") {
  CHECK(expand_suites("all") == suite_names());
  CHECK(expand_suites("thm-3.3,C1-iff-C2") == std::vector<std::string>{"C1-iff-C2", "thm-3.3"});
  CHECK_THROWS_AS(expand_suites("thm-9.9"), std::invalid_argument);
  CHECK_THROWS_AS(expand_suites(""), std::invalid_argument);
  CHECK(is_map_suite("thm-4.6"));
  CHECK_FALSE(is_map_suite("thm-3.6"));
  CHECK(suite_names().size() == 23);
}

TEST_CASE("invalid configurations are rejected") {
  SuiteConfig c = config(2, "thm-3.3");
  c.n = 5;
  CHECK_THROWS_AS(run_suites(c), std::invalid_argument);
  c.n = 0;
  CHECK_THROWS_AS(run_suites(c), std::invalid_argument);
  c.n = 2;
  c.which = {"nope"};
  CHECK_THROWS_AS(run_suites(c), std::invalid_argument);
}

TEST_CASE("one-point carriers give a passing run") {
  const SuiteRun run = run_suites(config(1, "all"));
  REQUIRE(run.reports.size() == suite_names().size());
  for (const auto& r : run.reports) {
    CAPTURE(r.entry);
    CHECK(r.passed());
  }
}

TEST_CASE("unions on two points: no counterexample") {
  const SuiteRun run = run_suites(config(2, "thm-3.3"));
  REQUIRE(run.reports.size() == 1);
  const Report& r = run.reports[0];
  CHECK(r.passed());
  CHECK(outcome(r, "union-preopen").computed.rfind("holds on ", 0) == 0);
  CHECK(outcome(r, "union-preopen").witness.empty());
}

TEST_CASE("both preopenness forms agree on every three-point model") {
  const Report r = run_suites(config(3, "C1-iff-C2")).reports.at(0);
  CHECK(r.passed());
  CHECK(outcome(r, "interior-implies-interval-finite").pass);
  // The symbolic catalog still separates them.
  CHECK(outcome(r, "interior-without-interval-symbolic").pass);
  CHECK_FALSE(outcome(r, "interior-without-interval-symbolic").witness.empty());
}

TEST_CASE("reports do not depend on the worker count") {
  const std::string one = emit_machine(run_suites(config(2, "all", 1)).reports);
  const std::string three = emit_machine(run_suites(config(2, "all", 3)).reports);
  CHECK(one == three);
}

TEST_CASE("sampled map sweeps are reproducible for a seed") {
  SuiteConfig c = config(4, "remark-5.1,thm-4.4", 2);
  c.seed = 11;
  c.samples = 300;
  const auto a = run_suites(c);
  const auto b = run_suites(c);
  CHECK(emit_machine(a.reports) == emit_machine(b.reports));
  for (const auto& r : a.reports) CHECK(r.passed());
  const auto& notes = a.reports[0].notes;
  CHECK(std::any_of(notes.begin(), notes.end(), [](const std::string& s) { return s.find("seed 11") != std::string::npos; }));
}

TEST_CASE("fixtures serialize and parse back") {
  StrictnessFixture with_map{"precontinuous-not-continuous",
                             FiniteBispace(FiniteSpace::indiscrete(2), FiniteSpace::indiscrete(2)),
                             FiniteBispace(FiniteSpace::indiscrete(2), FiniteSpace::discrete(2)),
                             FiniteMap(2, 2, {0, 1}),
                             ""};
  StrictnessFixture note_only{"sp-continuous-not-precontinuous", std::nullopt, std::nullopt, std::nullopt, "none"};
  const auto parsed = fixtures_from_json(fixtures_to_json({with_map, note_only}));
  REQUIRE(parsed.size() == 2);
  CHECK(parsed[0].gap == with_map.gap);
  CHECK(parsed[0].map == with_map.map);
  CHECK(parsed[0].source->first().opens().size() == 2);
  CHECK(parsed[1].note == "none");
  CHECK_FALSE(parsed[1].map.has_value());
}

TEST_CASE("frozen strictness fixtures still witness their gaps") {
  const auto fixtures = fixtures_from_json(read_file(kFixtures / "strictness.json"));
  REQUIRE(fixtures.size() == 4);
  for (const auto& f : fixtures) {
    CAPTURE(f.gap);
    REQUIRE(f.map.has_value());
    CHECK(fixture_holds(f));
    const OracleHierarchy h = oracle_classes(*f.map, *f.source, *f.target);
    if (f.gap == "precontinuous-not-continuous") CHECK((h.pre && !h.cont));
    if (f.gap == "sp-continuous-not-semi-continuous") CHECK((h.sp && !h.semi));
    if (f.gap == "semi-continuous-not-continuous") CHECK((h.semi && !h.cont));
    if (f.gap == "sp-continuous-not-precontinuous") CHECK((h.sp && !h.pre));
  }
}

TEST_CASE("a fixture whose map is not a witness fails") {
  StrictnessFixture f{"precontinuous-not-continuous",
                      FiniteBispace(FiniteSpace::discrete(2), FiniteSpace::discrete(2)),
                      FiniteBispace(FiniteSpace::discrete(2), FiniteSpace::discrete(2)),
                      FiniteMap(2, 2, {0, 1}),
                      ""};
  CHECK_FALSE(fixture_holds(f));
}
