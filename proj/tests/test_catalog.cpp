#include "doctest.h"

#include <chrono>

#include "bispace/catalog.hpp"

using namespace bispace;

TEST_CASE("catalog ids are the nine worked examples in order") {
  const std::vector<std::string> expected = {"ex-3.1", "ex-3.2", "ex-3.3", "ex-3.4", "ex-3.5",
                                             "ex-3.6", "ex-3.7", "ex-3.8", "ex-4.1"};
  CHECK(catalog_ids() == expected);
}

TEST_CASE("every catalog entry verifies") {
  const auto start = std::chrono::steady_clock::now();
  const auto reports = run_catalog();
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  REQUIRE(reports.size() == 9);
  for (const auto& r : reports) {
    CAPTURE(r.entry);
    CHECK(r.passed());
    CHECK_FALSE(r.outcomes.empty());
  }
  CHECK(seconds < 1.0);
}

TEST_CASE("catalog entries carry a title, provenance and an implicit whole set") {
  for (const auto& id : catalog_ids()) {
    const CatalogEntry e = build_example(id);
    CAPTURE(id);
    CHECK(e.id == id);
    CHECK_FALSE(e.title.empty());
    CHECK_FALSE(e.provenance.empty());
    REQUIRE(find_set(e.sets, "X"));
    CHECK(*find_set(e.sets, "X") == e.bispace.full().bits());
  }
  CHECK(build_example("ex-4.1").map.has_value());
  CHECK_FALSE(build_example("ex-3.1").map.has_value());
}

TEST_CASE("the negative control fails exactly its inverted claim") {
  const Report r = verify_entry(negative_control_entry());
  CHECK(r.failures() == 1);
  const auto with_control = run_catalog(false, true);
  REQUIRE(with_control.size() == 10);
  CHECK_FALSE(with_control.back().passed());
}

TEST_CASE("unknown catalog ids are rejected") {
  CHECK_THROWS_AS(build_example("ex-9.9"), UnknownEntry);
  CHECK_THROWS_WITH(build_example("ex-9.9"), doctest::Contains("ex-9.9"));
}

TEST_CASE("catalog verification is deterministic") {
  CHECK(emit_machine(run_catalog()) == emit_machine(run_catalog()));
}

TEST_CASE("timings are recorded only on request") {
  for (const auto& o : verify_entry(build_example("ex-3.2")).outcomes) CHECK_FALSE(o.duration_ms.has_value());
  for (const auto& o : verify_entry(build_example("ex-3.2"), true).outcomes) CHECK(o.duration_ms.has_value());
}
