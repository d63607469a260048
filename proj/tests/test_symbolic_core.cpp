#include "doctest.h"

#include <random>

#include "bispace/bispace_props.hpp"
#include "support/oracles.hpp"

using namespace bispace;

namespace {

std::shared_ptr<const AtomUniverse> universe_of(std::vector<Atom> atoms) {
  return std::make_shared<const AtomUniverse>(std::move(atoms));
}

constexpr auto kS = Cardinality::kFiniteSingleton;
constexpr auto kC = Cardinality::kCountablyInfinite;
constexpr auto kU = Cardinality::kUncountable;

// [1,2] with the irrationals as region.
auto irrational_line() {
  return universe_of({{"sqrt2", kS, "{sqrt 2}"}, {"irr", kU, "irrationals in [1,2] minus sqrt 2"},
                      {"rat", kC, "rationals in [1,2]"}});
}

}  // namespace

TEST_CASE("is_countable") {
  auto u = irrational_line();
  CHECK(is_countable(*u, u->set({"rat"})));
  CHECK_FALSE(is_countable(*u, u->set({"irr"})));
  CHECK(is_countable(*u, SymSet{}));
  CHECK(is_countable(*u, u->set({"rat", "sqrt2"})));
}

TEST_CASE("schematic openness, closure and interior on the irrational line") {
  auto u = irrational_line();
  SchematicSpace tau(u, {u->set({"sqrt2", "irr"}), SymSet{}});
  const SymSet b = u->set({"irr"});
  CHECK(tau.is_open(u->full()));
  CHECK(tau.is_open(SymSet{}));
  CHECK(tau.is_open(u->set({"sqrt2"})));
  CHECK_FALSE(tau.is_open(b));
  CHECK_FALSE(tau.is_open(u->set({"rat"})));
  CHECK(tau.closure(b) == u->full() - u->set({"sqrt2"}));
  CHECK(tau.interior(tau.closure(b)) == b);
  CHECK(tau.closure(SymSet{}) == SymSet{});
  CHECK(tau.interior(u->full()) == u->full());
}

TEST_CASE("mandatory points force themselves into every proper open") {
  auto u = universe_of({{"r3", kS, "{sqrt 3}"}, {"h3", kS, "{3/2}"}, {"h5", kS, "{5/2}"},
                        {"lo", kU, "irrationals in [1, sqrt 3)"}, {"hi", kU, "irrationals in (sqrt 3, 3]"},
                        {"q", kC, "other rationals"}});
  SchematicSpace t1(u, {u->set({"lo", "r3"}), u->set({"h5"})});
  CHECK(t1.is_open(u->set({"r3", "h5"})));
  CHECK_FALSE(t1.is_open(u->set({"r3"})));
  CHECK(t1.closure(u->set({"r3"})) == u->full() - u->set({"lo", "h5"}));
  CHECK(t1.closure(u->set({"h5"})) == u->full());
  CHECK(t1.interior(u->set({"r3"})) == SymSet{});
  CHECK(t1.interior(u->set({"r3", "h5", "lo"})) == u->set({"r3", "h5", "lo"}));
}

TEST_CASE("validate_universe_and_families") {
  auto u = universe_of({{"zero", kS, "{0}"}, {"one", kS, "{1}"}, {"q01", kC, "rationals in (0,1)"},
                        {"sqrt2", kS, "{sqrt 2}"}, {"rest", kU, "everything else"}});
  std::vector<SchematicFamily> good{{u->set({"zero", "one", "q01"}), u->set({"sqrt2"})}};
  CHECK(validate_universe_and_families(*u, good).empty());

  std::vector<SchematicFamily> overlap{{u->set({"zero", "sqrt2"}), u->set({"sqrt2"})}};
  auto d = validate_universe_and_families(*u, overlap);
  REQUIRE(d.size() == 1);
  CHECK(d[0].kind == FamilyDiagnostic::Kind::kOverlap);
  CHECK(d[0].atoms == std::vector<std::string>{"sqrt2"});

  std::vector<SchematicFamily> bulky{{u->set({"zero"}), u->set({"q01"})}};
  d = validate_universe_and_families(*u, bulky);
  REQUIRE(d.size() == 1);
  CHECK(d[0].kind == FamilyDiagnostic::Kind::kNonSingletonMandatory);
  CHECK(d[0].atoms == std::vector<std::string>{"q01"});

  CHECK_THROWS_AS(SchematicSpace(u, overlap[0]), InvalidFamily);
  CHECK_THROWS_AS(AtomUniverse({{"a", kS, ""}, {"a", kC, ""}}), std::invalid_argument);
  CHECK_THROWS_AS((void)u->set({"nope"}), std::invalid_argument);
}

TEST_CASE("open_between canonical witnesses") {
  auto u = irrational_line();
  SchematicSpace tau(u, {u->set({"sqrt2", "irr"}), SymSet{}});
  const SymSet irrationals = u->set({"sqrt2", "irr"});
  CHECK(tau.open_between(irrationals, u->full()) == u->full());
  CHECK(tau.open_between(SymSet{}, u->set({"rat"})) == SymSet{});
  CHECK(tau.open_between(u->set({"sqrt2"}), u->set({"sqrt2", "rat"})) == u->set({"sqrt2"}));
  CHECK_FALSE(tau.open_between(u->set({"irr"}), u->full() - u->set({"sqrt2"})).has_value());
}

TEST_CASE("closure laws and the intersection lemma over every atom union") {
  auto u = universe_of({{"a", kS, ""}, {"b", kS, ""}, {"c", kC, ""}, {"d", kU, ""}, {"e", kU, ""}});
  std::vector<SchematicFamily> fams{{u->set({"a", "d"}), u->set({"b"})},
                                    {u->set({"c", "d", "e"}), SymSet{}},
                                    {SymSet{}, u->set({"a", "b"})},
                                    {u->set({"a", "b", "c", "d", "e"}), SymSet{}}};
  for (const auto& fam : fams) {
    SchematicSpace s(u, fam);
    const int n = u->size();
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
      const SymSet a(m);
      const SymSet cl = s.closure(a);
      CHECK(a.subset_of(cl));
      CHECK(s.closure(cl) == cl);
      CHECK(s.interior(a).subset_of(a));
      for (Mask k = 0; k < (Mask{1} << n); ++k) {
        const SymSet b(k);
        CHECK(s.closure(a | b) == (cl | s.closure(b)));
        if (a.subset_of(b)) {
          CHECK(cl.subset_of(s.closure(b)));
          CHECK(s.interior(a).subset_of(s.interior(b)));
        }
        if (s.is_open(b)) CHECK((cl & b).subset_of(s.closure(a & b)));
      }
    }
  }
}

TEST_CASE("all-singleton universes agree with the materialized finite family") {
  std::mt19937_64 rng(20240611);
  for (int round = 0; round < 60; ++round) {
    const int n = 1 + static_cast<int>(rng() % 5);
    auto u = oracle::singleton_universe(n);
    auto [r1, p1] = oracle::random_family(rng, n);
    auto [r2, p2] = oracle::random_family(rng, n);
    const auto fam1 = oracle::materialize(n, r1, p1);
    const auto fam2 = oracle::materialize(n, r2, p2);
    // The materialized family satisfies the space axioms.
    REQUIRE(oracle::is_topology(fam1, n));
    SchematicSpace s1(u, {SymSet(oracle::to_mask(r1)), SymSet(oracle::to_mask(p1))});
    SchematicSpace s2(u, {SymSet(oracle::to_mask(r2)), SymSet(oracle::to_mask(p2))});
    auto f1 = oracle::to_space(fam1, n);
    auto f2 = oracle::to_space(fam2, n);
    for (Mask m = 0; m < (Mask{1} << n); ++m) {
      const auto pts = oracle::to_points(m);
      CHECK(s1.is_open(SymSet(m)) == (fam1.count(pts) == 1));
      CHECK(s1.closure(SymSet(m)).bits() == oracle::to_mask(oracle::closure(fam1, n, pts)));
      CHECK(s1.interior(SymSet(m)).bits() == oracle::to_mask(oracle::interior(fam1, pts)));
      CHECK(semiopen_witness_exists(s1, s2, SymSet(m)) == semiopen_witness_exists(f1, f2, PointSet(m)));
      CHECK(interior_covers_closed_supersets(s1, s2, SymSet(m)) ==
            interior_covers_closed_supersets(f1, f2, PointSet(m)));
      for (Mask k = m;; k = (k + 1) | m) {
        CHECK(s1.open_between(SymSet(m), SymSet(k)).has_value() ==
              oracle::open_between_exists(fam1, pts, oracle::to_points(k)));
        if (k == (Mask{1} << n) - 1) break;
      }
    }
  }
}

TEST_CASE("trace of a schematic family") {
  auto u = universe_of({{"zero", kS, ""}, {"one", kS, ""}, {"sqrt2", kS, ""}, {"irr", kU, ""}});
  SchematicSpace t1(u, {u->set({"zero", "one"}), u->set({"sqrt2"})});
  auto sub = trace(t1, u->set({"zero", "one", "irr"}));
  CHECK(sub.unit_count() == 3);
  CHECK(sub.mandatory().empty());
  CHECK(sub.region() == sub.universe().set({"zero", "one"}));
  CHECK(sub.is_open(sub.universe().set({"zero", "one"})));
  CHECK_FALSE(t1.is_open(u->set({"zero", "one"})));
}
