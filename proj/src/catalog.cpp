#include "bispace/catalog.hpp"

#include <chrono>
#include <memory>

namespace bispace {

namespace {

constexpr auto kPoint = Cardinality::kFiniteSingleton;
constexpr auto kCountable = Cardinality::kCountablyInfinite;
constexpr auto kUncountable = Cardinality::kUncountable;

using UniversePtr = std::shared_ptr<const AtomUniverse>;
using Ids = std::initializer_list<std::string_view>;

UniversePtr universe(std::vector<Atom> atoms) { return std::make_shared<const AtomUniverse>(std::move(atoms)); }

class Builder {
 public:
  Builder(std::string id, std::string title, std::string provenance, UniversePtr u, Ids r1, Ids p1, Ids r2, Ids p2)
      : u_(u),
        entry_{std::move(id), std::move(title), std::move(provenance),
               SymbolicBispace(SchematicSpace(u, {u->set(r1), u->set(p1)}), SchematicSpace(u, {u->set(r2), u->set(p2)})),
               {}, std::nullopt, {}} {
    entry_.sets.push_back({"X", u->full().bits()});
  }

  Mask bits(Ids ids) const { return u_->set(ids).bits(); }
  Mask all_but(Ids ids) const { return (u_->full() - u_->set(ids)).bits(); }

  Builder& set(std::string name, Ids ids) {
    entry_.sets.push_back({std::move(name), bits(ids)});
    return *this;
  }

  Builder& claim(std::string label, Predicate p, std::string set, Expected expected, IndexPair pair = kOneTwo,
                 int space = 1, std::string other = {}) {
    entry_.claims.push_back({std::move(label), p, space, pair, std::move(set), std::move(other), expected});
    return *this;
  }

  // Single-space and component-indexed claims.
  Builder& on(int space, std::string label, Predicate p, std::string set, Expected expected, std::string other = {}) {
    return claim(std::move(label), p, std::move(set), expected, kOneTwo, space, std::move(other));
  }

  CatalogEntry& entry() { return entry_; }
  CatalogEntry done() { return std::move(entry_); }

 private:
  UniversePtr u_;
  CatalogEntry entry_;
};

CatalogEntry example_3_1() {
  auto u = universe({{"sqrt2", kPoint, "the point sqrt 2"},
                     {"irr", kUncountable, "irrationals of [1,2] other than sqrt 2"},
                     {"rat", kCountable, "rationals of [1,2]"}});
  Builder b("ex-3.1", "weakly preopen without preopen, single space on [1,2]",
            "Carrier [1,2] whose proper opens are the countable sets of irrationals; both components carry this "
            "family, so component 1 is the single space. A is every irrational, B drops sqrt 2.",
            u, {"sqrt2", "irr"}, {}, {"sqrt2", "irr"}, {});
  b.set("A", {"sqrt2", "irr"}).set("B", {"irr"}).set("clB", {"irr", "rat"});
  b.on(1, "cl A is X", Predicate::kClosure, "A", b.bits({"sqrt2", "irr", "rat"}))
      .on(1, "A weakly preopen", Predicate::kWeaklyPreopen, "A", true)
      .on(1, "A preopen, witness X", Predicate::kPreopen, "A", true)
      .on(1, "X lies between A and X", Predicate::kOpenBetween, "A", true, "X")
      .on(1, "A not open", Predicate::kOpen, "A", false)
      .on(1, "cl B misses only sqrt 2", Predicate::kClosure, "B", b.all_but({"sqrt2"}))
      .on(1, "int cl B is B", Predicate::kInterior, "clB", b.bits({"irr"}))
      .on(1, "B weakly preopen", Predicate::kWeaklyPreopen, "B", true)
      .on(1, "B not preopen", Predicate::kPreopen, "B", false);
  return b.done();
}

UniversePtr universe_0_2() {
  return universe({{"s", kPoint, "one irrational point s of [0,1]"},
                   {"irr01", kUncountable, "the other irrationals of [0,1]"},
                   {"irr12", kUncountable, "irrationals of [1,2]"},
                   {"rat02", kCountable, "rationals of [0,2]"}});
}

Builder builder_0_2(std::string id, std::string title, std::string extra) {
  return Builder(std::move(id), std::move(title),
                 "Carrier [0,2]; component 1 opens are countable sets of irrationals in [0,1], component 2 opens are "
                 "countable sets of irrationals in [1,2]. " + extra,
                 universe_0_2(), {"s", "irr01"}, {}, {"irr12"}, {});
}

CatalogEntry example_3_2() {
  Builder b = builder_0_2("ex-3.2", "C2 holds but C1 fails", "A is the set of irrationals of [0,1].");
  b.set("A", {"s", "irr01"}).set("cl2A", {"s", "irr01", "rat02"}).set("X-A", {"irr12", "rat02"});
  b.on(2, "cl2 A is [0,1] with the rationals of [1,2]", Predicate::kClosure, "A", b.bits({"s", "irr01", "rat02"}))
      .claim("A not (1,2)-preopen", Predicate::kIjPreopen, "A", false)
      .on(1, "int1 cl2 A is A", Predicate::kInterior, "cl2A", b.bits({"s", "irr01"}))
      .claim("A inside int1 cl2 A", Predicate::kIjWeaklyPreopen, "A", true)
      .claim("A not pairwise preopen", Predicate::kPairwisePreopen, "A", false)
      .claim("X-A not (1,2)-preclosed", Predicate::kIjPreclosed, "X-A", false);
  return b.done();
}

CatalogEntry example_3_3() {
  auto u = universe({{"sqrt3", kPoint, "the point sqrt 3"},
                     {"three_halves", kPoint, "the point 3/2"},
                     {"five_halves", kPoint, "the point 5/2"},
                     {"irr_low", kUncountable, "irrationals of [1, sqrt 3)"},
                     {"irr_high", kUncountable, "irrationals of (sqrt 3, 3]"},
                     {"rat", kCountable, "rationals of [1,3] other than 3/2 and 5/2"}});
  Builder b("ex-3.3", "pairwise preopen but preopen in neither component",
            "Carrier [1,3]; component 1 opens are countable irrationals of [1, sqrt 3] plus 5/2, component 2 opens are "
            "countable irrationals of [sqrt 3, 3] plus 3/2. sqrt 3 belongs to both regions, which is what the printed "
            "closures of {sqrt 3} require.",
            u, {"irr_low", "sqrt3"}, {"five_halves"}, {"irr_high", "sqrt3"}, {"three_halves"});
  b.set("A", {"sqrt3"}).set("U", {"sqrt3", "five_halves"}).set("V", {"three_halves", "sqrt3"});
  b.on(1, "cl1 A drops the low irrationals and 5/2", Predicate::kClosure, "A", b.all_but({"irr_low", "five_halves"}))
      .on(2, "cl2 A drops the high irrationals and 3/2", Predicate::kClosure, "A",
          b.all_but({"irr_high", "three_halves"}))
      .on(1, "U is open in component 1", Predicate::kOpen, "U", true)
      .on(2, "V is open in component 2", Predicate::kOpen, "V", true)
      .claim("A (1,2)-preopen via U", Predicate::kIjPreopen, "A", true, kOneTwo)
      .claim("A (2,1)-preopen via V", Predicate::kIjPreopen, "A", true, kTwoOne)
      .claim("A pairwise preopen", Predicate::kPairwisePreopen, "A", true)
      .on(1, "A not preopen in component 1", Predicate::kPreopen, "A", false)
      .on(2, "A not preopen in component 2", Predicate::kPreopen, "A", false);
  return b.done();
}

UniversePtr universe_0_3() {
  return universe({{"zero", kPoint, "the point 0"},
                   {"one", kPoint, "the point 1"},
                   {"q01", kCountable, "rationals of (0,1)"},
                   {"sqrt2", kPoint, "the point sqrt 2"},
                   {"sqrt3", kPoint, "the point sqrt 3"},
                   {"irr23", kUncountable, "irrationals of [2,3]"},
                   {"irr02", kUncountable, "irrationals of [0,2] other than sqrt 2 and sqrt 3"},
                   {"q13", kCountable, "rationals of (1,3]"}});
}

Builder builder_0_3(std::string id, std::string title, std::string extra) {
  return Builder(std::move(id), std::move(title),
                 "Carrier [0,3]; component 1 opens are countable sets of rationals in [0,1] plus sqrt 2, component 2 "
                 "opens are countable sets of irrationals in [2,3]. " + extra,
                 universe_0_3(), {"zero", "one", "q01"}, {"sqrt2"}, {"irr23"}, {});
}

CatalogEntry example_3_4() {
  Builder b = builder_0_3("ex-3.4", "(1,2)-preopen but not open in component 1", "A = {0, 1}.");
  b.set("A", {"zero", "one"}).set("U", {"zero", "one", "sqrt2"});
  b.on(1, "A not open in component 1", Predicate::kOpen, "A", false)
      .on(2, "cl2 A misses the irrationals of [2,3]", Predicate::kClosure, "A", b.all_but({"irr23"}))
      .on(1, "U = A with sqrt 2 is open in component 1", Predicate::kOpen, "U", true)
      .claim("A (1,2)-preopen via U", Predicate::kIjPreopen, "A", true);
  return b.done();
}

CatalogEntry example_3_5() {
  Builder b = builder_0_3("ex-3.5", "semipreopen, neither preopen nor semiopen",
                          "B = {0, 1, sqrt 3}. The engine reports the smallest witness {0}; the witness {0, 1} used "
                          "by hand is checked separately.");
  b.set("A", {"zero", "one"}).set("B", {"zero", "one", "sqrt3"});
  b.claim("B not (1,2)-preopen", Predicate::kIjPreopen, "B", false)
      .claim("B not semiopen", Predicate::kIjSemiopen, "B", false)
      .claim("B (1,2)-semipreopen", Predicate::kIjSemipreopen, "B", true)
      .claim("A is a semipreopen witness for B", Predicate::kSemipreopenVia, "B", true, kOneTwo, 1, "A")
      .claim("A (1,2)-preopen", Predicate::kIjPreopen, "A", true)
      .on(2, "cl2 A contains B", Predicate::kClosure, "A", b.all_but({"irr23"}));
  return b.done();
}

CatalogEntry example_3_6() {
  Builder b = builder_0_2("ex-3.6", "closed-superset interior condition without preopenness",
                          "Same structures and A as ex-3.2.");
  b.set("A", {"s", "irr01"}).set("cl2A", {"s", "irr01", "rat02"});
  b.claim("every closed superset G of A has A inside int1 G", Predicate::kClosedSupersetInterior, "A", true)
      .on(1, "int1 of the smallest closed superset is A", Predicate::kInterior, "cl2A", b.bits({"s", "irr01"}))
      .claim("A not (1,2)-preopen", Predicate::kIjPreopen, "A", false);
  return b.done();
}

CatalogEntry example_3_7() {
  Builder b = builder_0_2("ex-3.7", "union of open singletons that is not preopen",
                          "The uncountable family of singletons is represented by the single point s; the union is "
                          "the whole region s + irr01.");
  b.set("As", {"s"}).set("union", {"s", "irr01"});
  b.on(1, "singleton open in component 1", Predicate::kOpen, "As", true)
      .claim("singleton (1,2)-preopen", Predicate::kIjPreopen, "As", true)
      .claim("union not (1,2)-preopen", Predicate::kIjPreopen, "union", false);
  return b.done();
}

CatalogEntry example_3_8() {
  auto u = universe({{"s", kPoint, "one irrational point s of [0,1]"},
                     {"irr01", kUncountable, "the other irrationals of [0,1]"},
                     {"three_halves", kPoint, "the point 3/2"},
                     {"irr12", kUncountable, "irrationals of (1,2)"},
                     {"irr23", kUncountable, "irrationals of [2,3]"},
                     {"q03", kCountable, "rationals of [0,3] other than 3/2"}});
  Builder b("ex-3.8", "union of preopen non-open singletons that is not preopen",
            "Carrier [0,3]; component 1 opens are countable irrationals of [0,1] plus 3/2, component 2 opens are "
            "countable irrationals of [2,3]. The singletons are represented by s.",
            u, {"s", "irr01"}, {"three_halves"}, {"irr23"}, {});
  b.set("As", {"s"}).set("As+3/2", {"s", "three_halves"}).set("union", {"s", "irr01"});
  b.on(1, "singleton not open in component 1", Predicate::kOpen, "As", false)
      .on(2, "cl2 of the singleton misses the irrationals of [2,3]", Predicate::kClosure, "As", b.all_but({"irr23"}))
      .on(1, "singleton with 3/2 is open in component 1", Predicate::kOpen, "As+3/2", true)
      .claim("singleton (1,2)-preopen", Predicate::kIjPreopen, "As", true)
      .on(2, "cl2 of the union is not X", Predicate::kClosure, "union", b.all_but({"irr23"}))
      .claim("union not (1,2)-preopen", Predicate::kIjPreopen, "union", false);
  return b.done();
}

CatalogEntry example_4_1() {
  auto src = universe({{"q", kCountable, "rationals of [0,1]"},
                       {"s", kPoint, "one irrational point s of [0,1]"},
                       {"irr", kUncountable, "the other irrationals of [0,1]"}});
  auto tgt = universe({{"sqrt2", kPoint, "the point sqrt 2"},
                       {"three_halves", kPoint, "the point 3/2"},
                       {"yq", kCountable, "rationals of [1,2] other than 3/2"},
                       {"yirr", kUncountable, "irrationals of [1,2] other than sqrt 2"}});
  Builder b("ex-4.1", "closure preservation without continuity",
            "Source [0,1] and target [1,2], each with the countable sets of irrationals as proper opens, used as "
            "both components. The map sends irrationals to sqrt 2 and rationals to 3/2. Continuity, closure "
            "preservation and the preimage are stated verdicts; precontinuity, semi- and sp-continuity, openness "
            "and condition C are engine-derived.",
            src, {"s", "irr"}, {}, {"s", "irr"}, {});
  b.set("rational", {"q"})
      .set("irrational_point", {"s"})
      .set("irrationals", {"s", "irr"})
      .set("mixed", {"q", "s"});
  const std::vector<std::pair<std::string, std::string>> pairs{{"q", "three_halves"}, {"s", "sqrt2"}, {"irr", "sqrt2"}};
  SymbolicBispace target(SchematicSpace(tgt, {tgt->set({"sqrt2", "yirr"}), {}}),
                         SchematicSpace(tgt, {tgt->set({"sqrt2", "yirr"}), {}}));
  b.entry().map = CatalogMap{target, AtomMap::from_ids(src, tgt, pairs), {{"root2", tgt->set({"sqrt2"}).bits()}}};
  b.claim("preimage of {sqrt 2} is the irrationals", Predicate::kPreimage, "root2", b.bits({"s", "irr"}))
      .on(1, "the irrationals are not open", Predicate::kOpen, "irrationals", false)
      .claim("not continuous", Predicate::kPairwiseContinuous, "", false)
      .on(1, "rational case: cl is the rationals", Predicate::kClosure, "rational", b.bits({"q"}))
      .on(1, "rational case preserved", Predicate::kClosurePreserved, "rational", true)
      .on(1, "irrational case: cl adds the rationals", Predicate::kClosure, "irrational_point", b.bits({"q", "s"}))
      .on(1, "irrational case preserved", Predicate::kClosurePreserved, "irrational_point", true)
      .on(1, "all irrationals preserved", Predicate::kClosurePreserved, "irrationals", true)
      .on(1, "mixed case: cl is rationals plus the irrational part", Predicate::kClosure, "mixed", b.bits({"q", "s"}))
      .on(1, "mixed case preserved", Predicate::kClosurePreserved, "mixed", true)
      .on(1, "every atom union preserved", Predicate::kClosurePreservedAll, "", true)
      .claim("image of the irrationals", Predicate::kImage, "irrationals", tgt->set({"sqrt2"}).bits())
      .claim("image of the whole source", Predicate::kImage, "X", tgt->set({"sqrt2", "three_halves"}).bits())
      .claim("precontinuous", Predicate::kPairwisePrecontinuous, "", true)
      .claim("not semi-continuous", Predicate::kPairwiseSemiContinuous, "", false)
      .claim("sp-continuous", Predicate::kPairwiseSpContinuous, "", true)
      .claim("not an open map", Predicate::kPairwiseOpenMap, "", false)
      .claim("condition C fails: map not onto", Predicate::kConditionC, "", false);
  return b.done();
}

using Factory = CatalogEntry (*)();

struct Registered {
  const char* id;
  Factory make;
};

constexpr Registered kEntries[] = {
    {"ex-3.1", example_3_1}, {"ex-3.2", example_3_2}, {"ex-3.3", example_3_3},
    {"ex-3.4", example_3_4}, {"ex-3.5", example_3_5}, {"ex-3.6", example_3_6},
    {"ex-3.7", example_3_7}, {"ex-3.8", example_3_8}, {"ex-4.1", example_4_1},
};

}  // namespace

std::vector<std::string> catalog_ids() {
  std::vector<std::string> out;
  for (const auto& e : kEntries) out.emplace_back(e.id);
  return out;
}

CatalogEntry build_example(std::string_view id) {
  for (const auto& e : kEntries) {
    if (id == e.id) return e.make();
  }
  throw UnknownEntry(std::string(id));
}

CatalogEntry negative_control_entry() {
  CatalogEntry e = example_3_1();
  e.id = "negative-control";
  e.title = "ex-3.1 with the verdict on B inverted";
  for (auto& c : e.claims) {
    if (c.label == "B not preopen") {
      c.label = "B preopen (inverted)";
      c.expected = true;
    }
  }
  return e;
}

Report verify_entry(const CatalogEntry& entry, bool timings) {
  Report r{entry.id, entry.title, {}, {}};
  std::optional<SymbolicMapContext> ctx;
  if (entry.map) ctx.emplace(SymbolicMapContext{entry.map->target, entry.map->map, entry.map->target_sets});
  for (const auto& c : entry.claims) {
    const auto start = std::chrono::steady_clock::now();
    ClaimOutcome o = evaluate_claim(entry.bispace, entry.sets, c, ctx ? &*ctx : nullptr);
    if (timings) {
      o.duration_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    o.entry = entry.id;
    r.outcomes.push_back(std::move(o));
  }
  return r;
}

std::vector<Report> run_catalog(bool timings, bool include_negative_control) {
  std::vector<Report> out;
  for (const auto& e : kEntries) out.push_back(verify_entry(e.make(), timings));
  if (include_negative_control) out.push_back(verify_entry(negative_control_entry(), timings));
  return out;
}

}  // namespace bispace
