#include "bispace/claims.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace bispace {

namespace {

struct PredicateInfo {
  Predicate predicate;
  const char* name;
  bool space;
  bool pair;
  bool set;
  bool other;
  bool set_valued;
  bool map;
};

constexpr std::array kPredicates = {
    PredicateInfo{Predicate::kOpen, "open", true, false, true, false, false, false},
    PredicateInfo{Predicate::kClosure, "closure", true, false, true, false, true, false},
    PredicateInfo{Predicate::kInterior, "interior", true, false, true, false, true, false},
    PredicateInfo{Predicate::kOpenBetween, "open_between", true, false, true, true, false, false},
    PredicateInfo{Predicate::kPreopen, "preopen", true, false, true, false, false, false},
    PredicateInfo{Predicate::kWeaklyPreopen, "weakly_preopen", true, false, true, false, false, false},
    PredicateInfo{Predicate::kIjPreopen, "ij_preopen", false, true, true, false, false, false},
    PredicateInfo{Predicate::kIjWeaklyPreopen, "ij_weakly_preopen", false, true, true, false, false, false},
    PredicateInfo{Predicate::kPairwisePreopen, "pairwise_preopen", false, false, true, false, false, false},
    PredicateInfo{Predicate::kIjSemiopen, "ij_semiopen", false, true, true, false, false, false},
    PredicateInfo{Predicate::kIjSemipreopen, "ij_semipreopen", false, true, true, false, false, false},
    PredicateInfo{Predicate::kSemipreopenVia, "semipreopen_via", false, true, true, true, false, false},
    PredicateInfo{Predicate::kIjPreclosed, "ij_preclosed", false, true, true, false, false, false},
    PredicateInfo{Predicate::kIjSemipreclosed, "ij_semipreclosed", false, true, true, false, false, false},
    PredicateInfo{Predicate::kPcl, "pcl", false, true, true, false, true, false},
    PredicateInfo{Predicate::kSpcl, "spcl", false, true, true, false, true, false},
    PredicateInfo{Predicate::kClosedSupersetInterior, "closed_superset_interior", false, true, true, false, false,
                  false},
    PredicateInfo{Predicate::kPreimage, "preimage", false, false, true, false, true, true},
    PredicateInfo{Predicate::kImage, "image", false, false, true, false, true, true},
    PredicateInfo{Predicate::kPairwiseContinuous, "pairwise_continuous", false, false, false, false, false, true},
    PredicateInfo{Predicate::kPairwiseOpenMap, "pairwise_open_map", false, false, false, false, false, true},
    PredicateInfo{Predicate::kPairwisePrecontinuous, "pairwise_precontinuous", false, false, false, false, false,
                  true},
    PredicateInfo{Predicate::kPairwiseSemiContinuous, "pairwise_semi_continuous", false, false, false, false, false,
                  true},
    PredicateInfo{Predicate::kPairwiseSpContinuous, "pairwise_sp_continuous", false, false, false, false, false,
                  true},
    PredicateInfo{Predicate::kClosurePreserved, "closure_preserved", true, false, true, false, false, true},
    PredicateInfo{Predicate::kClosurePreservedAll, "closure_preserved_all", true, false, false, false, false, true},
    PredicateInfo{Predicate::kConditionC, "condition_c", false, true, false, false, false, true},
};

const PredicateInfo& info(Predicate p) {
  for (const auto& i : kPredicates) {
    if (i.predicate == p) return i;
  }
  throw std::logic_error("unregistered predicate");
}

std::string show(bool b) { return b ? "true" : "false"; }

std::string predicate_label(const Claim& c) {
  std::string out = to_string(c.predicate);
  if (uses_space(c.predicate)) out += "[" + std::to_string(c.space) + "]";
  if (uses_pair(c.predicate)) out += to_string(c.pair);
  return out;
}

Mask lookup(const NamedSets& sets, const std::string& name, const char* role) {
  auto m = find_set(sets, name);
  if (!m) throw std::invalid_argument(std::string("unknown ") + role + " set '" + name + "'");
  return *m;
}

// Result of one evaluation before comparison with the expectation.
template <class Set>
struct Value {
  Value(std::variant<bool, Set> v, std::string w = {}, bool relative = false)
      : value(std::move(v)), witness(std::move(w)), algebra_relative(relative) {}

  std::variant<bool, Set> value;
  std::string witness;
  bool algebra_relative;
};

template <SpaceBackend B>
Value<typename B::Set> evaluate_bispace(const Bispace<B>& x, const NamedSets& sets, const Claim& c) {
  using Set = typename B::Set;
  constexpr bool relative = !kExactAlgebra<B>;
  const Set a = uses_set(c.predicate) ? Set(lookup(sets, c.set, "source")) : Set{};
  if (!a.subset_of(x.full())) throw std::invalid_argument("set '" + c.set + "' lies outside the carrier");
  const IndexPair ij = c.pair;
  auto witness = [&](const std::optional<Set>& w) { return w ? x.format(*w) : std::string(); };

  switch (c.predicate) {
    case Predicate::kOpen:
      return {x.is_open(c.space, a)};
    case Predicate::kClosure:
      return {x.closure(c.space, a)};
    case Predicate::kInterior:
      return {x.interior(c.space, a)};
    case Predicate::kOpenBetween: {
      const Set b(lookup(sets, c.other, "source"));
      if (!a.subset_of(b)) throw std::invalid_argument("open_between needs '" + c.set + "' inside '" + c.other + "'");
      auto w = open_between(x.space(c.space), a, b);
      return {w.has_value(), witness(w)};
    }
    case Predicate::kPreopen: {
      auto w = preopen_witness(x.space(c.space), a);
      return {w.has_value(), witness(w)};
    }
    case Predicate::kWeaklyPreopen:
      return {is_weakly_preopen(x.space(c.space), a)};
    case Predicate::kIjPreopen: {
      auto w = ij_preopen_witness(x, ij, a);
      return {w.has_value(), witness(w)};
    }
    case Predicate::kIjWeaklyPreopen:
      return {is_ij_weakly_preopen(x, ij, a)};
    case Predicate::kPairwisePreopen: {
      auto w12 = ij_preopen_witness(x, kOneTwo, a);
      auto w21 = ij_preopen_witness(x, kTwoOne, a);
      std::string w;
      if (w12 && w21) w = "(1,2): " + x.format(*w12) + "; (2,1): " + x.format(*w21);
      return {w12 && w21, w};
    }
    case Predicate::kIjSemiopen:
      return {is_ij_semiopen(x, ij, a)};
    case Predicate::kIjSemipreopen: {
      auto w = ij_semipreopen_witness(x, ij, a);
      return {w.has_value(), witness(w), relative};
    }
    case Predicate::kSemipreopenVia: {
      const Set u(lookup(sets, c.other, "source"));
      const bool ok = u.subset_of(a) && a.subset_of(x.closure(ij.j(), u)) && is_ij_preopen(x, ij, u);
      return {ok, ok ? x.format(u) : std::string()};
    }
    case Predicate::kIjPreclosed: {
      auto w = ij_preopen_witness(x, ij, x.full() - a);
      return {w.has_value(), witness(w)};
    }
    case Predicate::kIjSemipreclosed: {
      auto w = ij_semipreopen_witness(x, ij, x.full() - a);
      return {w.has_value(), witness(w), relative};
    }
    case Predicate::kPcl:
      return {pcl(x, ij, a), {}, relative};
    case Predicate::kSpcl:
      return {spcl(x, ij, a), {}, relative};
    case Predicate::kClosedSupersetInterior:
      return {interior_covers_closed_supersets(x, ij, a)};
    default:
      break;
  }
  throw std::invalid_argument(std::string("predicate '") + to_string(c.predicate) + "' needs a map");
}

// First open trace of component i whose preimage fails ok.
template <class Ok>
std::optional<SymSet> first_bad_trace(const SymbolicBispace& y, int i, const AtomMap& f, Ok&& ok) {
  std::optional<SymSet> bad;
  all_target_open_traces(y, i, f, [&](SymSet w) {
    if (ok(f.preimage(w))) return true;
    bad = w;
    return false;
  });
  return bad;
}

template <class Ok>
Value<SymSet> pairwise_map_value(const SymbolicBispace& y, const AtomMap& f, Ok&& ok, bool relative) {
  for (int i = 1; i <= 2; ++i) {
    auto bad = first_bad_trace(y, i, f, [&](SymSet pre) { return ok(i, pre); });
    if (bad) {
      return {false, "open trace " + y.format(*bad) + " of component " + std::to_string(i), relative};
    }
  }
  return {true, {}, relative};
}

Value<SymSet> evaluate_map(const SymbolicBispace& x, const NamedSets& sets, const Claim& c,
                           const SymbolicMapContext& m) {
  const SymbolicBispace& y = m.target;
  const AtomMap& f = m.map;
  auto pair_of = [](int i) { return i == 1 ? kOneTwo : kTwoOne; };
  switch (c.predicate) {
    case Predicate::kPreimage:
      return {f.preimage(SymSet(lookup(m.target_sets, c.set, "target")))};
    case Predicate::kImage:
      return {f.image(SymSet(lookup(sets, c.set, "source")))};
    case Predicate::kPairwiseContinuous:
      return pairwise_map_value(y, f, [&](int i, SymSet pre) { return x.is_open(i, pre); }, false);
    case Predicate::kPairwisePrecontinuous:
      return pairwise_map_value(y, f, [&](int i, SymSet pre) { return x.preopen(pair_of(i), pre); }, false);
    case Predicate::kPairwiseSemiContinuous:
      return pairwise_map_value(y, f, [&](int i, SymSet pre) { return x.semiopen(pair_of(i), pre); }, false);
    case Predicate::kPairwiseSpContinuous:
      return pairwise_map_value(y, f, [&](int i, SymSet pre) { return x.semipreopen(pair_of(i), pre); }, true);
    case Predicate::kPairwiseOpenMap: {
      for (int i = 1; i <= 2; ++i) {
        std::optional<SymSet> bad;
        all_source_open_images(x, i, f, [&](SymSet img) {
          if (y.is_open(i, img)) return true;
          bad = img;
          return false;
        });
        if (bad) return {false, "image " + y.format(*bad) + " in component " + std::to_string(i)};
      }
      return {true};
    }
    case Predicate::kClosurePreserved: {
      const SymSet a(lookup(sets, c.set, "source"));
      const bool ok = check_closure_preservation(f, x.space(c.space), y.space(c.space), a);
      return {ok, "f(cl A) = " + y.format(f.image(x.closure(c.space, a))) +
                      ", cl f(A) = " + y.format(y.closure(c.space, f.image(a)))};
    }
    case Predicate::kClosurePreservedAll: {
      for (Mask mask : canonical_masks(x.unit_count())) {
        if (!check_closure_preservation(f, x.space(c.space), y.space(c.space), SymSet(mask))) {
          return {false, x.format(SymSet(mask)), true};
        }
      }
      return {true, {}, true};
    }
    case Predicate::kConditionC: {
      const bool ok = satisfies_condition_C(f, c.pair, x, y);
      std::string w;
      if (!ok && f.image(f.source_full()) != y.full()) w = "map is not onto: image " + y.format(f.image(x.full()));
      return {ok, w};
    }
    default:
      break;
  }
  throw std::logic_error("not a map predicate");
}

template <class Set, class Fmt>
ClaimOutcome finish(const Claim& c, const Value<Set>& v, Fmt&& format) {
  ClaimOutcome o;
  o.claim = c.label;
  o.predicate = predicate_label(c);
  o.witness = v.witness;
  o.algebra_relative = v.algebra_relative;
  if (std::holds_alternative<bool>(v.value)) {
    o.computed = show(std::get<bool>(v.value));
  } else {
    o.computed = format(std::get<Set>(v.value));
  }
  if (c.expected) {
    if (std::holds_alternative<bool>(*c.expected)) {
      o.expected = show(std::get<bool>(*c.expected));
    } else {
      o.expected = format(Set(std::get<Mask>(*c.expected)));
    }
    const bool same_kind = std::holds_alternative<bool>(*c.expected) == std::holds_alternative<bool>(v.value);
    if (!same_kind) throw std::invalid_argument("claim '" + c.label + "' expects the wrong kind of value");
    o.pass = o.expected == o.computed;
  }
  return o;
}

}  // namespace

const char* to_string(Predicate p) { return info(p).name; }

std::optional<Predicate> parse_predicate(std::string_view name) {
  for (const auto& i : kPredicates) {
    if (name == i.name) return i.predicate;
  }
  return std::nullopt;
}

std::vector<Predicate> all_predicates() {
  std::vector<Predicate> out;
  for (const auto& i : kPredicates) out.push_back(i.predicate);
  return out;
}

bool uses_space(Predicate p) { return info(p).space; }
bool uses_pair(Predicate p) { return info(p).pair; }
bool uses_set(Predicate p) { return info(p).set; }
bool uses_other(Predicate p) { return info(p).other; }
bool set_valued(Predicate p) { return info(p).set_valued; }
bool is_map_predicate(Predicate p) { return info(p).map; }

std::optional<Mask> find_set(const NamedSets& sets, std::string_view name) {
  for (const auto& s : sets) {
    if (s.name == name) return s.bits;
  }
  return std::nullopt;
}

ClaimOutcome evaluate_claim(const FiniteBispace& x, const NamedSets& sets, const Claim& claim) {
  if (is_map_predicate(claim.predicate)) {
    throw std::invalid_argument(std::string("predicate '") + to_string(claim.predicate) + "' needs a map");
  }
  return finish(claim, evaluate_bispace(x, sets, claim), [&](PointSet s) { return x.format(s); });
}

ClaimOutcome evaluate_claim(const SymbolicBispace& x, const NamedSets& sets, const Claim& claim,
                            const SymbolicMapContext* map) {
  if (!is_map_predicate(claim.predicate)) {
    return finish(claim, evaluate_bispace(x, sets, claim), [&](SymSet s) { return x.format(s); });
  }
  if (!map) throw std::invalid_argument(std::string("predicate '") + to_string(claim.predicate) + "' needs a map");
  const bool target_side = claim.predicate == Predicate::kImage;
  return finish(claim, evaluate_map(x, sets, claim, *map),
                [&](SymSet s) { return target_side ? map->target.format(s) : x.format(s); });
}

std::vector<Claim> default_battery(const NamedSets& sets) {
  std::vector<Claim> out;
  for (const auto& s : sets) {
    for (const auto& i : kPredicates) {
      if (i.map || i.other || !i.set) continue;
      auto add = [&](int space, IndexPair pair) {
        Claim c;
        c.predicate = i.predicate;
        c.space = space;
        c.pair = pair;
        c.set = s.name;
        c.label = s.name + " " + predicate_label(c);
        out.push_back(std::move(c));
      };
      if (i.space) {
        add(1, kOneTwo);
        add(2, kOneTwo);
      } else if (i.pair) {
        add(1, kOneTwo);
        add(1, kTwoOne);
      } else {
        add(1, kOneTwo);
      }
    }
  }
  return out;
}

}  // namespace bispace
