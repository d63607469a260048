#include "bispace/symbolic_core.hpp"

#include <set>

namespace bispace {

const char* to_string(Cardinality c) {
  switch (c) {
    case Cardinality::kFiniteSingleton: return "singleton";
    case Cardinality::kCountablyInfinite: return "countable";
    case Cardinality::kUncountable: return "uncountable";
  }
  return "unknown";
}

std::optional<Cardinality> parse_cardinality(std::string_view text) {
  if (text == "singleton") return Cardinality::kFiniteSingleton;
  if (text == "countable") return Cardinality::kCountablyInfinite;
  if (text == "uncountable") return Cardinality::kUncountable;
  return std::nullopt;
}

AtomUniverse::AtomUniverse(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {
  if (atoms_.empty()) throw std::invalid_argument("atom universe must not be empty");
  if (atoms_.size() > static_cast<std::size_t>(kMaxAlgebraUnits)) {
    throw std::invalid_argument("atom universe holds more than " + std::to_string(kMaxAlgebraUnits) + " atoms");
  }
  std::set<std::string_view> seen;
  for (std::size_t k = 0; k < atoms_.size(); ++k) {
    const Atom& a = atoms_[k];
    if (a.id.empty()) throw std::invalid_argument("atom id must not be empty");
    if (!seen.insert(a.id).second) throw std::invalid_argument("duplicate atom id '" + a.id + "'");
    if (a.cardinality == Cardinality::kFiniteSingleton) singletons_ |= SymSet::singleton(static_cast<int>(k));
    if (a.cardinality == Cardinality::kUncountable) uncountables_ |= SymSet::singleton(static_cast<int>(k));
  }
}

std::optional<int> AtomUniverse::index_of(std::string_view id) const {
  for (std::size_t k = 0; k < atoms_.size(); ++k) {
    if (atoms_[k].id == id) return static_cast<int>(k);
  }
  return std::nullopt;
}

SymSet AtomUniverse::set(std::initializer_list<std::string_view> ids) const {
  SymSet out;
  for (std::string_view id : ids) {
    auto idx = index_of(id);
    if (!idx) throw std::invalid_argument("unknown atom id '" + std::string(id) + "'");
    out |= SymSet::singleton(*idx);
  }
  return out;
}

SymSet AtomUniverse::set(std::span<const std::string> ids) const {
  SymSet out;
  for (const std::string& id : ids) {
    auto idx = index_of(id);
    if (!idx) throw std::invalid_argument("unknown atom id '" + id + "'");
    out |= SymSet::singleton(*idx);
  }
  return out;
}

std::string AtomUniverse::format(SymSet s) const {
  std::string out = "{";
  bool first = true;
  for (int k : s.elements()) {
    if (!first) out += ", ";
    first = false;
    out += k < size() ? atoms_[static_cast<std::size_t>(k)].id : "#" + std::to_string(k);
  }
  return out + "}";
}

const char* to_string(FamilyDiagnostic::Kind kind) {
  switch (kind) {
    case FamilyDiagnostic::Kind::kUnknownAtom: return "unknown-atom";
    case FamilyDiagnostic::Kind::kOverlap: return "region-mandatory-overlap";
    case FamilyDiagnostic::Kind::kNonSingletonMandatory: return "non-singleton-mandatory";
  }
  return "unknown";
}

std::vector<FamilyDiagnostic> validate_universe_and_families(const AtomUniverse& universe,
                                                             std::span<const SchematicFamily> families) {
  std::vector<FamilyDiagnostic> out;
  auto ids_of = [&](SymSet s) {
    std::vector<std::string> ids;
    for (int k : s.elements()) {
      ids.push_back(k < universe.size() ? universe.atom(k).id : "#" + std::to_string(k));
    }
    return ids;
  };
  for (std::size_t f = 0; f < families.size(); ++f) {
    const SchematicFamily& fam = families[f];
    const SymSet stray = (fam.region | fam.mandatory) - universe.full();
    if (!stray.empty()) {
      out.push_back({f, FamilyDiagnostic::Kind::kUnknownAtom, ids_of(stray),
                     "family references atoms outside the universe"});
    }
    const SymSet overlap = fam.region & fam.mandatory & universe.full();
    if (!overlap.empty()) {
      out.push_back({f, FamilyDiagnostic::Kind::kOverlap, ids_of(overlap),
                     "region and mandatory set overlap: " + universe.format(overlap)});
    }
    const SymSet bulky = (fam.mandatory & universe.full()) - universe.singletons();
    if (!bulky.empty()) {
      out.push_back({f, FamilyDiagnostic::Kind::kNonSingletonMandatory, ids_of(bulky),
                     "mandatory atoms must be singletons: " + universe.format(bulky)});
    }
  }
  return out;
}

InvalidFamily::InvalidFamily(std::vector<FamilyDiagnostic> diagnostics)
    : std::runtime_error(diagnostics.empty() ? "invalid schematic family" : diagnostics.front().message),
      diagnostics_(std::move(diagnostics)) {}

SchematicSpace::SchematicSpace(std::shared_ptr<const AtomUniverse> universe, SchematicFamily family)
    : universe_(std::move(universe)), family_(family) {
  if (!universe_) throw std::invalid_argument("schematic space needs a universe");
  auto diagnostics = validate_universe_and_families(*universe_, std::span(&family_, 1));
  if (!diagnostics.empty()) throw InvalidFamily(std::move(diagnostics));
}

bool SchematicSpace::is_open(SymSet s) const {
  if (s == full() || s.empty()) return true;
  const SymSet rest = s - mandatory();
  return mandatory().subset_of(s) && rest.subset_of(region()) && is_countable(*universe_, rest);
}

SymSet SchematicSpace::closure(SymSet s) const {
  if (s.empty()) return s;
  if (mandatory().intersects(s)) return full();
  return full() - ((region() - s) | mandatory());
}

SymSet SchematicSpace::interior(SymSet s) const {
  if (s == full()) return s;
  if (mandatory().subset_of(s)) return (region() & s) | mandatory();
  return SymSet{};
}

std::optional<SymSet> SchematicSpace::open_between(SymSet a, SymSet b) const {
  if (!a.subset_of(b)) throw std::invalid_argument("open_between: lower set is not contained in upper set");
  if (a.empty()) return a;
  const SymSet rest = a - mandatory();
  if (mandatory().subset_of(b) && rest.subset_of(region()) && is_countable(*universe_, rest)) {
    return a | mandatory();
  }
  if (b == full()) return b;
  return std::nullopt;
}

std::string SchematicSpace::describe() const {
  return "region=" + universe_->format(region()) + " mandatory=" + universe_->format(mandatory());
}

bool semiopen_witness_exists(const SchematicSpace& ti, const SchematicSpace& tj, SymSet a) {
  if (a.empty() || a == ti.full()) return true;
  const SymSet pi = ti.mandatory();
  const SymSet pj = tj.mandatory();
  // Apart from X and the empty set every open contains P_i.
  if (!pi.subset_of(a)) return false;
  const SymSet reachable = ti.region() & a;
  // An open holding a point of P_j has closure X in tj.
  if (pj.intersects(pi | reachable)) return true;
  // Otherwise cl_j(O) = X - ((R_j - O) ∪ P_j) for nonempty O, so a must avoid
  // P_j and O must swallow a ∩ R_j.
  if (a.intersects(pj)) return false;
  const SymSet needed = (a & tj.region()) - pi;
  if (!needed.subset_of(ti.region()) || !is_countable(ti.universe(), needed)) return false;
  // O may be any nonempty countable part of P_i ∪ (R_i ∩ a).
  return !(pi | reachable).empty();
}

bool interior_covers_closed_supersets(const SchematicSpace& ti, const SchematicSpace& tj, SymSet a) {
  if (a.empty()) return true;
  const SymSet pj = tj.mandatory();
  // Closed sets other than X are X - (C ∪ P_j); none contains a when P_j meets a.
  if (pj.intersects(a)) return true;
  const SymSet avoidable = tj.region() - a;
  if (pj.empty() && avoidable.empty()) return true;
  // Some G = X - (C ∪ P_j) != X exists. int_i(G) is nonempty only if P_i ⊆ G
  // for every admissible C, and then equals (R_i ∩ G) ∪ P_i.
  const SymSet pi = ti.mandatory();
  if (pi.intersects(pj | avoidable)) return false;
  return (a - pi).subset_of(ti.region());
}

SchematicSpace trace(const SchematicSpace& space, SymSet y) {
  if (y.empty() || !y.subset_of(space.full())) {
    throw std::invalid_argument("subspace must be a nonempty atom union");
  }
  std::vector<Atom> atoms;
  for (int k : y.elements()) atoms.push_back(space.universe().atom(k));
  auto sub = std::make_shared<const AtomUniverse>(std::move(atoms));
  SchematicFamily fam{SymSet(compress((space.region() & y).bits(), y.bits())),
                      SymSet(compress((space.mandatory() & y).bits(), y.bits()))};
  return SchematicSpace(std::move(sub), fam);
}

std::string format_set(const SchematicSpace& space, SymSet s) { return space.universe().format(s); }

}  // namespace bispace
