#pragma once

// Symbolic spaces over cardinality-tagged atoms.
//
// The ground set is partitioned into finitely many atoms; each atom is a
// single point, a countably infinite set, or an uncountable set. Sets are
// unions of atoms. An open family has the schematic shape
//
//     { X, empty } ∪ { C ∪ P : C a countable subset of R }
//
// for a region R and a finite set P of mandatory singleton atoms disjoint
// from R. Such a family is closed under countable unions and finite
// intersections but, once R holds an uncountable atom, not under arbitrary
// unions. Every decision below is exact for atom unions because it
// quantifies over the whole family in closed form, not over atom unions.
//
// Closure. The closed sets containing a nonempty S are X and the complements
// X - (C ∪ P) with (C ∪ P) disjoint from S; they exist only when P misses S,
// and the union of all admissible C is R - S. Hence
//     cl(S) = empty            if S is empty
//           = X                if P meets S
//           = X - ((R - S) ∪ P) otherwise.
//
// Interior. The opens inside S other than X are C ∪ P with P ⊆ S and C a
// countable subset of R ∩ S; every point of R ∩ S lies in one of them. Hence
//     int(S) = X               if S = X
//            = (R ∩ S) ∪ P     if P ⊆ S
//            = empty           otherwise.

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bispace/point_set.hpp"

namespace bispace {

enum class Cardinality { kFiniteSingleton, kCountablyInfinite, kUncountable };

const char* to_string(Cardinality c);
std::optional<Cardinality> parse_cardinality(std::string_view text);

struct Atom {
  std::string id;
  Cardinality cardinality = Cardinality::kFiniteSingleton;
  std::string label;

  friend bool operator==(const Atom&, const Atom&) = default;
};

class AtomUniverse {
 public:
  // Atoms are taken to be pairwise disjoint and to cover the ground set.
  explicit AtomUniverse(std::vector<Atom> atoms);

  int size() const { return static_cast<int>(atoms_.size()); }
  std::span<const Atom> atoms() const { return atoms_; }
  const Atom& atom(int index) const { return atoms_.at(static_cast<std::size_t>(index)); }
  std::optional<int> index_of(std::string_view id) const;

  SymSet full() const { return SymSet::full(size()); }
  SymSet singletons() const { return singletons_; }
  SymSet uncountables() const { return uncountables_; }

  // Throws std::invalid_argument on an unknown id.
  SymSet set(std::initializer_list<std::string_view> ids) const;
  SymSet set(std::span<const std::string> ids) const;

  std::string format(SymSet s) const;

  friend bool operator==(const AtomUniverse& a, const AtomUniverse& b) { return a.atoms_ == b.atoms_; }

 private:
  std::vector<Atom> atoms_;
  SymSet singletons_;
  SymSet uncountables_;
};

// Countable unions of countable sets are countable; a set is countable iff
// it holds no uncountable atom.
inline bool is_countable(const AtomUniverse& universe, SymSet s) { return !s.intersects(universe.uncountables()); }

struct SchematicFamily {
  SymSet region;
  SymSet mandatory;

  friend bool operator==(const SchematicFamily&, const SchematicFamily&) = default;
};

struct FamilyDiagnostic {
  enum class Kind { kUnknownAtom, kOverlap, kNonSingletonMandatory };

  std::size_t family = 0;
  Kind kind = Kind::kUnknownAtom;
  std::vector<std::string> atoms;
  std::string message;
};

const char* to_string(FamilyDiagnostic::Kind kind);

std::vector<FamilyDiagnostic> validate_universe_and_families(const AtomUniverse& universe,
                                                             std::span<const SchematicFamily> families);

class InvalidFamily : public std::runtime_error {
 public:
  explicit InvalidFamily(std::vector<FamilyDiagnostic> diagnostics);
  const std::vector<FamilyDiagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<FamilyDiagnostic> diagnostics_;
};

class SchematicSpace {
 public:
  using Set = SymSet;

  SchematicSpace(std::shared_ptr<const AtomUniverse> universe, SchematicFamily family);

  const AtomUniverse& universe() const { return *universe_; }
  const std::shared_ptr<const AtomUniverse>& universe_ptr() const { return universe_; }
  const SchematicFamily& family() const { return family_; }
  SymSet region() const { return family_.region; }
  SymSet mandatory() const { return family_.mandatory; }

  int unit_count() const { return universe_->size(); }
  SymSet full() const { return universe_->full(); }

  bool is_open(SymSet s) const;
  SymSet closure(SymSet s) const;
  SymSet interior(SymSet s) const;

  // The canonical witness is (a - P) ∪ P; X is returned only when that fails
  // and b = X. Requires a ⊆ b.
  std::optional<SymSet> open_between(SymSet a, SymSet b) const;

  std::string describe() const;

 private:
  std::shared_ptr<const AtomUniverse> universe_;
  SchematicFamily family_;
};

// Closed-form existence of an open O of ti with O ⊆ a ⊆ cl_tj(O). O ranges
// over the whole family, including countable parts of uncountable atoms.
bool semiopen_witness_exists(const SchematicSpace& ti, const SchematicSpace& tj, SymSet a);

// Whether a ⊆ int_ti(G) for every tj-closed G containing a, quantified over
// the whole family.
bool interior_covers_closed_supersets(const SchematicSpace& ti, const SchematicSpace& tj, SymSet a);

// Subspace on the atoms of y; the trace of a schematic family is the schematic
// family (R ∩ y, P ∩ y) over the sub-universe.
SchematicSpace trace(const SchematicSpace& space, SymSet y);

std::string format_set(const SchematicSpace& space, SymSet s);

}  // namespace bispace
