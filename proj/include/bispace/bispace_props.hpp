#pragma once

// Preopen-family predicates on bispaces, generic over the space backend.
//
// Every "there is an open set between A and B" quantifier goes through the
// backend's open_between, so the symbolic backend answers it in closed form
// over the full schematic family. Searches for semipreopen witnesses and the
// preclosure operators range over algebra sets only: complete for finite
// carriers, algebra-relative for atom universes (see Backend::kExactAlgebra).

#include <array>
#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>

#include "bispace/finite_core.hpp"
#include "bispace/point_set.hpp"
#include "bispace/symbolic_core.hpp"

namespace bispace {

template <class B>
concept SpaceBackend = requires(const B& b, typename B::Set s) {
  { b.unit_count() } -> std::convertible_to<int>;
  { b.full() } -> std::same_as<typename B::Set>;
  { b.is_open(s) } -> std::same_as<bool>;
  { b.closure(s) } -> std::same_as<typename B::Set>;
  { b.interior(s) } -> std::same_as<typename B::Set>;
  { b.open_between(s, s) } -> std::same_as<std::optional<typename B::Set>>;
  { semiopen_witness_exists(b, b, s) } -> std::same_as<bool>;
  { interior_covers_closed_supersets(b, b, s) } -> std::same_as<bool>;
  { trace(b, s) } -> std::same_as<B>;
  { format_set(b, s) } -> std::same_as<std::string>;
};

// Whether witness searches over algebra sets are complete for the backend.
template <class B>
inline constexpr bool kExactAlgebra = false;
template <>
inline constexpr bool kExactAlgebra<FiniteSpace> = true;

class IndexPair {
 public:
  static constexpr IndexPair make(int i, int j) {
    if ((i != 1 && i != 2) || (j != 1 && j != 2) || i == j) {
      throw std::invalid_argument("index pair must be (1,2) or (2,1)");
    }
    return IndexPair(i);
  }
  constexpr int i() const { return i_; }
  constexpr int j() const { return 3 - i_; }
  constexpr int slot() const { return i_ - 1; }
  constexpr IndexPair swapped() const { return IndexPair(3 - i_); }

  friend constexpr bool operator==(IndexPair, IndexPair) = default;

 private:
  constexpr explicit IndexPair(int i) : i_(i) {}
  int i_;
};

inline constexpr IndexPair kOneTwo = IndexPair::make(1, 2);
inline constexpr IndexPair kTwoOne = IndexPair::make(2, 1);
inline constexpr std::array<IndexPair, 2> kBothPairs = {kOneTwo, kTwoOne};

inline std::string to_string(IndexPair ij) {
  return "(" + std::to_string(ij.i()) + "," + std::to_string(ij.j()) + ")";
}

template <SpaceBackend B>
bool same_carrier(const B& a, const B& b) {
  if constexpr (std::same_as<B, SchematicSpace>) {
    return a.universe() == b.universe();
  } else {
    return a.unit_count() == b.unit_count();
  }
}

template <SpaceBackend B>
class Bispace;

template <SpaceBackend B>
bool is_ij_preopen(const Bispace<B>& x, IndexPair ij, typename B::Set a);
template <SpaceBackend B>
bool is_ij_weakly_preopen(const Bispace<B>& x, IndexPair ij, typename B::Set a);
template <SpaceBackend B>
bool is_ij_semiopen(const Bispace<B>& x, IndexPair ij, typename B::Set a);
template <SpaceBackend B>
bool is_ij_semipreopen(const Bispace<B>& x, IndexPair ij, typename B::Set a);
template <SpaceBackend B>
typename B::Set pcl(const Bispace<B>& x, IndexPair ij, typename B::Set a);
template <SpaceBackend B>
typename B::Set spcl(const Bispace<B>& x, IndexPair ij, typename B::Set a);
template <SpaceBackend B>
typename B::Set preopen_kernel(const Bispace<B>& x, IndexPair ij, typename B::Set s);
template <SpaceBackend B>
typename B::Set semipreopen_kernel(const Bispace<B>& x, IndexPair ij, typename B::Set s);

template <SpaceBackend B>
class Bispace {
 public:
  using Backend = B;
  using Set = typename B::Set;

  Bispace(B first, B second) : spaces_{std::move(first), std::move(second)} {
    if (!same_carrier(spaces_[0], spaces_[1])) throw std::invalid_argument("bispace components differ in carrier");
  }

  const B& first() const { return spaces_[0]; }
  const B& second() const { return spaces_[1]; }
  const B& space(int i) const { return spaces_.at(static_cast<std::size_t>(i - 1)); }

  int unit_count() const { return spaces_[0].unit_count(); }
  Set full() const { return spaces_[0].full(); }

  // Uniform accessors shared with tabulated bispaces.
  bool is_open(int i, Set s) const { return space(i).is_open(s); }
  Set closure(int i, Set s) const { return space(i).closure(s); }
  Set interior(int i, Set s) const { return space(i).interior(s); }
  bool preopen(IndexPair ij, Set a) const { return is_ij_preopen(*this, ij, a); }
  bool weakly_preopen(IndexPair ij, Set a) const { return is_ij_weakly_preopen(*this, ij, a); }
  bool semiopen(IndexPair ij, Set a) const { return is_ij_semiopen(*this, ij, a); }
  bool semipreopen(IndexPair ij, Set a) const { return is_ij_semipreopen(*this, ij, a); }
  Set pcl(IndexPair ij, Set a) const { return bispace::pcl(*this, ij, a); }
  Set spcl(IndexPair ij, Set a) const { return bispace::spcl(*this, ij, a); }
  Set preopen_kernel(IndexPair ij, Set s) const { return bispace::preopen_kernel(*this, ij, s); }
  Set semipreopen_kernel(IndexPair ij, Set s) const { return bispace::semipreopen_kernel(*this, ij, s); }

  std::string format(Set s) const { return format_set(spaces_[0], s); }

 private:
  std::array<B, 2> spaces_;
};

using FiniteBispace = Bispace<FiniteSpace>;
using SymbolicBispace = Bispace<SchematicSpace>;

// Single-space conditions.

template <SpaceBackend B>
std::optional<typename B::Set> open_between(const B& space, typename B::Set a, typename B::Set b) {
  return space.open_between(a, b);
}

template <SpaceBackend B>
std::optional<typename B::Set> preopen_witness(const B& space, typename B::Set a) {
  return space.open_between(a, space.closure(a));
}

template <SpaceBackend B>
bool is_preopen(const B& space, typename B::Set a) {
  return preopen_witness(space, a).has_value();
}

template <SpaceBackend B>
bool is_weakly_preopen(const B& space, typename B::Set a) {
  return a.subset_of(space.interior(space.closure(a)));
}

// Pairwise conditions.

template <SpaceBackend B>
std::optional<typename B::Set> ij_preopen_witness(const Bispace<B>& x, IndexPair ij, typename B::Set a) {
  return x.space(ij.i()).open_between(a, x.space(ij.j()).closure(a));
}

template <SpaceBackend B>
bool is_ij_preopen(const Bispace<B>& x, IndexPair ij, typename B::Set a) {
  return ij_preopen_witness(x, ij, a).has_value();
}

template <SpaceBackend B>
bool is_ij_weakly_preopen(const Bispace<B>& x, IndexPair ij, typename B::Set a) {
  return a.subset_of(x.space(ij.i()).interior(x.space(ij.j()).closure(a)));
}

template <SpaceBackend B>
bool is_pairwise_preopen(const Bispace<B>& x, typename B::Set a) {
  return is_ij_preopen(x, kOneTwo, a) && is_ij_preopen(x, kTwoOne, a);
}

template <SpaceBackend B>
bool is_ij_semiopen(const Bispace<B>& x, IndexPair ij, typename B::Set a) {
  return semiopen_witness_exists(x.space(ij.i()), x.space(ij.j()), a);
}

// Smallest (canonical) algebra set U ⊆ a that is (i,j)-preopen with a ⊆ cl_j(U).
template <SpaceBackend B>
std::optional<typename B::Set> ij_semipreopen_witness(const Bispace<B>& x, IndexPair ij, typename B::Set a) {
  using Set = typename B::Set;
  const B& tj = x.space(ij.j());
  for (Mask m : canonical_masks(x.unit_count())) {
    const Set u(m);
    if (u.subset_of(a) && a.subset_of(tj.closure(u)) && is_ij_preopen(x, ij, u)) return u;
  }
  return std::nullopt;
}

// A semiopen set is semipreopen through its open witness. On schematic
// bispaces that witness may lie outside the atom algebra, so the semiopen test
// comes first; the algebra search covers the rest.
template <SpaceBackend B>
bool is_ij_semipreopen(const Bispace<B>& x, IndexPair ij, typename B::Set a) {
  return is_ij_semiopen(x, ij, a) || ij_semipreopen_witness(x, ij, a).has_value();
}

template <SpaceBackend B>
bool is_ij_preclosed(const Bispace<B>& x, IndexPair ij, typename B::Set a) {
  return is_ij_preopen(x, ij, x.full() - a);
}

template <SpaceBackend B>
bool is_ij_semipreclosed(const Bispace<B>& x, IndexPair ij, typename B::Set a) {
  return is_ij_semipreopen(x, ij, x.full() - a);
}

namespace detail {

template <SpaceBackend B, class Pred>
typename B::Set intersect_supersets(const Bispace<B>& x, typename B::Set a, Pred&& keep) {
  using Set = typename B::Set;
  Set out = x.full();
  const Mask whole = x.full().bits();
  // Supersets of a are a | t for t ranging over subsets of the complement.
  const Mask free = whole & ~a.bits();
  Mask t = free;
  while (true) {
    const Set f(a.bits() | t);
    if (keep(f)) out &= f;
    if (t == 0) break;
    t = (t - 1) & free;
  }
  return out;
}

template <SpaceBackend B, class Pred>
typename B::Set union_of_subsets(typename B::Set s, Pred&& keep) {
  using Set = typename B::Set;
  Set out;
  Mask t = s.bits();
  while (true) {
    const Set u(t);
    if (!u.subset_of(out) && keep(u)) out |= u;
    if (t == 0) break;
    t = (t - 1) & s.bits();
  }
  return out;
}

}  // namespace detail

// Intersection of the (i,j)-preclosed algebra sets containing a.
template <SpaceBackend B>
typename B::Set pcl(const Bispace<B>& x, IndexPair ij, typename B::Set a) {
  return detail::intersect_supersets(x, a, [&](typename B::Set f) { return is_ij_preclosed(x, ij, f); });
}

template <SpaceBackend B>
typename B::Set spcl(const Bispace<B>& x, IndexPair ij, typename B::Set a) {
  return detail::intersect_supersets(x, a, [&](typename B::Set f) { return is_ij_semipreclosed(x, ij, f); });
}

// Union of the (i,j)-preopen algebra subsets of s.
template <SpaceBackend B>
typename B::Set preopen_kernel(const Bispace<B>& x, IndexPair ij, typename B::Set s) {
  return detail::union_of_subsets<B>(s, [&](typename B::Set u) { return is_ij_preopen(x, ij, u); });
}

template <SpaceBackend B>
typename B::Set semipreopen_kernel(const Bispace<B>& x, IndexPair ij, typename B::Set s) {
  return detail::union_of_subsets<B>(s, [&](typename B::Set u) { return is_ij_semipreopen(x, ij, u); });
}

// For every tj-closed G ⊇ a: a ⊆ int_i(G).
template <SpaceBackend B>
bool interior_covers_closed_supersets(const Bispace<B>& x, IndexPair ij, typename B::Set a) {
  return interior_covers_closed_supersets(x.space(ij.i()), x.space(ij.j()), a);
}

// Subspace on y; sets of the result are indexed by compress(., y).
template <SpaceBackend B>
Bispace<B> subspace(const Bispace<B>& x, typename B::Set y) {
  return Bispace<B>(trace(x.first(), y), trace(x.second(), y));
}

template <class Set>
Set restrict_to(Set s, Set y) {
  return Set(compress(s.bits(), y.bits()));
}

template <class Set>
Set lift_from(Set s, Set y) {
  return Set(expand(s.bits(), y.bits()));
}

}  // namespace bispace
