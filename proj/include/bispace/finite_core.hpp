#pragma once

// Spaces over small finite carriers.
//
// On a finite carrier every union is a finite union, so the countable-union
// and finite-intersection axioms of a sigma-space collapse to those of a
// topology. This module therefore cannot exhibit any gap between the
// "exists an open set between" and "contained in the interior of the closure"
// conditions; the symbolic backend is where such gaps live.

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bispace/point_set.hpp"

namespace bispace {

class FiniteCarrier {
 public:
  explicit FiniteCarrier(int n);

  int size() const { return n_; }
  PointSet points() const { return PointSet::full(n_); }

  friend bool operator==(FiniteCarrier, FiniteCarrier) = default;

 private:
  int n_;
};

enum class Axiom {
  kPointOutOfRange,
  kMissingEmpty,
  kMissingWhole,
  kUnionClosure,
  kIntersectionClosure,
};

const char* to_string(Axiom axiom);

class AxiomViolation : public std::runtime_error {
 public:
  AxiomViolation(Axiom axiom, PointSet first, PointSet second, std::string message)
      : std::runtime_error(std::move(message)), axiom_(axiom), first_(first), second_(second) {}

  Axiom axiom() const { return axiom_; }
  PointSet first() const { return first_; }
  PointSet second() const { return second_; }

 private:
  Axiom axiom_;
  PointSet first_;
  PointSet second_;
};

class FiniteSpace {
 public:
  using Set = PointSet;

  // Throws AxiomViolation naming the first violated axiom and a witness pair.
  // Duplicates are dropped and the opens are sorted canonically.
  static FiniteSpace validate(FiniteCarrier carrier, std::vector<PointSet> family);

  static FiniteSpace discrete(int n);
  static FiniteSpace indiscrete(int n);

  FiniteCarrier carrier() const { return carrier_; }
  int unit_count() const { return carrier_.size(); }
  PointSet full() const { return carrier_.points(); }
  std::span<const PointSet> opens() const { return opens_; }

  bool is_open(PointSet s) const {
    return s.subset_of(full()) && ((open_bitmap_[s.bits() >> 6] >> (s.bits() & 63)) & 1U);
  }

  PointSet closure(PointSet s) const;
  PointSet interior(PointSet s) const;
  PointSet limit_points(PointSet s) const;

  // Smallest open U (canonical order) with a ⊆ U ⊆ b. Requires a ⊆ b.
  std::optional<PointSet> open_between(PointSet a, PointSet b) const;

  std::string describe() const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.carrier_ == b.carrier_ && a.opens_ == b.opens_;
  }

 private:
  FiniteSpace(FiniteCarrier carrier, std::vector<PointSet> opens);

  FiniteCarrier carrier_;
  std::vector<PointSet> opens_;
  std::vector<Mask> open_bitmap_;
};

inline constexpr int kMaxEnumeratedCarrier = 4;

// Every space on {0..n-1}, each once: fewer opens first, then lexicographic
// over the canonical open lists. 1 <= n <= 4.
std::vector<FiniteSpace> enumerate_spaces(int n);

// Bispace-level hooks picked up by the generic predicates.
bool semiopen_witness_exists(const FiniteSpace& ti, const FiniteSpace& tj, PointSet a);
bool interior_covers_closed_supersets(const FiniteSpace& ti, const FiniteSpace& tj, PointSet a);
FiniteSpace trace(const FiniteSpace& space, PointSet y);
std::string format_set(const FiniteSpace& space, PointSet s);

}  // namespace bispace
