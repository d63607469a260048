#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace bispace {

using Mask = std::uint64_t;

// Upper bound on points/atoms for anything that walks the whole set algebra.
inline constexpr int kMaxAlgebraUnits = 16;

// A subset of {0, ..., n-1}. The tag keeps point sets and atom sets apart.
template <class Tag>
class BitSet {
 public:
  constexpr BitSet() = default;
  constexpr explicit BitSet(Mask bits) : bits_(bits) {}

  static constexpr BitSet full(int n) {
    return BitSet(n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1);
  }
  static constexpr BitSet singleton(int i) { return BitSet(Mask{1} << i); }
  static constexpr BitSet of(std::initializer_list<int> members) {
    Mask m = 0;
    for (int i : members) m |= Mask{1} << i;
    return BitSet(m);
  }

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(BitSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(BitSet o) const { return (bits_ & o.bits_) != 0; }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (Mask m = bits_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
  }

  constexpr BitSet& operator|=(BitSet o) { bits_ |= o.bits_; return *this; }
  constexpr BitSet& operator&=(BitSet o) { bits_ &= o.bits_; return *this; }
  constexpr BitSet& operator-=(BitSet o) { bits_ &= ~o.bits_; return *this; }

  friend constexpr BitSet operator|(BitSet a, BitSet b) { return BitSet(a.bits_ | b.bits_); }
  friend constexpr BitSet operator&(BitSet a, BitSet b) { return BitSet(a.bits_ & b.bits_); }
  friend constexpr BitSet operator-(BitSet a, BitSet b) { return BitSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(BitSet, BitSet) = default;

 private:
  Mask bits_ = 0;
};

struct PointTag {};
struct AtomTag {};

using PointSet = BitSet<PointTag>;
using SymSet = BitSet<AtomTag>;

// Cardinality first, then lexicographic on the sorted member lists.
constexpr bool canonical_less(Mask a, Mask b) {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  if (ca != cb) return ca < cb;
  const Mask diff = a ^ b;
  return diff != 0 && (a & diff & (~diff + 1)) != 0;
}

template <class Tag>
constexpr bool canonical_less(BitSet<Tag> a, BitSet<Tag> b) {
  return canonical_less(a.bits(), b.bits());
}

// Every subset of an n-element range, in canonical order. n <= kMaxAlgebraUnits.
std::span<const Mask> canonical_masks(int n);

// Packs the bits of s selected by y into the low bits (parallel bit extract).
constexpr Mask compress(Mask s, Mask y) {
  Mask out = 0;
  int k = 0;
  for (Mask m = y; m != 0; m &= m - 1, ++k) {
    if (s & (m & (~m + 1))) out |= Mask{1} << k;
  }
  return out;
}

// Inverse of compress: spreads the low bits of s onto the positions of y.
constexpr Mask expand(Mask s, Mask y) {
  Mask out = 0;
  int k = 0;
  for (Mask m = y; m != 0; m &= m - 1, ++k) {
    if ((s >> k) & 1U) out |= m & (~m + 1);
  }
  return out;
}

// "{0, 2}"
std::string format_indices(Mask m);

}  // namespace bispace
