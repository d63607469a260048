#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "bispace/bispace_props.hpp"

namespace bispace {

// A finite bispace with every predicate tabulated over all 2^n subsets.
// Built from the direct predicates; exposes the same accessors as Bispace so
// the map predicates can run on either.
class BispaceTable {
 public:
  using Set = PointSet;

  static constexpr int kMaxCarrier = 10;

  explicit BispaceTable(const FiniteBispace& x);

  int unit_count() const { return n_; }
  Set full() const { return PointSet::full(n_); }
  const FiniteBispace& source() const { return source_; }
  const FiniteSpace& space(int i) const { return source_.space(i); }

  std::span<const PointSet> opens(int i) const { return source_.space(i).opens(); }

  bool is_open(int i, Set s) const { return has(i - 1, s, kOpen); }
  Set closure(int i, Set s) const { return Set(closure_[i - 1][s.bits()]); }
  Set interior(int i, Set s) const { return Set(interior_[i - 1][s.bits()]); }
  bool preopen(IndexPair ij, Set a) const { return has(ij.slot(), a, kPreopen); }
  bool weakly_preopen(IndexPair ij, Set a) const { return has(ij.slot(), a, kWeaklyPreopen); }
  bool semiopen(IndexPair ij, Set a) const { return has(ij.slot(), a, kSemiopen); }
  bool semipreopen(IndexPair ij, Set a) const { return has(ij.slot(), a, kSemipreopen); }
  bool preclosed(IndexPair ij, Set a) const { return preopen(ij, full() - a); }
  bool semipreclosed(IndexPair ij, Set a) const { return semipreopen(ij, full() - a); }
  Set pcl(IndexPair ij, Set a) const { return Set(pcl_[ij.slot()][a.bits()]); }
  Set spcl(IndexPair ij, Set a) const { return Set(spcl_[ij.slot()][a.bits()]); }
  Set preopen_kernel(IndexPair ij, Set s) const { return Set(pre_kernel_[ij.slot()][s.bits()]); }
  Set semipreopen_kernel(IndexPair ij, Set s) const { return Set(sp_kernel_[ij.slot()][s.bits()]); }

  std::string format(Set s) const { return format_indices(s.bits()); }

 private:
  enum Flag : std::uint8_t {
    kOpen = 1,
    kPreopen = 2,
    kWeaklyPreopen = 4,
    kSemiopen = 8,
    kSemipreopen = 16,
  };

  bool has(int slot, Set s, Flag f) const { return (flags_[slot][s.bits()] & f) != 0; }

  FiniteBispace source_;
  int n_;
  // Slot k holds space k+1 for open/closure/interior and pair (k+1, 2-k) otherwise.
  std::array<std::vector<std::uint8_t>, 2> flags_;
  std::array<std::vector<Mask>, 2> closure_;
  std::array<std::vector<Mask>, 2> interior_;
  std::array<std::vector<Mask>, 2> pcl_;
  std::array<std::vector<Mask>, 2> spcl_;
  std::array<std::vector<Mask>, 2> pre_kernel_;
  std::array<std::vector<Mask>, 2> sp_kernel_;
};

}  // namespace bispace
