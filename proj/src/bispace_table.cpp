#include "bispace/bispace_table.hpp"

namespace bispace {

BispaceTable::BispaceTable(const FiniteBispace& x) : source_(x), n_(x.unit_count()) {
  if (n_ > kMaxCarrier) throw std::invalid_argument("BispaceTable: carrier too large to tabulate");
  const std::size_t size = std::size_t{1} << n_;
  const Mask whole = x.full().bits();

  for (int slot = 0; slot < 2; ++slot) {
    const FiniteSpace& s = x.space(slot + 1);
    const IndexPair ij = IndexPair::make(slot + 1, 2 - slot);
    auto& flags = flags_[slot];
    flags.assign(size, 0);
    closure_[slot].resize(size);
    interior_[slot].resize(size);
    for (Mask m = 0; m < size; ++m) {
      const PointSet a(m);
      closure_[slot][m] = s.closure(a).bits();
      interior_[slot][m] = s.interior(a).bits();
      std::uint8_t f = 0;
      if (s.is_open(a)) f |= kOpen;
      if (is_ij_preopen(x, ij, a)) f |= kPreopen;
      if (is_ij_weakly_preopen(x, ij, a)) f |= kWeaklyPreopen;
      if (is_ij_semiopen(x, ij, a)) f |= kSemiopen;
      flags[m] = f;
    }
    // Semipreopen: some preopen U ⊆ a with a ⊆ cl_j(U). Reuses the preopen
    // flags rather than re-running the witness search per subset.
    const FiniteSpace& tj = x.space(ij.j());
    for (Mask m = 0; m < size; ++m) {
      Mask u = m;
      while (true) {
        if ((flags[u] & kPreopen) && (m & ~tj.closure(PointSet(u)).bits()) == 0) {
          flags[m] |= kSemipreopen;
          break;
        }
        if (u == 0) break;
        u = (u - 1) & m;
      }
    }
  }

  for (int slot = 0; slot < 2; ++slot) {
    auto& flags = flags_[slot];
    pcl_[slot].assign(size, whole);
    spcl_[slot].assign(size, whole);
    pre_kernel_[slot].assign(size, 0);
    sp_kernel_[slot].assign(size, 0);
    for (Mask f = 0; f < size; ++f) {
      const bool preclosed = flags[whole & ~f] & kPreopen;
      const bool semipreclosed = flags[whole & ~f] & kSemipreopen;
      if (!preclosed && !semipreclosed) continue;
      // f is a superset of every subset of f.
      Mask a = f;
      while (true) {
        if (preclosed) pcl_[slot][a] &= f;
        if (semipreclosed) spcl_[slot][a] &= f;
        if (a == 0) break;
        a = (a - 1) & f;
      }
    }
    for (Mask u = 0; u < size; ++u) {
      const bool pre = flags[u] & kPreopen;
      const bool sp = flags[u] & kSemipreopen;
      if (!pre && !sp) continue;
      // u lies under every superset s.
      const Mask free = whole & ~u;
      Mask t = free;
      while (true) {
        if (pre) pre_kernel_[slot][u | t] |= u;
        if (sp) sp_kernel_[slot][u | t] |= u;
        if (t == 0) break;
        t = (t - 1) & free;
      }
    }
  }
}

}  // namespace bispace
