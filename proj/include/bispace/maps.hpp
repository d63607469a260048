#pragma once

// Maps between bispaces and the continuity hierarchy.
//
// The map predicates are templates over a "pairwise view": Bispace<B> (direct
// computation) or BispaceTable (tabulated). Quantification over the opens of
// the target goes through all_target_open_traces, which yields, for each open
// U, a set W with preimage(U) = preimage(W).
//
// Schematic targets have infinitely many opens, but a map whose images are
// finitely many singleton atoms T only sees U ∩ T. For U = C ∪ P the trace is
// (P ∩ T) ∪ (C ∩ T), and C ∩ T ranges over every subset of R ∩ T because T is
// a finite set of points. The traces are therefore exactly
//     empty, T, and (P ∩ T) ∪ S for S ⊆ R ∩ T.
// Forward images of the opens of a schematic source depend only on which atoms
// the open touches: X touches all, the empty set none, and C ∪ P touches P
// plus an arbitrary set of region atoms (one point per atom suffices).

#include <array>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "bispace/bispace_props.hpp"
#include "bispace/bispace_table.hpp"

namespace bispace {

class FiniteMap {
 public:
  using Set = PointSet;

  FiniteMap(int source_size, int target_size, std::vector<int> assignment);

  int source_size() const { return source_size_; }
  int target_size() const { return target_size_; }
  std::span<const int> assignment() const { return assignment_; }
  int operator()(int point) const { return assignment_[static_cast<std::size_t>(point)]; }

  PointSet image(PointSet s) const {
    PointSet out;
    for (Mask m = s.bits(); m != 0; m &= m - 1) out |= PointSet::singleton(assignment_[std::countr_zero(m)]);
    return out;
  }
  PointSet preimage(PointSet s) const {
    PointSet out;
    for (int p = 0; p < source_size_; ++p) {
      if (s.contains(assignment_[static_cast<std::size_t>(p)])) out |= PointSet::singleton(p);
    }
    return out;
  }
  PointSet source_full() const { return PointSet::full(source_size_); }
  PointSet target_full() const { return PointSet::full(target_size_); }

  std::string describe() const;

  friend bool operator==(const FiniteMap&, const FiniteMap&) = default;

 private:
  int source_size_;
  int target_size_;
  std::vector<int> assignment_;
};

// All target_size^source_size maps, lexicographic in the assignment vector.
std::vector<FiniteMap> all_maps(int source_size, int target_size);

// Constant on each source atom, with singleton-atom images.
class AtomMap {
 public:
  using Set = SymSet;

  AtomMap(std::shared_ptr<const AtomUniverse> source, std::shared_ptr<const AtomUniverse> target,
          std::vector<int> assignment);

  static AtomMap from_ids(std::shared_ptr<const AtomUniverse> source, std::shared_ptr<const AtomUniverse> target,
                          std::span<const std::pair<std::string, std::string>> pairs);

  const AtomUniverse& source() const { return *source_; }
  const AtomUniverse& target() const { return *target_; }
  std::span<const int> assignment() const { return assignment_; }

  SymSet image(SymSet s) const;
  SymSet preimage(SymSet s) const;
  SymSet source_full() const { return source_->full(); }
  SymSet target_full() const { return target_->full(); }

  std::string describe() const;

 private:
  std::shared_ptr<const AtomUniverse> source_;
  std::shared_ptr<const AtomUniverse> target_;
  std::vector<int> assignment_;
};

// Restriction of f to the subspace on a (points re-indexed by compress).
FiniteMap restrict_map(const FiniteMap& f, PointSet a);
AtomMap restrict_map(const AtomMap& f, SymSet a);

// Opens (or open traces) of the target and forward images of source opens.

template <class Fn>
bool all_target_open_traces(const FiniteBispace& y, int i, const FiniteMap&, Fn&& pred) {
  for (PointSet u : y.space(i).opens()) {
    if (!pred(u)) return false;
  }
  return true;
}

template <class Fn>
bool all_target_open_traces(const BispaceTable& y, int i, const FiniteMap&, Fn&& pred) {
  for (PointSet u : y.opens(i)) {
    if (!pred(u)) return false;
  }
  return true;
}

template <class Fn>
bool all_target_open_traces(const SymbolicBispace& y, int i, const AtomMap& f, Fn&& pred) {
  const SchematicSpace& s = y.space(i);
  const SymSet hit = f.image(f.source_full());
  if (!pred(SymSet{}) || !pred(hit)) return false;
  const SymSet base = s.mandatory() & hit;
  const Mask free = (s.region() & hit).bits();
  Mask t = free;
  while (true) {
    if (!pred(base | SymSet(t))) return false;
    if (t == 0) break;
    t = (t - 1) & free;
  }
  return true;
}

template <class Fn>
bool all_source_open_images(const FiniteBispace& x, int i, const FiniteMap& f, Fn&& pred) {
  for (PointSet u : x.space(i).opens()) {
    if (!pred(f.image(u))) return false;
  }
  return true;
}

template <class Fn>
bool all_source_open_images(const BispaceTable& x, int i, const FiniteMap& f, Fn&& pred) {
  for (PointSet u : x.opens(i)) {
    if (!pred(f.image(u))) return false;
  }
  return true;
}

template <class Fn>
bool all_source_open_images(const SymbolicBispace& x, int i, const AtomMap& f, Fn&& pred) {
  const SchematicSpace& s = x.space(i);
  if (!pred(SymSet{}) || !pred(f.image(s.full()))) return false;
  const Mask free = s.region().bits();
  Mask t = free;
  while (true) {
    if (!pred(f.image(s.mandatory() | SymSet(t)))) return false;
    if (t == 0) break;
    t = (t - 1) & free;
  }
  return true;
}

// Continuity hierarchy. i names the component (1 or 2); pair predicates use
// the (i,j) orientation on the source.

template <class Map, class X, class Y>
bool is_ij_continuous(const Map& f, const X& x, const Y& y, int i) {
  return all_target_open_traces(y, i, f, [&](auto w) { return x.is_open(i, f.preimage(w)); });
}

template <class Map, class X, class Y>
bool is_pairwise_continuous(const Map& f, const X& x, const Y& y) {
  return is_ij_continuous(f, x, y, 1) && is_ij_continuous(f, x, y, 2);
}

template <class Map, class X, class Y>
bool is_ij_open_map(const Map& f, const X& x, const Y& y, int i) {
  return all_source_open_images(x, i, f, [&](auto img) { return y.is_open(i, img); });
}

template <class Map, class X, class Y>
bool is_pairwise_open_map(const Map& f, const X& x, const Y& y) {
  return is_ij_open_map(f, x, y, 1) && is_ij_open_map(f, x, y, 2);
}

template <class Map, class X, class Y>
bool is_ij_precontinuous(const Map& f, const X& x, const Y& y, IndexPair ij) {
  return all_target_open_traces(y, ij.i(), f, [&](auto w) { return x.preopen(ij, f.preimage(w)); });
}

template <class Map, class X, class Y>
bool is_pairwise_precontinuous(const Map& f, const X& x, const Y& y) {
  return is_ij_precontinuous(f, x, y, kOneTwo) && is_ij_precontinuous(f, x, y, kTwoOne);
}

template <class Map, class X, class Y>
bool is_ij_semi_continuous(const Map& f, const X& x, const Y& y, IndexPair ij) {
  return all_target_open_traces(y, ij.i(), f, [&](auto w) { return x.semiopen(ij, f.preimage(w)); });
}

template <class Map, class X, class Y>
bool is_pairwise_semi_continuous(const Map& f, const X& x, const Y& y) {
  return is_ij_semi_continuous(f, x, y, kOneTwo) && is_ij_semi_continuous(f, x, y, kTwoOne);
}

template <class Map, class X, class Y>
bool is_ij_sp_continuous(const Map& f, const X& x, const Y& y, IndexPair ij) {
  return all_target_open_traces(y, ij.i(), f, [&](auto w) { return x.semipreopen(ij, f.preimage(w)); });
}

template <class Map, class X, class Y>
bool is_pairwise_sp_continuous(const Map& f, const X& x, const Y& y) {
  return is_ij_sp_continuous(f, x, y, kOneTwo) && is_ij_sp_continuous(f, x, y, kTwoOne);
}

// f(cl A) ⊆ cl f(A) between two single spaces.
template <class Map, class SX, class SY>
bool check_closure_preservation(const Map& f, const SX& sx, const SY& sy, typename Map::Set a) {
  return f.image(sx.closure(a)).subset_of(sy.closure(f.image(a)));
}

// Closure preservation for every algebra set of the source.
template <class Map, class SX, class SY>
bool preserves_all_closures(const Map& f, const SX& sx, const SY& sy) {
  using Set = typename Map::Set;
  for (Mask m : canonical_masks(sx.unit_count())) {
    if (!check_closure_preservation(f, sx, sy, Set(m))) return false;
  }
  return true;
}

// Precontinuity against "preimages of closed sets are preclosed", with the
// closed side enumerated directly as complements of open traces. Returns
// whether the two sides agree.
template <class Map, class X, class Y>
bool closed_preimage_characterization(const Map& f, const X& x, const Y& y) {
  bool closed_side = true;
  for (IndexPair ij : kBothPairs) {
    const auto image_all = f.image(f.source_full());
    closed_side = closed_side && all_target_open_traces(y, ij.i(), f, [&](auto w) {
                    const auto preimage = f.preimage(image_all - w);
                    return x.preopen(ij, x.full() - preimage);
                  });
  }
  return closed_side == is_pairwise_precontinuous(f, x, y);
}

template <class Map, class X, class Y>
bool closed_preimage_characterization_sp(const Map& f, const X& x, const Y& y) {
  bool closed_side = true;
  for (IndexPair ij : kBothPairs) {
    const auto image_all = f.image(f.source_full());
    closed_side = closed_side && all_target_open_traces(y, ij.i(), f, [&](auto w) {
                    const auto preimage = f.preimage(image_all - w);
                    return x.semipreopen(ij, x.full() - preimage);
                  });
  }
  return closed_side == is_pairwise_sp_continuous(f, x, y);
}

// The three precontinuity consequences, evaluated for one orientation.
struct ConsequenceFlags {
  bool neighborhood = true;         // every x, every open V ∋ f(x): a preopen U ∋ x with f(U) ⊆ V
  bool image_of_closure = true;     // f(pcl A) ⊆ cl_i f(A) for all A
  bool closure_of_preimage = true;  // pcl f^{-1}(B) ⊆ f^{-1}(cl_i B) for all B

  bool all() const { return neighborhood && image_of_closure && closure_of_preimage; }
  friend bool operator==(const ConsequenceFlags&, const ConsequenceFlags&) = default;
};

struct PrecontinuityConsequences {
  std::array<bool, 2> precontinuous{};
  std::array<bool, 2> sp_continuous{};
  std::array<ConsequenceFlags, 2> pre{};  // indexed by IndexPair::slot()
  std::array<ConsequenceFlags, 2> sp{};
};

// Finite maps only: quantifies over points and all subsets of both carriers.
template <class X, class Y>
PrecontinuityConsequences precontinuity_consequences(const FiniteMap& f, const X& x, const Y& y) {
  PrecontinuityConsequences out;
  for (IndexPair ij : kBothPairs) {
    const int s = ij.slot();
    out.precontinuous[s] = is_ij_precontinuous(f, x, y, ij);
    out.sp_continuous[s] = is_ij_sp_continuous(f, x, y, ij);
    // A point x of f^{-1}(V) sits in a preopen U ⊆ f^{-1}(V) iff it lies in
    // the union of the preopen subsets of f^{-1}(V).
    out.pre[s].neighborhood = all_target_open_traces(y, ij.i(), f, [&](PointSet v) {
      const PointSet pv = f.preimage(v);
      return pv.subset_of(x.preopen_kernel(ij, pv));
    });
    out.sp[s].neighborhood = all_target_open_traces(y, ij.i(), f, [&](PointSet v) {
      const PointSet pv = f.preimage(v);
      return pv.subset_of(x.semipreopen_kernel(ij, pv));
    });
    for (Mask m : canonical_masks(x.unit_count())) {
      const PointSet a(m);
      const PointSet bound = y.closure(ij.i(), f.image(a));
      if (!f.image(x.pcl(ij, a)).subset_of(bound)) out.pre[s].image_of_closure = false;
      if (!f.image(x.spcl(ij, a)).subset_of(bound)) out.sp[s].image_of_closure = false;
    }
    for (Mask m : canonical_masks(y.unit_count())) {
      const PointSet b(m);
      const PointSet pb = f.preimage(b);
      const PointSet bound = f.preimage(y.closure(ij.i(), b));
      if (!x.pcl(ij, pb).subset_of(bound)) out.pre[s].closure_of_preimage = false;
      if (!x.spcl(ij, pb).subset_of(bound)) out.sp[s].closure_of_preimage = false;
    }
  }
  return out;
}

// f(cl_j f^{-1}(U)) = U for every sigma_i-open U.
template <class X, class Y>
bool satisfies_condition_C(const FiniteMap& f, IndexPair ij, const X& x, const Y& y) {
  return all_target_open_traces(y, ij.i(), f, [&](PointSet u) {
    return f.image(x.closure(ij.j(), f.preimage(u))) == u;
  });
}

// X itself is open in every target, so condition C forces f to be onto; a
// schematic target whose ground set is not covered by the finitely many image
// atoms fails immediately. Otherwise every target atom is a singleton and the
// opens are exactly the open algebra sets.
bool satisfies_condition_C(const AtomMap& f, IndexPair ij, const SymbolicBispace& x, const SymbolicBispace& y);

// Net machinery over finite directed sets.

class FiniteDirectedSet {
 public:
  // leq[a][b] means a <= b. Checks reflexivity, transitivity and that every
  // pair has an upper bound.
  static FiniteDirectedSet make(std::vector<std::vector<bool>> leq);

  int size() const { return static_cast<int>(leq_.size()); }
  bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  std::string describe() const;

 private:
  explicit FiniteDirectedSet(std::vector<std::vector<bool>> leq) : leq_(std::move(leq)) {}
  std::vector<std::vector<bool>> leq_;
};

// Every directed preorder on {0..m-1}, 1 <= m <= max_size.
std::vector<FiniteDirectedSet> enumerate_directed_sets(int max_size);

struct Net {
  FiniteDirectedSet domain;
  std::vector<int> values;
};

Net make_net(FiniteDirectedSet domain, std::vector<int> values, int carrier_size);
Net image_net(const FiniteMap& f, const Net& net);

// Eventually inside every open set containing x.
bool net_converges(const FiniteSpace& space, const Net& net, int x);

// If the map is (i,j)-precontinuous and satisfies condition C, a net that
// converges to x in the i-th source space has an image converging to f(x) in
// the i-th target space. Returns true when the hypotheses fail.
template <class X, class Y>
bool check_net_image_convergence(const FiniteMap& f, IndexPair ij, const X& x, const Y& y, const Net& net, int point) {
  if (!is_ij_precontinuous(f, x, y, ij) || !satisfies_condition_C(f, ij, x, y)) return true;
  const FiniteSpace& xi = x.space(ij.i());
  const FiniteSpace& yi = y.space(ij.i());
  if (!net_converges(xi, net, point)) return true;
  return net_converges(yi, image_net(f, net), f(point));
}

}  // namespace bispace
