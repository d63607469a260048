#pragma once

// Shared machinery for the suite sweeps: property registry, tallies, the
// enumerated model index and deterministic sharding.

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "bispace/bispace_table.hpp"
#include "bispace/finite_core.hpp"
#include "bispace/maps.hpp"
#include "bispace/report.hpp"

namespace bispace::suite {

enum class Kind {
  kImplication,  // no counterexample may exist
  kSearch,       // report a witness if one exists
  kRequired,     // a witness must exist
};

enum Prop : int {
  // closure-laws
  kClExtensive, kClIdempotent, kClMonotone, kClAdditive, kClEmpty, kClDuality, kClLimitPoints,
  // lemma-3.1
  kLemmaClosureMeet,
  // preopen-hierarchy
  kHierOpenPre, kHierOpenSemi, kHierPreSp, kHierSemiSp,
  // C1-iff-C2
  kC1ImpliesC2, kC2ImpliesC1Finite, kC2WithoutC1Symbolic,
  // thm-3.1
  kBetweenPre, kBetweenSp,
  // thm-3.2
  kPreClosedSuperset, kClosedSupersetPreFinite, kClosedSupersetGapSymbolic,
  // thm-3.3
  kUnionPre, kUnionSp, kKernelPre, kKernelSp,
  // remark-3.1
  kMeetPreFails, kMeetSpFails,
  // thm-3.4
  kMeetBiOpenPre, kMeetBiOpenSp,
  // thm-3.5
  kSubRelativeClosure, kSubPreRestricts, kSubSpRestricts, kSubPreLifts, kSubSpLifts,
  // thm-3.6
  kPclMembership, kPclMonotone, kPclExtensive, kPclPreclosed,
  // thm-3.7
  kSpclMembership, kSpclMonotone, kSpclExtensive, kSpclSemipreclosed,
  // remark-5.1
  kContSemi, kContPre, kSemiSp, kPreSp, kGapPreNotCont, kGapSpNotSemi, kGapSemiNotCont, kGapSpNotPre,
  // note-4.1
  kContPreservesClosure, kClosurePreservationContFinite, kClosurePreservationGapSymbolic,
  // thm-4.1
  kImagePre, kImageSp,
  // thm-4.2
  kPreimagePre, kPreimageSp,
  // thm-4.3
  kClosedPreimagePre,
  // thm-4.4
  kPreNeighborhood, kPreImageOfPcl, kPrePclOfPreimage,
  kPreNeighborhoodConv, kPreImageOfPclConv, kPrePclOfPreimageConv,
  // thm-4.5
  kRestrictPre,
  // thm-4.6
  kNetImage,
  // thm-5.1
  kClosedPreimageSp,
  // thm-5.2
  kSpNeighborhood, kSpImageOfSpcl, kSpSpclOfPreimage,
  kSpNeighborhoodConv, kSpImageOfSpclConv, kSpSpclOfPreimageConv,
  // thm-5.3
  kRestrictSp,
  kPropCount,
};

struct PropSpec {
  Prop prop;
  const char* suite;
  const char* id;
  Kind kind;
  bool algebra_relative;  // the symbolic part relies on algebra-set witness search
};

const std::vector<PropSpec>& registry();

// A finite witness reference: carrier sizes, source and target bispace
// indices, map index. Used to rebuild strictness fixtures.
struct Ref {
  int nx = 0, ny = 0;
  std::int64_t x = -1, y = -1, map = -1;
};

struct Tally {
  std::uint64_t instances = 0;
  std::uint64_t hits = 0;  // counterexamples, or witnesses for a search
  std::string first;
  Ref ref;

  template <class Describe>
  void check(bool ok, Describe&& describe) {
    ++instances;
    if (!ok && hits++ == 0) first = describe();
  }
  template <class Describe>
  void found(bool hit, Describe&& describe) {
    ++instances;
    if (hit && hits++ == 0) first = describe();
  }
  template <class Describe>
  void found(bool hit, Describe&& describe, const Ref& where) {
    ++instances;
    if (hit && hits++ == 0) {
      first = describe();
      ref = where;
    }
  }

  void merge(const Tally& later) {
    instances += later.instances;
    if (hits == 0 && later.hits != 0) {
      first = later.first;
      ref = later.ref;
    }
    hits += later.hits;
  }
};

using Tallies = std::vector<Tally>;

inline Tallies make_tallies() { return Tallies(kPropCount); }

inline void merge_into(Tallies& into, const Tallies& later) {
  for (std::size_t k = 0; k < into.size(); ++k) into[k].merge(later[k]);
}

// Runs fn(shard, begin, end) over `count` items split into contiguous shards,
// one per worker, and returns the per-shard results in shard order. The
// split depends on the worker count, the merged result does not: every
// quantity is a sum, and the first witness is taken from the earliest shard.
template <class Result, class Fn>
std::vector<Result> run_sharded(std::int64_t count, int workers, Fn&& fn) {
  const std::int64_t shards = std::max<std::int64_t>(1, std::min<std::int64_t>(workers, count));
  std::vector<Result> out(static_cast<std::size_t>(shards));
  auto range = [&](std::int64_t s) { return std::pair{count * s / shards, count * (s + 1) / shards}; };
  if (shards == 1) {
    fn(out[0], std::int64_t{0}, count);
    return out;
  }
  std::vector<std::thread> pool;
  for (std::int64_t s = 0; s < shards; ++s) {
    pool.emplace_back([&, s] {
      const auto [b, e] = range(s);
      fn(out[static_cast<std::size_t>(s)], b, e);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

// All spaces on 1..max_size points, with bispace tables kept for carriers up
// to kTabulated and built on demand above.
class Models {
 public:
  static constexpr int kTabulated = 3;

  explicit Models(int max_size);

  int max_size() const { return max_size_; }
  const std::vector<FiniteSpace>& spaces(int k) const { return spaces_[static_cast<std::size_t>(k)]; }
  std::int64_t space_count(int k) const { return static_cast<std::int64_t>(spaces(k).size()); }
  std::int64_t bispace_count(int k) const { return space_count(k) * space_count(k); }

  int index_of(const FiniteSpace& s) const;

  // Bispace index = first * space_count + second.
  FiniteBispace bispace(int k, std::int64_t index) const;
  std::pair<int, int> components(int k, std::int64_t index) const;

  // Tabulated carriers return a shared table; larger ones are built.
  std::shared_ptr<const BispaceTable> table(int k, std::int64_t index) const;

  // Table of the subspace on y of bispace (k, index); y nonempty.
  std::shared_ptr<const BispaceTable> subspace_table(int k, std::int64_t index, Mask y) const;

  const std::vector<FiniteMap>& maps(int nx, int ny) const;

 private:
  int max_size_;
  std::vector<std::vector<FiniteSpace>> spaces_;
  std::vector<std::map<std::vector<Mask>, int>> lookup_;
  // trace_[k][space][y] = index of the trace on y among spaces of size |y|.
  std::vector<std::vector<std::vector<int>>> trace_;
  std::vector<std::vector<std::shared_ptr<const BispaceTable>>> tables_;
  std::map<std::pair<int, int>, std::vector<FiniteMap>> maps_;
};

std::string describe_bispace(const FiniteBispace& x);

// The index-th map from nx to ny points, lexicographic with the first point
// most significant (the order of all_maps).
FiniteMap map_at(int nx, int ny, std::int64_t index);

// Theorem and map sweeps. Each fills the tallies of every property it covers.
struct SweepResult {
  Tallies tallies = make_tallies();
  std::vector<std::string> notes;
};

void run_bispace_sweep(const Models& models, int n, int workers, SweepResult& out);
void run_symbolic_checks(SweepResult& out);
void run_map_sweep(const Models& models, int n, int workers, std::optional<std::uint64_t> seed,
                   std::uint64_t samples, SweepResult& out);

}  // namespace bispace::suite
