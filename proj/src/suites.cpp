#include "bispace/suites.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "bispace/catalog.hpp"
#include "suite_support.hpp"

namespace bispace {
namespace suite {

namespace {

struct SuiteInfo {
  const char* name;
  const char* title;
  bool maps;
};

constexpr SuiteInfo kSuites[] = {
    {"closure-laws", "closure operator laws on single spaces", false},
    {"lemma-3.1", "closure of a set met with an open set", false},
    {"preopen-hierarchy", "open, preopen, semiopen and semipreopen inclusions", false},
    {"C1-iff-C2", "the interval and interior forms of preopenness", false},
    {"thm-3.1", "sets squeezed between a (semi)preopen set and its closure", false},
    {"thm-3.2", "preopen sets lie inside the interior of closed supersets", false},
    {"thm-3.3", "unions of preopen and semipreopen sets", false},
    {"remark-3.1", "intersections of two preopen sets", false},
    {"thm-3.4", "meeting a (semi)preopen set with a set open in both spaces", false},
    {"thm-3.5", "preopenness in subspaces", false},
    {"thm-3.6", "preclosure through preopen sets around a point", false},
    {"thm-3.7", "semi-preclosure through semipreopen sets around a point", false},
    {"remark-5.1", "continuity hierarchy for maps", true},
    {"note-4.1", "continuity and closure preservation", true},
    {"thm-4.1", "images of (semi)preopen sets under continuous open maps", true},
    {"thm-4.2", "preimages of (semi)preopen sets under precontinuous open maps", true},
    {"thm-4.3", "precontinuity through closed sets", true},
    {"thm-4.4", "consequences of precontinuity", true},
    {"thm-4.5", "restricting precontinuous maps to doubly open sets", true},
    {"thm-4.6", "nets under precontinuous maps with the image condition", true},
    {"thm-5.1", "sp-continuity through closed sets", true},
    {"thm-5.2", "consequences of sp-continuity", true},
    {"thm-5.3", "restricting sp-continuous maps to doubly open sets", true},
};

const SuiteInfo* find_suite(std::string_view name) {
  for (const auto& s : kSuites) {
    if (name == s.name) return &s;
  }
  return nullptr;
}

}  // namespace

const std::vector<PropSpec>& registry() {
  static const std::vector<PropSpec> specs = {
      {kClExtensive, "closure-laws", "extensive", Kind::kImplication, false},
      {kClIdempotent, "closure-laws", "idempotent", Kind::kImplication, false},
      {kClMonotone, "closure-laws", "monotone", Kind::kImplication, false},
      {kClAdditive, "closure-laws", "additive", Kind::kImplication, false},
      {kClEmpty, "closure-laws", "empty-closed", Kind::kImplication, false},
      {kClDuality, "closure-laws", "interior-duality", Kind::kImplication, false},
      {kClLimitPoints, "closure-laws", "limit-points", Kind::kImplication, false},
      {kLemmaClosureMeet, "lemma-3.1", "closure-meets-open", Kind::kImplication, false},
      {kHierOpenPre, "preopen-hierarchy", "open-is-preopen", Kind::kImplication, false},
      {kHierOpenSemi, "preopen-hierarchy", "open-is-semiopen", Kind::kImplication, false},
      {kHierPreSp, "preopen-hierarchy", "preopen-is-semipreopen", Kind::kImplication, true},
      {kHierSemiSp, "preopen-hierarchy", "semiopen-is-semipreopen", Kind::kImplication, true},
      {kC1ImpliesC2, "C1-iff-C2", "interval-implies-interior", Kind::kImplication, false},
      {kC2ImpliesC1Finite, "C1-iff-C2", "interior-implies-interval-finite", Kind::kImplication, false},
      {kC2WithoutC1Symbolic, "C1-iff-C2", "interior-without-interval-symbolic", Kind::kRequired, false},
      {kBetweenPre, "thm-3.1", "preopen-between", Kind::kImplication, false},
      {kBetweenSp, "thm-3.1", "semipreopen-between", Kind::kImplication, true},
      {kPreClosedSuperset, "thm-3.2", "preopen-inside-closed-superset-interiors", Kind::kImplication, false},
      {kClosedSupersetPreFinite, "thm-3.2", "converse-finite", Kind::kImplication, false},
      {kClosedSupersetGapSymbolic, "thm-3.2", "converse-fails-symbolic", Kind::kRequired, false},
      {kUnionPre, "thm-3.3", "union-preopen", Kind::kImplication, false},
      {kUnionSp, "thm-3.3", "union-semipreopen", Kind::kImplication, true},
      {kKernelPre, "thm-3.3", "union-of-all-preopen-subsets", Kind::kImplication, false},
      {kKernelSp, "thm-3.3", "union-of-all-semipreopen-subsets", Kind::kImplication, true},
      {kMeetPreFails, "remark-3.1", "preopen-intersection-not-preopen", Kind::kSearch, false},
      {kMeetSpFails, "remark-3.1", "semipreopen-intersection-not-semipreopen", Kind::kSearch, true},
      {kMeetBiOpenPre, "thm-3.4", "preopen-meet-bi-open", Kind::kImplication, false},
      {kMeetBiOpenSp, "thm-3.4", "semipreopen-meet-bi-open", Kind::kImplication, true},
      {kSubRelativeClosure, "thm-3.5", "relative-closure", Kind::kImplication, false},
      {kSubPreRestricts, "thm-3.5", "preopen-restricts", Kind::kImplication, false},
      {kSubSpRestricts, "thm-3.5", "semipreopen-restricts", Kind::kImplication, false},
      {kSubPreLifts, "thm-3.5", "preopen-lifts-from-open-subspace", Kind::kImplication, false},
      {kSubSpLifts, "thm-3.5", "semipreopen-lifts-from-open-subspace", Kind::kImplication, false},
      {kPclMembership, "thm-3.6", "membership-by-preopen-sets", Kind::kImplication, false},
      {kPclMonotone, "thm-3.6", "monotone", Kind::kImplication, true},
      {kPclExtensive, "thm-3.6", "extensive", Kind::kImplication, true},
      {kPclPreclosed, "thm-3.6", "preclosed", Kind::kImplication, true},
      {kSpclMembership, "thm-3.7", "membership-by-semipreopen-sets", Kind::kImplication, false},
      {kSpclMonotone, "thm-3.7", "monotone", Kind::kImplication, true},
      {kSpclExtensive, "thm-3.7", "extensive", Kind::kImplication, true},
      {kSpclSemipreclosed, "thm-3.7", "semipreclosed", Kind::kImplication, true},
      {kContSemi, "remark-5.1", "continuous-is-semi-continuous", Kind::kImplication, false},
      {kContPre, "remark-5.1", "continuous-is-precontinuous", Kind::kImplication, false},
      {kSemiSp, "remark-5.1", "semi-continuous-is-sp-continuous", Kind::kImplication, false},
      {kPreSp, "remark-5.1", "precontinuous-is-sp-continuous", Kind::kImplication, false},
      {kGapPreNotCont, "remark-5.1", "precontinuous-not-continuous", Kind::kSearch, false},
      {kGapSpNotSemi, "remark-5.1", "sp-continuous-not-semi-continuous", Kind::kSearch, false},
      {kGapSemiNotCont, "remark-5.1", "semi-continuous-not-continuous", Kind::kSearch, false},
      {kGapSpNotPre, "remark-5.1", "sp-continuous-not-precontinuous", Kind::kSearch, false},
      {kContPreservesClosure, "note-4.1", "continuous-preserves-closure", Kind::kImplication, false},
      {kClosurePreservationContFinite, "note-4.1", "closure-preserving-is-continuous-finite", Kind::kImplication,
       false},
      {kClosurePreservationGapSymbolic, "note-4.1", "closure-preserving-not-continuous-symbolic", Kind::kRequired,
       false},
      {kImagePre, "thm-4.1", "image-preopen", Kind::kImplication, false},
      {kImageSp, "thm-4.1", "image-semipreopen", Kind::kImplication, false},
      {kPreimagePre, "thm-4.2", "preimage-preopen", Kind::kImplication, false},
      {kPreimageSp, "thm-4.2", "preimage-semipreopen", Kind::kImplication, false},
      {kClosedPreimagePre, "thm-4.3", "closed-preimage-characterization", Kind::kImplication, false},
      {kPreNeighborhood, "thm-4.4", "neighborhood", Kind::kImplication, false},
      {kPreImageOfPcl, "thm-4.4", "image-of-preclosure", Kind::kImplication, false},
      {kPrePclOfPreimage, "thm-4.4", "preclosure-of-preimage", Kind::kImplication, false},
      {kPreNeighborhoodConv, "thm-4.4", "neighborhood-converse-finite", Kind::kImplication, false},
      {kPreImageOfPclConv, "thm-4.4", "image-of-preclosure-converse-finite", Kind::kImplication, false},
      {kPrePclOfPreimageConv, "thm-4.4", "preclosure-of-preimage-converse-finite", Kind::kImplication, false},
      {kRestrictPre, "thm-4.5", "restriction-precontinuous", Kind::kImplication, false},
      {kNetImage, "thm-4.6", "image-net-converges", Kind::kImplication, false},
      {kClosedPreimageSp, "thm-5.1", "closed-preimage-characterization", Kind::kImplication, false},
      {kSpNeighborhood, "thm-5.2", "neighborhood", Kind::kImplication, false},
      {kSpImageOfSpcl, "thm-5.2", "image-of-semi-preclosure", Kind::kImplication, false},
      {kSpSpclOfPreimage, "thm-5.2", "semi-preclosure-of-preimage", Kind::kImplication, false},
      {kSpNeighborhoodConv, "thm-5.2", "neighborhood-converse-finite", Kind::kImplication, false},
      {kSpImageOfSpclConv, "thm-5.2", "image-of-semi-preclosure-converse-finite", Kind::kImplication, false},
      {kSpSpclOfPreimageConv, "thm-5.2", "semi-preclosure-of-preimage-converse-finite", Kind::kImplication, false},
      {kRestrictSp, "thm-5.3", "restriction-sp-continuous", Kind::kImplication, false},
  };
  return specs;
}

// Models

Models::Models(int max_size) : max_size_(max_size) {
  if (max_size < 1 || max_size > kMaxEnumeratedCarrier) {
    throw std::invalid_argument("carrier size must be in [1, " + std::to_string(kMaxEnumeratedCarrier) + "]");
  }
  const auto slots = static_cast<std::size_t>(max_size + 1);
  spaces_.resize(slots);
  lookup_.resize(slots);
  trace_.resize(slots);
  tables_.resize(slots);
  for (int k = 1; k <= max_size; ++k) {
    auto& sp = spaces_[static_cast<std::size_t>(k)];
    sp = enumerate_spaces(k);
    for (std::size_t s = 0; s < sp.size(); ++s) {
      std::vector<Mask> key;
      for (PointSet u : sp[s].opens()) key.push_back(u.bits());
      lookup_[static_cast<std::size_t>(k)].emplace(std::move(key), static_cast<int>(s));
    }
  }
  for (int k = 1; k <= max_size; ++k) {
    auto& tr = trace_[static_cast<std::size_t>(k)];
    for (const FiniteSpace& s : spaces(k)) {
      std::vector<int> row(std::size_t{1} << k, -1);
      for (Mask y = 1; y < (Mask{1} << k); ++y) row[y] = index_of(trace(s, PointSet(y)));
      tr.push_back(std::move(row));
    }
  }
  for (int k = 1; k <= std::min(max_size, kTabulated); ++k) {
    auto& tb = tables_[static_cast<std::size_t>(k)];
    for (std::int64_t b = 0; b < bispace_count(k); ++b) tb.push_back(std::make_shared<const BispaceTable>(bispace(k, b)));
  }
  for (int nx = 1; nx <= std::min(max_size, kTabulated); ++nx) {
    for (int ny = 1; ny <= std::min(max_size, kTabulated); ++ny) maps_.emplace(std::pair{nx, ny}, all_maps(nx, ny));
  }
}

int Models::index_of(const FiniteSpace& s) const {
  std::vector<Mask> key;
  for (PointSet u : s.opens()) key.push_back(u.bits());
  const auto& table = lookup_.at(static_cast<std::size_t>(s.unit_count()));
  auto it = table.find(key);
  if (it == table.end()) throw std::logic_error("space missing from enumeration");
  return it->second;
}

std::pair<int, int> Models::components(int k, std::int64_t index) const {
  const std::int64_t c = space_count(k);
  return {static_cast<int>(index / c), static_cast<int>(index % c)};
}

FiniteBispace Models::bispace(int k, std::int64_t index) const {
  const auto [a, b] = components(k, index);
  return FiniteBispace(spaces(k)[static_cast<std::size_t>(a)], spaces(k)[static_cast<std::size_t>(b)]);
}

std::shared_ptr<const BispaceTable> Models::table(int k, std::int64_t index) const {
  if (k <= kTabulated) return tables_[static_cast<std::size_t>(k)][static_cast<std::size_t>(index)];
  return std::make_shared<const BispaceTable>(bispace(k, index));
}

std::shared_ptr<const BispaceTable> Models::subspace_table(int k, std::int64_t index, Mask y) const {
  if (y == PointSet::full(k).bits()) return table(k, index);
  const auto [a, b] = components(k, index);
  const int m = std::popcount(y);
  const auto& tr = trace_[static_cast<std::size_t>(k)];
  const std::int64_t sub = std::int64_t{tr[static_cast<std::size_t>(a)][y]} * space_count(m) +
                           tr[static_cast<std::size_t>(b)][y];
  return table(m, sub);
}

const std::vector<FiniteMap>& Models::maps(int nx, int ny) const { return maps_.at(std::pair{nx, ny}); }

std::string describe_bispace(const FiniteBispace& x) {
  return "tau1=" + x.first().describe() + " tau2=" + x.second().describe();
}

namespace {

// Every predicate of a bispace tabulated over its subsets, for either backend.
struct Tab {
  int n = 0;
  Mask full = 0;
  std::string context;
  std::function<std::string(Mask)> fmt;
  std::array<std::vector<Mask>, 2> cl, in;  // by space
  std::array<std::vector<char>, 2> open;    // by space
  std::array<std::vector<char>, 2> pre, wpre, semi, sp, css;  // by pair slot
  std::array<std::vector<Mask>, 2> pcl, spcl, pk, spk;

  template <class View, class Css>
  Tab(const View& v, Css&& closed_superset, std::string ctx, std::function<std::string(Mask)> format)
      : n(v.unit_count()), full(v.full().bits()), context(std::move(ctx)), fmt(std::move(format)) {
    using Set = typename View::Set;
    const std::size_t size = std::size_t{1} << n;
    for (int s = 0; s < 2; ++s) {
      const IndexPair ij = kBothPairs[static_cast<std::size_t>(s)];
      for (auto* v8 : {&open[s], &pre[s], &wpre[s], &semi[s], &sp[s], &css[s]}) v8->resize(size);
      for (auto* vm : {&cl[s], &in[s], &pcl[s], &spcl[s], &pk[s], &spk[s]}) vm->resize(size);
      for (Mask m = 0; m < size; ++m) {
        const Set a(m);
        open[s][m] = v.is_open(s + 1, a);
        cl[s][m] = v.closure(s + 1, a).bits();
        in[s][m] = v.interior(s + 1, a).bits();
        pre[s][m] = v.preopen(ij, a);
        wpre[s][m] = v.weakly_preopen(ij, a);
        semi[s][m] = v.semiopen(ij, a);
        sp[s][m] = v.semipreopen(ij, a);
        css[s][m] = closed_superset(ij, a);
        pcl[s][m] = v.pcl(ij, a).bits();
        spcl[s][m] = v.spcl(ij, a).bits();
        pk[s][m] = v.preopen_kernel(ij, a).bits();
        spk[s][m] = v.semipreopen_kernel(ij, a).bits();
      }
    }
  }

  std::string where(int slot, std::initializer_list<std::pair<const char*, Mask>> sets) const {
    std::string out = context + " pair=" + to_string(kBothPairs[static_cast<std::size_t>(slot)]);
    for (const auto& [name, m] : sets) out += std::string(" ") + name + "=" + fmt(m);
    return out;
  }
};

bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

// Properties shared by finite and symbolic bispaces. On symbolic models sets
// range over the atom algebra.
void check_tab(const Tab& t, Tallies& out, bool finite) {
  const std::size_t size = std::size_t{1} << t.n;
  for (int s = 0; s < 2; ++s) {
    const int j = 1 - s;  // space slot of tau_j
    const auto& pre = t.pre[s];
    const auto& sp = t.sp[s];
    const Mask whole = t.full;
    for (Mask a = 0; a < size; ++a) {
      auto at = [&] { return t.where(s, {{"A", a}}); };
      if (t.open[s][a]) {
        out[kHierOpenPre].check(pre[a], at);
        out[kHierOpenSemi].check(t.semi[s][a], at);
      }
      if (pre[a]) {
        out[kHierPreSp].check(sp[a], at);
        out[kC1ImpliesC2].check(t.wpre[s][a], at);
        out[kPreClosedSuperset].check(t.css[s][a], at);
      }
      if (t.semi[s][a]) out[kHierSemiSp].check(sp[a], at);
      if (finite) {
        if (t.wpre[s][a]) out[kC2ImpliesC1Finite].check(pre[a], at);
        if (t.css[s][a]) out[kClosedSupersetPreFinite].check(pre[a], at);
      } else {
        out[kC2WithoutC1Symbolic].found(t.wpre[s][a] && !pre[a], at);
        out[kClosedSupersetGapSymbolic].found(t.css[s][a] && !pre[a], at);
      }
      out[kKernelPre].check(pre[t.pk[s][a]] && subset(t.pk[s][a], a), at);
      out[kKernelSp].check(sp[t.spk[s][a]] && subset(t.spk[s][a], a), at);
      out[kPclExtensive].check(subset(a, t.pcl[s][a]), at);
      out[kPclPreclosed].check(pre[whole & ~t.pcl[s][a]], at);
      out[kSpclExtensive].check(subset(a, t.spcl[s][a]), at);
      out[kSpclSemipreclosed].check(sp[whole & ~t.spcl[s][a]], at);

      for (Mask b = 0; b < size; ++b) {
        auto at2 = [&](const char* bn) { return [&, bn] { return t.where(s, {{"A", a}, {bn, b}}); }; };
        const Mask clj_a = t.cl[j][a];
        // b plays U in the squeeze conditions.
        if (pre[b] && subset(a, b) && subset(b, clj_a)) out[kBetweenPre].check(pre[a], at2("U"));
        if (sp[b] && subset(b, a) && subset(a, t.cl[j][b])) out[kBetweenSp].check(sp[a], at2("U"));
        if (pre[a] && pre[b]) {
          out[kUnionPre].check(pre[a | b], at2("B"));
          out[kMeetPreFails].found(!pre[a & b], at2("B"));
        }
        if (sp[a] && sp[b]) {
          out[kUnionSp].check(sp[a | b], at2("B"));
          out[kMeetSpFails].found(!sp[a & b], at2("B"));
        }
        const bool bi_open = t.open[0][b] && t.open[1][b];
        if (bi_open && pre[a]) out[kMeetBiOpenPre].check(pre[a & b], at2("B"));
        if (bi_open && sp[a]) out[kMeetBiOpenSp].check(sp[a & b], at2("B"));
        if (subset(a, b)) {
          out[kPclMonotone].check(subset(t.pcl[s][a], t.pcl[s][b]), at2("B"));
          out[kSpclMonotone].check(subset(t.spcl[s][a], t.spcl[s][b]), at2("B"));
        }
      }
    }
  }
}

// Single-space laws; cl and in are indexed by subset.
void check_space_laws(int n, const std::vector<Mask>& cl, const std::vector<Mask>& in, const std::vector<char>& open,
                      const FiniteSpace* finite, const std::string& context, const std::function<std::string(Mask)>& fmt,
                      Tallies& out) {
  const std::size_t size = std::size_t{1} << n;
  const Mask whole = size - 1;
  auto at = [&](std::initializer_list<std::pair<const char*, Mask>> sets) {
    std::string s = context;
    for (const auto& [name, m] : sets) s += std::string(" ") + name + "=" + fmt(m);
    return s;
  };
  out[kClEmpty].check(cl[0] == 0, [&] { return context; });
  for (Mask a = 0; a < size; ++a) {
    out[kClExtensive].check(subset(a, cl[a]), [&] { return at({{"A", a}}); });
    out[kClIdempotent].check(cl[cl[a]] == cl[a], [&] { return at({{"A", a}}); });
    out[kClDuality].check(in[a] == (whole & ~cl[whole & ~a]), [&] { return at({{"A", a}}); });
    if (finite) {
      const Mask limit = finite->limit_points(PointSet(a)).bits();
      out[kClLimitPoints].check(cl[a] == (a | limit), [&] { return at({{"A", a}}); });
    }
    for (Mask b = 0; b < size; ++b) {
      auto ab = [&] { return at({{"A", a}, {"B", b}}); };
      if (subset(a, b)) out[kClMonotone].check(subset(cl[a], cl[b]), ab);
      out[kClAdditive].check(cl[a | b] == (cl[a] | cl[b]), ab);
      if (open[b]) out[kLemmaClosureMeet].check(subset(cl[a] & b, cl[a & b]), ab);
    }
  }
}

// Finite-only bispace properties: pointwise characterizations and subspaces.
void check_finite_extras(const Models& models, int k, std::int64_t index, const Tab& t, Tallies& out) {
  const std::size_t size = std::size_t{1} << k;
  for (int s = 0; s < 2; ++s) {
    const IndexPair ij = kBothPairs[static_cast<std::size_t>(s)];
    for (Mask a = 0; a < size; ++a) {
      Mask pre_hit = 0, sp_hit = 0;  // points with a (semi)preopen neighbourhood missing a
      for (Mask u = 0; u < size; ++u) {
        if (u & a) continue;
        if (t.pre[s][u]) pre_hit |= u;
        if (t.sp[s][u]) sp_hit |= u;
      }
      out[kPclMembership].check(t.pcl[s][a] == (t.full & ~pre_hit), [&] { return t.where(s, {{"A", a}}); });
      out[kSpclMembership].check(t.spcl[s][a] == (t.full & ~sp_hit), [&] { return t.where(s, {{"A", a}}); });
    }
    for (Mask y = 1; y < size; ++y) {
      const auto sub = models.subspace_table(k, index, y);
      const bool y_open_i = t.open[s][y];
      for (Mask a = y;; a = (a - 1) & y) {
        const PointSet ra(compress(a, y));
        auto at = [&] { return t.where(s, {{"Y", y}, {"A", a}}); };
        for (int i = 1; i <= 2 && s == 0; ++i) {
          const Mask rel = sub->closure(i, ra).bits();
          out[kSubRelativeClosure].check(rel == compress(t.cl[i - 1][a] & y, y), at);
        }
        const bool pre_y = sub->preopen(ij, ra);
        const bool sp_y = sub->semipreopen(ij, ra);
        if (t.pre[s][a]) out[kSubPreRestricts].check(pre_y, at);
        if (t.sp[s][a]) out[kSubSpRestricts].check(sp_y, at);
        if (y_open_i && pre_y) out[kSubPreLifts].check(t.pre[s][a], at);
        if (y_open_i && sp_y) out[kSubSpLifts].check(t.sp[s][a], at);
        if (a == 0) break;
      }
    }
  }
}

Tab finite_tab(const BispaceTable& table) {
  const FiniteBispace& x = table.source();
  return Tab(
      table, [&](IndexPair ij, PointSet a) { return interior_covers_closed_supersets(x, ij, a); },
      "X{" + describe_bispace(x) + "}", [](Mask m) { return format_indices(m); });
}

}  // namespace

void run_bispace_sweep(const Models& models, int n, int workers, SweepResult& out) {
  std::string counts;
  for (int k = 1; k <= n; ++k) {
    for (const FiniteSpace& s : models.spaces(k)) {
      std::vector<Mask> cl, in;
      std::vector<char> open;
      for (Mask m = 0; m < (Mask{1} << k); ++m) {
        cl.push_back(s.closure(PointSet(m)).bits());
        in.push_back(s.interior(PointSet(m)).bits());
        open.push_back(s.is_open(PointSet(m)));
      }
      check_space_laws(k, cl, in, open, &s, "space=" + s.describe(), [](Mask m) { return format_indices(m); },
                       out.tallies);
    }
    auto shards = run_sharded<Tallies>(models.bispace_count(k), workers, [&](Tallies& t, std::int64_t b, std::int64_t e) {
      t = make_tallies();
      for (std::int64_t idx = b; idx < e; ++idx) {
        const auto table = models.table(k, idx);
        const Tab tab = finite_tab(*table);
        check_tab(tab, t, true);
        check_finite_extras(models, k, idx, tab, t);
      }
    });
    for (const auto& s : shards) merge_into(out.tallies, s);
    if (!counts.empty()) counts += ", ";
    counts += std::to_string(models.bispace_count(k)) + " on " + std::to_string(k);
  }
  out.notes.push_back("finite bispaces by carrier size: " + counts);
}

void run_symbolic_checks(SweepResult& out) {
  std::vector<std::pair<std::string, SymbolicBispace>> models;
  for (const std::string& id : catalog_ids()) {
    CatalogEntry entry = build_example(id);
    models.emplace_back(id, entry.bispace);
    if (entry.map) models.emplace_back(id + " target", entry.map->target);
  }
  std::string names;
  for (const auto& [name, x] : models) {
    const AtomUniverse& u = x.first().universe();
    auto fmt = [&u](Mask m) { return u.format(SymSet(m)); };
    const Tab tab(
        x, [&](IndexPair ij, SymSet a) { return interior_covers_closed_supersets(x, ij, a); }, name, fmt);
    check_tab(tab, out.tallies, false);
    for (int s = 0; s < 2; ++s) {
      check_space_laws(tab.n, tab.cl[s], tab.in[s], tab.open[s], nullptr,
                       name + " space=" + std::to_string(s + 1), fmt, out.tallies);
    }
    if (!names.empty()) names += ", ";
    names += name;
  }
  out.notes.push_back("symbolic models (atom algebra): " + names);
}

}  // namespace suite

// Public surface

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : suite::kSuites) out.emplace_back(s.name);
  return out;
}

bool is_map_suite(std::string_view name) {
  const auto* s = suite::find_suite(name);
  return s != nullptr && s->maps;
}

std::vector<std::string> expand_suites(std::string_view which) {
  if (which == "all") return suite_names();
  std::vector<std::string> requested;
  std::string token;
  std::istringstream in{std::string(which)};
  while (std::getline(in, token, ',')) {
    if (suite::find_suite(token) == nullptr) throw std::invalid_argument("unknown suite '" + token + "'");
    requested.push_back(token);
  }
  if (requested.empty()) throw std::invalid_argument("no suite named");
  // Run order is fixed regardless of how the list was written.
  std::vector<std::string> out;
  for (const std::string& name : suite_names()) {
    if (std::find(requested.begin(), requested.end(), name) != requested.end()) out.push_back(name);
  }
  return out;
}

int worker_count(int requested) {
  int n = requested;
  if (n <= 0) {
    if (const char* env = std::getenv("BISPACE_LAB_THREADS")) n = std::atoi(env);
  }
  if (n <= 0) n = static_cast<int>(std::thread::hardware_concurrency());
  return std::clamp(n, 1, 64);
}

namespace {

ClaimOutcome outcome_for(const suite::PropSpec& spec, const suite::Tally& t) {
  ClaimOutcome o;
  o.entry = spec.suite;
  o.claim = spec.id;
  o.algebra_relative = spec.algebra_relative;
  const std::string n = std::to_string(t.instances);
  const std::string k = std::to_string(t.hits);
  switch (spec.kind) {
    case suite::Kind::kImplication:
      o.predicate = "implication";
      o.expected = "no counterexample";
      o.computed = t.hits == 0 ? "holds on " + n + " instances" : k + " counterexamples among " + n + " instances";
      o.pass = t.hits == 0;
      break;
    case suite::Kind::kSearch:
      o.predicate = "search";
      o.expected = "witness if one exists";
      o.computed = t.hits == 0 ? "none among " + n + " candidates" : k + " witnesses among " + n + " candidates";
      o.pass = true;
      break;
    case suite::Kind::kRequired:
      o.predicate = "required-witness";
      o.expected = "witness";
      o.computed = t.hits == 0 ? "none among " + n + " candidates" : k + " witnesses among " + n + " candidates";
      o.pass = t.hits != 0;
      break;
  }
  o.witness = t.first;
  return o;
}

const std::pair<suite::Prop, const char*> kGaps[] = {
    {suite::kGapPreNotCont, "precontinuous-not-continuous"},
    {suite::kGapSpNotSemi, "sp-continuous-not-semi-continuous"},
    {suite::kGapSemiNotCont, "semi-continuous-not-continuous"},
    {suite::kGapSpNotPre, "sp-continuous-not-precontinuous"},
};

}  // namespace

SuiteRun run_suites(const SuiteConfig& config) {
  if (config.n < 1 || config.n > kMaxEnumeratedCarrier) {
    throw std::invalid_argument("--n must be in [1, " + std::to_string(kMaxEnumeratedCarrier) + "]");
  }
  if (config.which.empty()) throw std::invalid_argument("no suite selected");
  bool want_maps = false, want_bispaces = false;
  for (const auto& name : config.which) {
    if (suite::find_suite(name) == nullptr) throw std::invalid_argument("unknown suite '" + name + "'");
    (is_map_suite(name) ? want_maps : want_bispaces) = true;
  }
  const int workers = worker_count(config.threads);
  const suite::Models models(config.n);

  suite::SweepResult bispaces, maps;
  if (want_bispaces) {
    suite::run_bispace_sweep(models, config.n, workers, bispaces);
    suite::run_symbolic_checks(bispaces);
  }
  if (want_maps) suite::run_map_sweep(models, config.n, workers, config.seed, config.samples, maps);

  SuiteRun run;
  for (const auto& name : config.which) {
    const auto* info = suite::find_suite(name);
    const suite::SweepResult& src = info->maps ? maps : bispaces;
    Report r;
    r.entry = name;
    r.title = info->title;
    r.notes = src.notes;
    for (const auto& spec : suite::registry()) {
      if (name == spec.suite) r.outcomes.push_back(outcome_for(spec, src.tallies[spec.prop]));
    }
    run.reports.push_back(std::move(r));
  }

  if (want_maps) {
    const int swept = std::min(config.n, suite::Models::kTabulated);
    for (const auto& [prop, gap] : kGaps) {
      const suite::Tally& t = maps.tallies[prop];
      StrictnessFixture f;
      f.gap = gap;
      if (t.hits != 0 && t.ref.x >= 0) {
        f.source = models.bispace(t.ref.nx, t.ref.x);
        f.target = models.bispace(t.ref.ny, t.ref.y);
        f.map = suite::map_at(t.ref.nx, t.ref.ny, t.ref.map);
      } else {
        f.note = "no finite witness on carriers up to " + std::to_string(swept) + " points";
      }
      run.fixtures.push_back(std::move(f));
    }
  }
  return run;
}

// Fixtures

namespace {

using nlohmann::ordered_json;

ordered_json space_json(const FiniteSpace& s) {
  ordered_json opens = ordered_json::array();
  for (PointSet u : s.opens()) opens.push_back(u.elements());
  return opens;
}

ordered_json bispace_json(const FiniteBispace& x) {
  return ordered_json{{"carrier", x.unit_count()}, {"tau1", space_json(x.first())}, {"tau2", space_json(x.second())}};
}

FiniteSpace space_from(const nlohmann::json& j, int n) {
  std::vector<PointSet> family;
  for (const auto& u : j) {
    PointSet s;
    for (int p : u.get<std::vector<int>>()) s |= PointSet::singleton(p);
    family.push_back(s);
  }
  return FiniteSpace::validate(FiniteCarrier(n), std::move(family));
}

FiniteBispace bispace_from(const nlohmann::json& j) {
  const int n = j.at("carrier").get<int>();
  return FiniteBispace(space_from(j.at("tau1"), n), space_from(j.at("tau2"), n));
}

struct Hierarchy {
  bool cont, pre, semi, sp;
};

Hierarchy classify(const FiniteMap& f, const FiniteBispace& x, const FiniteBispace& y) {
  return {is_pairwise_continuous(f, x, y), is_pairwise_precontinuous(f, x, y), is_pairwise_semi_continuous(f, x, y),
          is_pairwise_sp_continuous(f, x, y)};
}

bool gap_holds(std::string_view gap, const Hierarchy& h) {
  if (gap == "precontinuous-not-continuous") return h.pre && !h.cont;
  if (gap == "sp-continuous-not-semi-continuous") return h.sp && !h.semi;
  if (gap == "semi-continuous-not-continuous") return h.semi && !h.cont;
  if (gap == "sp-continuous-not-precontinuous") return h.sp && !h.pre;
  throw std::invalid_argument("unknown gap '" + std::string(gap) + "'");
}

}  // namespace

std::string fixtures_to_json(const std::vector<StrictnessFixture>& fixtures) {
  ordered_json arr = ordered_json::array();
  for (const auto& f : fixtures) {
    ordered_json j{{"gap", f.gap}};
    if (f.source && f.target && f.map) {
      j["source"] = bispace_json(*f.source);
      j["target"] = bispace_json(*f.target);
      j["map"] = std::vector<int>(f.map->assignment().begin(), f.map->assignment().end());
    } else {
      j["note"] = f.note;
    }
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

std::vector<StrictnessFixture> fixtures_from_json(std::string_view text) {
  std::vector<StrictnessFixture> out;
  const auto doc = nlohmann::json::parse(text);
  for (const auto& j : doc) {
    StrictnessFixture f;
    f.gap = j.at("gap").get<std::string>();
    if (j.contains("map")) {
      f.source = bispace_from(j.at("source"));
      f.target = bispace_from(j.at("target"));
      f.map = FiniteMap(f.source->unit_count(), f.target->unit_count(), j.at("map").get<std::vector<int>>());
    } else {
      f.note = j.value("note", "");
    }
    out.push_back(std::move(f));
  }
  return out;
}

bool fixture_holds(const StrictnessFixture& fixture) {
  if (fixture.source && fixture.target && fixture.map) {
    return gap_holds(fixture.gap, classify(*fixture.map, *fixture.source, *fixture.target));
  }
  // No witness recorded: confirm the gap is still empty on carriers up to 3.
  const suite::Models models(3);
  for (int nx = 1; nx <= 3; ++nx) {
    for (int ny = 1; ny <= 3; ++ny) {
      for (std::int64_t xi = 0; xi < models.bispace_count(nx); ++xi) {
        const auto x = models.table(nx, xi);
        for (std::int64_t yi = 0; yi < models.bispace_count(ny); ++yi) {
          const auto y = models.table(ny, yi);
          for (const FiniteMap& f : models.maps(nx, ny)) {
            const Hierarchy h{is_pairwise_continuous(f, *x, *y), is_pairwise_precontinuous(f, *x, *y),
                              is_pairwise_semi_continuous(f, *x, *y), is_pairwise_sp_continuous(f, *x, *y)};
            if (gap_holds(fixture.gap, h)) return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace bispace
