// Map suites: every map between enumerated bispaces, checked against the
// continuity hierarchy and the theorems about precontinuous and sp-continuous
// maps. The hot loop reads tabulated predicates and precomputed image and
// preimage tables; the library predicates it mirrors are oracle-tested.

#include <bit>
#include <random>
#include <unordered_map>

#include "bispace/catalog.hpp"
#include "suite_support.hpp"

namespace bispace::suite {

namespace {

constexpr int kNetDomainSize = 3;

struct MapInfo {
  FiniteMap f;
  std::int64_t index;
  std::array<Mask, 16> pre{};  // by target subset
  std::array<Mask, 16> img{};  // by source subset

  MapInfo(FiniteMap map, std::int64_t idx) : f(std::move(map)), index(idx) {
    for (Mask m = 0; m < (Mask{1} << f.target_size()); ++m) pre[m] = f.preimage(PointSet(m)).bits();
    for (Mask m = 0; m < (Mask{1} << f.source_size()); ++m) img[m] = f.image(PointSet(m)).bits();
  }
};

struct SpaceRef {
  int k;
  std::int64_t index;
  int a, b;  // component space indices
  std::shared_ptr<const BispaceTable> t;
};

struct SourceInfo : SpaceRef {
  // Nonempty sets open in both spaces, with their subspace tables.
  std::vector<std::pair<Mask, std::shared_ptr<const BispaceTable>>> bi_open;
};

SpaceRef make_ref(const Models& models, int k, std::int64_t index) {
  const auto [a, b] = models.components(k, index);
  return SpaceRef{k, index, a, b, models.table(k, index)};
}

SourceInfo make_source(const Models& models, int k, std::int64_t index) {
  SourceInfo out{make_ref(models, k, index), {}};
  for (PointSet u : out.t->opens(1)) {
    if (!u.empty() && out.t->is_open(2, u)) out.bi_open.emplace_back(u.bits(), models.subspace_table(k, index, u.bits()));
  }
  return out;
}

// Lexicographic in the assignment, first point most significant.
FiniteMap map_from_index(int nx, int ny, std::int64_t index) {
  std::vector<int> assignment(static_cast<std::size_t>(nx));
  for (int p = nx - 1; p >= 0; --p) {
    assignment[static_cast<std::size_t>(p)] = static_cast<int>(index % ny);
    index /= ny;
  }
  return FiniteMap(nx, ny, std::move(assignment));
}

std::int64_t map_count(int nx, int ny) {
  std::int64_t c = 1;
  for (int p = 0; p < nx; ++p) c *= ny;
  return c;
}

struct Shard {
  Tallies t = make_tallies();
  std::unordered_map<std::uint64_t, bool> nets;
};

class Sweep {
 public:
  explicit Sweep(const Models& models) : models_(models), directed_(enumerate_directed_sets(kNetDomainSize)) {}

  void check(const SourceInfo& X, const SpaceRef& Y, const MapInfo& M, Shard& sh) const;

 private:
  bool nets_map_to_convergent(const SourceInfo& X, const SpaceRef& Y, const MapInfo& M, int slot, Shard& sh) const;

  const Models& models_;
  std::vector<FiniteDirectedSet> directed_;
};

std::string where(const SourceInfo& X, const SpaceRef& Y, const MapInfo& M, int slot = -1,
                  std::initializer_list<std::pair<const char*, Mask>> sets = {}) {
  std::string out = "X{" + describe_bispace(X.t->source()) + "} Y{" + describe_bispace(Y.t->source()) +
                    "} f=" + M.f.describe();
  if (slot >= 0) out += " pair=" + to_string(kBothPairs[static_cast<std::size_t>(slot)]);
  for (const auto& [name, m] : sets) out += std::string(" ") + name + "=" + format_indices(m);
  return out;
}

bool subset(Mask a, Mask b) { return (a & ~b) == 0; }

// Whether every net on a small directed set that converges in the i-th source
// space has an image converging in the i-th target space. Depends only on the
// two component spaces and the map, so it is cached per shard.
bool Sweep::nets_map_to_convergent(const SourceInfo& X, const SpaceRef& Y, const MapInfo& M, int slot,
                                   Shard& sh) const {
  const int ti = slot == 0 ? X.a : X.b;
  const int si = slot == 0 ? Y.a : Y.b;
  const std::uint64_t key =
      ((((static_cast<std::uint64_t>(X.k) * 8 + static_cast<std::uint64_t>(Y.k)) * 512 + static_cast<std::uint64_t>(ti)) *
            512 +
        static_cast<std::uint64_t>(si)) *
       512) +
      static_cast<std::uint64_t>(M.index);
  if (auto it = sh.nets.find(key); it != sh.nets.end()) return it->second;

  const FiniteSpace& src = models_.spaces(X.k)[static_cast<std::size_t>(ti)];
  const FiniteSpace& dst = models_.spaces(Y.k)[static_cast<std::size_t>(si)];
  bool ok = true;
  for (const FiniteDirectedSet& d : directed_) {
    const int m = d.size();
    std::vector<int> values(static_cast<std::size_t>(m), 0);
    while (ok) {
      const Net net = make_net(d, values, X.k);
      const Net image = image_net(M.f, net);
      for (int x = 0; x < X.k && ok; ++x) {
        if (net_converges(src, net, x) && !net_converges(dst, image, M.f(x))) ok = false;
      }
      int p = 0;
      while (p < m && ++values[static_cast<std::size_t>(p)] == X.k) values[static_cast<std::size_t>(p++)] = 0;
      if (p == m) break;
    }
    if (!ok) break;
  }
  sh.nets.emplace(key, ok);
  return ok;
}

void Sweep::check(const SourceInfo& X, const SpaceRef& Y, const MapInfo& M, Shard& sh) const {
  const BispaceTable& x = *X.t;
  const BispaceTable& y = *Y.t;
  Tallies& t = sh.t;
  const Mask yfull = y.full().bits();
  const Mask xsize = Mask{1} << X.k;
  const Mask ysize = Mask{1} << Y.k;

  bool cont[2], open[2], pre[2], semi[2], sp[2], pre_closed[2], sp_closed[2];
  for (int s = 0; s < 2; ++s) {
    const int i = s + 1;
    const IndexPair ij = kBothPairs[static_cast<std::size_t>(s)];
    cont[s] = pre[s] = semi[s] = sp[s] = pre_closed[s] = sp_closed[s] = true;
    for (PointSet u : y.opens(i)) {
      const PointSet p(M.pre[u.bits()]);
      cont[s] = cont[s] && x.is_open(i, p);
      pre[s] = pre[s] && x.preopen(ij, p);
      semi[s] = semi[s] && x.semiopen(ij, p);
      sp[s] = sp[s] && x.semipreopen(ij, p);
      const PointSet pc(M.pre[yfull & ~u.bits()]);
      pre_closed[s] = pre_closed[s] && x.preclosed(ij, pc);
      sp_closed[s] = sp_closed[s] && x.semipreclosed(ij, pc);
    }
    open[s] = true;
    for (PointSet u : x.opens(i)) open[s] = open[s] && y.is_open(i, PointSet(M.img[u.bits()]));
  }
  const bool all_cont = cont[0] && cont[1];
  const bool all_open = open[0] && open[1];
  const bool all_pre = pre[0] && pre[1];
  const bool all_semi = semi[0] && semi[1];
  const bool all_sp = sp[0] && sp[1];
  auto at = [&] { return where(X, Y, M); };

  for (int s = 0; s < 2; ++s) {
    auto at_s = [&] { return where(X, Y, M, s); };
    if (cont[s]) {
      t[kContSemi].check(semi[s], at_s);
      t[kContPre].check(pre[s], at_s);
    }
    if (semi[s]) t[kSemiSp].check(sp[s], at_s);
    if (pre[s]) t[kPreSp].check(sp[s], at_s);
  }
  const Ref ref{X.k, Y.k, X.index, Y.index, M.index};
  t[kGapPreNotCont].found(all_pre && !all_cont, at, ref);
  t[kGapSpNotSemi].found(all_sp && !all_semi, at, ref);
  t[kGapSemiNotCont].found(all_semi && !all_cont, at, ref);
  t[kGapSpNotPre].found(all_sp && !all_pre, at, ref);

  t[kClosedPreimagePre].check((pre_closed[0] && pre_closed[1]) == all_pre, at);
  t[kClosedPreimageSp].check((sp_closed[0] && sp_closed[1]) == all_sp, at);

  // Forward images under continuous open maps.
  if (all_cont && all_open) {
    int bad_pre = -1, bad_sp = -1;
    Mask a_pre = 0, a_sp = 0;
    for (int s = 0; s < 2; ++s) {
      const IndexPair ij = kBothPairs[static_cast<std::size_t>(s)];
      for (Mask a = 0; a < xsize; ++a) {
        const PointSet fa(M.img[a]);
        if (bad_pre < 0 && x.preopen(ij, PointSet(a)) && !y.preopen(ij, fa)) {
          bad_pre = s;
          a_pre = a;
        }
        if (bad_sp < 0 && x.semipreopen(ij, PointSet(a)) && !y.semipreopen(ij, fa)) {
          bad_sp = s;
          a_sp = a;
        }
      }
    }
    t[kImagePre].check(bad_pre < 0, [&] { return where(X, Y, M, bad_pre, {{"A", a_pre}}); });
    t[kImageSp].check(bad_sp < 0, [&] { return where(X, Y, M, bad_sp, {{"A", a_sp}}); });
  }

  // Preimages under precontinuous open maps.
  if (all_pre && all_open) {
    int bad_pre = -1, bad_sp = -1;
    Mask b_pre = 0, b_sp = 0;
    for (int s = 0; s < 2; ++s) {
      const IndexPair ij = kBothPairs[static_cast<std::size_t>(s)];
      for (Mask b = 0; b < ysize; ++b) {
        const PointSet fb(M.pre[b]);
        if (bad_pre < 0 && y.preopen(ij, PointSet(b)) && !x.preopen(ij, fb)) {
          bad_pre = s;
          b_pre = b;
        }
        if (bad_sp < 0 && y.semipreopen(ij, PointSet(b)) && !x.semipreopen(ij, fb)) {
          bad_sp = s;
          b_sp = b;
        }
      }
    }
    t[kPreimagePre].check(bad_pre < 0, [&] { return where(X, Y, M, bad_pre, {{"B", b_pre}}); });
    t[kPreimageSp].check(bad_sp < 0, [&] { return where(X, Y, M, bad_sp, {{"B", b_sp}}); });
  }

  // Pointwise, image and preimage consequences, in each orientation.
  for (int s = 0; s < 2; ++s) {
    const int i = s + 1;
    const IndexPair ij = kBothPairs[static_cast<std::size_t>(s)];
    bool nb_pre = true, nb_sp = true, img_pre = true, img_sp = true, cl_pre = true, cl_sp = true;
    for (PointSet u : y.opens(i)) {
      const PointSet pv(M.pre[u.bits()]);
      nb_pre = nb_pre && pv.subset_of(x.preopen_kernel(ij, pv));
      nb_sp = nb_sp && pv.subset_of(x.semipreopen_kernel(ij, pv));
    }
    for (Mask a = 0; a < xsize; ++a) {
      const Mask bound = y.closure(i, PointSet(M.img[a])).bits();
      img_pre = img_pre && subset(M.img[x.pcl(ij, PointSet(a)).bits()], bound);
      img_sp = img_sp && subset(M.img[x.spcl(ij, PointSet(a)).bits()], bound);
    }
    for (Mask b = 0; b < ysize; ++b) {
      const PointSet pb(M.pre[b]);
      const Mask bound = M.pre[y.closure(i, PointSet(b)).bits()];
      cl_pre = cl_pre && subset(x.pcl(ij, pb).bits(), bound);
      cl_sp = cl_sp && subset(x.spcl(ij, pb).bits(), bound);
    }
    auto at_s = [&] { return where(X, Y, M, s); };
    if (pre[s]) {
      t[kPreNeighborhood].check(nb_pre, at_s);
      t[kPreImageOfPcl].check(img_pre, at_s);
      t[kPrePclOfPreimage].check(cl_pre, at_s);
    }
    if (nb_pre) t[kPreNeighborhoodConv].check(pre[s], at_s);
    if (img_pre) t[kPreImageOfPclConv].check(pre[s], at_s);
    if (cl_pre) t[kPrePclOfPreimageConv].check(pre[s], at_s);
    if (sp[s]) {
      t[kSpNeighborhood].check(nb_sp, at_s);
      t[kSpImageOfSpcl].check(img_sp, at_s);
      t[kSpSpclOfPreimage].check(cl_sp, at_s);
    }
    if (nb_sp) t[kSpNeighborhoodConv].check(sp[s], at_s);
    if (img_sp) t[kSpImageOfSpclConv].check(sp[s], at_s);
    if (cl_sp) t[kSpSpclOfPreimageConv].check(sp[s], at_s);
  }

  // Restrictions to sets open in both source spaces.
  if (all_pre || all_sp) {
    for (const auto& [a, sub] : X.bi_open) {
      bool ok_pre = true, ok_sp = true;
      for (int s = 0; s < 2; ++s) {
        const IndexPair ij = kBothPairs[static_cast<std::size_t>(s)];
        for (PointSet u : y.opens(s + 1)) {
          const PointSet r(compress(M.pre[u.bits()] & a, a));
          ok_pre = ok_pre && sub->preopen(ij, r);
          ok_sp = ok_sp && sub->semipreopen(ij, r);
        }
      }
      auto at_a = [&, a = a] { return where(X, Y, M, -1, {{"A", a}}); };
      if (all_pre) t[kRestrictPre].check(ok_pre, at_a);
      if (all_sp) t[kRestrictSp].check(ok_sp, at_a);
    }
  }

  // Nets under (i,j)-precontinuous maps satisfying the image condition.
  for (int s = 0; s < 2; ++s) {
    if (!pre[s]) continue;
    const int i = s + 1;
    const int j = 2 - s;
    bool condition = true;
    for (PointSet u : y.opens(i)) {
      condition = condition && M.img[x.closure(j, PointSet(M.pre[u.bits()])).bits()] == u.bits();
    }
    if (condition) {
      t[kNetImage].check(nets_map_to_convergent(X, Y, M, s, sh), [&] { return where(X, Y, M, s); });
    }
  }
}

// Single spaces: continuity against closure preservation.
void sweep_single_spaces(const Models& models, int n, Tallies& t) {
  for (int nx = 1; nx <= n; ++nx) {
    for (int ny = 1; ny <= n; ++ny) {
      for (const FiniteSpace& sx : models.spaces(nx)) {
        std::array<Mask, 16> cl_x{};
        for (Mask a = 0; a < (Mask{1} << nx); ++a) cl_x[a] = sx.closure(PointSet(a)).bits();
        for (const FiniteSpace& sy : models.spaces(ny)) {
          std::array<Mask, 16> cl_y{};
          for (Mask b = 0; b < (Mask{1} << ny); ++b) cl_y[b] = sy.closure(PointSet(b)).bits();
          for (const FiniteMap& f : models.maps(nx, ny)) {
            const MapInfo m(f, 0);
            bool cont = true;
            for (PointSet u : sy.opens()) cont = cont && sx.is_open(PointSet(m.pre[u.bits()]));
            bool keeps = true;
            for (Mask a = 0; a < (Mask{1} << nx); ++a) keeps = keeps && subset(m.img[cl_x[a]], cl_y[m.img[a]]);
            auto at = [&] { return "tau=" + sx.describe() + " sigma=" + sy.describe() + " f=" + f.describe(); };
            if (cont) t[kContPreservesClosure].check(keeps, at);
            if (keeps) t[kClosurePreservationContFinite].check(cont, at);
          }
        }
      }
    }
  }
}

// The catalog's map between schematic bispaces.
void check_symbolic_maps(Tallies& t, std::vector<std::string>& notes) {
  for (const std::string& id : catalog_ids()) {
    const CatalogEntry entry = build_example(id);
    if (!entry.map) continue;
    const AtomMap& f = entry.map->map;
    const SymbolicBispace& x = entry.bispace;
    const SymbolicBispace& y = entry.map->target;
    for (int i = 1; i <= 2; ++i) {
      const bool cont = is_ij_continuous(f, x, y, i);
      const bool keeps = preserves_all_closures(f, x.space(i), y.space(i));
      auto at = [&] { return id + " space=" + std::to_string(i) + " f=" + f.describe(); };
      if (cont) t[kContPreservesClosure].check(keeps, at);
      t[kClosurePreservationGapSymbolic].found(keeps && !cont, at);
    }
    notes.push_back("symbolic map: " + id);
  }
}

}  // namespace

void run_map_sweep(const Models& models, int n, int workers, std::optional<std::uint64_t> seed,
                   std::uint64_t samples, SweepResult& out) {
  const int exhaustive = std::min(n, Models::kTabulated);
  const Sweep sweep(models);
  std::uint64_t combos = 0;

  for (int nx = 1; nx <= exhaustive; ++nx) {
    for (int ny = 1; ny <= exhaustive; ++ny) {
      std::vector<SpaceRef> targets;
      for (std::int64_t yi = 0; yi < models.bispace_count(ny); ++yi) targets.push_back(make_ref(models, ny, yi));
      std::vector<MapInfo> maps;
      const auto& all = models.maps(nx, ny);
      for (std::size_t m = 0; m < all.size(); ++m) maps.emplace_back(all[m], static_cast<std::int64_t>(m));

      auto shards = run_sharded<Shard>(models.bispace_count(nx), workers, [&](Shard& sh, std::int64_t b, std::int64_t e) {
        for (std::int64_t xi = b; xi < e; ++xi) {
          const SourceInfo X = make_source(models, nx, xi);
          for (const MapInfo& M : maps) {
            for (const SpaceRef& Y : targets) sweep.check(X, Y, M, sh);
          }
        }
      });
      for (const auto& sh : shards) merge_into(out.tallies, sh.t);
      combos += static_cast<std::uint64_t>(models.bispace_count(nx) * models.bispace_count(ny)) * maps.size();
    }
  }
  out.notes.push_back("exhaustive: every map between bispaces on up to " + std::to_string(exhaustive) + " points, " +
                      std::to_string(combos) + " (source, target, map) instances; nets on directed sets of up to " +
                      std::to_string(kNetDomainSize) + " elements");

  if (seed) {
    // Draws are made up front from one generator so the instances do not
    // depend on the worker count.
    struct Draw {
      int nx, ny;
      std::int64_t x, y, map;
    };
    std::mt19937_64 rng(*seed);
    std::vector<Draw> draws;
    for (std::uint64_t k = 0; k < samples; ++k) {
      Draw d{};
      d.nx = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      d.ny = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
      d.x = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(models.bispace_count(d.nx)));
      d.y = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(models.bispace_count(d.ny)));
      d.map = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(map_count(d.nx, d.ny)));
      draws.push_back(d);
    }
    auto shards = run_sharded<Shard>(static_cast<std::int64_t>(draws.size()), workers,
                                     [&](Shard& sh, std::int64_t b, std::int64_t e) {
                                       for (std::int64_t k = b; k < e; ++k) {
                                         const Draw& d = draws[static_cast<std::size_t>(k)];
                                         const SourceInfo X = make_source(models, d.nx, d.x);
                                         const SpaceRef Y = make_ref(models, d.ny, d.y);
                                         const MapInfo M(map_from_index(d.nx, d.ny, d.map), d.map);
                                         sweep.check(X, Y, M, sh);
                                       }
                                     });
    for (const auto& sh : shards) merge_into(out.tallies, sh.t);
    out.notes.push_back("sampled: " + std::to_string(samples) + " random instances on up to " + std::to_string(n) +
                        " points, seed " + std::to_string(*seed));
  } else if (n > exhaustive) {
    out.notes.push_back("carriers of " + std::to_string(n) + " points not swept for maps; pass a seed to sample them");
  }

  sweep_single_spaces(models, exhaustive, out.tallies);
  check_symbolic_maps(out.tallies, out.notes);
}

FiniteMap map_at(int nx, int ny, std::int64_t index) { return map_from_index(nx, ny, index); }

}  // namespace bispace::suite
