#include "doctest.h"

#include <random>

#include "bispace/maps.hpp"
#include "support/oracles.hpp"

using namespace bispace;

namespace {

oracle::Points preimage(const FiniteMap& f, const oracle::Points& s) {
  oracle::Points out;
  for (int p = 0; p < f.source_size(); ++p) {
    if (s.count(f(p))) out.insert(p);
  }
  return out;
}

oracle::Points image(const FiniteMap& f, const oracle::Points& s) {
  oracle::Points out;
  for (int p : s) out.insert(f(p));
  return out;
}

FiniteBispace random_bispace(std::mt19937_64& rng, int n) {
  auto spaces = enumerate_spaces(n);
  return FiniteBispace(spaces[rng() % spaces.size()], spaces[rng() % spaces.size()]);
}

}  // namespace

TEST_CASE("FiniteMap basics") {
  FiniteMap f(3, 2, {1, 0, 1});
  CHECK(f.image(PointSet::of({0, 2})) == PointSet::of({1}));
  CHECK(f.preimage(PointSet::of({1})) == PointSet::of({0, 2}));
  CHECK(f.describe() == "[1, 0, 1]");
  CHECK_THROWS_AS(FiniteMap(2, 2, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteMap(2, 2, {0}), std::invalid_argument);
  CHECK(all_maps(3, 2).size() == 8);
  CHECK(all_maps(2, 3).front().describe() == "[0, 0]");
  CHECK(all_maps(2, 3).back().describe() == "[2, 2]");
  CHECK(restrict_map(f, PointSet::of({1, 2})).describe() == "[0, 1]");
}

TEST_CASE("map predicates agree with definitional oracles on random small bispaces") {
  std::mt19937_64 rng(424242);
  for (int round = 0; round < 150; ++round) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % 3);
    FiniteBispace x = random_bispace(rng, n);
    FiniteBispace y = random_bispace(rng, m);
    std::vector<int> assignment;
    for (int p = 0; p < n; ++p) assignment.push_back(static_cast<int>(rng() % m));
    FiniteMap f(n, m, assignment);
    const oracle::Family xf[2] = {oracle::family_of(x.first()), oracle::family_of(x.second())};
    const oracle::Family yf[2] = {oracle::family_of(y.first()), oracle::family_of(y.second())};

    for (int i = 1; i <= 2; ++i) {
      bool cont = true;
      for (const auto& v : yf[i - 1]) cont = cont && xf[i - 1].count(preimage(f, v));
      CHECK(is_ij_continuous(f, x, y, i) == cont);
      bool open_map = true;
      for (const auto& u : xf[i - 1]) open_map = open_map && yf[i - 1].count(image(f, u));
      CHECK(is_ij_open_map(f, x, y, i) == open_map);
    }
    for (IndexPair ij : kBothPairs) {
      const auto& ti = xf[ij.i() - 1];
      const auto& tj = xf[ij.j() - 1];
      bool pre = true;
      bool semi = true;
      bool sp = true;
      for (const auto& v : yf[ij.i() - 1]) {
        const auto pv = preimage(f, v);
        pre = pre && oracle::preopen(ti, tj, n, pv);
        semi = semi && oracle::semiopen(ti, tj, n, pv);
        sp = sp && oracle::semipreopen(ti, tj, n, pv);
      }
      CHECK(is_ij_precontinuous(f, x, y, ij) == pre);
      CHECK(is_ij_semi_continuous(f, x, y, ij) == semi);
      CHECK(is_ij_sp_continuous(f, x, y, ij) == sp);

      bool cond = true;
      for (const auto& u : yf[ij.i() - 1]) cond = cond && image(f, oracle::closure(tj, n, preimage(f, u))) == u;
      CHECK(satisfies_condition_C(f, ij, x, y) == cond);
    }
    BispaceTable tx(x);
    BispaceTable ty(y);
    CHECK(is_pairwise_precontinuous(f, tx, ty) == is_pairwise_precontinuous(f, x, y));
    CHECK(is_pairwise_sp_continuous(f, tx, ty) == is_pairwise_sp_continuous(f, x, y));
    CHECK(closed_preimage_characterization(f, tx, ty));
    CHECK(closed_preimage_characterization_sp(f, tx, ty));
  }
}

TEST_CASE("continuity is equivalent to closure preservation on finite spaces") {
  for (const auto& sx : enumerate_spaces(2)) {
    for (const auto& sy : enumerate_spaces(2)) {
      FiniteBispace x(sx, sx);
      FiniteBispace y(sy, sy);
      for (const auto& f : all_maps(2, 2)) {
        CHECK(is_ij_continuous(f, x, y, 1) == preserves_all_closures(f, sx, sy));
      }
    }
  }
}

TEST_CASE("precontinuity consequences hold whenever the map is precontinuous") {
  std::mt19937_64 rng(9001);
  for (int round = 0; round < 120; ++round) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int m = 1 + static_cast<int>(rng() % 3);
    BispaceTable x(random_bispace(rng, n));
    BispaceTable y(random_bispace(rng, m));
    std::vector<int> assignment;
    for (int p = 0; p < n; ++p) assignment.push_back(static_cast<int>(rng() % m));
    FiniteMap f(n, m, assignment);
    auto c = precontinuity_consequences(f, x, y);
    for (int s = 0; s < 2; ++s) {
      // On finite carriers each consequence is equivalent to precontinuity.
      CHECK(c.pre[s].all() == c.precontinuous[s]);
      CHECK(c.sp[s].all() == c.sp_continuous[s]);
      CHECK(c.pre[s].neighborhood == c.precontinuous[s]);
    }
  }
}

TEST_CASE("symbolic map traces agree with materialized finite maps") {
  std::mt19937_64 rng(31337);
  for (int round = 0; round < 80; ++round) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const int m = 1 + static_cast<int>(rng() % 4);
    auto ux = oracle::singleton_universe(n);
    auto uy = oracle::singleton_universe(m);
    std::pair<oracle::Points, oracle::Points> fx[2] = {oracle::random_family(rng, n), oracle::random_family(rng, n)};
    std::pair<oracle::Points, oracle::Points> fy[2] = {oracle::random_family(rng, m), oracle::random_family(rng, m)};
    auto sym = [](auto u, const auto& rp) {
      return SchematicSpace(u, {SymSet(oracle::to_mask(rp.first)), SymSet(oracle::to_mask(rp.second))});
    };
    auto fin = [](int k, const auto& rp) { return oracle::to_space(oracle::materialize(k, rp.first, rp.second), k); };
    SymbolicBispace sx(sym(ux, fx[0]), sym(ux, fx[1]));
    SymbolicBispace sy(sym(uy, fy[0]), sym(uy, fy[1]));
    FiniteBispace x(fin(n, fx[0]), fin(n, fx[1]));
    FiniteBispace y(fin(m, fy[0]), fin(m, fy[1]));
    std::vector<int> assignment;
    for (int p = 0; p < n; ++p) assignment.push_back(static_cast<int>(rng() % m));
    FiniteMap f(n, m, assignment);
    AtomMap g(ux, uy, assignment);
    CHECK(is_pairwise_continuous(g, sx, sy) == is_pairwise_continuous(f, x, y));
    CHECK(is_pairwise_open_map(g, sx, sy) == is_pairwise_open_map(f, x, y));
    CHECK(is_pairwise_precontinuous(g, sx, sy) == is_pairwise_precontinuous(f, x, y));
    CHECK(is_pairwise_semi_continuous(g, sx, sy) == is_pairwise_semi_continuous(f, x, y));
    CHECK(is_pairwise_sp_continuous(g, sx, sy) == is_pairwise_sp_continuous(f, x, y));
    for (IndexPair ij : kBothPairs) CHECK(satisfies_condition_C(g, ij, sx, sy) == satisfies_condition_C(f, ij, x, y));
  }
}

TEST_CASE("AtomMap validation") {
  auto src = oracle::singleton_universe(2);
  auto tgt = std::make_shared<const AtomUniverse>(
      std::vector<Atom>{{"pt", Cardinality::kFiniteSingleton, ""}, {"cloud", Cardinality::kUncountable, ""}});
  CHECK_THROWS_AS(AtomMap(src, tgt, {0, 1}), std::invalid_argument);
  std::vector<std::pair<std::string, std::string>> pairs{{"p0", "pt"}};
  CHECK_THROWS_AS(AtomMap::from_ids(src, tgt, pairs), std::invalid_argument);
  pairs.emplace_back("p1", "pt");
  auto g = AtomMap::from_ids(src, tgt, pairs);
  CHECK(g.describe() == "{p0 -> pt, p1 -> pt}");
  CHECK(g.preimage(tgt->set({"pt"})) == src->full());
}

TEST_CASE("directed sets and nets") {
  CHECK_THROWS_AS(FiniteDirectedSet::make({{true, false}, {false, true}}), std::invalid_argument);
  CHECK_THROWS_AS(FiniteDirectedSet::make({{false}}), std::invalid_argument);
  auto chain = FiniteDirectedSet::make({{true, true}, {false, true}});
  CHECK(chain.describe() == "{0<=1} on 2");
  // Directed preorders on 1 and 2 elements: 1 + 3 (two chains, one full preorder).
  CHECK(enumerate_directed_sets(2).size() == 4);

  auto sierpinski = FiniteSpace::validate(FiniteCarrier(2), {PointSet{}, PointSet::of({0}), PointSet::of({0, 1})});
  // Eventually at 0: converges to both points; eventually at 1: only to 1.
  CHECK(net_converges(sierpinski, make_net(chain, {1, 0}, 2), 0));
  CHECK(net_converges(sierpinski, make_net(chain, {1, 0}, 2), 1));
  CHECK_FALSE(net_converges(sierpinski, make_net(chain, {0, 1}, 2), 0));
  CHECK_FALSE(net_converges(sierpinski, make_net(chain, {1, 1}, 2), 0));
  CHECK(net_converges(sierpinski, make_net(chain, {1, 1}, 2), 1));
  CHECK_THROWS_AS(make_net(chain, {0}, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_net(chain, {0, 2}, 2), std::invalid_argument);
}

TEST_CASE("net images converge under precontinuity with condition C") {
  auto directed = enumerate_directed_sets(3);
  for (const auto& sx : enumerate_spaces(2)) {
    for (const auto& sy : enumerate_spaces(2)) {
      FiniteBispace x(sx, FiniteSpace::discrete(2));
      FiniteBispace y(sy, FiniteSpace::indiscrete(2));
      for (const auto& f : all_maps(2, 2)) {
        for (const auto& d : directed) {
          std::vector<int> values(static_cast<std::size_t>(d.size()), 0);
          for (Mask v = 0; v < (Mask{1} << d.size()); ++v) {
            for (int k = 0; k < d.size(); ++k) values[static_cast<std::size_t>(k)] = (v >> k) & 1U;
            const Net net = make_net(d, values, 2);
            for (int p = 0; p < 2; ++p) {
              CHECK(check_net_image_convergence(f, kOneTwo, x, y, net, p));
              CHECK(check_net_image_convergence(f, kTwoOne, x, y, net, p));
            }
          }
        }
      }
    }
  }
}
