#include <catch2/catch_amalgamated.hpp>
#include <random>
#include <set>

#include "adjlab/families.hpp"
#include "adjlab/predicates.hpp"
#include "adjlab/subgraph.hpp"
#include "oracles.hpp"

using namespace adjlab;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, int denom = 2) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (int(rng() % denom) == 0) g.add_edge(u, v);
  return g;
}

bool is_induced_cycle(const Graph& g, const std::vector<int>& cyc) {
  int k = int(cyc.size());
  if (k < 3) return false;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool ring = (j == i + 1) || (i == 0 && j == k - 1);
      if (g.adjacent(cyc[i], cyc[j]) != ring) return false;
      if (cyc[i] == cyc[j]) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("forest test agrees with union-find counting") {
  for (std::uint32_t mask = 0; mask < (1u << 15); ++mask) {
    Graph g = graph_from_mask(6, mask);
    if (is_forest(g) != oracle::is_forest(g)) {
      CAPTURE(mask);
      REQUIRE(is_forest(g) == oracle::is_forest(g));
    }
  }
}

TEST_CASE("bipartition matches exhaustive colouring") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(rng, 2 + int(rng() % 9), 2 + int(rng() % 3));
    auto bp = try_bipartition(g);
    REQUIRE(bp.has_value() == oracle::is_bipartite(g));
    if (bp) {
      for (auto [u, v] : g.edges()) REQUIRE(bp->in_a(u) != bp->in_a(v));
    } else {
      try {
        bipartition(g);
        FAIL("expected an odd cycle");
      } catch (const OddCycleError& e) {
        REQUIRE(e.cycle.size() % 2 == 1);
        std::set<int> distinct(e.cycle.begin(), e.cycle.end());
        REQUIRE(distinct.size() == e.cycle.size());
        for (std::size_t i = 0; i < e.cycle.size(); ++i)
          REQUIRE(g.adjacent(e.cycle[i], e.cycle[(i + 1) % e.cycle.size()]));
      }
    }
  }
}

TEST_CASE("chordality agrees with exhaustive cycle search") {
  for (std::uint32_t mask = 0; mask < (1u << 10); ++mask) {
    Graph g = graph_from_mask(5, mask);
    REQUIRE(is_chordal(g) == oracle::is_chordal(g));
  }
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 150; ++trial) {
    Graph g = random_graph(rng, 7 + int(rng() % 2), 2 + int(rng() % 2));
    REQUIRE(is_chordal(g) == oracle::is_chordal(g));
  }
}

TEST_CASE("peo order is a genuine perfect elimination order") {
  std::mt19937_64 rng(78);
  int seen = 0;
  for (int trial = 0; trial < 300 && seen < 60; ++trial) {
    Graph g = random_graph(rng, 6 + int(rng() % 3), 2);
    auto peo = peo_order(g);
    if (!peo) continue;
    ++seen;
    REQUIRE(oracle::is_chordal(g));
    std::vector<char> later(g.n, 1);
    for (int i = 0; i < g.n; ++i) later[(*peo)[i]] = 0;
    // eliminate along the order: earlier neighbours of each vertex must
    // form a clique among themselves
    std::vector<int> pos(g.n);
    for (int i = 0; i < g.n; ++i) pos[(*peo)[i]] = i;
    for (int i = 0; i < g.n; ++i) {
      std::vector<int> before;
      for (int u = 0; u < g.n; ++u)
        if (g.adjacent((*peo)[i], u) && pos[u] > i) before.push_back(u);
      for (std::size_t x = 0; x < before.size(); ++x)
        for (std::size_t y = x + 1; y < before.size(); ++y)
          REQUIRE(g.adjacent(before[x], before[y]));
    }
  }
  REQUIRE(seen >= 20);
}

TEST_CASE("chordal bipartite agrees with exhaustive long cycle search") {
  for (std::uint32_t mask = 0; mask < (1u << 15); ++mask) {
    Graph g = graph_from_mask(6, mask);
    REQUIRE(is_chordal_bipartite(g) == oracle::is_chordal_bipartite(g));
  }
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 80; ++trial) {
    Graph g = random_graph(rng, 8 + int(rng() % 3), 3);
    REQUIRE(is_chordal_bipartite(g) == oracle::is_chordal_bipartite(g));
  }
}

TEST_CASE("find_induced_cycle returns a genuine long induced cycle") {
  REQUIRE(find_induced_cycle(cycle_graph(6), 6).has_value());
  REQUIRE(!find_induced_cycle(path_graph(8), 4).has_value());
  REQUIRE(!find_induced_cycle(complete_graph(5), 4).has_value());
  std::mt19937_64 rng(80);
  int found = 0;
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(rng, 7 + int(rng() % 3), 3);
    auto cyc = find_induced_cycle(g, 6);
    bool truth = !oracle::is_chordal_bipartite(g) && oracle::is_bipartite(g);
    if (oracle::is_bipartite(g)) REQUIRE(cyc.has_value() == truth);
    if (cyc) {
      ++found;
      REQUIRE(int(cyc->size()) >= 6);
      REQUIRE(is_induced_cycle(g, *cyc));
    }
  }
  REQUIRE(found >= 3);
}

TEST_CASE("induced containment agrees with subset-permutation search") {
  std::mt19937_64 rng(81);
  std::vector<Graph> patterns = {path_graph(4), cycle_graph(4),
                                 complete_graph(3),
                                 disjoint_copies(path_graph(2), 2)};
  for (int trial = 0; trial < 120; ++trial) {
    Graph g = random_graph(rng, 5 + int(rng() % 4), 2 + int(rng() % 2));
    for (const Graph& pat : patterns) {
      auto w = contains_induced(g, pat);
      REQUIRE(w.has_value() == oracle::find_embedding(g, pat).has_value());
      if (w) REQUIRE(witness_ok(g, pat, *w));
    }
  }
}

TEST_CASE("P7 holds no three disjoint edges") {
  REQUIRE(!contains_induced(path_graph(7), disjoint_copies(path_graph(2), 3))
               .has_value());
}

TEST_CASE("sided containment respects the bipartition") {
  BipartiteGraph host = f1_pattern(2, 2);
  BipartiteGraph pat = two_star_pattern(2, 2);
  auto w = contains_one_sided(host, pat);
  REQUIRE(w.has_value());
  // both star centers land on the center side of the host
  REQUIRE(host.in_a(w->map[0]));
  REQUIRE(host.in_a(w->map[3]));
  REQUIRE(witness_ok(host.g, pat.g, *w));
  // forcing the centers to the other side must fail: side B of F1(2,2)
  // holds no two vertices with two private leaves each
  REQUIRE(!contains_one_sided(swap_sides(host), pat).has_value());
  REQUIRE(contains_either_sided(swap_sides(host), pat).has_value());
}

TEST_CASE("chain analysis ranks Z5 and rejects 2K2") {
  BipartiteGraph z5 = zk_pattern(5);
  ChainAnalysis ca = analyze_chain(z5);
  REQUIRE(ca.chain);
  REQUIRE(ca.a_by_rank.size() == 5);
  // a_1 has the largest neighbourhood
  REQUIRE(ca.a_by_rank[0] == 0);
  for (std::size_t i = 0; i + 1 < ca.a_by_rank.size(); ++i)
    REQUIRE(z5.g.adj[ca.a_by_rank[i + 1]].subset_of(z5.g.adj[ca.a_by_rank[i]]));

  Graph m = disjoint_copies(path_graph(2), 2);
  std::vector<int> sides = {0, 2};
  BipartiteGraph bad = detail::with_side_a(std::move(m), sides);
  ChainAnalysis cb = analyze_chain(bad);
  REQUIRE(!cb.chain);
  REQUIRE(cb.two_k2.size() == 4);
  REQUIRE(bad.g.adjacent(cb.two_k2[0], cb.two_k2[1]));
  REQUIRE(bad.g.adjacent(cb.two_k2[2], cb.two_k2[3]));
  REQUIRE(!bad.g.adjacent(cb.two_k2[0], cb.two_k2[3]));
  REQUIRE(!bad.g.adjacent(cb.two_k2[2], cb.two_k2[1]));
  REQUIRE(!bad.g.adjacent(cb.two_k2[0], cb.two_k2[2]));
  REQUIRE(!bad.g.adjacent(cb.two_k2[1], cb.two_k2[3]));
}

TEST_CASE("P5 center scan finds K23's non-center") {
  P5CenterScan scan = scan_p5_centers(complete_bipartite(2, 3).g);
  REQUIRE(scan.non_center == 0);

  Graph c6 = cycle_graph(6);
  P5CenterScan sc6 = scan_p5_centers(c6);
  REQUIRE(sc6.non_center == -1);
  REQUIRE(sc6.p5_at.size() == 6);
  Graph p5 = path_graph(5);
  for (int v = 0; v < 6; ++v) {
    REQUIRE(witness_ok(c6, p5, sc6.p5_at[v]));
    REQUIRE(sc6.p5_at[v].map[2] == v);  // centered at v
  }
}

TEST_CASE("search budget is enforced") {
  SearchOptions opt;
  opt.budget = 3;
  Graph host = complete_bipartite(8, 8).g;
  REQUIRE_THROWS_AS(contains_induced(host, path_graph(7), opt),
                    BudgetExceeded);
}
