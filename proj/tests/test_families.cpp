#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "adjlab/families.hpp"
#include "adjlab/predicates.hpp"
#include "oracles.hpp"

using namespace adjlab;

TEST_CASE("basic families have the right size and degree profile") {
  Graph p = path_graph(6);
  REQUIRE(p.n == 6);
  REQUIRE(p.edge_count() == 5);
  REQUIRE(p.degree(0) == 1);
  REQUIRE(p.degree(3) == 2);

  Graph c = cycle_graph(6);
  REQUIRE(c.edge_count() == 6);
  for (int v = 0; v < 6; ++v) REQUIRE(c.degree(v) == 2);
  REQUIRE_THROWS_AS(cycle_graph(2), InvalidInput);

  Graph k = complete_graph(5);
  REQUIRE(k.edge_count() == 10);

  BipartiteGraph kb = complete_bipartite(2, 3);
  REQUIRE(kb.n() == 5);
  REQUIRE(kb.g.edge_count() == 6);
  REQUIRE(kb.side_a.count() == 2);
  REQUIRE(kb.in_a(0));
  REQUIRE(!kb.in_a(2));

  Graph st = star_graph(5);
  REQUIRE(st.edge_count() == 5);
  REQUIRE(st.degree(0) == 5);

  Graph sp = spider_graph(1, 2, 3);
  REQUIRE(sp.n == 7);
  REQUIRE(sp.degree(0) == 3);
  std::vector<int> degs;
  for (int v = 0; v < sp.n; ++v) degs.push_back(sp.degree(v));
  std::sort(degs.begin(), degs.end());
  REQUIRE(degs == std::vector<int>{1, 1, 1, 2, 2, 2, 3});
}

TEST_CASE("Z_k chain pattern follows the j >= i rule") {
  BipartiteGraph z5 = zk_pattern(5);
  REQUIRE(z5.n() == 10);
  REQUIRE(z5.g.degree(0) == 5);      // a_1 sees every b_j
  REQUIRE(z5.g.degree(5 + 4) == 5);  // b_5 sees every a_i
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      REQUIRE(z5.g.adjacent(i, 5 + j) == (j >= i));
  for (int i = 0; i < 5; ++i) REQUIRE(z5.in_a(i));
  ChainAnalysis ca = analyze_chain(z5);
  REQUIRE(ca.chain);
}

TEST_CASE("F1 pattern carries two centers of degree t+1 and p+1") {
  BipartiteGraph f1 = f1_pattern(2, 2);
  REQUIRE(f1.n() == 7);
  REQUIRE(f1.g.degree(0) == 3);
  REQUIRE(f1.g.degree(1) == 3);
  REQUIRE(f1.g.degree(2) == 2);  // w sees exactly both centers
  REQUIRE(f1.g.adjacent(0, 2));
  REQUIRE(f1.g.adjacent(1, 2));
  REQUIRE(f1.in_a(0));
  REQUIRE(f1.in_a(1));
  REQUIRE(!f1.in_a(2));
  REQUIRE(oracle::is_forest(f1.g));

  BipartiteGraph f = f_pattern(2, 2);
  REQUIRE(f.n() == 8);
  REQUIRE(f.g.degree(7) == 0);
  REQUIRE(!f.in_a(7));  // the isolated vertex rides on w's side
  // F minus its isolated vertex is F1
  Bitset keep = f.g.full_set();
  keep.reset(7);
  REQUIRE(induced(f.g, keep, nullptr) == f1.g);
}

TEST_CASE("two-star pattern is a disjoint pair of sided stars") {
  BipartiteGraph ts = two_star_pattern(2, 3);
  REQUIRE(ts.n() == 7);
  REQUIRE(ts.g.degree(0) == 2);
  REQUIRE(ts.g.degree(3) == 3);
  REQUIRE(ts.in_a(0));
  REQUIRE(ts.in_a(3));
  REQUIRE(!ts.g.adjacent(0, 3));
  REQUIRE(components(ts.g).size() == 2);
}

TEST_CASE("D_k pattern is a C4 with pendants at three corners") {
  Graph d2 = dk_pattern(2);
  REQUIRE(d2.n == 8);
  REQUIRE(d2.edge_count() == 4 + 2 + 2);
  REQUIRE(oracle::is_chordal_bipartite(d2));
  REQUIRE(d2.degree(0) == 3);
  REQUIRE(d2.degree(1) == 3);
  REQUIRE(d2.degree(2) == 2);
  REQUIRE(d2.degree(3) == 4);
}

TEST_CASE("X, Y, Z shapes match their frozen structure") {
  Graph x = x_pattern();
  Graph y = y_pattern();
  Graph z = z_pattern();
  REQUIRE(oracle::is_bipartite(x));
  REQUIRE(oracle::is_bipartite(y));
  REQUIRE(oracle::is_bipartite(z));

  // Y = C4 plus a disjoint P3
  REQUIRE(y.n == 7);
  auto ycomp = components(y);
  REQUIRE(ycomp.size() == 2);
  std::multiset<int> sizes{ycomp[0].count(), ycomp[1].count()};
  REQUIRE(sizes == std::multiset<int>{3, 4});
  Graph c4 = cycle_graph(4);
  Graph p3 = path_graph(3);
  bool first_is_cycle = ycomp[0].count() == 4;
  Bitset cyc_side = first_is_cycle ? ycomp[0] : ycomp[1];
  Bitset path_side = first_is_cycle ? ycomp[1] : ycomp[0];
  REQUIRE(oracle::isomorphic(induced(y, cyc_side, nullptr), c4));
  REQUIRE(oracle::isomorphic(induced(y, path_side, nullptr), p3));

  // X and Z are connected one-piece patterns holding an induced C4
  REQUIRE(components(x).size() == 1);
  REQUIRE(components(z).size() == 1);
  REQUIRE(oracle::find_embedding(x, c4).has_value());
  REQUIRE(oracle::find_embedding(z, c4).has_value());
  REQUIRE(!oracle::find_embedding(x, cycle_graph(6)).has_value());
  REQUIRE(!oracle::find_embedding(z, cycle_graph(6)).has_value());
}

TEST_CASE("hypercube family is regular and bipartite") {
  Graph q3 = hypercube_graph(3);
  REQUIRE(q3.n == 8);
  REQUIRE(q3.edge_count() == 12);
  for (int v = 0; v < 8; ++v) REQUIRE(q3.degree(v) == 3);
  REQUIRE(oracle::is_bipartite(q3));
  for (int u = 0; u < 8; ++u)
    for (int v = 0; v < 8; ++v)
      REQUIRE(q3.adjacent(u, v) == (std::popcount(unsigned(u ^ v)) == 1));
  REQUIRE_THROWS_AS(hypercube_graph(21), InvalidInput);
}

TEST_CASE("matching on 3+3 is the bipartite complement of C6") {
  Graph m = disjoint_copies(path_graph(2), 3);
  std::vector<int> sides = {0, 2, 4};
  BipartiteGraph bg = detail::with_side_a(std::move(m), sides);
  Graph cc = bipartite_complement(bg).g;
  REQUIRE(oracle::isomorphic(cc, cycle_graph(6)));
}

TEST_CASE("disjoint copies shift indices by block") {
  Graph g = disjoint_copies(cycle_graph(4), 3);
  REQUIRE(g.n == 12);
  REQUIRE(g.edge_count() == 12);
  REQUIRE(components(g).size() == 3);
  REQUIRE(g.adjacent(4, 5));
  REQUIRE(!g.adjacent(3, 4));
}

TEST_CASE("graph_from_mask enumerates every labelled graph once") {
  std::set<std::string> seen;
  for (std::uint64_t mask = 0; mask < 8; ++mask) {
    Graph g = graph_from_mask(3, mask);
    std::string key;
    for (auto [u, v] : g.edges()) key += std::to_string(u) + std::to_string(v);
    REQUIRE(!seen.count(key));
    seen.insert(key);
  }
  REQUIRE(graph_from_mask(4, 0).edge_count() == 0);
  REQUIRE(graph_from_mask(4, (1u << 6) - 1) == complete_graph(4));
}

TEST_CASE("labelled graph counts by isomorphism class match the catalogue") {
  // classes of simple graphs on 1..6 vertices
  std::vector<long long> expected = {1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) {
    std::set<std::uint64_t> classes;
    std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask)
      classes.insert(oracle::canon(graph_from_mask(n, mask)));
    REQUIRE((long long)classes.size() == expected[n - 1]);
  }
}
