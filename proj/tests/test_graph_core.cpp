#include <catch2/catch_amalgamated.hpp>
#include <random>
#include <set>

#include "adjlab/families.hpp"
#include "adjlab/graph.hpp"
#include "adjlab/graph6.hpp"
#include "adjlab/json_io.hpp"
#include "oracles.hpp"

using namespace adjlab;

TEST_CASE("bitset behaves like a set of ints") {
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + int(rng() % 200);
    Bitset bs(n);
    std::set<int> ref;
    for (int step = 0; step < 300; ++step) {
      int v = int(rng() % n);
      switch (rng() % 4) {
        case 0:
          bs.set(v);
          ref.insert(v);
          break;
        case 1:
          bs.reset(v);
          ref.erase(v);
          break;
        case 2:
          bs.assign(v, rng() % 2);
          if (bs.test(v))
            ref.insert(v);
          else
            ref.erase(v);
          break;
        case 3:
          REQUIRE(bs.test(v) == (ref.count(v) > 0));
          break;
      }
    }
    REQUIRE(bs.count() == (int)ref.size());
    REQUIRE(bs.to_vector() == std::vector<int>(ref.begin(), ref.end()));
    REQUIRE(bs.any() == !ref.empty());
    if (!ref.empty()) REQUIRE(bs.find_first() == *ref.begin());
    int prev = -1;
    for (int v : ref) {
      REQUIRE(bs.find_next(prev) == v);
      prev = v;
    }
    REQUIRE(bs.find_next(prev) == -1);
  }
}

TEST_CASE("bitset boolean algebra matches set algebra") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + int(rng() % 130);
    Bitset a(n), b(n);
    std::set<int> ra, rb;
    for (int i = 0; i < n; ++i) {
      if (rng() % 2) a.set(i), ra.insert(i);
      if (rng() % 2) b.set(i), rb.insert(i);
    }
    std::set<int> und, uni, sym, diff;
    std::set_intersection(ra.begin(), ra.end(), rb.begin(), rb.end(),
                          std::inserter(und, und.begin()));
    std::set_union(ra.begin(), ra.end(), rb.begin(), rb.end(),
                   std::inserter(uni, uni.begin()));
    std::set_symmetric_difference(ra.begin(), ra.end(), rb.begin(), rb.end(),
                                  std::inserter(sym, sym.begin()));
    std::set_difference(ra.begin(), ra.end(), rb.begin(), rb.end(),
                        std::inserter(diff, diff.begin()));
    REQUIRE((a & b).to_vector() == std::vector<int>(und.begin(), und.end()));
    REQUIRE((a | b).to_vector() == std::vector<int>(uni.begin(), uni.end()));
    REQUIRE((a ^ b).to_vector() == std::vector<int>(sym.begin(), sym.end()));
    REQUIRE((a - b).to_vector() == std::vector<int>(diff.begin(), diff.end()));
    REQUIRE(a.intersects(b) == !und.empty());
    REQUIRE(a.count_and(b) == (int)und.size());
    Bitset asub = a & b;
    REQUIRE(asub.subset_of(a));
    REQUIRE(asub.subset_of(b));
    Bitset flipped = a;
    flipped.flip_all();
    REQUIRE(flipped.count() == n - (int)ra.size());
    REQUIRE(!flipped.intersects(a));
  }
}

TEST_CASE("graph edges stay symmetric and irreflexive") {
  Graph g(5);
  g.add_edge(0, 3);
  g.add_edge(3, 4);
  REQUIRE(g.adjacent(3, 0));
  REQUIRE(g.adjacent(0, 3));
  REQUIRE(!g.adjacent(0, 0));
  REQUIRE(g.degree(3) == 2);
  REQUIRE(g.edge_count() == 2);
  REQUIRE(g.edges() == std::vector<std::pair<int, int>>{{0, 3}, {3, 4}});
  g.remove_edge(0, 3);
  REQUIRE(!g.adjacent(3, 0));
}

TEST_CASE("build_graph rejects malformed edge lists") {
  REQUIRE_THROWS_AS(build_graph(3, {{0, 3}}), InvalidInput);
  REQUIRE_THROWS_AS(build_graph(3, {{1, 1}}), InvalidInput);
  REQUIRE_THROWS_AS(build_graph(3, {{0, 1}, {1, 0}}), InvalidInput);
  REQUIRE_THROWS_AS(build_graph(-1, {}), InvalidInput);
  Graph g = build_graph(3, {{0, 1}, {1, 2}});
  REQUIRE(g.edge_count() == 2);
}

TEST_CASE("induced subgraph keeps ids in ascending order") {
  Graph g = path_graph(6);
  Bitset keep(6);
  keep.set(1);
  keep.set(2);
  keep.set(4);
  std::vector<int> ids;
  Graph h = induced(g, keep, &ids);
  REQUIRE(ids == std::vector<int>{1, 2, 4});
  REQUIRE(h.n == 3);
  REQUIRE(h.adjacent(0, 1));
  REQUIRE(!h.adjacent(1, 2));
  REQUIRE(!h.adjacent(0, 2));
}

TEST_CASE("components split 2K2 and keep C6 whole") {
  Graph two_k2 = disjoint_copies(path_graph(2), 2);
  auto comps = components(two_k2);
  REQUIRE(comps.size() == 2);
  REQUIRE(comps[0].to_vector() == std::vector<int>{0, 1});
  REQUIRE(comps[1].to_vector() == std::vector<int>{2, 3});
  REQUIRE(components(cycle_graph(6)).size() == 1);
  Graph iso(3);
  REQUIRE(components(iso).size() == 3);
}

TEST_CASE("graph6 writes the standard strings") {
  REQUIRE(write_graph6(build_graph(2, {{0, 1}})) == "A_");
  REQUIRE(write_graph6(path_graph(7)) == "FhCGG");
}

TEST_CASE("graph6 round-trips against an independent reader") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int n = int(rng() % 40);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) g.add_edge(u, v);
    std::string s = write_graph6(g);
    REQUIRE(read_graph6(s) == g);
    if (n <= 30) REQUIRE(oracle::g6_parse(s) == g);
  }
}

TEST_CASE("graph6 reader rejects corrupt input") {
  REQUIRE_THROWS_AS(read_graph6(""), InvalidInput);
  REQUIRE_THROWS_AS(read_graph6("F"), InvalidInput);      // truncated payload
  REQUIRE_THROWS_AS(read_graph6("A!"), InvalidInput);     // char below offset
  REQUIRE_THROWS_AS(read_graph6("FhCGG "), InvalidInput); // trailing junk
}

TEST_CASE("graph json round-trips and validates") {
  Graph g = cycle_graph(5);
  auto j = graph_to_json(g);
  ParsedGraph back = graph_from_json(j);
  REQUIRE(back.g == g);
  REQUIRE(!back.bipartite.has_value());

  BipartiteGraph bg = complete_bipartite(2, 3);
  auto jb = graph_to_json(bg);
  ParsedGraph backb = graph_from_json(jb);
  REQUIRE(backb.bipartite.has_value());
  REQUIRE(backb.g == bg.g);
  REQUIRE(backb.bipartite->side_a == bg.side_a);

  nlohmann::json bad = {{"n", 2}};
  REQUIRE_THROWS_AS(graph_from_json(bad), InvalidInput);
  nlohmann::json bad2 = {{"n", 2}, {"edges", {{0, 1}}}, {"sides", {0}}};
  REQUIRE_THROWS_AS(graph_from_json(bad2), InvalidInput);
}

TEST_CASE("bipartite complement is an involution") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    int na = int(rng() % 5), nb = int(rng() % 5);
    Graph g(na + nb);
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < nb; ++j)
        if (rng() % 2) g.add_edge(i, na + j);
    std::vector<int> asides;
    for (int i = 0; i < na; ++i) asides.push_back(i);
    BipartiteGraph bg = detail::with_side_a(std::move(g), asides);
    BipartiteGraph cc = bipartite_complement(bipartite_complement(bg));
    REQUIRE(cc.g == bg.g);
    REQUIRE(cc.side_a == bg.side_a);
  }
}

TEST_CASE("bfs layers partition the reachable set") {
  Graph g = path_graph(5);
  BfsLayers bl = bfs_layers(g, 2);
  REQUIRE(bl.layers.size() == 3);
  REQUIRE(bl.layers[0] == std::vector<int>{2});
  REQUIRE(bl.layers[1] == std::vector<int>{1, 3});
  REQUIRE(bl.layers[2] == std::vector<int>{0, 4});
  REQUIRE(bl.unreachable.empty());

  Graph h = disjoint_copies(path_graph(3), 2);
  BfsLayers bh = bfs_layers(h, 0);
  REQUIRE(bh.unreachable == std::vector<int>{3, 4, 5});
}
