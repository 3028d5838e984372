#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "adjlab/families.hpp"
#include "adjlab/hypercube.hpp"
#include "oracles.hpp"

using namespace adjlab;

namespace {

bool same_edges(const Graph& a, const Graph& b) {
  if (a.n != b.n) return false;
  for (int u = 0; u < a.n; ++u)
    for (int v = u + 1; v < a.n; ++v)
      if (a.adjacent(u, v) != b.adjacent(u, v)) return false;
  return true;
}

}  // namespace

TEST_CASE("hypercube embedding of pinned graphs") {
  Graph c4 = cycle_graph(4);
  Embedding emb = hypercube_embed(c4);
  check_embedding(c4, emb);
  // two coordinates suffice and the four codes are distinct
  std::set<std::vector<int>> seen;
  int used = 0;
  for (const Bitset& c : emb.coords) {
    seen.insert(c.to_vector());
    if (c.any()) used = std::max(used, c.find_first() + 1);
  }
  REQUIRE(seen.size() == 4);
  REQUIRE(emb.dim == 2);

  Graph q3 = hypercube_graph(3);
  Embedding e3 = hypercube_embed(q3);
  check_embedding(q3, e3);
  // seven dimensions allowed, three used after trimming
  REQUIRE(e3.dim == 3);
  int hi = 0;
  for (const Bitset& c : e3.coords)
    for (int b : c.to_vector()) hi = std::max(hi, b + 1);
  REQUIRE(hi == 3);

  REQUIRE_THROWS_AS(hypercube_embed(complete_graph(3)), NotEmbeddable);
  REQUIRE_THROWS_AS(hypercube_embed(complete_graph(3), 2), BudgetExceeded);
}

TEST_CASE("embedding checker rejects bad coordinate maps") {
  Graph p3 = path_graph(3);
  Embedding emb = hypercube_embed(p3);
  check_embedding(p3, emb);
  Embedding wrong = emb;
  wrong.coords[2].flip_all();
  REQUIRE_THROWS_AS(check_embedding(p3, wrong), InvalidInput);
  Embedding off = emb;
  off.coords.pop_back();
  REQUIRE_THROWS_AS(check_embedding(p3, off), InvalidInput);
}

TEST_CASE("pinned codes") {
  Graph edge = path_graph(2);
  HypercubeCode c = hypercube_encode(edge, hypercube_embed(edge));
  REQUIRE(c.entries == std::vector<int>{1, 1, 1, 1});
  REQUIRE(same_edges(hypercube_decode(c), edge));

  Graph iso(3);
  HypercubeCode ci = hypercube_encode(iso, hypercube_embed(iso));
  REQUIRE(ci.entries == std::vector<int>{1, 1, 2, 1, 3, 1});
  REQUIRE(same_edges(hypercube_decode(ci), iso));

  Graph p3 = path_graph(3);
  HypercubeCode cp = hypercube_encode(p3, hypercube_embed(p3));
  REQUIRE(cp.entries.size() == 6);
  for (int e : cp.entries) {
    REQUIRE(e >= 1);
    REQUIRE(e <= 3);
  }
  REQUIRE(same_edges(hypercube_decode(cp), p3));
}

TEST_CASE("round-trip across every cube subset") {
  Graph q3 = hypercube_graph(3);
  for (unsigned mask = 0; mask < 256; ++mask) {
    Bitset keep(8);
    for (int v = 0; v < 8; ++v)
      if (mask >> v & 1) keep.set(v);
    Graph sub = induced(q3, keep);
    Embedding emb = hypercube_embed(sub);
    check_embedding(sub, emb);
    HypercubeCode code = hypercube_encode(sub, emb);
    REQUIRE((int)code.entries.size() == 2 * sub.n);
    for (int e : code.entries) {
      REQUIRE(e >= 1);
      REQUIRE(e <= std::max(sub.n, 1));
    }
    REQUIRE(same_edges(hypercube_decode(code), sub));
  }
}

TEST_CASE("round-trip on sampled subsets of the four-cube") {
  Graph q4 = hypercube_graph(4);
  std::mt19937 rng(40104);
  for (int trial = 0; trial < 60; ++trial) {
    Bitset keep(16);
    for (int v = 0; v < 16; ++v)
      if (rng() & 1) keep.set(v);
    Graph sub = induced(q4, keep);
    HypercubeCode code = hypercube_encode(sub, hypercube_embed(sub));
    REQUIRE((int)code.entries.size() == 2 * sub.n);
    REQUIRE(same_edges(hypercube_decode(code), sub));
  }
}

TEST_CASE("caller-chosen spanning forests") {
  Graph c4 = cycle_graph(4);
  Embedding emb = hypercube_embed(c4);
  // 0-based parents; vertex 0 roots a path around the cycle
  std::vector<int> forest = {0, 0, 1, 0};
  HypercubeCode code = hypercube_encode(c4, emb, &forest);
  REQUIRE(same_edges(hypercube_decode(code), c4));

  std::vector<int> broken = {0, 0, 0, 1};  // 3-1 is not an edge of C4
  REQUIRE_THROWS_AS(hypercube_encode(c4, emb, &broken), InvalidInput);
  std::vector<int> cyclic = {1, 0, 3, 2};  // no root in {2,3}
  REQUIRE_THROWS_AS(hypercube_encode(c4, emb, &cyclic), InvalidInput);
  std::vector<int> short_list = {0, 0, 1};
  REQUIRE_THROWS_AS(hypercube_encode(c4, emb, &short_list), InvalidInput);
}

TEST_CASE("decoder rejects malformed codes") {
  // odd entry count
  REQUIRE_THROWS_AS(hypercube_decode({1, {1, 1, 1}}), InvalidInput);
  // p chases a cycle
  REQUIRE_THROWS_AS(hypercube_decode({2, {2, 1, 1, 1}}), InvalidInput);
  // root whose d is not 1
  REQUIRE_THROWS_AS(hypercube_decode({2, {1, 2, 1, 1}}), InvalidInput);
  // p out of range
  REQUIRE_THROWS_AS(hypercube_decode({2, {3, 1, 1, 1}}), InvalidInput);
  REQUIRE_THROWS_AS(hypercube_decode({2, {0, 1, 1, 1}}), InvalidInput);
  // d out of range
  REQUIRE_THROWS_AS(hypercube_decode({2, {1, 1, 1, 3}}), InvalidInput);
  REQUIRE_THROWS_AS(hypercube_decode({2, {1, 1, 1, 0}}), InvalidInput);
}

TEST_CASE("codes stay within the counting bound") {
  // every fixed-size code is 2n entries over [1..n]: n^(2n) possibilities
  Graph p5 = path_graph(5);
  HypercubeCode code = hypercube_encode(p5, hypercube_embed(p5));
  REQUIRE((int)code.entries.size() == 2 * p5.n);
  for (int e : code.entries) {
    REQUIRE(e >= 1);
    REQUIRE(e <= p5.n);
  }
}
