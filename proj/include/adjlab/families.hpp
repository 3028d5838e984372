#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "adjlab/graph.hpp"

namespace adjlab {

namespace detail {

inline void need(bool ok, const std::string& what) {
  if (!ok) throw InvalidInput("bad family parameter: " + what, 0);
}

inline BipartiteGraph with_side_a(Graph g, const std::vector<int>& a) {
  Bitset sa(g.n), sb(g.n);
  sb.set_all();
  for (int v : a) {
    sa.set(v);
    sb.reset(v);
  }
  return BipartiteGraph{std::move(g), sa, sb};
}

}  // namespace detail

// Vertices 0..n-1 along the path.
inline Graph path_graph(int n) {
  detail::need(n >= 1, "path needs n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

// Vertices 0..n-1 in cyclic order.
inline Graph cycle_graph(int n) {
  detail::need(n >= 3, "cycle needs n >= 3");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline Graph complete_graph(int n) {
  detail::need(n >= 1, "complete needs n >= 1");
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

// Side A = 0..a-1, side B = a..a+b-1.
inline BipartiteGraph complete_bipartite(int a, int b) {
  detail::need(a >= 1 && b >= 1, "complete bipartite needs both sides >= 1");
  Graph g(a + b);
  std::vector<int> as;
  for (int i = 0; i < a; ++i) {
    as.push_back(i);
    for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
  }
  return detail::with_side_a(std::move(g), as);
}

// Center 0, leaves 1..t.
inline Graph star_graph(int t) {
  detail::need(t >= 1, "star needs t >= 1");
  Graph g(t + 1);
  for (int i = 1; i <= t; ++i) g.add_edge(0, i);
  return g;
}

// Tree with exactly three leaves: center 0, leg of length i on vertices
// 1..i, leg of length j on i+1..i+j, leg of length k on i+j+1..i+j+k.
inline Graph spider_graph(int i, int j, int k) {
  detail::need(i >= 1 && j >= 1 && k >= 1, "spider needs three legs >= 1");
  Graph g(1 + i + j + k);
  int at = 1;
  for (int leg : {i, j, k}) {
    g.add_edge(0, at);
    for (int s = 1; s < leg; ++s, ++at) g.add_edge(at, at + 1);
    ++at;
  }
  return g;
}

// Two star centers c1 = 0 (t leaves) and c2 = 1 (p leaves) on side A, plus
// w = 2 on side B adjacent to exactly both centers.  Leaves of c1 are
// 3..t+2, leaves of c2 are t+3..t+p+2.
inline BipartiteGraph f1_pattern(int t, int p) {
  detail::need(t >= 1 && p >= 1, "f1 needs t, p >= 1");
  Graph g(t + p + 3);
  g.add_edge(0, 2);
  g.add_edge(1, 2);
  for (int i = 0; i < t; ++i) g.add_edge(0, 3 + i);
  for (int i = 0; i < p; ++i) g.add_edge(1, 3 + t + i);
  return detail::with_side_a(std::move(g), {0, 1});
}

// f1_pattern plus one isolated vertex t+p+3 on w's side.
inline BipartiteGraph f_pattern(int t, int p) {
  BipartiteGraph f1 = f1_pattern(t, p);
  Graph g(f1.n() + 1);
  for (auto [u, v] : f1.g.edges()) g.add_edge(u, v);
  return detail::with_side_a(std::move(g), {0, 1});
}

// Disjoint stars K_{1,t} and K_{1,p} with both centers on side A:
// center 0 with leaves 1..t, center t+1 with leaves t+2..t+p+1.
inline BipartiteGraph two_star_pattern(int t, int p) {
  detail::need(t >= 1 && p >= 1, "two-star needs t, p >= 1");
  Graph g(t + p + 2);
  for (int i = 1; i <= t; ++i) g.add_edge(0, i);
  for (int i = 1; i <= p; ++i) g.add_edge(t + 1, t + 1 + i);
  return detail::with_side_a(std::move(g), {0, t + 1});
}

// Four-cycle 0-1-2-3 plus pendant 4 at 0, pendant 5 at 1, and k pendants
// 6..k+5 at 3.
inline Graph dk_pattern(int k) {
  detail::need(k >= 1, "dk needs k >= 1");
  Graph g(k + 6);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 0);
  g.add_edge(0, 4);
  g.add_edge(1, 5);
  for (int i = 0; i < k; ++i) g.add_edge(3, 6 + i);
  return g;
}

// Universal chain graph: a_i at i-1 (side A), b_j at k+j-1 (side B),
// a_i adjacent to b_j whenever j >= i.
inline BipartiteGraph zk_pattern(int k) {
  detail::need(k >= 1, "zk needs k >= 1");
  Graph g(2 * k);
  std::vector<int> as;
  for (int i = 1; i <= k; ++i) {
    as.push_back(i - 1);
    for (int j = i; j <= k; ++j) g.add_edge(i - 1, k + j - 1);
  }
  return detail::with_side_a(std::move(g), as);
}

// Four-cycle 0-1-2-3, vertex 4 adjacent to 0, leaves 5 and 6 on 4.
inline Graph x_pattern() {
  return build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {4, 6}});
}

// Disjoint union of a four-cycle 0-1-2-3 and a path 4-5-6.
inline Graph y_pattern() {
  return build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}});
}

// Four-cycle 0-1-2-3 with a pendant path 0-4-5-6.
inline Graph z_pattern() {
  return build_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 6}});
}

// Four-cycle 0-1-2-3 with two pendant edges 4, 5 at vertex 0.
inline Graph q_pattern() {
  return build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {0, 5}});
}

// Four-cycle 0-1-2-3 with pendant 4 at 0 and pendant 5 at 1.
inline Graph a_pattern() {
  return build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}});
}

// Vertices are the 2^d bit strings; adjacency = Hamming distance one.
inline Graph hypercube_graph(int d) {
  detail::need(d >= 0 && d <= 20, "hypercube needs 0 <= d <= 20");
  int n = 1 << d;
  Graph g(n);
  for (int v = 0; v < n; ++v)
    for (int b = 0; b < d; ++b)
      if (!(v & (1 << b))) g.add_edge(v, v | (1 << b));
  return g;
}

// Copy c occupies vertices c*g.n .. (c+1)*g.n - 1.
inline Graph disjoint_copies(const Graph& g, int k) {
  detail::need(k >= 1, "copies needs k >= 1");
  Graph out(g.n * k);
  for (int c = 0; c < k; ++c)
    for (auto [u, v] : g.edges()) out.add_edge(c * g.n + u, c * g.n + v);
  return out;
}

// ---- exhaustive enumeration ---------------------------------------------

// All 2^(na*nb) side-respecting graphs on fixed parts, addressable by index.
// Bit k of the index is the edge (k / nb, na + k % nb); index order is
// lexicographic in the edge mask.
struct BipartiteEnumeration {
  int na = 0, nb = 0;
  std::uint64_t size = 0;

  BipartiteGraph at(std::uint64_t index) const {
    Graph g(na + nb);
    for (int k = 0; k < na * nb; ++k)
      if (index >> k & 1) g.add_edge(k / nb, na + k % nb);
    std::vector<int> as(na);
    std::iota(as.begin(), as.end(), 0);
    return detail::with_side_a(std::move(g), as);
  }
};

inline BipartiteEnumeration enumerate_bipartite(int na, int nb) {
  detail::need(na >= 1 && nb >= 1, "enumeration needs both sides >= 1");
  detail::need(na * nb <= 30, "enumeration cap is na*nb <= 30");
  return BipartiteEnumeration{na, nb, std::uint64_t(1) << (na * nb)};
}

// ---- isomorphism-reduced generation -------------------------------------

namespace detail {

inline std::uint64_t mask_of(const Graph& g, const std::vector<int>& perm) {
  std::uint64_t m = 0;
  int bit = 0;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j, ++bit)
      if (g.adjacent(perm[i], perm[j])) m |= std::uint64_t(1) << bit;
  return m;
}

}  // namespace detail

// Minimum upper-triangle edge mask over the relabelings that list vertices
// by ascending degree.  Equal masks are equivalent to isomorphism: the mask
// fixes the labeled graph, and the degree constraint is preserved by any
// isomorphism.  Needs n <= 11 so the mask fits 64 bits.
inline std::uint64_t canonical_mask(const Graph& g) {
  detail::need(g.n <= 11, "canonical form needs n <= 11");
  if (g.n <= 1) return 0;
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) < g.degree(b); });
  std::vector<std::vector<int>> groups;
  for (int v : order) {
    if (groups.empty() || g.degree(groups.back().back()) != g.degree(v))
      groups.emplace_back();
    groups.back().push_back(v);
  }
  // Odometer over within-class orders; next_permutation wraps each class
  // back to sorted, so every degree-respecting arrangement appears once.
  std::uint64_t best = ~std::uint64_t(0);
  std::vector<int> perm(g.n);
  for (;;) {
    int at = 0;
    for (const auto& grp : groups)
      for (int v : grp) perm[at++] = v;
    best = std::min(best, detail::mask_of(g, perm));
    int t = (int)groups.size() - 1;
    while (t >= 0 && !std::next_permutation(groups[t].begin(), groups[t].end()))
      --t;
    if (t < 0) break;
  }
  return best;
}

inline Graph graph_from_mask(int n, std::uint64_t mask) {
  Graph g(n);
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1) g.add_edge(i, j);
  return g;
}

// One representative per isomorphism class, grown a vertex at a time.
// Deterministic: output sorted by canonical mask at each order.
inline std::vector<Graph> nonisomorphic_graphs(int n) {
  detail::need(n >= 1 && n <= 8, "class enumeration supports n <= 8");
  std::vector<std::uint64_t> reps = {0};  // K1
  for (int m = 2; m <= n; ++m) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t rep : reps) {
      Graph base = graph_from_mask(m - 1, rep);
      for (std::uint32_t nb = 0; nb < (std::uint32_t(1) << (m - 1)); ++nb) {
        Graph g(m);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (int u = 0; u < m - 1; ++u)
          if (nb >> u & 1) g.add_edge(u, m - 1);
        next.push_back(canonical_mask(g));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    reps = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(reps.size());
  for (std::uint64_t rep : reps) out.push_back(graph_from_mask(n, rep));
  return out;
}

}  // namespace adjlab
