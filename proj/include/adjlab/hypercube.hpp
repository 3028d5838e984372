#pragma once

#include <algorithm>
#include <functional>
#include <numeric>

#include "adjlab/graph.hpp"
#include "adjlab/predicates.hpp"

namespace adjlab {

// Per-vertex binary coordinates of one common dimension.  Coordinates are
// component-relative: within a component, adjacency holds iff the coordinates
// differ in exactly one position and distinct vertices get distinct
// coordinates; pairs in different components are unrelated (each component's
// smallest vertex sits at the all-zero point).
struct Embedding {
  int dim = 0;
  std::vector<Bitset> coords;
};

// The 2n-integer sequence p(x_1), d(x_1), ..., p(x_n), d(x_n): a spanning
// forest by 1-based parent pointers (roots point at themselves, d = 1) and
// the coordinate flipped along each tree edge.
struct HypercubeCode {
  int n = 0;
  std::vector<int> entries;
};

namespace detail {

// BFS order and parents from the smallest vertex of each component,
// neighbours ascending; parent[root] = root.
inline void bfs_forest(const Graph& g, std::vector<int>& order,
                       std::vector<int>& parent) {
  order.clear();
  parent.assign(g.n, -1);
  for (int r = 0; r < g.n; ++r) {
    if (parent[r] >= 0) continue;
    parent[r] = r;
    std::size_t head = order.size();
    order.push_back(r);
    while (head < order.size()) {
      int u = order[head++];
      g.adj[u].for_each([&](int v) {
        if (parent[v] < 0) {
          parent[v] = u;
          order.push_back(v);
        }
      });
    }
  }
}

}  // namespace detail

// Backtracking search for component-relative hypercube coordinates.  Vertices
// are placed in BFS order; each candidate flips one coordinate of the
// parent's point, new coordinates are opened in index order (first use of
// index j requires indices below j to be in use), which canonicalizes the
// result and prunes mirrored branches.  Every candidate costs one budget
// unit.
inline Embedding hypercube_embed(const Graph& g, long long budget = 10'000'000) {
  int n = g.n;
  Embedding emb;
  emb.dim = std::max(n - 1, 0);
  emb.coords.assign(n, Bitset(emb.dim));
  if (n == 0) {
    emb.dim = 0;
    return emb;
  }

  std::vector<int> order, parent;
  detail::bfs_forest(g, order, parent);
  std::vector<int> placed;  // prefix of `order` within the current component
  int used_max = 0;         // coordinates opened across finished components

  // choice[i] = coordinate flipped for order[i] (roots use -1)
  std::vector<int> choice(n, -1);
  long long left = budget;

  std::function<bool(std::size_t, int)> place = [&](std::size_t i,
                                                    int used) -> bool {
    if (i == order.size()) return true;
    int v = order[i];
    if (parent[v] == v) {
      // new component: coordinates restart at the all-zero point
      used_max = std::max(used_max, used);
      std::size_t mark = placed.size();
      placed.clear();
      placed.push_back(v);
      emb.coords[v] = Bitset(emb.dim);
      if (place(i + 1, 0)) return true;
      placed.resize(mark);
      return false;
    }
    int limit = std::min(used, emb.dim - 1);
    for (int j = 0; j <= limit; ++j) {
      if (--left < 0) throw BudgetExceeded(budget);
      Bitset c = emb.coords[parent[v]];
      c.assign(j, !c.test(j));
      bool ok = true;
      for (int u : placed) {
        int dist = (c ^ emb.coords[u]).count();
        if (dist == 0 || (dist == 1) != g.adjacent(u, v)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      emb.coords[v] = c;
      placed.push_back(v);
      choice[v] = j;
      if (place(i + 1, std::max(used, j + 1))) return true;
      placed.pop_back();
    }
    return false;
  };

  if (!place(0, 0))
    throw NotEmbeddable("graph is not an induced subgraph of a hypercube");
  for (int v = 0; v < n; ++v) used_max = std::max(used_max, choice[v] + 1);
  // trim to the coordinates actually opened
  emb.dim = std::max(used_max, 0);
  for (Bitset& c : emb.coords) {
    Bitset t(emb.dim);
    c.for_each([&](int j) {
      if (j < emb.dim) t.set(j);
    });
    c = std::move(t);
  }
  return emb;
}

// Validates that `emb` is component-relative consistent with g: same
// component implies distinct coordinates and adjacency iff Hamming distance
// one.
inline void check_embedding(const Graph& g, const Embedding& emb) {
  if ((int)emb.coords.size() != g.n)
    throw InvalidInput("embedding size differs from the graph",
                       emb.coords.size());
  std::vector<int> comp_of(g.n, -1);
  int cid = 0;
  for (const Bitset& comp : components(g)) {
    comp.for_each([&](int v) { comp_of[v] = cid; });
    ++cid;
  }
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      if (comp_of[u] != comp_of[v]) continue;
      int dist = (emb.coords[u] ^ emb.coords[v]).count();
      if (dist == 0 || (dist == 1) != g.adjacent(u, v))
        throw InvalidInput("embedding inconsistent with the graph", v);
    }
}

// Emits the 2n-integer code over the BFS spanning forest (smallest-index
// roots).  A custom forest may be supplied as 0-based parent pointers with
// parent[root] = root; it must span each component by graph edges.
inline HypercubeCode hypercube_encode(const Graph& g, const Embedding& emb,
                                      const std::vector<int>* forest = nullptr) {
  check_embedding(g, emb);
  std::vector<int> order, parent;
  detail::bfs_forest(g, order, parent);
  if (forest) {
    if ((int)forest->size() != g.n)
      throw InvalidInput("forest size differs from the graph", forest->size());
    parent = *forest;
    std::vector<int> root_of(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
      int p = parent[v];
      if (p < 0 || p >= g.n)
        throw InvalidInput("forest parent out of range", v);
      if (p != v && !g.adjacent(p, v))
        throw InvalidInput("forest edge missing from the graph", v);
    }
    for (int v = 0; v < g.n; ++v) {
      if (root_of[v] >= 0) continue;
      std::vector<int> path;
      std::vector<char> seen(g.n, 0);
      int x = v;
      while (root_of[x] < 0 && parent[x] != x) {
        if (seen[x]) throw InvalidInput("forest parents contain a cycle", x);
        seen[x] = 1;
        path.push_back(x);
        x = parent[x];
      }
      int r = root_of[x] < 0 ? x : root_of[x];
      root_of[x] = r;
      for (int y : path) root_of[y] = r;
    }
    // one tree per component, or decode would split it
    for (auto [u, v] : g.edges())
      if (root_of[u] != root_of[v])
        throw InvalidInput("forest does not span a component", v);
  }
  HypercubeCode code;
  code.n = g.n;
  code.entries.reserve(2 * g.n);
  for (int v = 0; v < g.n; ++v) {
    if (parent[v] == v) {
      code.entries.push_back(v + 1);
      code.entries.push_back(1);
      continue;
    }
    Bitset diff = emb.coords[v] ^ emb.coords[parent[v]];
    if (diff.count() != 1)
      throw InvalidInput("tree edge does not flip exactly one coordinate", v);
    int j = diff.find_first();
    if (j + 1 > g.n)
      throw InvalidInput("flipped coordinate exceeds the code range", v);
    code.entries.push_back(parent[v] + 1);
    code.entries.push_back(j + 1);
  }
  return code;
}

// Rebuilds the graph: components are the trees of the p-forest, coordinates
// accumulate the flipped indices from each root's all-zero point, and
// adjacency is Hamming distance one within a component.
inline Graph hypercube_decode(const HypercubeCode& code) {
  int n = code.n;
  if (n < 0 || (int)code.entries.size() != 2 * n)
    throw InvalidInput("code does not hold exactly 2n entries",
                       code.entries.size());
  std::vector<int> p(n), d(n);
  for (int i = 0; i < n; ++i) {
    p[i] = code.entries[2 * i];
    d[i] = code.entries[2 * i + 1];
    if (p[i] < 1 || p[i] > n)
      throw InvalidInput("p-entry out of range", 2 * i);
    if (d[i] < 1 || d[i] > n)
      throw InvalidInput("d-entry out of range", 2 * i + 1);
  }
  int dim = std::max(n - 1, 1);
  std::vector<int> root_of(n, -1);
  std::vector<Bitset> coords(n, Bitset(dim));
  // resolve each vertex's root path iteratively; a revisit inside the same
  // walk is a cycle
  for (int v = 0; v < n; ++v) {
    if (root_of[v] >= 0) continue;
    std::vector<int> path;
    std::vector<char> on_path(n, 0);
    int x = v;
    while (root_of[x] < 0 && p[x] != x + 1) {
      if (on_path[x]) throw InvalidInput("p-entries contain a cycle", 2 * x);
      on_path[x] = 1;
      path.push_back(x);
      x = p[x] - 1;
    }
    if (root_of[x] < 0) {
      if (d[x] != 1) throw InvalidInput("root d-entry is not 1", 2 * x + 1);
      root_of[x] = x;
    }
    int r = root_of[x];
    Bitset acc = coords[x];
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      if (d[*it] > dim)
        throw InvalidInput("d-entry out of range", 2 * *it + 1);
      int j = d[*it] - 1;
      acc.assign(j, !acc.test(j));
      root_of[*it] = r;
      coords[*it] = acc;
    }
  }
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (root_of[u] == root_of[v] && (coords[u] ^ coords[v]).count() == 1)
        g.add_edge(u, v);
  return g;
}

}  // namespace adjlab
