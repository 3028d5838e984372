#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "adjlab/bitset.hpp"
#include "adjlab/errors.hpp"

namespace adjlab {

// Simple undirected graph on vertices 0..n-1, adjacency kept as one bitset
// row per vertex.  Rows stay symmetric and irreflexive.
struct Graph {
  int n = 0;
  std::vector<Bitset> adj;

  Graph() = default;
  explicit Graph(int n) : n(n), adj(n, Bitset(n)) {}

  bool adjacent(int u, int v) const { return adj[u].test(v); }
  int degree(int v) const { return adj[v].count(); }
  void add_edge(int u, int v) {
    adj[u].set(v);
    adj[v].set(u);
  }
  void remove_edge(int u, int v) {
    adj[u].reset(v);
    adj[v].reset(u);
  }
  long long edge_count() const {
    long long s = 0;
    for (int v = 0; v < n; ++v) s += degree(v);
    return s / 2;
  }
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
      adj[u].for_each([&](int v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }
  Bitset full_set() const {
    Bitset s(n);
    s.set_all();
    return s;
  }
  bool operator==(const Graph&) const = default;
};

// Validates endpoints, rejects loops and duplicate pairs; the error carries
// the index of the offending edge.
inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n < 0) throw InvalidInput("negative vertex count", 0);
  Graph g(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidInput("edge endpoint out of range", i);
    if (u == v) throw InvalidInput("loop edge", i);
    if (g.adjacent(u, v)) throw InvalidInput("duplicate edge", i);
    g.add_edge(u, v);
  }
  return g;
}

// Induced subgraph on `keep`; `orig_ids` (if given) receives the local->
// original vertex map, ascending.
inline Graph induced(const Graph& g, const Bitset& keep,
                     std::vector<int>* orig_ids = nullptr) {
  std::vector<int> ids = keep.to_vector();
  std::vector<int> local(g.n, -1);
  for (std::size_t i = 0; i < ids.size(); ++i) local[ids[i]] = int(i);
  Graph h(int(ids.size()));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    (g.adj[ids[i]] & keep).for_each([&](int v) { h.adj[i].set(local[v]); });
  }
  if (orig_ids) *orig_ids = std::move(ids);
  return h;
}

// Bipartite graph: underlying graph plus a fixed two-sided vertex partition.
// Isolated vertices belong to whichever side constructed them.
struct BipartiteGraph {
  Graph g;
  Bitset side_a, side_b;

  BipartiteGraph() = default;
  BipartiteGraph(Graph graph, Bitset a, Bitset b)
      : g(std::move(graph)), side_a(std::move(a)), side_b(std::move(b)) {}

  int n() const { return g.n; }
  bool in_a(int v) const { return side_a.test(v); }
  const Bitset& side_of(int v) const { return in_a(v) ? side_a : side_b; }
  const Bitset& opposite_of(int v) const { return in_a(v) ? side_b : side_a; }
  bool operator==(const BipartiteGraph&) const = default;
};

inline BipartiteGraph induced(const BipartiteGraph& bg, const Bitset& keep,
                              std::vector<int>* orig_ids = nullptr) {
  std::vector<int> ids;
  Graph h = induced(bg.g, keep, &ids);
  Bitset a(h.n), b(h.n);
  for (int i = 0; i < h.n; ++i) bg.in_a(ids[i]) ? a.set(i) : b.set(i);
  if (orig_ids) *orig_ids = std::move(ids);
  return BipartiteGraph(std::move(h), std::move(a), std::move(b));
}

// Injective embedding of a pattern's vertices into a host graph.
struct Witness {
  std::vector<int> map;  // pattern vertex i -> host vertex map[i]
};

// True iff `w` is an induced embedding of `pattern` into `host`.
inline bool witness_ok(const Graph& host, const Graph& pattern,
                       const Witness& w) {
  if (int(w.map.size()) != pattern.n) return false;
  for (int i = 0; i < pattern.n; ++i) {
    if (w.map[i] < 0 || w.map[i] >= host.n) return false;
    for (int j = i + 1; j < pattern.n; ++j) {
      if (w.map[i] == w.map[j]) return false;
      if (pattern.adjacent(i, j) != host.adjacent(w.map[i], w.map[j]))
        return false;
    }
  }
  return true;
}

// Two-colours each component, lowest-indexed vertex first; within a
// component the side holding its lowest-indexed vertex becomes side A.
// Throws OddCycleError (with the cycle) if no bipartition exists.
inline BipartiteGraph bipartition(const Graph& g) {
  std::vector<int> colour(g.n, -1), parent(g.n, -1), depth(g.n, 0);
  Bitset a(g.n), b(g.n);
  std::vector<int> queue;
  for (int root = 0; root < g.n; ++root) {
    if (colour[root] >= 0) continue;
    colour[root] = 0;
    queue.assign(1, root);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      std::optional<int> bad;
      g.adj[u].for_each([&](int v) {
        if (colour[v] < 0) {
          colour[v] = colour[u] ^ 1;
          parent[v] = u;
          depth[v] = depth[u] + 1;
          queue.push_back(v);
        } else if (colour[v] == colour[u] && !bad) {
          bad = v;
        }
      });
      if (bad) {
        // Walk both endpoints of the offending edge up to their junction;
        // the two ascents plus the edge form an odd cycle.
        int x = u, y = *bad;
        std::vector<int> up_x, up_y;
        while (depth[x] > depth[y]) up_x.push_back(x), x = parent[x];
        while (depth[y] > depth[x]) up_y.push_back(y), y = parent[y];
        while (x != y) {
          up_x.push_back(x), x = parent[x];
          up_y.push_back(y), y = parent[y];
        }
        up_x.push_back(x);
        std::reverse(up_y.begin(), up_y.end());
        up_x.insert(up_x.end(), up_y.begin(), up_y.end());
        throw OddCycleError(std::move(up_x));
      }
    }
  }
  for (int v = 0; v < g.n; ++v) colour[v] == 0 ? a.set(v) : b.set(v);
  return BipartiteGraph(g, std::move(a), std::move(b));
}

// Complement across the parts only: edges within a side never appear.
// Applying it twice returns the original graph.
inline BipartiteGraph bipartite_complement(const BipartiteGraph& bg) {
  Graph h(bg.n());
  for (int u = 0; u < bg.n(); ++u) {
    h.adj[u] = bg.opposite_of(u) - bg.g.adj[u];
  }
  return BipartiteGraph(std::move(h), bg.side_a, bg.side_b);
}

struct BfsLayers {
  std::vector<std::vector<int>> layers;  // layers[0] = {root}
  std::vector<int> unreachable;          // ascending
};

// Distance layers from `root`; vertices in other components are reported in
// `unreachable` rather than folded into a layer.
inline BfsLayers bfs_layers(const Graph& g, int root) {
  if (root < 0 || root >= g.n) throw InvalidInput("root out of range", 0);
  std::vector<int> dist(g.n, -1);
  std::vector<int> queue{root};
  dist[root] = 0;
  BfsLayers out;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int u = queue[qi];
    if (int(out.layers.size()) <= dist[u]) out.layers.emplace_back();
    out.layers[dist[u]].push_back(u);
    g.adj[u].for_each([&](int v) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    });
  }
  for (int v = 0; v < g.n; ++v)
    if (dist[v] < 0) out.unreachable.push_back(v);
  return out;
}

// Connected components as vertex sets, ordered by smallest member.
inline std::vector<Bitset> components(const Graph& g) {
  std::vector<Bitset> out;
  Bitset seen(g.n);
  for (int root = 0; root < g.n; ++root) {
    if (seen.test(root)) continue;
    Bitset comp(g.n);
    std::vector<int> queue{root};
    comp.set(root);
    seen.set(root);
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      g.adj[queue[qi]].for_each([&](int v) {
        if (!seen.test(v)) {
          seen.set(v);
          comp.set(v);
          queue.push_back(v);
        }
      });
    }
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) {
  return g.n <= 1 || components(g).size() == 1;
}

// Acyclicity check; ignores the bipartition.
inline bool is_forest(const Graph& g) {
  std::vector<int> parent(g.n, -2);
  for (int root = 0; root < g.n; ++root) {
    if (parent[root] != -2) continue;
    parent[root] = -1;
    std::vector<int> queue{root};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int u = queue[qi];
      bool cyclic = false;
      g.adj[u].for_each([&](int v) {
        if (parent[v] == -2) {
          parent[v] = u;
          queue.push_back(v);
        } else if (v != parent[u]) {
          cyclic = true;
        }
      });
      if (cyclic) return false;
    }
  }
  return true;
}

// Disjoint union, vertices of `b` shifted past those of `a`.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.n + b.n);
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + a.n, v + a.n);
  return g;
}

}  // namespace adjlab
