#pragma once

#include <algorithm>
#include <optional>

#include "adjlab/subgraph.hpp"

namespace adjlab {

// ---- chain graphs -----------------------------------------------------

struct ChainAnalysis {
  bool chain = false;
  // Side-A vertices ordered by inclusion-wise decreasing neighbourhood;
  // filled only when `chain`.
  std::vector<int> a_by_rank;
  // Induced 2K_2 as [a1, b1, a2, b2] with edges a1b1, a2b2; filled only
  // when not `chain`.
  std::vector<int> two_k2;
};

// Neighbourhoods of one side of a bipartite graph are nested iff the graph
// has no induced 2K_2.  Sorting by degree and checking consecutive pairs
// decides this; an incomparable pair yields the 2K_2 directly.
inline ChainAnalysis analyze_chain(const BipartiteGraph& bg) {
  ChainAnalysis out;
  std::vector<int> as = bg.side_a.to_vector();
  std::stable_sort(as.begin(), as.end(), [&](int x, int y) {
    return bg.g.degree(x) > bg.g.degree(y);
  });
  for (std::size_t i = 0; i + 1 < as.size(); ++i) {
    int hi = as[i], lo = as[i + 1];
    if (bg.g.adj[lo].subset_of(bg.g.adj[hi])) continue;
    // deg(hi) >= deg(lo) and N(lo) not within N(hi): both differences
    // are nonempty.
    Bitset only_lo = bg.g.adj[lo];
    only_lo -= bg.g.adj[hi];
    Bitset only_hi = bg.g.adj[hi];
    only_hi -= bg.g.adj[lo];
    out.two_k2 = {hi, only_hi.find_first(), lo, only_lo.find_first()};
    return out;
  }
  out.chain = true;
  out.a_by_rank = std::move(as);
  return out;
}

// ---- induced long cycles ----------------------------------------------

namespace detail {

struct CycleSearch {
  const Graph& g;
  int min_len;
  long long nodes = 0;
  long long budget;
  std::vector<int> path;
  std::optional<std::vector<int>> found;

  CycleSearch(const Graph& g, int min_len, long long budget)
      : g(g), min_len(min_len), budget(budget) {}

  // path = [s, v1, .., vk]; `blocked` covers vertices <= s, the path, and
  // neighbours of every path vertex except s and vk.  Interior candidates
  // must also avoid N(s); a candidate in N(s) can only close the cycle.
  void grow(const Bitset& blocked) {
    int s = path[0], vk = path.back();
    Bitset cand = g.adj[vk];
    cand -= blocked;
    cand.for_each([&](int u) {
      if (found) return;
      if (++nodes > budget) throw BudgetExceeded(budget);
      if (g.adjacent(u, s)) {
        if ((int)path.size() + 1 >= min_len && path[1] < u) {
          found = path;
          found->push_back(u);
        }
        return;
      }
      Bitset next = blocked;
      next |= g.adj[vk];
      next.set(u);
      path.push_back(u);
      grow(next);
      path.pop_back();
    });
  }
};

}  // namespace detail

// Some induced cycle of length >= min_len, as its vertex list in cyclic
// order starting from the smallest vertex on it.  Deterministic; throws
// BudgetExceeded when the node cap is hit before the search finishes.
inline std::optional<std::vector<int>> find_induced_cycle(
    const Graph& g, int min_len, const SearchOptions& opt = {}) {
  detail::CycleSearch cs(g, min_len, opt.budget);
  for (int s = 0; s < g.n; ++s) {
    Bitset low(g.n);
    for (int v = 0; v <= s; ++v) low.set(v);
    Bitset firsts = g.adj[s];
    firsts -= low;
    bool done = false;
    firsts.for_each([&](int v1) {
      if (done) return;
      Bitset blocked = low;
      blocked.set(v1);
      cs.path = {s, v1};
      cs.grow(blocked);
      if (cs.found) done = true;
    });
    if (done) return cs.found;
  }
  return std::nullopt;
}

// ---- chordality --------------------------------------------------------

// Maximum-cardinality-search order, verified as a perfect elimination
// ordering; nullopt when the graph has an induced cycle of length >= 4.
inline std::optional<std::vector<int>> peo_order(const Graph& g) {
  int n = g.n;
  std::vector<int> weight(n, 0), pos(n, -1), order(n);
  Bitset unnumbered(n);
  unnumbered.set_all();
  for (int i = n - 1; i >= 0; --i) {
    int best = -1;
    unnumbered.for_each([&](int v) {
      if (best == -1 || weight[v] > weight[best]) best = v;
    });
    order[i] = best;
    pos[best] = i;
    unnumbered.reset(best);
    Bitset nb = g.adj[best];
    nb &= unnumbered;
    nb.for_each([&](int u) { ++weight[u]; });
  }
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    int p = -1, bestpos = n;
    Bitset later(n);
    g.adj[v].for_each([&](int u) {
      if (pos[u] > i) {
        later.set(u);
        if (pos[u] < bestpos) {
          bestpos = pos[u];
          p = u;
        }
      }
    });
    if (p == -1) continue;
    later.reset(p);
    if (!later.subset_of(g.adj[p])) return std::nullopt;
  }
  return order;
}

inline bool is_chordal(const Graph& g) { return peo_order(g).has_value(); }

inline std::optional<BipartiteGraph> try_bipartition(const Graph& g) {
  try {
    return bipartition(g);
  } catch (const OddCycleError&) {
    return std::nullopt;
  }
}

inline bool is_chordal_bipartite(const Graph& g) {
  return try_bipartition(g).has_value() && !find_induced_cycle(g, 6).has_value();
}

// ---- pinned-vertex pattern search ---------------------------------------

// Induced copy of `pattern` with each pattern vertex restricted to its mask.
inline std::optional<Witness> contains_induced_masked(
    const Graph& host, const Graph& pattern, const std::vector<Bitset>& masks,
    const SearchOptions& opt = {}) {
  return detail::embed(host, pattern, masks.data(), opt);
}

// Induced five-vertex path with middle vertex v, if any.
inline std::optional<Witness> p5_centered_at(const Graph& g, int v,
                                             const SearchOptions& opt = {}) {
  Graph p5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  std::vector<Bitset> masks(5, Bitset(g.n));
  for (auto& m : masks) m.set_all();
  masks[2].clear();
  masks[2].set(v);
  return contains_induced_masked(g, p5, masks, opt);
}

// Smallest vertex that is not the middle of any induced P_5, together with
// one centered P_5 per vertex when every vertex is a middle.
struct P5CenterScan {
  int non_center = -1;
  std::vector<Witness> p5_at;  // indexed by vertex; filled when non_center < 0
};

inline P5CenterScan scan_p5_centers(const Graph& g,
                                    const SearchOptions& opt = {}) {
  P5CenterScan out;
  out.p5_at.resize(g.n);
  for (int v = 0; v < g.n; ++v) {
    auto w = p5_centered_at(g, v, opt);
    if (!w) {
      out.non_center = v;
      out.p5_at.clear();
      return out;
    }
    out.p5_at[v] = *w;
  }
  return out;
}

}  // namespace adjlab
