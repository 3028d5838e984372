#pragma once

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>

#include "adjlab/families.hpp"
#include "adjlab/subgraph.hpp"

namespace adjlab {

struct ParamReport {
  std::string name;
  long long value = 0;
  std::vector<int> witness;  // pair / order / part assignment / vertex set
  std::string method = "exact";
};

// |N(x) delta N(y)| restricted to V - {x,y}.
inline int sd_pair(const Graph& g, int x, int y) {
  if (x == y) throw InvalidInput("sd_pair needs two distinct vertices", x);
  Bitset d = g.adj[x];
  d ^= g.adj[y];
  d.reset(x);
  d.reset(y);
  return d.count();
}

// Minimum sd over pairs; argmin pair is the lexicographically first.
inline ParamReport min_pair_sd(const Graph& g) {
  if (g.n < 2) throw InvalidInput("min_pair_sd needs n >= 2", g.n);
  ParamReport r{"min_pair_sd", g.n, {}, "exact"};
  for (int x = 0; x < g.n; ++x)
    for (int y = x + 1; y < g.n; ++y) {
      int sd = sd_pair(g, x, y);
      if (sd < r.value) {
        r.value = sd;
        r.witness = {x, y};
      }
    }
  return r;
}

// Max over induced subgraphs (>= 2 vertices) of min_pair_sd; witness is the
// first maximizing vertex subset in increasing-mask order.
inline ParamReport sd_graph(const Graph& g, int cap = 14) {
  if (g.n > cap) throw InvalidInput("sd_graph cap exceeded", g.n);
  if (g.n > 30) throw InvalidInput("sd_graph supports n <= 30", g.n);
  int n = g.n;
  std::vector<std::uint32_t> adjm(n, 0);
  for (int v = 0; v < n; ++v)
    g.adj[v].for_each([&](int u) { adjm[v] |= std::uint32_t(1) << u; });
  std::vector<std::vector<std::uint32_t>> diff(n,
                                               std::vector<std::uint32_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      diff[x][y] = (adjm[x] ^ adjm[y]) &
                   ~((std::uint32_t(1) << x) | (std::uint32_t(1) << y));
  ParamReport r{"sd_graph", -1, {}, "exact"};
  for (std::uint32_t s = 0; s < (std::uint32_t(1) << n); ++s) {
    if (std::popcount(s) < 2) continue;
    int best = n;
    for (int x = 0; x < n && best > 0; ++x) {
      if (!(s >> x & 1)) continue;
      for (int y = x + 1; y < n; ++y) {
        if (!(s >> y & 1)) continue;
        best = std::min(best, std::popcount(diff[x][y] & s));
        if (best == 0) break;
      }
    }
    if (best > r.value) {
      r.value = best;
      r.witness.clear();
      for (int v = 0; v < n; ++v)
        if (s >> v & 1) r.witness.push_back(v);
    }
  }
  if (r.value < 0) r.value = 0;  // n < 2: no pair anywhere
  return r;
}

// Largest k with k vertices of degree >= k; witness lists the k vertices of
// largest degree (ties to smaller index).
inline ParamReport h_index(const Graph& g) {
  std::vector<int> by_deg(g.n);
  std::iota(by_deg.begin(), by_deg.end(), 0);
  std::stable_sort(by_deg.begin(), by_deg.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  int k = 0;
  while (k < g.n && g.degree(by_deg[k]) >= k + 1) ++k;
  ParamReport r{"h_index", k, {}, "exact"};
  r.witness.assign(by_deg.begin(), by_deg.begin() + k);
  return r;
}

struct Degeneracy {
  int d = 0;
  std::vector<int> order;  // removal sequence
};

// Iterated minimum-degree removal, smallest index among ties.
inline Degeneracy degeneracy(const Graph& g) {
  Degeneracy out;
  Bitset alive(g.n);
  alive.set_all();
  std::vector<int> deg(g.n);
  for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
  for (int step = 0; step < g.n; ++step) {
    int pick = -1;
    alive.for_each([&](int v) {
      if (pick == -1 || deg[v] < deg[pick]) pick = v;
    });
    out.d = std::max(out.d, deg[pick]);
    out.order.push_back(pick);
    alive.reset(pick);
    Bitset nb = g.adj[pick];
    nb &= alive;
    nb.for_each([&](int u) { --deg[u]; });
  }
  return out;
}

// Maximal runs of neighbours along the order, maximised over vertices.  A
// vertex's own slot is not a neighbour, so it splits runs.
inline int contiguity_of_order(const Graph& g, const std::vector<int>& order) {
  if ((int)order.size() != g.n)
    throw InvalidInput("order length != n", order.size());
  std::vector<char> seen(g.n, 0);
  for (int v : order) {
    if (v < 0 || v >= g.n || seen[v])
      throw InvalidInput("order is not a permutation", v);
    seen[v] = 1;
  }
  int k = 0;
  for (int u = 0; u < g.n; ++u) {
    int runs = 0;
    bool in_run = false;
    for (int v : order) {
      bool adj = g.adjacent(u, v);
      if (adj && !in_run) ++runs;
      in_run = adj;
    }
    k = std::max(k, runs);
  }
  return k;
}

namespace detail {

struct ContiguitySearch {
  const Graph& g;
  int best;
  std::vector<int> best_order;
  std::vector<int> cur;
  std::vector<int> runs;     // runs of each vertex within the placed prefix
  std::vector<char> placed;

  explicit ContiguitySearch(const Graph& g, int bound,
                            std::vector<int> bound_order)
      : g(g),
        best(bound),
        best_order(std::move(bound_order)),
        runs(g.n, 0),
        placed(g.n, 0) {}

  // Appending a vertex can only extend or add runs, never remove them, so
  // the prefix maximum is a sound lower bound for pruning.
  void grow(int cur_max) {
    if (cur_max >= best) return;
    if ((int)cur.size() == g.n) {
      best = cur_max;
      best_order = cur;
      return;
    }
    int prev = cur.empty() ? -1 : cur.back();
    for (int v = 0; v < g.n; ++v) {
      if (placed[v]) continue;
      int bumped = 0;
      g.adj[v].for_each([&](int u) {
        if (placed[u] && !(prev >= 0 && g.adjacent(u, prev))) {
          ++runs[u];
          ++bumped;
        }
      });
      // v's own run count over already-placed neighbours
      int vruns = 0;
      bool in_run = false;
      for (int u : cur) {
        bool adj = g.adjacent(v, u);
        if (adj && !in_run) ++vruns;
        in_run = adj;
      }
      runs[v] = vruns;
      int next_max = cur_max;
      if (vruns > next_max) next_max = vruns;
      g.adj[v].for_each([&](int u) {
        if (placed[u] && runs[u] > next_max) next_max = runs[u];
      });
      placed[v] = 1;
      cur.push_back(v);
      grow(next_max);
      cur.pop_back();
      placed[v] = 0;
      if (bumped)
        g.adj[v].for_each([&](int u) {
          if (placed[u] && !(prev >= 0 && g.adjacent(u, prev))) --runs[u];
        });
    }
  }
};

}  // namespace detail

// Minimum contiguity over all vertex orders, by branch and bound seeded with
// the identity order.  Witness order re-evaluates to the value.
inline ParamReport contiguity(const Graph& g, int cap = 9) {
  if (g.n > cap) throw InvalidInput("contiguity cap exceeded", g.n);
  std::vector<int> ident(g.n);
  std::iota(ident.begin(), ident.end(), 0);
  if (g.n == 0) return {"contiguity", 0, {}, "exact"};
  int bound = contiguity_of_order(g, ident);
  detail::ContiguitySearch cs(g, bound, ident);
  if (bound > 0) cs.grow(0);
  ParamReport r{"contiguity", cs.best, cs.best_order, "exact"};
  return r;
}

// ---- chain partitions ----------------------------------------------------

namespace detail {

// Incremental validity for partition search: parts stay homogeneous and all
// cross pairs stay 2K2-free (nested neighbourhoods between any two parts).
struct PartitionSearch {
  const Graph& g;
  int max_parts;
  std::vector<int> order;              // processing order over vertices
  std::vector<int> part;               // -1 = unassigned
  std::vector<std::vector<int>> members;
  std::optional<std::vector<int>> found;

  PartitionSearch(const Graph& g, int max_parts, std::vector<int> order)
      : g(g), max_parts(max_parts), order(std::move(order)), part(g.n, -1) {}

  // Parts are cliques or independent sets; two members pin the type.
  bool homogeneous_with(int v, int p) const {
    if (members[p].size() >= 2) {
      bool clique = g.adjacent(members[p][0], members[p][1]);
      for (int u : members[p])
        if (g.adjacent(u, v) != clique) return false;
      return true;
    }
    return true;
  }

  // v joining part p must keep neighbourhoods into every other part nested;
  // pairs not through v are already nested by the search invariant.
  bool chain_with(int v, int p) const {
    for (int q = 0; q < (int)members.size(); ++q) {
      if (q == p) continue;
      Bitset qmask(g.n);
      for (int u : members[q]) qmask.set(u);
      Bitset vq = g.adj[v];
      vq &= qmask;
      for (int u : members[p]) {
        Bitset uq = g.adj[u];
        uq &= qmask;
        if (!uq.subset_of(vq) && !vq.subset_of(uq)) return false;
      }
    }
    return true;
  }

  void place(int pos) {
    if (found) return;
    if (pos == g.n) {
      found = part;
      return;
    }
    int v = order[pos];
    int used = (int)members.size();
    for (int p = 0; p < used && !found; ++p) {
      if (!homogeneous_with(v, p) || !chain_with(v, p)) continue;
      part[v] = p;
      members[p].push_back(v);
      place(pos + 1);
      members[p].pop_back();
      part[v] = -1;
    }
    if (!found && used < max_parts) {
      // singleton parts are homogeneous and nest trivially
      part[v] = used;
      members.emplace_back(std::vector<int>{v});
      place(pos + 1);
      members.pop_back();
      part[v] = -1;
    }
  }
};

}  // namespace detail

// Partition into at most max_parts homogeneous sets with pairwise-chain
// cross edges; restricted-growth over the processing order makes the result
// deterministic.  Part ids are by first appearance along that order.
inline std::optional<std::vector<int>> find_chain_partition(
    const Graph& g, int max_parts, std::vector<int> order = {}) {
  if (g.n == 0) return std::vector<int>{};
  if (max_parts < 1) return std::nullopt;
  if (order.empty()) {
    order.resize(g.n);
    std::iota(order.begin(), order.end(), 0);
  }
  detail::PartitionSearch ps(g, max_parts, std::move(order));
  ps.place(0);
  return ps.found;
}

// Smallest part count; the "capped" verdict reports value cap_k + 1 when no
// partition within cap_k exists.
inline ParamReport chain_partition_number(const Graph& g, int cap_k = -1,
                                          int cap_n = 12) {
  if (g.n > cap_n) throw InvalidInput("chain_partition_number cap exceeded", g.n);
  if (cap_k < 0) cap_k = std::max(g.n, 1);
  for (int k = 1; k <= cap_k; ++k)
    if (auto part = find_chain_partition(g, k)) {
      int used = 0;
      for (int p : *part) used = std::max(used, p + 1);
      return {"chain_partition_number", used, *part, "exact"};
    }
  return {"chain_partition_number", cap_k + 1, {}, "capped"};
}

// ---- double stars ----------------------------------------------------------

struct DoubleStarCheck {
  bool free = true;
  std::optional<Witness> copy;  // an unbalanced 2K_{1,t}, when present
};

// True iff no induced 2K_{1,t} has both centres in the same part.
inline DoubleStarCheck is_double_star_free(const BipartiteGraph& bg, int t,
                                           const SearchOptions& opt = {}) {
  BipartiteGraph pat = two_star_pattern(t, t);
  if (auto w = contains_one_sided(bg, pat, opt)) return {false, w};
  if (auto w = contains_one_sided(swap_sides(bg), pat, opt)) return {false, w};
  return {};
}

}  // namespace adjlab
