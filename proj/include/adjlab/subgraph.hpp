#pragma once

#include <algorithm>
#include <optional>

#include "adjlab/graph.hpp"

namespace adjlab {

struct SearchOptions {
  long long budget = 10'000'000;  // search tree node cap
};

namespace detail {

// Pattern vertices reordered so each one (after the first) touches a placed
// vertex where possible; high degree first breaks ties.  Fixed, so searches
// are deterministic.
inline std::vector<int> pattern_order(const Graph& p) {
  std::vector<int> order;
  std::vector<char> used(p.n, 0);
  for (int step = 0; step < p.n; ++step) {
    int best = -1, best_attached = -1, best_deg = -1;
    for (int v = 0; v < p.n; ++v) {
      if (used[v]) continue;
      int attached = 0;
      for (int u : order) attached += p.adjacent(u, v);
      if (attached > best_attached ||
          (attached == best_attached && p.degree(v) > best_deg)) {
        best = v;
        best_attached = attached;
        best_deg = p.degree(v);
      }
    }
    used[best] = 1;
    order.push_back(best);
  }
  return order;
}

struct EmbedState {
  const Graph& host;
  const Graph& pat;
  const std::vector<int>& order;
  const Bitset* host_side_for_pat;  // per pattern vertex, optional side mask
  long long nodes = 0;
  long long budget;
  std::vector<int> map;  // pattern -> host
  Bitset used;

  EmbedState(const Graph& host, const Graph& pat, const std::vector<int>& ord,
             const Bitset* sides, long long budget)
      : host(host),
        pat(pat),
        order(ord),
        host_side_for_pat(sides),
        budget(budget),
        map(pat.n, -1),
        used(host.n) {}

  bool extend(std::size_t k) {
    if (k == order.size()) return true;
    int pv = order[k];
    Bitset cand(host.n);
    cand.set_all();
    if (host_side_for_pat) cand &= host_side_for_pat[pv];
    cand -= used;
    for (std::size_t j = 0; j < k; ++j) {
      int pu = order[j];
      if (pat.adjacent(pu, pv))
        cand &= host.adj[map[pu]];
      else
        cand -= host.adj[map[pu]];
    }
    int want = pat.degree(pv);
    bool found = false;
    cand.for_each([&](int hv) {
      if (found) return;
      if (host.degree(hv) < want) return;
      if (++nodes > budget) throw BudgetExceeded(budget);
      map[pv] = hv;
      used.set(hv);
      if (extend(k + 1)) {
        found = true;
        return;
      }
      used.reset(hv);
      map[pv] = -1;
    });
    return found;
  }
};

inline std::optional<Witness> embed(const Graph& host, const Graph& pat,
                                    const Bitset* sides,
                                    const SearchOptions& opt) {
  if (pat.n > host.n) return std::nullopt;
  if (pat.n == 0) return Witness{};
  auto order = pattern_order(pat);
  EmbedState st(host, pat, order, sides, opt.budget);
  if (!st.extend(0)) return std::nullopt;
  return Witness{st.map};
}

}  // namespace detail

// First induced copy of `pattern` in `host` found by deterministic
// backtracking (ascending host candidates).  Returns nothing when no copy
// exists; throws BudgetExceeded when the node cap is hit first.
inline std::optional<Witness> contains_induced(const Graph& host,
                                               const Graph& pattern,
                                               const SearchOptions& opt = {}) {
  return detail::embed(host, pattern, nullptr, opt);
}

// Side-respecting variant: pattern side A must land in host side A and
// pattern side B in host side B.  Callers probe both orientations by
// swapping the pattern's sides.
inline std::optional<Witness> contains_one_sided(const BipartiteGraph& host,
                                                 const BipartiteGraph& pattern,
                                                 const SearchOptions& opt = {}) {
  std::vector<Bitset> sides(pattern.n(), Bitset(host.n()));
  for (int pv = 0; pv < pattern.n(); ++pv)
    sides[pv] = pattern.in_a(pv) ? host.side_a : host.side_b;
  return detail::embed(host.g, pattern.g, sides.data(), opt);
}

inline BipartiteGraph swap_sides(const BipartiteGraph& bg) {
  return BipartiteGraph{bg.g, bg.side_b, bg.side_a};
}

// Copy with the pattern's sides embedded either way round.
inline std::optional<Witness> contains_either_sided(
    const BipartiteGraph& host, const BipartiteGraph& pattern,
    const SearchOptions& opt = {}) {
  if (auto w = contains_one_sided(host, pattern, opt)) return w;
  return contains_one_sided(host, swap_sides(pattern), opt);
}

}  // namespace adjlab
