#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>

#include "adjlab/combinators.hpp"
#include "adjlab/parameters.hpp"
#include "adjlab/predicates.hpp"

namespace adjlab {

namespace detail {

inline int resolve_width(const BipartiteGraph& bg, int width) {
  return width < 0 ? width_for(bg.n()) : width;
}

inline void check_sides(const BipartiteGraph& bg) {
  if ((bg.side_a & bg.side_b).any() ||
      (bg.side_a | bg.side_b).count() != bg.n())
    throw InvalidInput("side masks do not partition the vertex set", 0);
  for (int u = 0; u < bg.n(); ++u)
    if ((bg.g.adj[u] & bg.side_of(u)).any())
      throw InvalidInput("edge inside one side of the bipartition", u);
}

inline std::string pattern_name(const char* base) { return base; }

inline std::string pattern_name(const char* base, int a) {
  return std::string(base) + "(" + std::to_string(a) + ")";
}

inline std::string pattern_name(const char* base, int a, int b) {
  return std::string(base) + "(" + std::to_string(a) + "," +
         std::to_string(b) + ")";
}

// Verifies an assembled witness against the graph it was assembled in, then
// reports it in the caller's numbering (`parent` empty = identity).  Always
// throws: a failed verification is a defect in the assembling routine.
[[noreturn]] inline void certify(const Graph& host, const std::string& name,
                                 const Graph& pattern, std::vector<int> map,
                                 const std::vector<int>& parent) {
  if (!witness_ok(host, pattern, Witness{map}))
    throw InternalCheck("assembled witness fails verification: " + name);
  if (!parent.empty())
    for (int& v : map) v = parent[v];
  throw ForbiddenPatternError(name, std::move(map));
}

// First k members of `s`, ascending; fewer than k is a defect in the
// counting argument that promised them.
inline std::vector<int> first_k(const Bitset& s, int k) {
  std::vector<int> out;
  s.for_each([&](int v) {
    if ((int)out.size() < k) out.push_back(v);
  });
  if ((int)out.size() < k)
    throw InternalCheck("witness set smaller than its counting bound");
  return out;
}

inline std::vector<Bitset> layer_masks(const BfsLayers& bl, int n) {
  std::vector<Bitset> out;
  for (const auto& lay : bl.layers) {
    Bitset s(n);
    for (int v : lay) s.set(v);
    out.push_back(std::move(s));
  }
  return out;
}

// Shortest path between two vertices of one component, as a vertex list.
inline std::vector<int> bfs_path(const Graph& g, int s, int t) {
  std::vector<int> par(g.n, -1);
  std::vector<int> queue = {s};
  par[s] = s;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int u = queue[h];
    if (u == t) break;
    g.adj[u].for_each([&](int v) {
      if (par[v] < 0) {
        par[v] = u;
        queue.push_back(v);
      }
    });
  }
  if (par[t] < 0) throw InternalCheck("path endpoints in different components");
  std::vector<int> path;
  for (int v = t; v != s; v = par[v]) path.push_back(v);
  path.push_back(s);
  std::reverse(path.begin(), path.end());
  return path;
}

inline std::vector<int> degree_desc_order(const Graph& g) {
  std::vector<int> order(g.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return g.degree(x) > g.degree(y); });
  return order;
}

inline Labeling typed_empty(const SchemeNode& ty, int width) {
  return Labeling{0, width, ty, {}};
}

}  // namespace detail

// Reconstructs the pattern graph named by a ForbiddenPatternError, so a
// witness can be re-verified from its serialized form alone.
inline Graph pattern_by_name(const std::string& name) {
  std::string base = name;
  int a = -1, b = -1;
  auto lp = name.find('(');
  if (lp != std::string::npos) {
    base = name.substr(0, lp);
    std::size_t pos = lp + 1;
    a = std::stoi(name.substr(pos), &pos);
    pos += lp + 1;
    if (pos < name.size() && name[pos] == ',') b = std::stoi(name.substr(pos + 1));
  }
  if (base == "2k2") return disjoint_copies(path_graph(2), 2);
  if (base == "3k2") return disjoint_copies(path_graph(2), 3);
  if (base == "p4") return path_graph(4);
  if (base == "s222") return spider_graph(2, 2, 2);
  if (base == "cycle") return cycle_graph(a);
  if (base == "two-star") return two_star_pattern(a, b).g;
  if (base == "f1") return f1_pattern(a, b).g;
  if (base == "f") return f_pattern(a, b).g;
  if (base == "dk") return dk_pattern(a);
  if (base == "zk") return zk_pattern(a).g;
  if (base == "x") return x_pattern();
  if (base == "y") return y_pattern();
  if (base == "z") return z_pattern();
  throw InvalidInput("unknown pattern name: " + name, 0);
}

// ---- chain graphs -------------------------------------------------------

// Side-A labels carry the vertex's rank in the inclusion order of
// neighbourhoods (1 = largest); side-B labels carry the deepest adjacent
// rank.  Non-chain input yields its 2K_2.
inline Labeling chain_scheme(const BipartiteGraph& bg, int width = -1) {
  width = detail::resolve_width(bg, width);
  detail::check_sides(bg);
  ChainAnalysis an = analyze_chain(bg);
  if (!an.chain)
    detail::certify(bg.g, "2k2", disjoint_copies(path_graph(2), 2), an.two_k2,
                    {});
  std::vector<std::uint64_t> rank(bg.n(), 0);
  for (std::size_t i = 0; i < an.a_by_rank.size(); ++i)
    rank[an.a_by_rank[i]] = i + 1;
  Labeling L{bg.n(), width, chain_node(), {}};
  for (int v = 0; v < bg.n(); ++v) {
    BitWriter w;
    if (bg.in_a(v)) {
      w.put(0, 1);
      w.put(rank[v], width);
    } else {
      std::uint64_t top = 0;
      bg.g.adj[v].for_each([&](int u) { top = std::max(top, rank[u]); });
      w.put(1, 1);
      w.put(top, width);
    }
    L.labels.push_back(w.take());
  }
  return L;
}

// ---- disjoint unions of bicliques ----------------------------------------

// Component id plus side bit; isolated vertices share the null component 0.
// A component that is not a complete bipartite graph yields a P_4 off a
// shortest path between some non-adjacent cross pair.
inline Labeling biclique_union_scheme(const BipartiteGraph& bg, int width = -1) {
  width = detail::resolve_width(bg, width);
  detail::check_sides(bg);
  std::vector<std::uint64_t> comp_id(bg.n(), 0);
  std::uint64_t next = 1;
  for (const Bitset& comp : components(bg.g)) {
    std::vector<int> vs = comp.to_vector();
    if (vs.size() == 1) continue;
    for (int u : vs) {
      Bitset want = comp & bg.opposite_of(u);
      if (bg.g.adj[u] == want) continue;
      int v = (want - bg.g.adj[u]).find_first();
      std::vector<int> path = detail::bfs_path(bg.g, u, v);
      detail::certify(bg.g, "p4", path_graph(4),
                      {path[0], path[1], path[2], path[3]}, {});
    }
    for (int u : vs) comp_id[u] = next;
    ++next;
  }
  Labeling L{bg.n(), width, biclique_union_node(), {}};
  for (int v = 0; v < bg.n(); ++v) {
    BitWriter w;
    w.put(comp_id[v], width);
    w.put(bg.in_a(v) ? 0 : 1, 1);
    L.labels.push_back(w.take());
  }
  return L;
}

// ---- peeling by degree or co-degree ---------------------------------------

using PeelRule = std::function<std::optional<int>(const BipartiteGraph&)>;

// Flag budget that lets every residual of a graph without two same-side
// disjoint stars K_{1,t} peel one vertex per step.
inline int double_star_peel_bound(int t) {
  return std::max(t - 1, (t - 1) * (t * t - 4 * t + 5));
}

// Smallest-index vertex whose degree or opposite-part co-degree is at most d.
inline PeelRule degree_or_bicodegree_rule(int d) {
  return [d](const BipartiteGraph& res) -> std::optional<int> {
    for (int v = 0; v < res.n(); ++v) {
      int deg = res.g.degree(v);
      int cod = res.opposite_of(v).count() - deg;
      if (deg <= d || cod <= d) return v;
    }
    return std::nullopt;
  };
}

// One-vertex-per-step split labeling; the rule picks each core vertex.  A
// stuck residual is reported with its vertex set.
inline Labeling peel_scheme(const BipartiteGraph& bg, int d,
                            PeelRule rule = nullptr, int width = -1) {
  width = detail::resolve_width(bg, width);
  detail::check_sides(bg);
  if (!rule) rule = degree_or_bicodegree_rule(d);
  SplitProvider provider = [rule](const BipartiteGraph& res,
                                  const std::vector<int>& ro) -> SplitStep {
    std::optional<int> pick = rule(res);
    if (!pick) throw ResidualError("no vertex meets the peel rule", ro);
    SplitStep st;
    st.A = {*pick};
    for (int v = 0; v < res.n(); ++v)
      if (v != *pick) st.B1.push_back(v);
    return st;
  };
  InnerBuilder leaf = [](const BipartiteGraph& ag, int w) {
    return edgeless_labeling(ag.n(), w);
  };
  return split_scheme(bg, provider, leaf, edgeless_node(), d, true, width);
}

// Peel under the double-star budget; a stuck residual is converted into the
// two disjoint same-side stars that caused it.
inline Labeling two_star_free_scheme(const BipartiteGraph& bg, int t,
                                     int width = -1) {
  if (t < 1) throw InvalidInput("star size must be positive", 0);
  try {
    return peel_scheme(bg, double_star_peel_bound(t), nullptr, width);
  } catch (const ResidualError&) {
    auto w = contains_either_sided(bg, two_star_pattern(t, t));
    if (!w) throw InternalCheck("peel stalled without a double star");
    detail::certify(bg.g, detail::pattern_name("two-star", t, t),
                    two_star_pattern(t, t).g, w->map, {});
  }
}

// ---- complement wrapper ---------------------------------------------------

// Prefixes a side bit: same side decodes to false, opposite sides negate the
// wrapped decode.
inline Labeling complemented_labeling(const BipartiteGraph& bg,
                                      const Labeling& inner) {
  if (inner.n != bg.n())
    throw InternalCheck("complement wrapper over a different vertex count");
  Labeling L{bg.n(), inner.width, complemented_node(inner.scheme), {}};
  for (int v = 0; v < bg.n(); ++v) {
    BitWriter w;
    w.put(bg.in_a(v) ? 0 : 1, 1);
    w.append(inner.labels[v]);
    L.labels.push_back(w.take());
  }
  return L;
}

// ---- one-sided star-pair schemes -------------------------------------------

// Split labeling for bipartite graphs with no copy of the double star plus
// common neighbour, f1(t,1), whose large centre lies on the heavy side.
// Each step keys on the heaviest heavy-side vertex u: vertices seeing both
// N(u) and its complement keep flag lists of at most t-1, the rest descend.
inline Labeling one_sided_f1t1_scheme(const BipartiteGraph& bg, int t,
                                      bool heavy_a, int width = -1) {
  if (t < 1) throw InvalidInput("pattern parameter must be positive", 0);
  width = detail::resolve_width(bg, width);
  detail::check_sides(bg);
  SplitProvider provider = [t, heavy_a](const BipartiteGraph& res,
                                        const std::vector<int>& ro) -> SplitStep {
    SplitStep st;
    const Bitset& heavy = heavy_a ? res.side_a : res.side_b;
    int u = -1;
    heavy.for_each([&](int x) {
      if (u < 0 || res.g.degree(x) > res.g.degree(u)) u = x;
    });
    if (u < 0 || res.g.degree(u) == 0) {
      // every edge touches the heavy side, so the residual is edgeless
      st.A.resize(res.n());
      std::iota(st.A.begin(), st.A.end(), 0);
      return st;
    }
    Bitset v1 = res.g.adj[u];
    Bitset v0 = res.opposite_of(u) - v1;
    st.A = {u};
    st.flags = {{mode_non_neighbours, mode_neighbours}};
    st.B1 = v1.to_vector();
    st.B2 = v0.to_vector();
    heavy.for_each([&](int x) {
      if (x == u) return;
      Bitset nb1 = res.g.adj[x] & v1;
      Bitset nb0 = res.g.adj[x] & v0;
      if (nb1.any() && nb0.any()) {
        Bitset v10 = v1 - res.g.adj[x];
        if ((int)v10.count() >= t) {
          // u, its t missed vertices, x, one private neighbour and their
          // shared one induce the forbidden copy
          std::vector<int> map = {u, x, nb1.find_first()};
          for (int y : detail::first_k(v10, t)) map.push_back(y);
          map.push_back(nb0.find_first());
          detail::certify(res.g, detail::pattern_name("f1", t, 1),
                          f1_pattern(t, 1).g, map, ro);
        }
        if ((int)nb0.count() >= t) {
          // here x is the big centre; u must miss part of V1 or x would
          // out-degree it
          if (!v10.any())
            throw InternalCheck("mixed vertex dominates the maximum degree");
          std::vector<int> map = {x, u, nb1.find_first()};
          for (int y : detail::first_k(nb0, t)) map.push_back(y);
          map.push_back(v10.find_first());
          detail::certify(res.g, detail::pattern_name("f1", t, 1),
                          f1_pattern(t, 1).g, map, ro);
        }
        st.A.push_back(x);
        st.flags.push_back({mode_non_neighbours, mode_neighbours});
      } else if (nb1.any()) {
        st.B1.push_back(x);
      } else if (nb0.any()) {
        st.B2.push_back(x);
      } else {
        st.A.push_back(x);
        st.flags.push_back({mode_neighbours, mode_neighbours});
      }
    });
    return st;
  };
  InnerBuilder leaf = [](const BipartiteGraph& ag, int w) {
    return edgeless_labeling(ag.n(), w);
  };
  return split_scheme(bg, provider, leaf, edgeless_node(), t - 1, true, width);
}

// Cover by breadth-first layer graphs rooted off the heavy side.  The first
// layer graph is labeled through its bipartite complement; the star and the
// deeper layer graphs are labeled directly.  Forbidden copies thrown by the
// layer pieces are completed to f(t,1) with the root.
inline Labeling one_sided_ft1_scheme(const BipartiteGraph& bg, int t,
                                     bool heavy_a, int width = -1) {
  if (t < 1) throw InvalidInput("pattern parameter must be positive", 0);
  width = detail::resolve_width(bg, width);
  detail::check_sides(bg);
  SchemeNode lemma_split = split_node(t - 1, true, edgeless_node());
  std::vector<SchemeNode> types = {star_node(), complemented_node(lemma_split),
                                   lemma_split};
  SchemeNode piece_cover = cover_node(3, types);
  std::string f1name = detail::pattern_name("f1", t, 1);

  auto builder = [&](const BipartiteGraph& comp, int w) -> Labeling {
    const Bitset& light = heavy_a ? comp.side_b : comp.side_a;
    int root = light.any() ? light.find_first() : 0;
    BfsLayers bl = bfs_layers(comp.g, root);
    if (!bl.unreachable.empty())
      throw InternalCheck("breadth-first search missed part of a component");
    int top = (int)bl.layers.size() - 1;
    std::vector<CoverPiece> pieces;
    {
      std::vector<int> vs = {root};
      for (int x : bl.layers.size() > 1 ? bl.layers[1] : std::vector<int>{})
        vs.push_back(x);
      std::sort(vs.begin(), vs.end());
      int pos = int(std::lower_bound(vs.begin(), vs.end(), root) - vs.begin());
      pieces.push_back({vs, star_labeling((int)vs.size(), pos, w)});
    }
    for (int i = 1; i < top; ++i) {
      Bitset keep(comp.n());
      for (int x : bl.layers[i]) keep.set(x);
      for (int x : bl.layers[i + 1]) keep.set(x);
      std::vector<int> ids;
      BipartiteGraph gi = induced(comp, keep, &ids);
      Labeling inner;
      if (i == 1) {
        BipartiteGraph gc = bipartite_complement(gi);
        try {
          Labeling sub = detail::translating_ids(
              ids, [&] { return one_sided_f1t1_scheme(gc, t, heavy_a, w); });
          inner = complemented_labeling(gi, sub);
        } catch (ForbiddenPatternError& e) {
          if (e.pattern != f1name) throw;
          // a copy in the complement swaps the two centres' leaf sets and
          // isolates the shared vertex; the root closes it into f(t,1)
          const std::vector<int>& m = e.map;
          std::vector<int> map(t + 5);
          map[0] = m[1];
          for (int j = 0; j < t; ++j) map[3 + j] = m[3 + j];
          map[1] = m[0];
          map[t + 3] = m[t + 3];
          map[2] = root;
          map[t + 4] = m[2];
          detail::certify(comp.g, detail::pattern_name("f", t, 1),
                          f_pattern(t, 1).g, map, {});
        }
      } else {
        try {
          inner = detail::translating_ids(ids, [&] {
            return one_sided_f1t1_scheme(gi, t, heavy_a, w);
          });
        } catch (ForbiddenPatternError& e) {
          if (e.pattern != f1name) throw;
          // the root sees nothing at distance two or more, so it plays the
          // isolated vertex of f(t,1)
          std::vector<int> map = e.map;
          map.push_back(root);
          detail::certify(comp.g, detail::pattern_name("f", t, 1),
                          f_pattern(t, 1).g, map, {});
        }
      }
      pieces.push_back({ids, std::move(inner)});
    }
    return cover_scheme(comp.g, pieces, 3, types, w);
  };
  return component_cover(bg, builder, piece_cover, width);
}

// ---- two-sided star-pair schemes ---------------------------------------

namespace detail {

inline SchemeNode f_inner_node(int t, bool complement_tail);

inline SchemeNode f1tt_node(int t) {
  return cover_node(1, {split_node(t - 1, true, f_inner_node(t, false))});
}

inline SchemeNode f_inner_node(int t, bool complement_tail) {
  SchemeNode lemma_split = split_node(t - 1, true, edgeless_node());
  SchemeNode tail =
      complement_tail
          ? complemented_node(f1tt_node(t))
          : split_node(double_star_peel_bound(t), true, edgeless_node());
  return cover_node(3, {star_node(), star_node(), lemma_split, tail});
}

struct FSchemeCtx {
  int t = 0;
  bool with_isolated = false;  // forbids f(t,t) rather than f1(t,t)
  int width = 0;
};

inline Labeling f_scheme(const BipartiteGraph& bg, int t, bool with_isolated,
                         int width);

// Four-piece cover of the core {v} + N(v) + second layer: stars at v and at
// the heaviest first-layer vertex u, one split over the part of the second
// layer u misses, and the residue pair labeled by peeling or through its
// complement.
inline Labeling f_core_cover(const BipartiteGraph& res,
                             const std::vector<int>& ro, int v,
                             const std::vector<int>& V1,
                             const std::vector<int>& V2, const FSchemeCtx& cx) {
  int t = cx.t, w = cx.width;
  std::string f1name = pattern_name("f1", t, t);
  std::string fname = pattern_name("f", t, t);
  SchemeNode lemma_split = split_node(t - 1, true, edgeless_node());
  SchemeNode tail_node =
      cx.with_isolated
          ? complemented_node(f1tt_node(t))
          : split_node(double_star_peel_bound(t), true, edgeless_node());

  std::vector<int> avs = {v};
  avs.insert(avs.end(), V1.begin(), V1.end());
  avs.insert(avs.end(), V2.begin(), V2.end());
  std::sort(avs.begin(), avs.end());
  std::vector<int> res2a(res.n(), -1);
  for (std::size_t i = 0; i < avs.size(); ++i) res2a[avs[i]] = (int)i;
  Bitset akeep(res.n());
  for (int x : avs) akeep.set(x);
  BipartiteGraph ag = induced(res, akeep);

  auto a_ids = [&](std::vector<int> vs) {
    std::sort(vs.begin(), vs.end());
    for (int& x : vs) x = res2a[x];
    return vs;
  };
  auto star_piece = [&](int center, const std::vector<int>& leaves) {
    std::vector<int> vs = leaves;
    vs.push_back(center);
    std::sort(vs.begin(), vs.end());
    int pos = int(std::lower_bound(vs.begin(), vs.end(), center) - vs.begin());
    Labeling inner = star_labeling((int)vs.size(), pos, w);
    return CoverPiece{a_ids(vs), std::move(inner)};
  };

  std::vector<CoverPiece> pieces;
  pieces.push_back(star_piece(v, V1));
  if (V1.empty()) {
    pieces.push_back({{}, typed_empty(star_node(), w)});
    pieces.push_back({{}, typed_empty(lemma_split, w)});
    pieces.push_back({{}, typed_empty(tail_node, w)});
    return cover_scheme(ag.g, pieces, 3,
                        {star_node(), star_node(), lemma_split, tail_node}, w);
  }

  int u = V1[0];
  for (int x : V1)
    if (res.g.degree(x) > res.g.degree(u)) u = x;
  Bitset v2mask(res.n());
  for (int x : V2) v2mask.set(x);
  Bitset uset = res.g.adj[u] & v2mask;
  Bitset wset = v2mask - uset;
  std::vector<int> v1p;
  for (int x : V1)
    if (x != u) v1p.push_back(x);

  // every remaining first-layer vertex must nearly miss the part of the
  // second layer that u misses; u's own degree bounds the slack
  for (int x : v1p) {
    Bitset nbw = res.g.adj[x] & wset;
    if ((int)nbw.count() < t) continue;
    Bitset nonu = uset - res.g.adj[x];
    if (!cx.with_isolated) {
      std::vector<int> map = {u, x, v};
      for (int y : first_k(nonu, t)) map.push_back(y);
      for (int y : first_k(nbw, t)) map.push_back(y);
      certify(res.g, f1name, f1_pattern(t, t).g, map, ro);
    }
    Bitset nonw = wset - res.g.adj[x];
    if (nonw.any()) {
      std::vector<int> map = {u, x, v};
      for (int y : first_k(nonu, t)) map.push_back(y);
      for (int y : first_k(nbw, t)) map.push_back(y);
      map.push_back(nonw.find_first());
      certify(res.g, fname, f_pattern(t, t).g, map, ro);
    }
  }

  pieces.push_back(star_piece(u, uset.to_vector()));

  bool v1_is_a = !res.in_a(v);
  Bitset p2keep(res.n());
  for (int x : v1p) p2keep.set(x);
  p2keep |= wset;
  std::vector<int> p2ids;
  BipartiteGraph p2g = induced(res, p2keep, &p2ids);
  std::vector<int> p2parent(p2ids.size());
  for (std::size_t i = 0; i < p2ids.size(); ++i) p2parent[i] = ro[p2ids[i]];
  SplitProvider side_first = [v1_is_a](const BipartiteGraph& r,
                                       const std::vector<int>&) -> SplitStep {
    SplitStep st;
    const Bitset& first = v1_is_a ? r.side_a : r.side_b;
    if (first.any()) {
      st.A = first.to_vector();
      for (int x = 0; x < r.n(); ++x)
        if (!first.test(x)) st.B1.push_back(x);
    } else {
      st.A.resize(r.n());
      std::iota(st.A.begin(), st.A.end(), 0);
    }
    return st;
  };
  InnerBuilder leaf = [](const BipartiteGraph& aa, int ww) {
    return edgeless_labeling(aa.n(), ww);
  };
  Labeling p2inner = translating_ids(p2parent, [&] {
    return split_scheme(p2g, side_first, leaf, edgeless_node(), t - 1, true, w);
  });
  std::vector<int> p2verts = v1p;
  std::vector<int> wlist = wset.to_vector();
  p2verts.insert(p2verts.end(), wlist.begin(), wlist.end());
  pieces.push_back({a_ids(p2verts), std::move(p2inner)});

  Bitset p3keep(res.n());
  for (int x : v1p) p3keep.set(x);
  p3keep |= uset;
  std::vector<int> p3ids;
  BipartiteGraph p3g = induced(res, p3keep, &p3ids);
  std::vector<int> p3parent(p3ids.size());
  for (std::size_t i = 0; i < p3ids.size(); ++i) p3parent[i] = ro[p3ids[i]];
  Labeling p3inner;
  if (!cx.with_isolated) {
    try {
      p3inner = translating_ids(p3parent, [&] {
        return peel_scheme(p3g, double_star_peel_bound(t), nullptr, w);
      });
    } catch (const ResidualError&) {
      auto ws = contains_either_sided(p3g, two_star_pattern(t, t));
      if (!ws) throw InternalCheck("peel stalled without a double star");
      bool centers_v1 = p3g.in_a(ws->map[0]) == v1_is_a;
      int apex = centers_v1 ? v : u;
      std::vector<int> map = {p3ids[ws->map[0]], p3ids[ws->map[t + 1]], apex};
      for (int j = 1; j <= t; ++j) map.push_back(p3ids[ws->map[j]]);
      for (int j = t + 2; j <= 2 * t + 1; ++j) map.push_back(p3ids[ws->map[j]]);
      certify(res.g, f1name, f1_pattern(t, t).g, map, ro);
    }
  } else {
    BipartiteGraph p3c = bipartite_complement(p3g);
    try {
      Labeling sub = f_scheme(p3c, t, false, w);
      p3inner = complemented_labeling(p3g, sub);
    } catch (ForbiddenPatternError& e) {
      if (e.pattern != f1name) throw;
      // complement copy: leaf sets swap, the shared vertex is isolated, and
      // v or u closes it depending on which side holds the centres
      const std::vector<int>& m = e.map;
      bool centers_v1 = p3g.in_a(m[0]) == v1_is_a;
      int apex = centers_v1 ? v : u;
      std::vector<int> map(2 * t + 4);
      map[0] = p3ids[m[0]];
      map[1] = p3ids[m[1]];
      map[2] = apex;
      for (int j = 0; j < t; ++j) map[3 + j] = p3ids[m[t + 3 + j]];
      for (int j = 0; j < t; ++j) map[t + 3 + j] = p3ids[m[3 + j]];
      map[2 * t + 3] = p3ids[m[2]];
      certify(res.g, fname, f_pattern(t, t).g, map, ro);
    }
  }
  std::vector<int> p3verts = v1p;
  std::vector<int> ulist = uset.to_vector();
  p3verts.insert(p3verts.end(), ulist.begin(), ulist.end());
  pieces.push_back({a_ids(p3verts), std::move(p3inner)});

  return cover_scheme(ag.g, pieces, 3,
                      {star_node(), star_node(), lemma_split, tail_node}, w);
}

inline SplitStep f_split_step(const BipartiteGraph& res,
                              const std::vector<int>& ro,
                              const FSchemeCtx& cx) {
  int t = cx.t;
  int n = res.n();
  int v = 0;
  for (int x = 1; x < n; ++x)
    if (res.g.degree(x) > res.g.degree(v)) v = x;
  BfsLayers bl = bfs_layers(res.g, v);
  std::vector<Bitset> lm = layer_masks(bl, n);
  auto layer = [&](std::size_t i) -> const std::vector<int>& {
    static const std::vector<int> none;
    return i < bl.layers.size() ? bl.layers[i] : none;
  };
  const std::vector<int>& V1 = layer(1);
  const std::vector<int>& V2 = layer(2);

  // second-to-third-layer budgets; v's degree supplies the first-layer
  // non-neighbours every witness needs
  if (lm.size() > 3) {
    const Bitset& v3 = lm[3];
    for (int x : V2) {
      Bitset nb3 = res.g.adj[x] & v3;
      if ((int)nb3.count() < t) continue;
      Bitset non1 = lm[1] - res.g.adj[x];
      int y = (res.g.adj[x] & lm[1]).find_first();
      if (!cx.with_isolated) {
        std::vector<int> map = {x, v, y};
        for (int z : first_k(nb3, t)) map.push_back(z);
        for (int z : first_k(non1, t)) map.push_back(z);
        certify(res.g, pattern_name("f1", t, t), f1_pattern(t, t).g, map, ro);
      }
      Bitset non3 = v3 - res.g.adj[x];
      int iso = -1;
      if (non3.any()) iso = non3.find_first();
      else if (!layer(5).empty()) iso = layer(5)[0];
      if (iso >= 0) {
        std::vector<int> map = {x, v, y};
        for (int z : first_k(nb3, t)) map.push_back(z);
        for (int z : first_k(non1, t)) map.push_back(z);
        map.push_back(iso);
        certify(res.g, pattern_name("f", t, t), f_pattern(t, t).g, map, ro);
      }
    }
  }

  SplitStep st;
  st.A = {v};
  st.A.insert(st.A.end(), V1.begin(), V1.end());
  st.A.insert(st.A.end(), V2.begin(), V2.end());
  std::sort(st.A.begin(), st.A.end());
  for (std::size_t i = 3; i < bl.layers.size(); ++i)
    st.B1.insert(st.B1.end(), bl.layers[i].begin(), bl.layers[i].end());
  std::sort(st.B1.begin(), st.B1.end());
  st.B2 = bl.unreachable;
  SplitFlagsSpec fl = cx.with_isolated
                          ? SplitFlagsSpec{auto_mode, mode_neighbours}
                          : SplitFlagsSpec{mode_neighbours, mode_neighbours};
  st.flags.assign(st.A.size(), fl);
  st.inner = f_core_cover(res, ro, v, V1, V2, cx);
  return st;
}

inline Labeling f_scheme(const BipartiteGraph& bg, int t, bool with_isolated,
                         int width) {
  if (t < 1) throw InvalidInput("pattern parameter must be positive", 0);
  width = resolve_width(bg, width);
  check_sides(bg);
  SchemeNode inner = f_inner_node(t, with_isolated);
  SchemeNode piece = split_node(t - 1, true, inner);
  auto builder = [t, with_isolated, inner](const BipartiteGraph& comp,
                                           int w) -> Labeling {
    FSchemeCtx cx{t, with_isolated, w};
    SplitProvider prov = [cx](const BipartiteGraph& r,
                              const std::vector<int>& ro) {
      return f_split_step(r, ro, cx);
    };
    return split_scheme(comp, prov, nullptr, inner, t - 1, true, w);
  };
  return component_cover(bg, builder, piece, width);
}

}  // namespace detail

// Split labeling for bipartite graphs without two t-stars sharing one extra
// neighbour (in either orientation).
inline Labeling f1tt_scheme(const BipartiteGraph& bg, int t, int width = -1) {
  return detail::f_scheme(bg, t, false, width);
}

// As f1tt_scheme, but the forbidden copy also carries an isolated vertex,
// so the second-layer residue is labeled through its bipartite complement.
inline Labeling ftt_scheme(const BipartiteGraph& bg, int t, int width = -1) {
  return detail::f_scheme(bg, t, true, width);
}

// ---- chain partitions ------------------------------------------------------

// Fixed-format labels over a validated chain partition: part id, part type
// bit, and one rank slot per other part.  Members of the smaller part of a
// pair are ranked by inclusion of their cross-neighbourhoods; members of the
// larger part store the deepest adjacent rank.
inline Labeling chain_partition_labeling(const Graph& g,
                                         const std::vector<int>& part,
                                         int parts_cap, int width) {
  int n = g.n;
  if ((int)part.size() != n)
    throw InvalidInput("part assignment size differs from the graph", part.size());
  int k_used = 0;
  for (int v = 0; v < n; ++v) {
    if (part[v] < 0 || part[v] >= parts_cap)
      throw InvalidInput("part id outside the label format", v);
    k_used = std::max(k_used, part[v] + 1);
  }
  std::vector<std::vector<int>> members(k_used);
  for (int v = 0; v < n; ++v) members[part[v]].push_back(v);

  std::vector<Bitset> pmask(k_used, Bitset(n));
  for (int p = 0; p < k_used; ++p)
    for (int v : members[p]) pmask[p].set(v);

  std::vector<int> type(k_used, 0);
  for (int p = 0; p < k_used; ++p) {
    const auto& ms = members[p];
    if (ms.size() < 2) continue;
    type[p] = g.adjacent(ms[0], ms[1]) ? 1 : 0;
    for (std::size_t i = 0; i < ms.size(); ++i)
      for (std::size_t j = i + 1; j < ms.size(); ++j)
        if (g.adjacent(ms[i], ms[j]) != (type[p] == 1))
          throw InvalidInput("part is neither a clique nor independent", ms[j]);
  }

  int slots = std::max(parts_cap - 1, 0);
  std::vector<std::vector<std::uint64_t>> slot_val(
      n, std::vector<std::uint64_t>(slots, 0));
  auto slot = [](int mine, int other) {
    return other < mine ? other : other - 1;
  };
  for (int p = 0; p < k_used; ++p) {
    for (int q = p + 1; q < k_used; ++q) {
      std::vector<int> ranked = members[p];
      std::stable_sort(ranked.begin(), ranked.end(), [&](int x, int y) {
        return (g.adj[x] & pmask[q]).count() > (g.adj[y] & pmask[q]).count();
      });
      for (std::size_t i = 0; i + 1 < ranked.size(); ++i) {
        Bitset lo = g.adj[ranked[i + 1]] & pmask[q];
        if (!lo.subset_of(g.adj[ranked[i]] & pmask[q]))
          throw InvalidInput("cross neighbourhoods of a part pair not nested",
                             ranked[i + 1]);
      }
      for (std::size_t i = 0; i < ranked.size(); ++i)
        slot_val[ranked[i]][slot(p, q)] = i + 1;
      for (int y : members[q]) {
        std::uint64_t top = 0;
        for (std::size_t i = 0; i < ranked.size(); ++i)
          if (g.adjacent(ranked[i], y)) top = i + 1;
        slot_val[y][slot(q, p)] = top;
      }
    }
  }

  int pw = field_width(parts_cap - 1);
  Labeling L{n, width, chain_partition_node(parts_cap), {}};
  for (int v = 0; v < n; ++v) {
    BitWriter w;
    w.put((std::uint64_t)part[v], pw);
    w.put((std::uint64_t)type[part[v]], 1);
    for (int s = 0; s < slots; ++s) w.put(slot_val[v][s], width);
    L.labels.push_back(w.take());
  }
  return L;
}

// ---- tripod-free chordal bipartite graphs -----------------------------------

// Star plus chain-partition labels per breadth-first layer graph.  A layer
// with three disjoint edges lifts to the tripod the class forbids; the part
// cap is a format knob, and exhausting it is reported distinctly.
inline Labeling s222_scheme(const BipartiteGraph& bg, int parts_cap = 8,
                            int width = -1) {
  if (parts_cap < 2) throw InvalidInput("part cap must be at least 2", 0);
  width = detail::resolve_width(bg, width);
  detail::check_sides(bg);
  if (auto cyc = find_induced_cycle(bg.g, 6))
    detail::certify(bg.g, detail::pattern_name("cycle", (int)cyc->size()),
                    cycle_graph((int)cyc->size()), *cyc, {});
  SchemeNode cp = chain_partition_node(parts_cap);
  std::vector<SchemeNode> types = {star_node(), cp};
  Graph three_k2 = disjoint_copies(path_graph(2), 3);

  auto builder = [&](const BipartiteGraph& comp, int w) -> Labeling {
    int root = 0;
    for (int x = 1; x < comp.n(); ++x)
      if (comp.g.degree(x) > comp.g.degree(root)) root = x;
    BfsLayers bl = bfs_layers(comp.g, root);
    if (!bl.unreachable.empty())
      throw InternalCheck("breadth-first search missed part of a component");
    int top = (int)bl.layers.size() - 1;
    std::vector<CoverPiece> pieces;
    {
      std::vector<int> vs = {root};
      if (top >= 1)
        vs.insert(vs.end(), bl.layers[1].begin(), bl.layers[1].end());
      std::sort(vs.begin(), vs.end());
      int pos = int(std::lower_bound(vs.begin(), vs.end(), root) - vs.begin());
      pieces.push_back({vs, star_labeling((int)vs.size(), pos, w)});
    }
    for (int i = 1; i < top; ++i) {
      Bitset keep(comp.n());
      for (int x : bl.layers[i]) keep.set(x);
      for (int x : bl.layers[i + 1]) keep.set(x);
      std::vector<int> ids;
      BipartiteGraph gi = induced(comp, keep, &ids);
      if (contains_induced(gi.g, three_k2)) {
        auto ws = contains_induced(comp.g, spider_graph(2, 2, 2));
        if (!ws)
          throw InternalCheck("three disjoint layer edges without a tripod");
        detail::certify(comp.g, "s222", spider_graph(2, 2, 2), ws->map, {});
      }
      auto part = find_chain_partition(gi.g, parts_cap,
                                       detail::degree_desc_order(gi.g));
      if (!part) throw PartitionExhausted(parts_cap);
      pieces.push_back({ids, chain_partition_labeling(gi.g, *part, parts_cap, w)});
    }
    return cover_scheme(comp.g, pieces, 2, types, w);
  };
  return component_cover(bg, builder, cover_node(2, types), width);
}

// ---- bounded-pendant four-cycles in chordal bipartite graphs ----------------

// Star, chain and one split piece per breadth-first layer graph, rooted at a
// vertex centring no P_5.  A forbidden copy in a deep layer graph walks two
// layers toward the root to close the pendant four-cycle.
inline Labeling dk_scheme(const BipartiteGraph& bg, int k, int width = -1) {
  if (k < 1) throw InvalidInput("pendant count must be positive", 0);
  width = detail::resolve_width(bg, width);
  detail::check_sides(bg);
  if (auto cyc = find_induced_cycle(bg.g, 6))
    detail::certify(bg.g, detail::pattern_name("cycle", (int)cyc->size()),
                    cycle_graph((int)cyc->size()), *cyc, {});
  SchemeNode lemma_split = split_node(k - 1, true, edgeless_node());
  std::vector<SchemeNode> types = {star_node(), chain_node(), lemma_split};
  std::string f1name = detail::pattern_name("f1", k, 1);

  auto builder = [&](const BipartiteGraph& comp, int w) -> Labeling {
    P5CenterScan scan = scan_p5_centers(comp.g);
    if (scan.non_center < 0)
      throw InternalCheck("every vertex centres a five-vertex path");
    int root = scan.non_center;
    bool root_a = comp.in_a(root);
    BfsLayers bl = bfs_layers(comp.g, root);
    if (!bl.unreachable.empty())
      throw InternalCheck("breadth-first search missed part of a component");
    std::vector<Bitset> lm = detail::layer_masks(bl, comp.n());
    int top = (int)bl.layers.size() - 1;
    std::vector<CoverPiece> pieces;
    {
      std::vector<int> vs = {root};
      if (top >= 1)
        vs.insert(vs.end(), bl.layers[1].begin(), bl.layers[1].end());
      std::sort(vs.begin(), vs.end());
      int pos = int(std::lower_bound(vs.begin(), vs.end(), root) - vs.begin());
      pieces.push_back({vs, star_labeling((int)vs.size(), pos, w)});
    }
    for (int i = 1; i < top; ++i) {
      Bitset keep(comp.n());
      for (int x : bl.layers[i]) keep.set(x);
      for (int x : bl.layers[i + 1]) keep.set(x);
      std::vector<int> ids;
      BipartiteGraph gi = induced(comp, keep, &ids);
      Labeling inner;
      if (i == 1) {
        try {
          inner = detail::translating_ids(ids, [&] { return chain_scheme(gi, w); });
        } catch (const ForbiddenPatternError&) {
          throw InternalCheck(
              "first layer graph of a non-centre holds two disjoint edges");
        }
      } else {
        bool heavy = (i % 2 == 0) ? root_a : !root_a;
        try {
          inner = detail::translating_ids(
              ids, [&] { return one_sided_f1t1_scheme(gi, k, heavy, w); });
        } catch (ForbiddenPatternError& e) {
          if (e.pattern != f1name) throw;
          const std::vector<int>& m = e.map;
          int a = m[0], b = m[1], wing = m[2], leaf = m[k + 3];
          Bitset common = comp.g.adj[a] & comp.g.adj[b] & lm[i - 1];
          if (!common.any())
            throw InternalCheck("layer copy without a shared lower neighbour");
          int c = common.find_first();
          int d = (comp.g.adj[c] & lm[i - 2]).find_first();
          std::vector<int> map(k + 6);
          map[0] = c;
          map[1] = b;
          map[2] = wing;
          map[3] = a;
          map[4] = d;
          map[5] = leaf;
          for (int j = 0; j < k; ++j) map[6 + j] = m[3 + j];
          detail::certify(comp.g, detail::pattern_name("dk", k), dk_pattern(k),
                          map, {});
        }
      }
      pieces.push_back({ids, std::move(inner)});
    }
    return cover_scheme(comp.g, pieces, 2, types, w);
  };
  return component_cover(bg, builder, cover_node(2, types), width);
}

// ---- universal chain subgraphs of chordal bipartite graphs ------------------

namespace detail {

inline SchemeNode zk_node(int k) {
  if (k <= 1) return edgeless_node();
  if (k == 2) return biclique_union_node();
  return cover_node(
      1, {cover_node(2, {star_node(), chain_node(), zk_node(k - 1)})});
}

inline Labeling zk_impl(const BipartiteGraph& bg, int k, int width) {
  if (k == 1) {
    for (int u = 0; u < bg.n(); ++u) {
      if (!bg.g.adj[u].any()) continue;
      certify(bg.g, pattern_name("zk", 1), zk_pattern(1).g,
              {u, bg.g.adj[u].find_first()}, {});
    }
    return edgeless_labeling(bg.n(), width);
  }
  if (k == 2) {
    try {
      return biclique_union_scheme(bg, width);
    } catch (const ForbiddenPatternError& e) {
      // a four-vertex path is the k = 2 copy with its vertices reordered
      const std::vector<int>& p = e.map;
      certify(bg.g, pattern_name("zk", 2), zk_pattern(2).g,
              {p[1], p[3], p[0], p[2]}, {});
    }
  }

  SchemeNode sub = zk_node(k - 1);
  std::vector<SchemeNode> types = {star_node(), chain_node(), sub};
  std::string subname = pattern_name("zk", k - 1);

  auto builder = [&](const BipartiteGraph& comp, int w) -> Labeling {
    P5CenterScan scan = scan_p5_centers(comp.g);
    if (scan.non_center < 0)
      throw InternalCheck("every vertex centres a five-vertex path");
    int root = scan.non_center;
    BfsLayers bl = bfs_layers(comp.g, root);
    if (!bl.unreachable.empty())
      throw InternalCheck("breadth-first search missed part of a component");
    std::vector<Bitset> lm = layer_masks(bl, comp.n());
    int top = (int)bl.layers.size() - 1;
    std::vector<CoverPiece> pieces;
    {
      std::vector<int> vs = {root};
      if (top >= 1)
        vs.insert(vs.end(), bl.layers[1].begin(), bl.layers[1].end());
      std::sort(vs.begin(), vs.end());
      int pos = int(std::lower_bound(vs.begin(), vs.end(), root) - vs.begin());
      pieces.push_back({vs, star_labeling((int)vs.size(), pos, w)});
    }
    for (int i = 1; i < top; ++i) {
      Bitset keep(comp.n());
      for (int x : bl.layers[i]) keep.set(x);
      for (int x : bl.layers[i + 1]) keep.set(x);
      std::vector<int> ids;
      BipartiteGraph gi = induced(comp, keep, &ids);
      Labeling inner;
      if (i == 1) {
        try {
          inner = translating_ids(ids, [&] { return chain_scheme(gi, w); });
        } catch (const ForbiddenPatternError&) {
          throw InternalCheck(
              "first layer graph of a non-centre holds two disjoint edges");
        }
      } else {
        try {
          inner = translating_ids(ids, [&] { return zk_impl(gi, k - 1, w); });
        } catch (ForbiddenPatternError& e) {
          if (e.pattern != subname) throw;
          int km1 = k - 1;
          std::vector<int> m = e.map;
          if (!lm[i].test(m[0])) {
            // transpose the copy so its ranked side faces the root
            std::vector<int> tm(2 * km1);
            for (int j = 1; j <= km1; ++j) {
              tm[j - 1] = m[2 * km1 - j];
              tm[km1 + j - 1] = m[km1 - j];
            }
            m = std::move(tm);
          }
          Bitset common = lm[i - 1];
          for (int j = 0; j < km1; ++j) {
            if (!lm[i].test(m[j]))
              throw InternalCheck("copy's ranked side straddles layers");
            common &= comp.g.adj[m[j]];
          }
          if (!common.any())
            throw InternalCheck("layer copy without a shared lower neighbour");
          int c = common.find_first();
          int d = (comp.g.adj[c] & lm[i - 2]).find_first();
          std::vector<int> map(2 * k);
          for (int j = 0; j < km1; ++j) map[j] = m[j];
          map[k - 1] = d;
          for (int j = 0; j < km1; ++j) map[k + j] = m[km1 + j];
          map[2 * k - 1] = c;
          certify(comp.g, pattern_name("zk", k), zk_pattern(k).g, map, {});
        }
      }
      pieces.push_back({ids, std::move(inner)});
    }
    return cover_scheme(comp.g, pieces, 2, types, w);
  };
  return component_cover(bg, builder, cover_node(2, types), width);
}

}  // namespace detail

// Recursive layer labeling for chordal bipartite graphs avoiding the k-th
// universal chain graph; the base cases are edgeless (k = 1) and biclique
// unions (k = 2).  Copies found in deep layers are extended one index at a
// time on the way back up.
inline Labeling zk_scheme(const BipartiteGraph& bg, int k, int width = -1) {
  if (k < 1) throw InvalidInput("chain index must be positive", 0);
  width = detail::resolve_width(bg, width);
  detail::check_sides(bg);
  if (k >= 3) {
    if (auto cyc = find_induced_cycle(bg.g, 6))
      detail::certify(bg.g, detail::pattern_name("cycle", (int)cyc->size()),
                      cycle_graph((int)cyc->size()), *cyc, {});
  }
  return detail::zk_impl(bg, k, width);
}

}  // namespace adjlab
