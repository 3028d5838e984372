#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

#include "adjlab/labels.hpp"

namespace adjlab {

// ---- leaf labelings ---------------------------------------------------------

inline Labeling edgeless_labeling(int n, int width) {
  Labeling L{n, width, edgeless_node(), {}};
  L.labels.resize(n);
  return L;
}

inline Labeling star_labeling(int n, int center, int width) {
  if (center < 0 || center >= n) throw InvalidInput("star centre out of range", center);
  Labeling L{n, width, star_node(), {}};
  for (int v = 0; v < n; ++v) {
    BitWriter bw;
    bw.put(v == center ? 1 : 0, 1);
    L.labels.push_back(bw.take());
  }
  return L;
}

// ---- cover combinator -------------------------------------------------------

// A piece is any labeled graph over a subset of the host's vertices; its
// edges need not be induced (a star piece omits leaf-leaf edges).
struct CoverPiece {
  std::vector<int> vertices;  // host ids; position = piece-local id
  Labeling inner;
};

// Union-of-pieces labeling: a vertex stores (piece id, inner label) for each
// piece holding it; two vertices are adjacent iff some shared piece decodes
// adjacent.  Validates multiplicity <= c and that the decoded edge set equals
// the host's exactly.
inline Labeling cover_scheme(const Graph& g, const std::vector<CoverPiece>& pieces,
                             int c, std::vector<SchemeNode> piece_types,
                             int width) {
  SchemeNode scheme = cover_node(c, std::move(piece_types));
  for (std::size_t pid = 0; pid < pieces.size(); ++pid) {
    const CoverPiece& p = pieces[pid];
    if ((int)p.vertices.size() != p.inner.n)
      throw InternalCheck("cover piece labeling size differs from its vertex list");
    if (!(p.inner.scheme == cover_piece_type(scheme, (int)pid)))
      throw InternalCheck("cover piece scheme differs from declared piece type");
    if (p.inner.width != width)
      throw InternalCheck("cover piece built with a different index width");
    std::vector<char> seen(g.n, 0);
    for (int v : p.vertices) {
      if (v < 0 || v >= g.n) throw InvalidInput("cover piece vertex out of range", v);
      if (seen[v]) throw InvalidInput("cover piece repeats a vertex", v);
      seen[v] = 1;
    }
  }

  std::vector<std::vector<std::pair<int, int>>> memb(g.n);  // (pid, local id)
  for (std::size_t pid = 0; pid < pieces.size(); ++pid)
    for (std::size_t i = 0; i < pieces[pid].vertices.size(); ++i)
      memb[pieces[pid].vertices[i]].emplace_back((int)pid, (int)i);
  for (int v = 0; v < g.n; ++v)
    if ((int)memb[v].size() > c)
      throw CoverError("vertex lies in more pieces than the cover bound", v, -1);

  Labeling L{g.n, width, scheme, {}};
  int pidw = cover_pid_width(scheme, width);
  int wc = field_width(c);
  for (int v = 0; v < g.n; ++v) {
    BitWriter bw;
    bw.put(memb[v].size(), wc);
    for (auto [pid, local] : memb[v]) {
      bw.put(pid, pidw);
      bw.append(pieces[pid].inner.labels[local]);
    }
    L.labels.push_back(bw.take());
  }

  // decoded edge union must equal E(g) exactly
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v) {
      bool got = decode_adjacent(L, u, v);
      if (got && !g.adjacent(u, v))
        throw CoverError("cover decodes an edge the host lacks", u, v);
      if (!got && g.adjacent(u, v))
        throw CoverError("cover leaves a host edge uncovered", u, v);
    }
  return L;
}

// ---- split combinator -------------------------------------------------------

// Flag mode per core vertex per side; `auto_mode` lets the engine pick
// whichever of the two fits the bound.
inline constexpr int mode_neighbours = 0;
inline constexpr int mode_non_neighbours = 1;
inline constexpr int auto_mode = -1;

struct SplitFlagsSpec {
  int mode_b1 = auto_mode;
  int mode_b2 = auto_mode;
};

struct SplitStep {
  std::vector<int> A, B1, B2;          // residual-local vertex ids, a partition
  std::vector<SplitFlagsSpec> flags;   // parallel to A; empty = all auto
  // Core labeling supplied by the provider itself, indexed by ascending
  // residual-local id within A; when absent the engine calls the inner
  // builder on the induced core graph.
  std::optional<Labeling> inner;
};

// The provider sees the residual together with the residual-local -> input
// vertex map, so its errors can name input vertices directly.
using SplitProvider =
    std::function<SplitStep(const BipartiteGraph&, const std::vector<int>&)>;
using InnerBuilder = std::function<Labeling(const BipartiteGraph&, int)>;

namespace detail {

// Rewrites the vertex ids carried by a labeling error from `ids`-local
// numbering to the caller's numbering and rethrows.
template <class Fn>
auto translating_ids(const std::vector<int>& ids, Fn&& fn) {
  auto fix = [&](std::vector<int>& vs) {
    for (int& v : vs) v = ids[v];
  };
  try {
    return fn();
  } catch (ForbiddenPatternError& e) {
    fix(e.map);
    throw;
  } catch (ResidualError& e) {
    fix(e.residual);
    throw;
  } catch (SplitError& e) {
    fix(e.witness);
    throw;
  } catch (CoverError& e) {
    if (e.u >= 0) e.u = ids[e.u];
    if (e.v >= 0) e.v = ids[e.v];
    throw;
  } catch (OddCycleError& e) {
    fix(e.cycle);
    throw;
  }
}

struct SplitNodeRec {
  std::vector<int> A;                  // original ids, ascending
  std::vector<int> B1, B2;             // original ids
  std::vector<SplitFlagsSpec> modes;   // parallel to A
  std::uint64_t l_lo, l_hi, r_lo, r_hi;
  std::vector<Label> inner_labels;     // parallel to A
};

struct SplitBuild {
  const BipartiteGraph& bg;
  const SplitProvider& provider;
  const InnerBuilder& inner_builder;
  const SchemeNode& inner_type;
  int d;
  bool bipartite;
  int width;
  std::vector<SplitNodeRec> nodes;
  std::vector<std::uint64_t> idx;      // global index per original vertex
  std::vector<int> home;               // node owning each vertex's core slot

  SplitBuild(const BipartiteGraph& bg, const SplitProvider& provider,
             const InnerBuilder& inner_builder, const SchemeNode& inner_type,
             int d, bool bipartite, int width)
      : bg(bg),
        provider(provider),
        inner_builder(inner_builder),
        inner_type(inner_type),
        d(d),
        bipartite(bipartite),
        width(width),
        idx(bg.n(), 0),
        home(bg.n(), -1) {}

  void recurse(const std::vector<int>& verts, std::uint64_t lo, std::uint64_t hi,
               int depth) {
    if (verts.empty()) return;
    if (depth > bg.n())
      throw SplitError("split recursion exceeded the vertex count", verts);

    Bitset keep(bg.n());
    for (int v : verts) keep.set(v);
    std::vector<int> orig;
    BipartiteGraph residual = induced(bg, keep, &orig);

    SplitStep step = provider(residual, orig);
    int rn = residual.n();
    if (step.A.empty()) throw SplitError("split step with empty core set", verts);
    if (!step.flags.empty() && step.flags.size() != step.A.size())
      throw InternalCheck("split flag specs not parallel to the core set");
    std::vector<int> owner(rn, -1);  // 0=A 1=B1 2=B2
    auto claim = [&](const std::vector<int>& part, int tag) {
      for (int v : part) {
        if (v < 0 || v >= rn || owner[v] != -1)
          throw InternalCheck("split step is not a partition of the residual");
        owner[v] = tag;
      }
    };
    claim(step.A, 0);
    claim(step.B1, 1);
    claim(step.B2, 2);
    for (int v = 0; v < rn; ++v)
      if (owner[v] == -1)
        throw InternalCheck("split step is not a partition of the residual");

    for (int u : step.B1)
      residual.g.adj[u].for_each([&](int v) {
        if (owner[v] == 2)
          throw SplitError("edge between the two residual sides",
                           {orig[u], orig[v]});
      });

    // canonical order: ascending original ids (matches induced() numbering)
    std::vector<std::size_t> perm(step.A.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(),
              [&](std::size_t x, std::size_t y) { return step.A[x] < step.A[y]; });
    SplitNodeRec rec;
    for (std::size_t i : perm) {
      rec.A.push_back(orig[step.A[i]]);
      rec.modes.push_back(step.flags.empty() ? SplitFlagsSpec{} : step.flags[i]);
    }
    for (int v : step.B1) rec.B1.push_back(orig[v]);
    for (int v : step.B2) rec.B2.push_back(orig[v]);
    std::sort(rec.B1.begin(), rec.B1.end());
    std::sort(rec.B2.begin(), rec.B2.end());

    std::uint64_t nb1 = rec.B1.size(), nb2 = rec.B2.size();
    // empty ranges anchor at the residual's endpoints so that the stored
    // (left, right) pair is unique to this recursion node
    rec.l_lo = lo;
    rec.l_hi = nb1 ? lo + nb1 - 1 : lo - 1;
    rec.r_lo = nb2 ? hi - nb2 + 1 : hi;
    rec.r_hi = nb2 ? hi : hi - 1;
    std::uint64_t a_lo = lo + nb1;
    for (std::size_t i = 0; i < rec.A.size(); ++i) {
      idx[rec.A[i]] = a_lo + i;
      home[rec.A[i]] = (int)nodes.size();
    }

    Labeling inner;
    if (step.inner) {
      inner = std::move(*step.inner);
    } else {
      Bitset akeep(bg.n());
      for (int v : rec.A) akeep.set(v);
      BipartiteGraph agraph = induced(bg, akeep);
      if (!inner_builder)
        throw InternalCheck("split step supplied no core labeling");
      inner = inner_builder(agraph, width);
    }
    if (!(inner.scheme == inner_type))
      throw InternalCheck("split inner labeling scheme differs from declared type");
    if (inner.n != (int)rec.A.size() || inner.width != width)
      throw InternalCheck("split inner labeling shape mismatch");
    rec.inner_labels.reserve(rec.A.size());
    rec.inner_labels = std::move(inner.labels);

    std::vector<int> b1 = rec.B1, b2 = rec.B2;
    nodes.push_back(std::move(rec));
    if (nb1) recurse(b1, lo, lo + nb1 - 1, depth + 1);
    if (nb2) recurse(b2, hi - nb2 + 1, hi, depth + 1);
  }
};

}  // namespace detail

// Recursive range labeling: each vertex's label carries its core-step fields
// (index, the two child ranges, two flag lists, inner label).  The decoder's
// cases: equal range pairs = same step, inner decode; index inside a stored
// range = flag lookup; disjoint = non-adjacent.
inline Labeling split_scheme(const BipartiteGraph& bg, const SplitProvider& provider,
                             const InnerBuilder& inner_builder,
                             const SchemeNode& inner_type, int d,
                             bool bipartite_mode, int width) {
  detail::SplitBuild build(bg, provider, inner_builder, inner_type, d,
                           bipartite_mode, width);
  std::vector<int> all(bg.n());
  std::iota(all.begin(), all.end(), 0);
  build.recurse(all, 1, bg.n(), 0);

  SchemeNode scheme = split_node(d, bipartite_mode, inner_type);
  Labeling L{bg.n(), width, scheme, {}};
  L.labels.resize(bg.n());
  int wd = field_width(d);
  for (const detail::SplitNodeRec& rec : build.nodes) {
    for (std::size_t i = 0; i < rec.A.size(); ++i) {
      int u = rec.A[i];
      BitWriter bw;
      if (bipartite_mode) bw.put(bg.in_a(u) ? 0 : 1, 1);
      bw.put(build.idx[u], width);
      bw.put(rec.l_lo, width);
      bw.put(rec.l_hi, width);
      bw.put(rec.r_lo, width);
      bw.put(rec.r_hi, width);
      for (int s = 0; s < 2; ++s) {
        const std::vector<int>& side = s == 0 ? rec.B1 : rec.B2;
        int want = s == 0 ? rec.modes[i].mode_b1 : rec.modes[i].mode_b2;
        std::vector<std::uint64_t> nbr, non;
        for (int x : side) {
          bool opposite = bg.in_a(u) != bg.in_a(x);
          if (bg.g.adjacent(u, x))
            nbr.push_back(build.idx[x]);
          else if (!bipartite_mode || opposite)
            non.push_back(build.idx[x]);
        }
        int mode;
        if (want == auto_mode)
          mode = (int)nbr.size() <= d ? mode_neighbours : mode_non_neighbours;
        else
          mode = want;
        const std::vector<std::uint64_t>& list = mode == mode_neighbours ? nbr : non;
        if ((int)list.size() > d)
          throw SplitError("flag list for vertex exceeds the bound d", {u});
        std::vector<std::uint64_t> sorted = list;
        std::sort(sorted.begin(), sorted.end());
        bw.put(mode, 1);
        bw.put(sorted.size(), wd);
        for (auto x : sorted) bw.put(x, width);
      }
      bw.append(rec.inner_labels[i]);
      L.labels[u] = bw.take();
    }
  }
  return L;
}

// Cover with one piece per connected component, multiplicity 1.
inline Labeling component_cover(const BipartiteGraph& bg,
                                const std::function<Labeling(const BipartiteGraph&, int)>& piece_builder,
                                const SchemeNode& piece_type, int width) {
  std::vector<CoverPiece> pieces;
  for (const Bitset& comp : components(bg.g)) {
    std::vector<int> orig;
    BipartiteGraph sub = induced(bg, comp, &orig);
    Labeling piece = detail::translating_ids(
        orig, [&] { return piece_builder(sub, width); });
    pieces.push_back({orig, std::move(piece)});
  }
  if (pieces.empty()) pieces.push_back({{}, Labeling{0, width, piece_type, {}}});
  return cover_scheme(bg.g, pieces, 1, {piece_type}, width);
}

}  // namespace adjlab
