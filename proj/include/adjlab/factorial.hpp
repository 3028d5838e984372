#pragma once

#include <cmath>
#include <string>

#include "adjlab/class_spec.hpp"
#include "adjlab/parameters.hpp"

namespace adjlab {

// ---- labelled speed counting -----------------------------------------------

// Exact labelled count by full enumeration of all 2^(n choose 2) graphs; no
// symmetry pruning, since labelled graphs are what is being counted.
inline long long count_labelled(const ClassSpec& spec, int n, int cap = 8) {
  if (n < 0 || n > cap) throw InvalidInput("labelled counting cap exceeded", n);
  long long count = 0;
  std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (member(spec, graph_from_mask(n, mask)).member) ++count;
  return count;
}

struct SpeedRow {
  int n = 0;
  long long count = 0;
  double stat = 0.0;  // log2(count) / (n log2 n)
};

struct SpeedTable {
  std::string class_id;
  std::vector<SpeedRow> rows;
};

inline SpeedTable speed_table(const ClassSpec& spec, int n_max, int cap = 8) {
  SpeedTable t;
  t.class_id = spec.name;
  for (int n = 0; n <= n_max; ++n) {
    SpeedRow row;
    row.n = n;
    row.count = count_labelled(spec, n, cap);
    if (n >= 2 && row.count > 0)
      row.stat = std::log2((double)row.count) / (n * std::log2((double)n));
    t.rows.push_back(row);
  }
  return t;
}

// ---- forest-and-complement-forest characterization -------------------------

struct ForestPairCounterexample {
  int na = 0, nb = 0;
  std::uint64_t mask = 0;     // cross-edge mask, row-major from side A
  bool both_forests = false;  // the structural side of the equivalence
  bool inside_targets = false;  // the containment side
};

struct ForestPairReport {
  long long graphs = 0;
  std::vector<ForestPairCounterexample> counterexamples;
  bool ok() const { return counterexamples.empty(); }
};

namespace detail {

inline BipartiteGraph sided_from_mask(int na, int nb, std::uint64_t mask) {
  Graph g(na + nb);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      if (mask >> (i * nb + j) & 1) g.add_edge(i, na + j);
  std::vector<int> a(na);
  std::iota(a.begin(), a.end(), 0);
  return with_side_a(std::move(g), a);
}

}  // namespace detail

// Exhaustively tests, over all sided bipartite graphs with part sizes summing
// to at most max_vertices (one orientation per pair), the equivalence:
// the graph and its bipartite complement are both forests iff the graph is a
// side-respecting induced subgraph of P7, of S_{1,2,3}, or of some F_{t,p}.
inline ForestPairReport lemma1_check(int max_vertices = 8) {
  if (max_vertices < 0 || max_vertices > 9)
    throw InvalidInput("forest-pair check cap exceeded", max_vertices);
  ForestPairReport rep;
  std::vector<BipartiteGraph> hosts;
  hosts.push_back(bipartition(path_graph(7)));
  hosts.push_back(bipartition(spider_graph(1, 2, 3)));
  for (int t = 1; t + 1 <= max_vertices; ++t)
    hosts.push_back(f_pattern(t, max_vertices - t));
  for (int na = 0; na <= max_vertices; ++na)
    for (int nb = na; na + nb <= max_vertices; ++nb) {
      std::uint64_t total = std::uint64_t{1} << (na * nb);
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        BipartiteGraph bg = detail::sided_from_mask(na, nb, mask);
        ++rep.graphs;
        bool lhs = is_forest(bg.g) && is_forest(bipartite_complement(bg).g);
        bool rhs = false;
        if (is_forest(bg.g)) {
          // the target hosts are forests, so non-forests can never embed
          for (std::size_t i = 0; !rhs && i < hosts.size(); ++i)
            rhs = contains_either_sided(hosts[i], bg).has_value();
        }
        if (lhs != rhs)
          rep.counterexamples.push_back({na, nb, mask, lhs, rhs});
      }
    }
  return rep;
}

// ---- bounded-degree / bounded-symmetric-difference peeling -----------------

struct PeelStep {
  int vertex = -1;  // deleted at this step
  bool by_degree = true;
  std::vector<int> neighbours;  // degree step: full neighbour list
  int partner = -1;             // sd step: the retained pair member
  std::vector<int> sym_diff;    // sd step: third vertices adjacent to one
  bool partner_adjacent = false;
};

struct PeelRecord {
  int n = 0;
  std::vector<PeelStep> steps;
};

// Peels one vertex per step: the smallest vertex of degree <= degree_cap,
// else the lexicographically first pair with third-vertex symmetric
// difference <= sd_cap (its smaller member is deleted).  The caps are the
// ones provable for Y-free chordal bipartite inputs, which are required.
inline PeelRecord y_encode(const Graph& g, int degree_cap = 4, int sd_cap = 6) {
  auto mr = member(named_class("y-free-chordal-bipartite"), g);
  if (!mr.member)
    throw InvalidInput(
        "input graph is not Y-free chordal bipartite (" +
            mr.violation->reason + ")",
        mr.violation->vertices.empty() ? 0 : mr.violation->vertices[0]);
  PeelRecord rec;
  rec.n = g.n;
  Bitset alive(g.n);
  alive.set_all();
  int left = g.n;
  while (left > 0) {
    int pick = -1;
    for (int v = 0; v < g.n && pick < 0; ++v)
      if (alive.test(v) && (int)(g.adj[v] & alive).count() - 1 < degree_cap)
        pick = v;
    if (pick >= 0) {
      PeelStep st;
      st.vertex = pick;
      st.by_degree = true;
      alive.reset(pick);
      st.neighbours = (g.adj[pick] & alive).to_vector();
      rec.steps.push_back(std::move(st));
      --left;
      continue;
    }
    bool stepped = false;
    for (int u = 0; u < g.n && !stepped; ++u) {
      if (!alive.test(u)) continue;
      for (int v = u + 1; v < g.n && !stepped; ++v) {
        if (!alive.test(v)) continue;
        Bitset d = (g.adj[u] ^ g.adj[v]) & alive;
        d.reset(u);
        d.reset(v);
        if ((int)d.count() > sd_cap) continue;
        PeelStep st;
        st.vertex = u;
        st.by_degree = false;
        st.partner = v;
        st.sym_diff = d.to_vector();
        st.partner_adjacent = g.adjacent(u, v);
        rec.steps.push_back(std::move(st));
        alive.reset(u);
        --left;
        stepped = true;
      }
    }
    if (!stepped)
      throw ResidualError("no low-degree vertex and no low-sd pair",
                          alive.to_vector());
  }
  return rec;
}

// Replays a peel record backwards, re-inserting each vertex with its
// recorded neighbourhood (degree step) or the partner's current
// neighbourhood toggled along the recorded difference (sd step).
inline Graph y_decode(const PeelRecord& rec) {
  if (rec.n < 0 || (int)rec.steps.size() != rec.n)
    throw InvalidInput("record does not hold one step per vertex",
                       rec.steps.size());
  Graph g(rec.n);
  Bitset present(rec.n);
  auto need_present = [&](int v, std::size_t step) {
    if (v < 0 || v >= rec.n || !present.test(v))
      throw InvalidInput("step references an absent vertex", step);
  };
  for (std::size_t i = rec.steps.size(); i-- > 0;) {
    const PeelStep& st = rec.steps[i];
    if (st.vertex < 0 || st.vertex >= rec.n || present.test(st.vertex))
      throw InvalidInput("step vertex out of order", i);
    if (st.by_degree) {
      for (int w : st.neighbours) {
        need_present(w, i);
        g.add_edge(st.vertex, w);
      }
    } else {
      need_present(st.partner, i);
      Bitset nb = g.adj[st.partner];
      for (int w : st.sym_diff) {
        need_present(w, i);
        nb.assign(w, !nb.test(w));
      }
      if (st.partner_adjacent) nb.set(st.partner);
      nb.for_each([&](int w) { g.add_edge(st.vertex, w); });
    }
    present.set(st.vertex);
  }
  return g;
}

// ---- long-path symmetric-difference property --------------------------------

struct LongPathSdReport {
  bool has_p14 = false;
  long long sd = -1;       // minimum pair sd when a P14 is present
  std::vector<int> pair;   // a minimizing pair
  bool ok = true;          // no P14, or some pair has sd <= 2
};

// For Z-free chordal bipartite inputs: a graph holding an induced P14 must
// have a vertex pair of symmetric difference at most 2.
inline LongPathSdReport z_property_check(const Graph& g,
                                         const SearchOptions& opt = {}) {
  auto mr = member(named_class("z-free-chordal-bipartite"), g, opt);
  if (!mr.member)
    throw InvalidInput("input graph is not Z-free chordal bipartite (" +
                           mr.violation->reason + ")",
                       mr.violation->vertices.empty()
                           ? 0
                           : mr.violation->vertices[0]);
  LongPathSdReport rep;
  if (!contains_induced(g, path_graph(14), opt)) return rep;
  rep.has_p14 = true;
  ParamReport r = min_pair_sd(g);
  rep.sd = r.value;
  rep.pair = r.witness;
  rep.ok = rep.sd <= 2;
  return rep;
}

// ---- breadth-first layer property -------------------------------------------

struct LayerPathReport {
  bool ok = true;
  int root = -1, layer = -1;  // first violating root and layer index
  std::vector<int> p12;       // the offending induced path, input ids
};

// For X-free chordal bipartite connected inputs: every breadth-first layer
// graph G[V_i + V_{i+1}] (i >= 1) from every root must be P12-free.  Passing
// max_roots limits the scan to the smallest roots.
inline LayerPathReport x_layer_check(const Graph& g, int max_roots = -1,
                                     const SearchOptions& opt = {}) {
  auto mr = member(named_class("x-free-chordal-bipartite"), g, opt);
  if (!mr.member) {
    if (mr.violation->reason == "x")
      throw ForbiddenPatternError("x", mr.violation->vertices);
    if (mr.violation->reason == "long-induced-cycle")
      throw ForbiddenPatternError(
          "cycle(" + std::to_string(mr.violation->vertices.size()) + ")",
          mr.violation->vertices);
    throw OddCycleError(mr.violation->vertices);
  }
  Graph p12 = path_graph(12);
  LayerPathReport rep;
  int roots = max_roots < 0 ? g.n : std::min(max_roots, g.n);
  for (int r = 0; r < roots; ++r) {
    BfsLayers bl = bfs_layers(g, r);
    if (!bl.unreachable.empty())
      throw InvalidInput("layer check needs a connected graph",
                         bl.unreachable[0]);
    for (std::size_t i = 1; i + 1 < bl.layers.size(); ++i) {
      Bitset keep(g.n);
      for (int v : bl.layers[i]) keep.set(v);
      for (int v : bl.layers[i + 1]) keep.set(v);
      std::vector<int> ids;
      Graph sub = induced(g, keep, &ids);
      if (auto w = contains_induced(sub, p12, opt)) {
        rep.ok = false;
        rep.root = r;
        rep.layer = (int)i;
        for (int v : w->map) rep.p12.push_back(ids[v]);
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace adjlab
