#pragma once

#include <random>

#include "adjlab/class_spec.hpp"

namespace adjlab {

struct SampleOptions {
  double edge_prob = -1.0;    // < 0: 0.2 for chordal-bipartite specs, else 0.5
  long long attempts = 1000;  // rejection mode retry budget
  bool repair = false;        // delete witness vertices instead of rejecting
  SearchOptions search;
};

namespace detail {

// mt19937_64 output mapped through a fixed 53-bit threshold; std::bernoulli
// is not bit-portable across standard libraries, this is.
inline bool coin(std::mt19937_64& rng, double prob) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < prob;
}

inline double sample_prob(const ClassSpec& spec, const SampleOptions& opt) {
  if (opt.edge_prob >= 0) return opt.edge_prob;
  return spec.require_chordal_bipartite ? 0.2 : 0.5;
}

inline BipartiteGraph random_sided(std::mt19937_64& rng, int n, double prob) {
  Bitset sa(n), sb(n);
  for (int v = 0; v < n; ++v) (coin(rng, 0.5) ? sa : sb).set(v);
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (sa.test(u) != sa.test(v) && coin(rng, prob)) g.add_edge(u, v);
  return BipartiteGraph{std::move(g), sa, sb};
}

inline Graph random_graph(std::mt19937_64& rng, int n, double prob) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng, prob)) g.add_edge(u, v);
  return g;
}

}  // namespace detail

// Deterministic in-class sampling with explicit sides.  Rejection mode
// retries fresh graphs; repair mode deletes the smallest vertex of each
// membership violation (hereditary classes are deletion-closed, so this
// terminates within n steps).
inline BipartiteGraph sample_bipartite_in_class(const ClassSpec& spec, int n,
                                                std::uint64_t seed,
                                                const SampleOptions& opt = {}) {
  if (n < 0) throw InvalidInput("negative sample size", 0);
  std::mt19937_64 rng(seed);
  double prob = detail::sample_prob(spec, opt);
  if (opt.repair) {
    BipartiteGraph bg = detail::random_sided(rng, n, prob);
    for (;;) {
      auto r = member(spec, bg, opt.search);
      if (r.member) return bg;
      if (r.violation->vertices.empty())
        throw InternalCheck("membership violation without vertices");
      int gone = *std::min_element(r.violation->vertices.begin(),
                                   r.violation->vertices.end());
      Bitset keep(bg.n());
      keep.set_all();
      keep.reset(gone);
      bg = induced(bg, keep);
    }
  }
  for (long long a = 0; a < opt.attempts; ++a) {
    BipartiteGraph bg = detail::random_sided(rng, n, prob);
    if (member(spec, bg, opt.search).member) return bg;
  }
  throw BudgetExceeded(opt.attempts);
}

inline Graph sample_in_class(const ClassSpec& spec, int n, std::uint64_t seed,
                             const SampleOptions& opt = {}) {
  bool sided = spec.require_bipartite || spec.require_chordal_bipartite;
  for (const auto& fp : spec.forbidden)
    sided |= fp.orientation != Orientation::two_sided;
  if (sided) return sample_bipartite_in_class(spec, n, seed, opt).g;
  if (n < 0) throw InvalidInput("negative sample size", 0);
  std::mt19937_64 rng(seed);
  double prob = detail::sample_prob(spec, opt);
  if (opt.repair) {
    Graph g = detail::random_graph(rng, n, prob);
    for (;;) {
      auto r = member(spec, g, opt.search);
      if (r.member) return g;
      if (r.violation->vertices.empty())
        throw InternalCheck("membership violation without vertices");
      int gone = *std::min_element(r.violation->vertices.begin(),
                                   r.violation->vertices.end());
      Bitset keep(g.n);
      keep.set_all();
      keep.reset(gone);
      g = induced(g, keep);
    }
  }
  for (long long a = 0; a < opt.attempts; ++a) {
    Graph g = detail::random_graph(rng, n, prob);
    if (member(spec, g, opt.search).member) return g;
  }
  throw BudgetExceeded(opt.attempts);
}

}  // namespace adjlab
