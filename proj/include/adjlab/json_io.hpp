#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "adjlab/graph.hpp"

namespace adjlab {

// JSON edge-list form: {"n": int, "edges": [[u,v],...]} with an optional
// "sides" array of 0/1 flags (0 = side A) fixing a bipartition.

inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["n"] = g.n;
  auto edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

inline nlohmann::json graph_to_json(const BipartiteGraph& bg) {
  nlohmann::json j = graph_to_json(bg.g);
  auto sides = nlohmann::json::array();
  for (int v = 0; v < bg.n(); ++v) sides.push_back(bg.in_a(v) ? 0 : 1);
  j["sides"] = std::move(sides);
  return j;
}

struct ParsedGraph {
  Graph g;
  std::optional<BipartiteGraph> bipartite;  // set iff "sides" was present
};

inline ParsedGraph graph_from_json(const nlohmann::json& j) {
  if (!j.contains("n") || !j.contains("edges"))
    throw InvalidInput("graph json needs \"n\" and \"edges\"", 0);
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2)
      throw InvalidInput("edge entry is not a pair", edges.size());
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  ParsedGraph out{build_graph(n, edges), std::nullopt};
  if (j.contains("sides")) {
    const auto& sides = j.at("sides");
    if (int(sides.size()) != n)
      throw InvalidInput("sides array length differs from n", sides.size());
    Bitset a(n), b(n);
    for (int v = 0; v < n; ++v) {
      int s = sides[v].get<int>();
      if (s != 0 && s != 1) throw InvalidInput("side flag must be 0 or 1", v);
      s == 0 ? a.set(v) : b.set(v);
    }
    for (auto [u, v] : out.g.edges())
      if (a.test(u) == a.test(v))
        throw InvalidInput("edge joins two vertices of one side", u);
    out.bipartite = BipartiteGraph(out.g, std::move(a), std::move(b));
  }
  return out;
}

}  // namespace adjlab
