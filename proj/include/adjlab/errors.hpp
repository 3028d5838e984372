#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace adjlab {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed construction input: loop edge, out-of-range endpoint, duplicate
// pair, bad format byte.  `position` is the offending edge/byte index.
struct InvalidInput : Error {
  InvalidInput(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position = 0;
};

// Raised by bipartition() on a non-bipartite graph; carries one odd cycle.
struct OddCycleError : Error {
  explicit OddCycleError(std::vector<int> cycle)
      : Error("graph is not bipartite (odd cycle of length " +
              std::to_string(cycle.size()) + ")"),
        cycle(std::move(cycle)) {}
  std::vector<int> cycle;
};

// Search node budget exhausted; distinct from a definite "not found".
struct BudgetExceeded : Error {
  explicit BudgetExceeded(long long budget)
      : Error("search budget exceeded (" + std::to_string(budget) + " nodes)"),
        budget(budget) {}
  long long budget = 0;
};

// An induced embedding of `pattern` certifying that an input lies outside the
// class a routine requires.  `map[i]` is the host vertex playing pattern
// vertex i.
struct ForbiddenPatternError : Error {
  ForbiddenPatternError(std::string pattern, std::vector<int> map)
      : Error("forbidden pattern present: " + pattern),
        pattern(std::move(pattern)),
        map(std::move(map)) {}
  std::string pattern;
  std::vector<int> map;
};

// A peel rule found no vertex to remove; `residual` is the stuck subgraph.
struct ResidualError : Error {
  ResidualError(const std::string& msg, std::vector<int> residual)
      : Error(msg), residual(std::move(residual)) {}
  std::vector<int> residual;
};

// Cover validation failure (uncovered or excess edge, multiplicity overflow).
struct CoverError : Error {
  CoverError(const std::string& msg, int u, int v) : Error(msg), u(u), v(v) {}
  int u = -1, v = -1;
};

// Split decomposition failure (empty A, B1-B2 edge, flag bound exceeded).
struct SplitError : Error {
  SplitError(const std::string& msg, std::vector<int> witness)
      : Error(msg), witness(std::move(witness)) {}
  std::vector<int> witness;
};

// Exhaustive search proved no induced hypercube embedding exists; distinct
// from running out of budget.
struct NotEmbeddable : Error {
  using Error::Error;
};

// Chain-partition search gave up below the part cap.
struct PartitionExhausted : Error {
  explicit PartitionExhausted(int parts_cap)
      : Error("no chain partition with at most " + std::to_string(parts_cap) +
              " parts"),
        parts_cap(parts_cap) {}
  int parts_cap = 0;
};

// Label payload cannot be parsed under its declared scheme.
struct MalformedLabel : Error {
  using Error::Error;
};

// Two labels of the same vertex were compared.
struct SameVertexQuery : Error {
  SameVertexQuery() : Error("adjacency query on a single vertex") {}
};

// A condition the surrounding construction proves impossible was observed;
// indicates a defect, never expected on any input.
struct InternalCheck : Error {
  using Error::Error;
};

}  // namespace adjlab
