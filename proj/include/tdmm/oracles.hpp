#pragma once

#include <chrono>
#include <cstdint>
#include <span>

#include "tdmm/graph.hpp"
#include "tdmm/matching.hpp"

namespace tdmm {

/// Bitmask solvers address vertices as bits of a 64-bit word.
inline constexpr std::size_t kMaxSolverVertices = 64;

struct SolverLimits {
  /// Larger inputs raise ResourceError. Capped at kMaxSolverVertices.
  std::size_t vertex_limit = 24;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::chrono::nanoseconds elapsed{0};
};

template <typename Witness>
struct SolverResult {
  std::size_t value = 0;
  Witness witness;
  SearchStats stats;
};

/// Every vertex has a neighbor in `s`. Throws DomainError if g has an
/// isolated vertex or `s` names an unknown vertex.
bool is_total_dominating(const Graph& g, std::span<const Vertex> s);

/// Edges pairwise disjoint. Throws DomainError if an edge is not in g.
bool is_matching(const Graph& g, std::span<const Edge> m);
/// Matching that every edge of g touches.
bool is_maximal_matching(const Graph& g, std::span<const Edge> m);

/// Every edge of g outside `m` shares an endpoint with an edge of `m`.
/// Throws DomainError if an edge of `m` is not in g.
bool edge_domination_check(const Graph& g, const Matching& m);

/// Exact total domination number with the lexicographically least minimum
/// witness. Iterative deepening on the set size; each size is decided by
/// branching on the neighbors of a most-constrained undominated vertex.
SolverResult<VertexSet> total_domination_number(const Graph& g, SolverLimits limits = {});

/// Exact minimum maximal matching with the lexicographically least witness
/// (sorted edge order). Branches on an uncovered edge: one of the free edges
/// at either endpoint must enter the matching.
SolverResult<Matching> minimum_maximal_matching(const Graph& g, SolverLimits limits = {});

struct OracleVerdict {
  std::size_t gamma_t = 0;
  std::size_t mu_star = 0;
  bool equal() const { return gamma_t == 2 * mu_star; }
};

/// gamma_t and mu* summed over connected components.
OracleVerdict gamma_t_2mu_oracle(const Graph& g, SolverLimits limits = {});
bool is_gamma_t_2mu_graph_oracle(const Graph& g, SolverLimits limits = {});

struct BoundReport {
  std::size_t min_degree = 0;
  std::size_t gamma_t = 0;
  std::size_t mu_star = 0;
  /// 2 mu* when min degree <= 2, else 2 mu* - delta + 2.
  long long bound = 0;
  bool holds = false;
  long long slack() const { return bound - static_cast<long long>(gamma_t); }
};

BoundReport check_proposition1(const Graph& g, SolverLimits limits = {});

}  // namespace tdmm
