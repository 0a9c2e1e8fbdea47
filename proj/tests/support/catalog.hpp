#pragma once

// Non-isomorphic small graphs for exhaustive checks.

#include <cstdint>
#include <vector>

#include "tdmm/graph.hpp"

namespace tdmm::testing {

/// Canonical adjacency code (upper triangle, row-major) for n <= 11.
std::uint64_t canonical_code(const Graph& g);

/// One representative per isomorphism class of graphs on exactly n vertices.
std::vector<Graph> all_graphs(std::size_t n);

/// Connected representatives on exactly n vertices.
std::vector<Graph> connected_graphs(std::size_t n);

}  // namespace tdmm::testing
