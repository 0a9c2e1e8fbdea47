#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "tdmm/generators.hpp"
#include "tdmm/graph.hpp"
#include "tdmm/matching.hpp"

namespace tdmm::testing {

inline Vertex id(const Graph& g, const std::string& label) {
  auto v = g.find_label(label);
  if (!v) throw std::invalid_argument("no vertex labeled " + label);
  return *v;
}

inline Edge edge(const Graph& g, const std::string& a, const std::string& b) {
  return Edge(id(g, a), id(g, b));
}

inline VertexSet ids(const Graph& g, const std::vector<std::string>& labels) {
  VertexSet out;
  for (const auto& l : labels) out.push_back(id(g, l));
  std::sort(out.begin(), out.end());
  return out;
}

// Vertical rungs of the subdivided grid, u_i v_i for i = 1..n+1.
inline std::vector<Edge> grid_rungs(const Graph& g, std::size_t n) {
  std::vector<Edge> out;
  for (std::size_t i = 1; i <= n + 1; ++i) {
    out.push_back(edge(g, "u" + std::to_string(i), "v" + std::to_string(i)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Graph from_edges(std::size_t n, std::vector<std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> edges;
  for (auto [a, b] : pairs) edges.emplace_back(a, b);
  return Graph(n, edges);
}

}  // namespace tdmm::testing
