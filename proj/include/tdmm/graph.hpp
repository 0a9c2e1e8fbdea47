#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tdmm {

using Vertex = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Undirected edge stored with u < v so edge sets have a unique form.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b);

  bool touches(Vertex w) const { return u == w || v == w; }
  Vertex other(Vertex w) const { return w == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Builds from an edge list. Duplicate edges collapse; self-loops and
  /// out-of-range endpoints throw DomainError. `labels`, if non-empty,
  /// must have exactly `vertex_count` entries.
  Graph(std::size_t vertex_count, std::span<const Edge> edges,
        std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_edge(Vertex a, Vertex b) const;

  /// All edges in sorted canonical order.
  std::vector<Edge> edges() const;

  bool has_labels() const { return !labels_.empty(); }
  /// Label of `v`, or its decimal id when the graph is unlabeled.
  std::string label(Vertex v) const;
  const std::vector<std::string>& labels() const { return labels_; }
  /// Vertex carrying `label`, if any.
  std::optional<Vertex> find_label(std::string_view label) const;

  bool has_isolated_vertex() const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Parses the edge-list text format: one "u v" pair per line, '#' comments,
/// and optional "vertices: a b c" header lines declaring extra vertices.
/// Labels get ids in order of first appearance.
Graph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list: a "vertices:" header in id order, then the
/// sorted canonical edges one per line.
std::string serialize_edge_list(const Graph& g);

std::size_t min_degree(const Graph& g);
VertexSet degree_two_vertices(const Graph& g);

struct SupportClassification {
  VertexSet sup;
  VertexSet s_plus;
  VertexSet s_minus;
};

/// Support vertices (adjacent to a leaf), split by whether they are adjacent
/// to another support vertex (s_plus) or isolated among supports (s_minus).
SupportClassification support_classification(const Graph& g);

/// Components ordered by their smallest vertex; each component sorted.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Shortest cycle length; std::nullopt encodes the infinite girth of forests.
using Girth = std::optional<std::size_t>;
Girth girth(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  /// to_original[i] is the id in the parent graph of subgraph vertex i.
  std::vector<Vertex> to_original;
};

/// Subgraph induced by `vertices`; vertex i of the result is the i-th
/// smallest id in `vertices`. Labels are carried over.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

bool is_cycle_of_length(const Graph& g, std::size_t n);

/// n when g is isomorphic to n triangles sharing one common edge.
std::optional<std::size_t> k_family_parameter(const Graph& g);

/// Disjoint union; vertices of `b` are shifted by a.vertex_count().
Graph disjoint_union(const Graph& a, const Graph& b);

/// Renames vertex v to perm[v].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace tdmm
