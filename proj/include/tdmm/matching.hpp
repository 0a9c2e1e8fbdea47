#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "tdmm/graph.hpp"

namespace tdmm {

/// Set of pairwise vertex-disjoint edges with partner lookup.
class Matching {
 public:
  Matching() = default;

  /// Throws DomainError when two edges share an endpoint.
  explicit Matching(std::vector<Edge> edges);

  /// Returns std::nullopt instead of throwing.
  static std::optional<Matching> try_from(std::vector<Edge> edges);

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }

  bool covers(Vertex w) const { return partner_.contains(w); }
  /// Partner of a covered vertex; throws DomainError otherwise.
  Vertex partner(Vertex w) const;
  /// Covered vertices, sorted.
  VertexSet vertices() const;
  /// {partner(v) : v in vs}, sorted.
  VertexSet partners(std::span<const Vertex> vs) const;

  bool contains(const Edge& e) const;

  friend bool operator==(const Matching& a, const Matching& b) { return a.edges_ == b.edges_; }

 private:
  std::vector<Edge> edges_;
  std::map<Vertex, Vertex> partner_;
};

}  // namespace tdmm
