#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tdmm/graph.hpp"
#include "tdmm/matching.hpp"

namespace tdmm {

/// n paths of length three sharing one end vertex; 3n + 1 vertices.
Graph spider(std::size_t n);

/// 2 x (n+1) grid with every row edge subdivided; 4n + 2 vertices. Rungs
/// u_i v_i, subdivision vertices a_i (top row) and b_i (bottom row).
Graph subdivided_grid(std::size_t n);

/// n triangles on the common edge uv; vertices u, v, w1..wn.
Graph k_family(std::size_t n);

Graph cycle(std::size_t n);
Graph path(std::size_t n);
Graph complete(std::size_t n);
Graph petersen();

/// Replaces edge e by a path of length two through a new last vertex.
Graph subdivide_edge(const Graph& g, const Edge& e);

struct Prop2Limits {
  std::size_t max_added_vertices = 4096;
};

/// n disjoint edges plus one vertex per delta-subset of their endpoints,
/// adjacent to exactly that subset. Minimum degree is delta and
/// gamma_t = 2 mu* - delta + 2.
Graph prop2_extremal(std::size_t n, std::size_t delta, Prop2Limits limits = {});

/// Recipe for one member of the constructive family. V(M) vertices are
/// numbered 0..2*k2_count-1 with matching edges (2i, 2i+1); A vertices are
/// numbered 0..a_count-1 separately.
struct FRecipe {
  std::size_t k2_count = 1;
  std::size_t a_count = 0;
  /// Marked V(M) vertices; they become exactly the support vertices.
  VertexSet marked;
  /// a_edges[i]: the V(M) neighbors of A vertex i (at least two).
  std::vector<VertexSet> a_edges;
  /// Extra (L vertex, A index) edges; every unmarked vertex of L that would
  /// otherwise be a leaf needs one.
  std::vector<std::pair<Vertex, std::size_t>> l_leaf_edges;
  /// Edges between V(M) vertices outside L.
  std::vector<Edge> extra_vm_edges;
  /// Leaves to attach per marked vertex. Absent entries default to one leaf
  /// when the vertex is not already a support vertex, zero otherwise.
  std::map<Vertex, std::size_t> pendant_counts;

  /// V(M) vertices whose partner is unmarked.
  VertexSet l_set() const;
  bool is_marked(Vertex v) const;

  friend bool operator==(const FRecipe&, const FRecipe&) = default;
};

struct FamilyFGraph {
  Graph graph;
  /// The embedded matching M; certifies gamma_t = 2 mu*.
  Matching matching;
  FRecipe recipe;
};

struct FBuildLimits {
  std::size_t max_vertices = 256;
};

/// Applies the recipe, closes the common-neighbor witness steps to a fixed
/// point, then attaches pendant leaves to marked vertices.
FamilyFGraph family_f_from_recipe(const FRecipe& recipe, FBuildLimits limits = {});

struct FRandomParams {
  std::size_t min_k2 = 1;
  std::size_t max_k2 = 3;
  std::size_t max_a = 3;
  double a_edge_prob = 0.35;
  double extra_edge_prob = 0.3;
  double mark_prob = 0.25;
  std::size_t max_pendants = 2;
  /// Draws whose closure exceeds this are redrawn.
  std::size_t max_vertices = 16;
  std::size_t max_attempts = 10'000;
};

/// Seeded recipe draw followed by family_f_from_recipe. Same seed and
/// params give the same graph.
FamilyFGraph family_f_random(std::uint64_t seed, const FRandomParams& params = {});

/// Connected graph on n vertices with minimum degree exactly 2: a sparse
/// random graph patched up to degree 2 and connectivity. Redraws when the
/// minimum degree overshoots.
Graph random_min_degree_two(std::uint64_t seed, std::size_t n, double edge_prob = 0.2);

/// Connected graph on n vertices with minimum degree 1 or 2.
Graph random_low_min_degree(std::uint64_t seed, std::size_t n, double edge_prob = 0.2);

/// Plain-text key/value form of a recipe.
std::string serialize_recipe(const FRecipe& recipe);
FRecipe parse_recipe(std::string_view text);

}  // namespace tdmm
