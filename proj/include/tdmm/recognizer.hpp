#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tdmm/characterization.hpp"
#include "tdmm/graph.hpp"
#include "tdmm/matching.hpp"

namespace tdmm {

/// Component is n triangles sharing one edge.
struct ExceptionalK {
  std::size_t n = 0;
};

/// Component is the 6-cycle.
struct ExceptionalC6 {};

struct CertifyingMatching {
  Matching matching;
};

enum class RefutationReason {
  kNotMatching,
  kNotMaximal,
  kConditionIViolated,
  kConditionIIViolated,
};

struct Refutation {
  RefutationReason reason = RefutationReason::kNotMatching;
  /// Offending vertices (u, v), in component-local or graph ids as returned.
  VertexSet vertices;
  std::string detail;
};

using Certificate = std::variant<ExceptionalK, ExceptionalC6, CertifyingMatching, Refutation>;

struct ComponentOutcome {
  VertexSet vertices;
  bool verdict = false;
  Certificate certificate;
};

struct RecognitionOutcome {
  bool verdict = false;
  /// One entry per connected component, ids mapped back to the input graph.
  std::vector<ComponentOutcome> components;
};

std::string to_string(RefutationReason reason);

/// Middle edges of induced 6-cycles through pairs of degree-2 vertices:
/// for x, y of degree 2 with G[N(x) + N(y) + {x, y}] a 6-cycle, the two
/// cycle edges avoiding x and y. Requires a connected graph of minimum
/// degree 2 that is neither a triangle book nor the 6-cycle.
std::vector<Edge> build_script_m(const Graph& g);

/// Maximality plus the two minimum-degree-2 conditions: the partner is the
/// only matched neighbor, and matched vertices with a common neighbor have a
/// vertex adjacent to exactly their partners. Throws DomainError when `m`
/// is not a matching or the minimum degree is not 2.
ConditionReport check_corollary2_conditions(const Graph& g, std::span<const Edge> m);

/// Polynomial-time decision for a connected graph of minimum degree 2.
ComponentOutcome recognize_component(const Graph& g);

/// Runs recognize_component on every component of a graph with minimum
/// degree 2; the verdict is the conjunction.
RecognitionOutcome recognize(const Graph& g);

/// girth(g) <= 6. Holds on every yes-instance of minimum degree 2.
bool girth_bound_check(const Graph& g);

}  // namespace tdmm
