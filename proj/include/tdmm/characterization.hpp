#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tdmm/graph.hpp"
#include "tdmm/matching.hpp"

namespace tdmm {

/// Split of a maximal matching by how many endpoints are support vertices.
struct MatchingPartition {
  std::vector<Edge> m_plus;   ///< both endpoints in sup(G)
  std::vector<Edge> m_minus;  ///< exactly one endpoint in sup(G)
  std::vector<Edge> m_star;   ///< no endpoint in sup(G)
};

struct Violation {
  std::string condition;
  VertexSet vertices;
  std::vector<Edge> edges;
  std::string explanation;
};

struct ConditionVerdict {
  std::string condition;
  bool holds = true;
};

/// Per-condition verdicts plus witnesses for every failure.
struct ConditionReport {
  std::vector<ConditionVerdict> verdicts;
  std::vector<Violation> violations;

  bool holds() const;
  /// Verdict for condition `id`; throws std::out_of_range for unknown ids.
  bool verdict(std::string_view id) const;

  void add(std::string condition, bool holds);
  void fail(Violation violation);
};

MatchingPartition partition_matching(const Graph& g, const Matching& m);

/// Conditions (i)-(iv) of the matching characterization of graphs with
/// gamma_t = 2 mu*. Requires min degree 1 or 2 and a maximal matching.
ConditionReport check_theorem1_conditions(const Graph& g, const Matching& m);

struct EnumerationBudget {
  std::uint64_t max_matchings = 1'000'000;
};

/// Calls `visit` on every maximal matching in depth-first include/exclude
/// order over the sorted edges; stops early when `visit` returns false.
/// Returns the number visited. Throws ResourceError past the budget.
std::uint64_t for_each_maximal_matching(const Graph& g,
                                        const std::function<bool(const Matching&)>& visit,
                                        EnumerationBudget budget = {});

struct Theorem1Certificate {
  Matching matching;
  MatchingPartition partition;
  ConditionReport report;
};

/// First maximal matching in enumeration order passing all four conditions.
/// Present exactly when gamma_t(g) = 2 mu*(g), which is also membership in
/// the constructive family.
std::optional<Theorem1Certificate> find_theorem1_matching(const Graph& g,
                                                          EnumerationBudget budget = {});

/// Total dominating set of size at most 2|m| - delta + 2 for min degree
/// delta >= 3, built by swapping delta - 1 matched partners for one
/// unmatched vertex. Ties broken towards the smallest ids.
VertexSet tds_from_matching_high_degree(const Graph& g, const Matching& m);

}  // namespace tdmm
