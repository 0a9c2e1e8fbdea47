#include "tdmm/characterization.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "tdmm/errors.hpp"
#include "tdmm/oracles.hpp"

namespace tdmm {

bool ConditionReport::holds() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.holds; });
}

bool ConditionReport::verdict(std::string_view id) const {
  for (const auto& v : verdicts) {
    if (v.condition == id) return v.holds;
  }
  throw std::out_of_range("no verdict for condition " + std::string(id));
}

void ConditionReport::add(std::string condition, bool holds) {
  verdicts.push_back({std::move(condition), holds});
}

void ConditionReport::fail(Violation violation) {
  for (auto& v : verdicts) {
    if (v.condition == violation.condition) v.holds = false;
  }
  violations.push_back(std::move(violation));
}

namespace {

bool contains(const VertexSet& set, Vertex v) { return std::binary_search(set.begin(), set.end(), v); }

std::pair<Vertex, Vertex> ordered(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

/// Neighborhoods of degree-2 vertices, for "some vertex has N(x) = {a, b}".
std::set<std::pair<Vertex, Vertex>> pair_neighborhoods(const Graph& g) {
  std::set<std::pair<Vertex, Vertex>> out;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    const auto& nbrs = g.neighbors(x);
    if (nbrs.size() == 2) out.emplace(nbrs[0], nbrs[1]);
  }
  return out;
}

bool share_neighbor(const Graph& g, Vertex u, Vertex v) {
  const auto& a = g.neighbors(u);
  const auto& b = g.neighbors(v);
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return true;
    a[i] < b[j] ? ++i : ++j;
  }
  return false;
}

}  // namespace

MatchingPartition partition_matching(const Graph& g, const Matching& m) {
  if (!is_maximal_matching(g, m.edges())) throw DomainError("matching is not maximal");
  const SupportClassification support = support_classification(g);
  MatchingPartition out;
  for (const Edge& e : m.edges()) {
    const bool su = contains(support.sup, e.u);
    const bool sv = contains(support.sup, e.v);
    if (su && sv) {
      if (contains(support.s_minus, e.u) || contains(support.s_minus, e.v)) {
        throw DomainError("edge " + g.label(e.u) + "-" + g.label(e.v) +
                          " joins two support vertices but one lies in S-");
      }
      out.m_plus.push_back(e);
    } else if (su || sv) {
      out.m_minus.push_back(e);
    } else {
      out.m_star.push_back(e);
    }
  }
  return out;
}

ConditionReport check_theorem1_conditions(const Graph& g, const Matching& m) {
  const std::size_t delta = min_degree(g);
  if (delta < 1 || delta > 2) {
    throw DomainError("condition check requires minimum degree 1 or 2, got " + std::to_string(delta));
  }
  const MatchingPartition part = partition_matching(g, m);
  const SupportClassification support = support_classification(g);

  ConditionReport report;
  for (const char* id : {"i", "ii", "iii", "iv"}) report.add(id, true);

  // (i) M+ is a perfect matching of G[S+].
  VertexSet plus_covered;
  for (const Edge& e : part.m_plus) {
    plus_covered.push_back(e.u);
    plus_covered.push_back(e.v);
  }
  std::sort(plus_covered.begin(), plus_covered.end());
  for (Vertex v : support.s_plus) {
    if (!contains(plus_covered, v)) {
      report.fail({"i", {v}, {}, "S+ vertex " + g.label(v) + " is not matched inside S+"});
    }
  }

  // (ii) S- is covered by M-, and M- edges join S- to non-support vertices.
  VertexSet minus_covered;
  for (const Edge& e : part.m_minus) {
    minus_covered.push_back(e.u);
    minus_covered.push_back(e.v);
    const bool joins = (contains(support.s_minus, e.u) && !contains(support.sup, e.v)) ||
                       (contains(support.s_minus, e.v) && !contains(support.sup, e.u));
    if (!joins) {
      report.fail({"ii", {e.u, e.v}, {e},
                   "M- edge " + g.label(e.u) + "-" + g.label(e.v) +
                       " does not join S- to a non-support vertex"});
    }
  }
  std::sort(minus_covered.begin(), minus_covered.end());
  for (Vertex v : support.s_minus) {
    if (!contains(minus_covered, v)) {
      report.fail({"ii", {v}, {}, "S- vertex " + g.label(v) + " is not covered by M-"});
    }
  }

  // Vertices whose partner is not a support vertex: S- together with V(M*).
  VertexSet free_side(support.s_minus);
  for (const Edge& e : part.m_star) {
    free_side.push_back(e.u);
    free_side.push_back(e.v);
  }
  std::sort(free_side.begin(), free_side.end());

  // (iii) The partner is the only matched neighbor.
  for (Vertex v : free_side) {
    VertexSet extra;
    for (Vertex w : g.neighbors(v)) {
      if (m.covers(w) && w != m.partner(v)) extra.push_back(w);
    }
    if (!extra.empty()) {
      Violation violation{"iii", {v}, {}, ""};
      violation.vertices.insert(violation.vertices.end(), extra.begin(), extra.end());
      violation.explanation = g.label(v) + " has matched neighbor " + g.label(extra.front()) +
                              " besides its partner " + g.label(m.partner(v));
      report.fail(std::move(violation));
    }
  }

  // (iv) Two such vertices with a common neighbor need a vertex adjacent to
  // exactly their two partners.
  const auto witnesses = pair_neighborhoods(g);
  for (std::size_t i = 0; i < free_side.size(); ++i) {
    for (std::size_t j = i + 1; j < free_side.size(); ++j) {
      const Vertex u = free_side[i];
      const Vertex v = free_side[j];
      if (!share_neighbor(g, u, v)) continue;
      const Vertex pu = m.partner(u);
      const Vertex pv = m.partner(v);
      if (!witnesses.contains(ordered(pu, pv))) {
        report.fail({"iv", {u, v}, {},
                     g.label(u) + " and " + g.label(v) + " share a neighbor but no vertex has "
                     "neighborhood {" + g.label(pu) + ", " + g.label(pv) + "}"});
      }
    }
  }
  return report;
}

namespace {

class MaximalMatchingEnumerator {
 public:
  MaximalMatchingEnumerator(const Graph& g, const std::function<bool(const Matching&)>& visit,
                            EnumerationBudget budget)
      : edges_(g.edges()), incident_(g.vertex_count()), used_(g.vertex_count(), false),
        visit_(visit), budget_(budget) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      incident_[edges_[i].u].push_back(i);
      incident_[edges_[i].v].push_back(i);
    }
  }

  std::uint64_t run() {
    descend(0);
    return visited_;
  }

 private:
  bool free_edge(std::size_t i) const { return !used_[edges_[i].u] && !used_[edges_[i].v]; }

  // An excluded free edge stays coverable only through a later free edge at
  // one of its endpoints.
  bool coverable(std::size_t index) const {
    for (std::size_t i = 0; i < index; ++i) {
      if (!free_edge(i)) continue;
      bool ok = false;
      for (Vertex end : {edges_[i].u, edges_[i].v}) {
        for (std::size_t j : incident_[end]) {
          if (j >= index && free_edge(j)) ok = true;
        }
      }
      if (!ok) return false;
    }
    return true;
  }

  bool descend(std::size_t index) {
    if (!coverable(index)) return true;
    if (index == edges_.size()) {
      if (++visited_ > budget_.max_matchings) {
        throw ResourceError("maximal matching enumeration exceeded budget of " +
                            std::to_string(budget_.max_matchings));
      }
      return visit_(Matching(chosen_));
    }
    const Edge& e = edges_[index];
    if (free_edge(index)) {
      used_[e.u] = used_[e.v] = true;
      chosen_.push_back(e);
      const bool keep_going = descend(index + 1);
      chosen_.pop_back();
      used_[e.u] = used_[e.v] = false;
      if (!keep_going) return false;
    }
    return descend(index + 1);
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<bool> used_;
  std::vector<Edge> chosen_;
  const std::function<bool(const Matching&)>& visit_;
  EnumerationBudget budget_;
  std::uint64_t visited_ = 0;
};

}  // namespace

std::uint64_t for_each_maximal_matching(const Graph& g,
                                        const std::function<bool(const Matching&)>& visit,
                                        EnumerationBudget budget) {
  return MaximalMatchingEnumerator(g, visit, budget).run();
}

std::optional<Theorem1Certificate> find_theorem1_matching(const Graph& g, EnumerationBudget budget) {
  if (g.has_isolated_vertex()) throw DomainError("isolated vertex: gamma_t undefined");
  const std::size_t delta = min_degree(g);
  if (delta < 1 || delta > 2) {
    throw DomainError("matching characterization requires minimum degree 1 or 2, got " +
                      std::to_string(delta));
  }
  std::optional<Theorem1Certificate> found;
  for_each_maximal_matching(
      g,
      [&](const Matching& m) {
        ConditionReport report = check_theorem1_conditions(g, m);
        if (!report.holds()) return true;
        found = Theorem1Certificate{m, partition_matching(g, m), std::move(report)};
        return false;
      },
      budget);
  return found;
}

VertexSet tds_from_matching_high_degree(const Graph& g, const Matching& m) {
  const std::size_t delta = min_degree(g);
  if (delta <= 2) {
    throw DomainError("high-degree construction requires minimum degree >= 3, got " +
                      std::to_string(delta));
  }
  if (!is_maximal_matching(g, m.edges())) throw DomainError("matching is not maximal");

  VertexSet result;
  std::optional<Vertex> outside;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!m.covers(v)) {
      outside = v;
      break;
    }
  }
  if (outside) {
    // N(x) lies inside V(M) because V(G) \ V(M) is independent.
    const auto& nbrs = g.neighbors(*outside);
    const VertexSet dropped =
        m.partners(std::span<const Vertex>(nbrs.data(), delta - 1));
    for (Vertex v : m.vertices()) {
      if (!contains(dropped, v)) result.push_back(v);
    }
    result.push_back(*outside);
    std::sort(result.begin(), result.end());
  } else {
    for (Vertex v = 0; v + (delta - 1) < g.vertex_count(); ++v) result.push_back(v);
  }
  return result;
}

}  // namespace tdmm
