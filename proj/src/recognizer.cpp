#include "tdmm/recognizer.hpp"

#include <algorithm>
#include <set>

#include "tdmm/errors.hpp"
#include "tdmm/oracles.hpp"

namespace tdmm {

std::string to_string(RefutationReason reason) {
  switch (reason) {
    case RefutationReason::kNotMatching: return "m-not-matching";
    case RefutationReason::kNotMaximal: return "m-not-maximal";
    case RefutationReason::kConditionIViolated: return "condition-i-violated";
    case RefutationReason::kConditionIIViolated: return "condition-ii-violated";
  }
  return "unknown";
}

namespace {

void require_min_degree_two(const Graph& g) {
  if (g.vertex_count() == 0) throw DomainError("empty graph");
  const std::size_t delta = min_degree(g);
  if (delta != 2) {
    throw DomainError("recognizer requires minimum degree 2, got " + std::to_string(delta));
  }
}

bool is_exceptional(const Graph& g) {
  return k_family_parameter(g).has_value() || is_cycle_of_length(g, 6);
}

// Does {x, y} + N(x) + N(y) induce a 6-cycle? If so, append its two edges
// incident to neither x nor y.
void collect_middle_edges(const Graph& g, Vertex x, Vertex y, std::set<Edge>& out) {
  VertexSet span{x, y};
  for (Vertex w : g.neighbors(x)) span.push_back(w);
  for (Vertex w : g.neighbors(y)) span.push_back(w);
  std::sort(span.begin(), span.end());
  span.erase(std::unique(span.begin(), span.end()), span.end());
  if (span.size() != 6) return;

  const InducedSubgraph sub = induced_subgraph(g, span);
  if (!is_cycle_of_length(sub.graph, 6)) return;
  for (const Edge& e : sub.graph.edges()) {
    const Edge original(sub.to_original[e.u], sub.to_original[e.v]);
    if (!original.touches(x) && !original.touches(y)) out.insert(original);
  }
}

}  // namespace

std::vector<Edge> build_script_m(const Graph& g) {
  if (g.vertex_count() == 0) throw DomainError("empty graph");
  if (min_degree(g) < 2) throw DomainError("candidate matching requires a graph without leaves");
  if (!is_connected(g)) throw DomainError("candidate matching is defined for connected graphs");
  if (is_exceptional(g)) {
    throw DomainError("candidate matching is undefined for triangle books and the 6-cycle");
  }
  const VertexSet d2 = degree_two_vertices(g);
  std::set<Edge> edges;
  for (std::size_t i = 0; i < d2.size(); ++i) {
    for (std::size_t j = i + 1; j < d2.size(); ++j) collect_middle_edges(g, d2[i], d2[j], edges);
  }
  return {edges.begin(), edges.end()};
}

ConditionReport check_corollary2_conditions(const Graph& g, std::span<const Edge> edges) {
  require_min_degree_two(g);
  if (!is_matching(g, edges)) throw DomainError("edges share an endpoint: not a matching");
  const Matching m{std::vector<Edge>(edges.begin(), edges.end())};

  ConditionReport report;
  for (const char* id : {"maximal", "i", "ii"}) report.add(id, true);

  for (const Edge& e : g.edges()) {
    if (!m.covers(e.u) && !m.covers(e.v)) {
      report.fail({"maximal", {e.u, e.v}, {e},
                   "edge " + g.label(e.u) + "-" + g.label(e.v) + " has no matched endpoint"});
    }
  }

  const VertexSet matched = m.vertices();
  for (Vertex v : matched) {
    for (Vertex w : g.neighbors(v)) {
      if (m.covers(w) && w != m.partner(v)) {
        report.fail({"i", {v, w}, {},
                     g.label(v) + " has matched neighbor " + g.label(w) + " besides its partner " +
                         g.label(m.partner(v))});
      }
    }
  }

  std::set<std::pair<Vertex, Vertex>> witnesses;
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    if (g.degree(x) == 2) witnesses.emplace(g.neighbors(x)[0], g.neighbors(x)[1]);
  }
  for (std::size_t i = 0; i < matched.size(); ++i) {
    for (std::size_t j = i + 1; j < matched.size(); ++j) {
      const Vertex u = matched[i];
      const Vertex v = matched[j];
      const auto& nu = g.neighbors(u);
      const auto& nv = g.neighbors(v);
      VertexSet common;
      std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
      if (common.empty()) continue;
      const Vertex pu = m.partner(u);
      const Vertex pv = m.partner(v);
      if (!witnesses.contains({std::min(pu, pv), std::max(pu, pv)})) {
        report.fail({"ii", {u, v}, {},
                     g.label(u) + " and " + g.label(v) + " share neighbor " +
                         g.label(common.front()) + " but no vertex has neighborhood {" +
                         g.label(pu) + ", " + g.label(pv) + "}"});
      }
    }
  }
  return report;
}

ComponentOutcome recognize_component(const Graph& g) {
  require_min_degree_two(g);
  if (!is_connected(g)) throw DomainError("recognize_component requires a connected graph");

  ComponentOutcome out;
  out.vertices.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.vertices[v] = v;

  if (auto n = k_family_parameter(g)) {
    out.verdict = true;
    out.certificate = ExceptionalK{*n};
    return out;
  }
  if (is_cycle_of_length(g, 6)) {
    out.verdict = true;
    out.certificate = ExceptionalC6{};
    return out;
  }

  const std::vector<Edge> candidate = build_script_m(g);
  auto refute = [&](RefutationReason reason, VertexSet vertices, std::string detail) {
    out.verdict = false;
    out.certificate = Refutation{reason, std::move(vertices), std::move(detail)};
    return out;
  };

  if (!is_matching(g, candidate)) {
    std::vector<int> seen(g.vertex_count(), 0);
    for (const Edge& e : candidate) {
      for (Vertex w : {e.u, e.v}) {
        if (++seen[w] == 2) {
          return refute(RefutationReason::kNotMatching, {w},
                        "script-M has two edges at " + g.label(w) + ", not a matching");
        }
      }
    }
  }

  const ConditionReport report = check_corollary2_conditions(g, candidate);
  auto first_violation = [&](std::string_view id) -> const Violation& {
    return *std::find_if(report.violations.begin(), report.violations.end(),
                         [&](const Violation& v) { return v.condition == id; });
  };
  if (!report.verdict("maximal")) {
    const Violation& v = first_violation("maximal");
    std::string detail = candidate.empty() ? "script-M empty, not maximal"
                                           : "script-M not maximal: " + v.explanation;
    return refute(RefutationReason::kNotMaximal, v.vertices, std::move(detail));
  }
  if (!report.verdict("i")) {
    const Violation& v = first_violation("i");
    return refute(RefutationReason::kConditionIViolated, v.vertices, v.explanation);
  }
  if (!report.verdict("ii")) {
    const Violation& v = first_violation("ii");
    return refute(RefutationReason::kConditionIIViolated, v.vertices, v.explanation);
  }
  out.verdict = true;
  out.certificate = CertifyingMatching{Matching(candidate)};
  return out;
}

namespace {

Certificate to_parent_ids(const Certificate& cert, const std::vector<Vertex>& to_original) {
  if (const auto* cm = std::get_if<CertifyingMatching>(&cert)) {
    std::vector<Edge> edges;
    for (const Edge& e : cm->matching.edges()) edges.emplace_back(to_original[e.u], to_original[e.v]);
    return CertifyingMatching{Matching(std::move(edges))};
  }
  if (const auto* r = std::get_if<Refutation>(&cert)) {
    Refutation mapped = *r;
    for (Vertex& v : mapped.vertices) v = to_original[v];
    return mapped;
  }
  return cert;
}

}  // namespace

RecognitionOutcome recognize(const Graph& g) {
  require_min_degree_two(g);
  RecognitionOutcome out;
  out.verdict = true;
  for (const VertexSet& comp : connected_components(g)) {
    const InducedSubgraph sub = induced_subgraph(g, comp);
    ComponentOutcome local = recognize_component(sub.graph);
    ComponentOutcome mapped;
    mapped.vertices = comp;
    mapped.verdict = local.verdict;
    mapped.certificate = to_parent_ids(local.certificate, sub.to_original);
    out.verdict = out.verdict && mapped.verdict;
    out.components.push_back(std::move(mapped));
  }
  return out;
}

bool girth_bound_check(const Graph& g) {
  const Girth value = girth(g);
  return value.has_value() && *value <= 6;
}

}  // namespace tdmm
