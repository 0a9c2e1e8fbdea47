#include "tdmm/oracles.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "tdmm/errors.hpp"

namespace tdmm {

namespace {

using Mask = std::uint64_t;

Mask bit(std::size_t i) { return Mask{1} << i; }

Mask low_bits(std::size_t n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

void require_no_isolated(const Graph& g) {
  if (g.has_isolated_vertex()) {
    throw DomainError("isolated vertex: gamma_t undefined");
  }
}

void require_within_limit(const Graph& g, const SolverLimits& limits) {
  const std::size_t cap = std::min(limits.vertex_limit, kMaxSolverVertices);
  if (g.vertex_count() > cap) {
    throw ResourceError("graph has " + std::to_string(g.vertex_count()) +
                        " vertices, solver limit is " + std::to_string(cap));
  }
}

void require_edges_present(const Graph& g, std::span<const Edge> m) {
  for (const Edge& e : m) {
    if (!g.has_edge(e.u, e.v)) {
      throw DomainError("edge " + g.label(e.u) + "-" + g.label(e.v) + " is not in the graph");
    }
  }
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (Vertex w : g.neighbors(v)) adj[v] |= bit(w);
  }
  return adj;
}

class Stopwatch {
 public:
  std::chrono::nanoseconds elapsed() const { return std::chrono::steady_clock::now() - start_; }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// ---------------------------------------------------------------------------
// Total domination

class TotalDominationSearch {
 public:
  explicit TotalDominationSearch(const Graph& g)
      : n_(g.vertex_count()), all_(low_bits(n_)), adj_(adjacency_masks(g)) {
    for (Mask a : adj_) max_degree_ = std::max(max_degree_, std::popcount(a));
  }

  std::uint64_t nodes() const { return nodes_; }

  /// Is there a total dominating set of size <= k?
  bool feasible(std::size_t k) { return branch(0, 0, static_cast<int>(k)); }

  /// Lexicographically least total dominating set of size exactly k, given
  /// that no smaller one exists.
  VertexSet least_witness(std::size_t k) {
    VertexSet chosen;
    if (!lex_search(0, 0, static_cast<int>(k), chosen)) {
      throw Error("internal: no total dominating set of the certified size");
    }
    return chosen;
  }

 private:
  bool branch(Mask dominated, Mask forbidden, int remaining) {
    ++nodes_;
    const Mask open = all_ & ~dominated;
    if (open == 0) return true;
    if (remaining == 0) return false;
    if (std::popcount(open) > remaining * max_degree_) return false;

    // Most constrained undominated vertex: fewest admissible dominators.
    int best_count = 65;
    Mask best_candidates = 0;
    for (Mask rest = open; rest != 0; rest &= rest - 1) {
      const auto w = static_cast<std::size_t>(std::countr_zero(rest));
      const Mask candidates = adj_[w] & ~forbidden;
      const int count = std::popcount(candidates);
      if (count < best_count) {
        best_count = count;
        best_candidates = candidates;
        if (count <= 1) break;
      }
    }
    if (best_count == 0) return false;

    Mask local_forbidden = forbidden;
    for (Mask rest = best_candidates; rest != 0; rest &= rest - 1) {
      const auto x = static_cast<std::size_t>(std::countr_zero(rest));
      if (branch(dominated | adj_[x], local_forbidden | bit(x), remaining - 1)) return true;
      local_forbidden |= bit(x);
    }
    return false;
  }

  bool lex_search(std::size_t index, Mask dominated, int remaining, VertexSet& chosen) {
    ++nodes_;
    const Mask open = all_ & ~dominated;
    if (open == 0) return remaining == 0;
    if (remaining == 0 || index >= n_) return false;
    if (static_cast<int>(n_ - index) < remaining) return false;

    const Mask available = all_ & ~low_bits(index);
    for (Mask rest = open; rest != 0; rest &= rest - 1) {
      const auto w = static_cast<std::size_t>(std::countr_zero(rest));
      if ((adj_[w] & available) == 0) return false;
    }
    if (std::popcount(open) > remaining * max_degree_) return false;

    chosen.push_back(static_cast<Vertex>(index));
    if (lex_search(index + 1, dominated | adj_[index], remaining - 1, chosen)) return true;
    chosen.pop_back();
    return lex_search(index + 1, dominated, remaining, chosen);
  }

  std::size_t n_;
  Mask all_;
  std::vector<Mask> adj_;
  int max_degree_ = 0;
  std::uint64_t nodes_ = 0;
};

// ---------------------------------------------------------------------------
// Minimum maximal matching

class MaximalMatchingSearch {
 public:
  explicit MaximalMatchingSearch(const Graph& g) : edges_(g.edges()), incident_(g.vertex_count()) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      incident_[edges_[i].u].push_back(i);
      incident_[edges_[i].v].push_back(i);
    }
  }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Lower bound on the number of edges still needed: each new matching
  /// edge covers at most two of a set of disjoint uncovered edges.
  int lower_bound(Mask matched) const {
    Mask used = matched;
    int disjoint = 0;
    for (const Edge& e : edges_) {
      if ((used & (bit(e.u) | bit(e.v))) == 0) {
        used |= bit(e.u) | bit(e.v);
        ++disjoint;
      }
    }
    return (disjoint + 1) / 2;
  }

  bool feasible(std::size_t k) { return branch(0, std::vector<bool>(edges_.size(), false), static_cast<int>(k)); }

  std::vector<Edge> least_witness(std::size_t k) {
    std::vector<Edge> chosen;
    if (!lex_search(0, 0, static_cast<int>(k), chosen)) {
      throw Error("internal: no maximal matching of the certified size");
    }
    return chosen;
  }

 private:
  bool free_edge(std::size_t i, Mask matched) const {
    return (matched & (bit(edges_[i].u) | bit(edges_[i].v))) == 0;
  }

  bool branch(Mask matched, std::vector<bool> forbidden, int remaining) {
    ++nodes_;
    std::size_t target = edges_.size();
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (free_edge(i, matched)) {
        target = i;
        break;
      }
    }
    if (target == edges_.size()) return true;
    if (remaining == 0 || lower_bound(matched) > remaining) return false;

    // Some free edge at an endpoint of the uncovered edge must be chosen.
    std::vector<std::size_t> candidates;
    for (Vertex end : {edges_[target].u, edges_[target].v}) {
      for (std::size_t i : incident_[end]) {
        if (!forbidden[i] && free_edge(i, matched)) candidates.push_back(i);
      }
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (std::size_t i : candidates) {
      const Edge& e = edges_[i];
      forbidden[i] = true;
      if (branch(matched | bit(e.u) | bit(e.v), forbidden, remaining - 1)) return true;
    }
    return false;
  }

  // Every uncovered edge among the first `index` must still be coverable by
  // a later free edge at one of its endpoints.
  bool coverable(std::size_t index, Mask matched) const {
    for (std::size_t i = 0; i < index; ++i) {
      if (!free_edge(i, matched)) continue;
      bool ok = false;
      for (Vertex end : {edges_[i].u, edges_[i].v}) {
        for (std::size_t j : incident_[end]) {
          if (j >= index && free_edge(j, matched)) {
            ok = true;
            break;
          }
        }
        if (ok) break;
      }
      if (!ok) return false;
    }
    return true;
  }

  bool lex_search(std::size_t index, Mask matched, int remaining, std::vector<Edge>& chosen) {
    ++nodes_;
    if (!coverable(index, matched)) return false;
    if (lower_bound(matched) > remaining) return false;
    if (index == edges_.size()) return remaining == 0;

    const Edge& e = edges_[index];
    if (remaining > 0 && free_edge(index, matched)) {
      chosen.push_back(e);
      if (lex_search(index + 1, matched | bit(e.u) | bit(e.v), remaining - 1, chosen)) return true;
      chosen.pop_back();
    }
    return lex_search(index + 1, matched, remaining, chosen);
  }

  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

bool is_total_dominating(const Graph& g, std::span<const Vertex> s) {
  require_no_isolated(g);
  std::vector<bool> in_s(g.vertex_count(), false);
  for (Vertex v : s) {
    if (v >= g.vertex_count()) throw DomainError("unknown vertex id " + std::to_string(v));
    in_s[v] = true;
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto& nbrs = g.neighbors(v);
    if (std::none_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return in_s[w]; })) return false;
  }
  return true;
}

bool is_matching(const Graph& g, std::span<const Edge> m) {
  require_edges_present(g, m);
  std::vector<bool> used(g.vertex_count(), false);
  for (const Edge& e : m) {
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = true;
  }
  return true;
}

bool is_maximal_matching(const Graph& g, std::span<const Edge> m) {
  if (!is_matching(g, m)) return false;
  std::vector<bool> used(g.vertex_count(), false);
  for (const Edge& e : m) used[e.u] = used[e.v] = true;
  for (const Edge& e : g.edges()) {
    if (!used[e.u] && !used[e.v]) return false;
  }
  return true;
}

bool edge_domination_check(const Graph& g, const Matching& m) {
  require_edges_present(g, m.edges());
  for (const Edge& e : g.edges()) {
    if (m.contains(e)) continue;
    const bool dominated = std::any_of(m.edges().begin(), m.edges().end(), [&](const Edge& d) {
      return d.touches(e.u) || d.touches(e.v);
    });
    if (!dominated) return false;
  }
  return true;
}

SolverResult<VertexSet> total_domination_number(const Graph& g, SolverLimits limits) {
  require_no_isolated(g);
  require_within_limit(g, limits);
  Stopwatch clock;
  TotalDominationSearch search(g);
  SolverResult<VertexSet> result;
  if (g.vertex_count() == 0) return result;
  std::size_t k = 2;
  while (!search.feasible(k)) ++k;
  result.value = k;
  result.witness = search.least_witness(k);
  result.stats = {search.nodes(), clock.elapsed()};
  return result;
}

SolverResult<Matching> minimum_maximal_matching(const Graph& g, SolverLimits limits) {
  if (g.edge_count() == 0) throw DomainError("edgeless graph: no maximal matching to minimize");
  require_within_limit(g, limits);
  Stopwatch clock;
  MaximalMatchingSearch search(g);
  auto k = static_cast<std::size_t>(std::max(1, search.lower_bound(0)));
  while (!search.feasible(k)) ++k;
  SolverResult<Matching> result;
  result.value = k;
  result.witness = Matching(search.least_witness(k));
  result.stats = {search.nodes(), clock.elapsed()};
  return result;
}

OracleVerdict gamma_t_2mu_oracle(const Graph& g, SolverLimits limits) {
  require_no_isolated(g);
  OracleVerdict verdict;
  for (const VertexSet& comp : connected_components(g)) {
    const Graph part = induced_subgraph(g, comp).graph;
    verdict.gamma_t += total_domination_number(part, limits).value;
    verdict.mu_star += minimum_maximal_matching(part, limits).value;
  }
  return verdict;
}

bool is_gamma_t_2mu_graph_oracle(const Graph& g, SolverLimits limits) {
  return gamma_t_2mu_oracle(g, limits).equal();
}

BoundReport check_proposition1(const Graph& g, SolverLimits limits) {
  require_no_isolated(g);
  BoundReport report;
  report.min_degree = min_degree(g);
  const OracleVerdict verdict = gamma_t_2mu_oracle(g, limits);
  report.gamma_t = verdict.gamma_t;
  report.mu_star = verdict.mu_star;
  const auto twice = 2 * static_cast<long long>(report.mu_star);
  report.bound = report.min_degree <= 2 ? twice
                                        : twice - static_cast<long long>(report.min_degree) + 2;
  report.holds = static_cast<long long>(report.gamma_t) <= report.bound;
  return report;
}

}  // namespace tdmm
