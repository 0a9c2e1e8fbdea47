#include "tdmm/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <queue>
#include <set>
#include <sstream>
#include <unordered_map>

#include "tdmm/errors.hpp"

namespace tdmm {

Edge::Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {
  if (a == b) {
    throw DomainError("self-loop on vertex " + std::to_string(a));
  }
}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges,
             std::vector<std::string> labels)
    : adjacency_(vertex_count), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != vertex_count) {
    throw DomainError("label count does not match vertex count");
  }
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw DomainError("self-loop on vertex " + std::to_string(e.u));
    }
    if (e.u >= vertex_count || e.v >= vertex_count) {
      throw DomainError("edge endpoint out of range");
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    edge_count_ += nbrs.size();
  }
  edge_count_ /= 2;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= vertex_count() || b >= vertex_count()) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::string Graph::label(Vertex v) const {
  if (labels_.empty()) return std::to_string(v);
  return labels_.at(v);
}

std::optional<Vertex> Graph::find_label(std::string_view label) const {
  for (Vertex v = 0; v < vertex_count(); ++v) {
    if (this->label(v) == label) return v;
  }
  return std::nullopt;
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(adjacency_.begin(), adjacency_.end(),
                     [](const auto& nbrs) { return nbrs.empty(); });
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, Vertex> ids;
  std::vector<Edge> edges;

  auto intern = [&](std::string_view token) {
    auto [it, inserted] = ids.emplace(std::string(token), static_cast<Vertex>(labels.size()));
    if (inserted) labels.emplace_back(token);
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (tokens.front() == "vertices:") {
      for (std::size_t i = 1; i < tokens.size(); ++i) intern(tokens[i]);
      continue;
    }
    if (tokens.size() != 2) {
      throw FormatError("line " + std::to_string(line_no) + ": expected two vertex labels, got " +
                        std::to_string(tokens.size()) + " token(s)");
    }
    if (tokens[0] == tokens[1]) {
      throw FormatError("line " + std::to_string(line_no) + ": self-loop on '" +
                        std::string(tokens[0]) + "'");
    }
    Vertex a = intern(tokens[0]);
    Vertex b = intern(tokens[1]);
    edges.emplace_back(a, b);
  }
  std::size_t n = labels.size();
  return Graph(n, edges, std::move(labels));
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "vertices:";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << ' ' << g.label(v);
  out << '\n';
  for (const Edge& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  return out.str();
}

std::size_t min_degree(const Graph& g) {
  if (g.vertex_count() == 0) throw DomainError("minimum degree of the empty graph");
  std::size_t best = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

VertexSet degree_two_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 2) out.push_back(v);
  }
  return out;
}

SupportClassification support_classification(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> is_support(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == 1) is_support[g.neighbors(v).front()] = true;
  }
  SupportClassification out;
  for (Vertex v = 0; v < n; ++v) {
    if (!is_support[v]) continue;
    out.sup.push_back(v);
    const auto& nbrs = g.neighbors(v);
    bool touches_support = std::any_of(nbrs.begin(), nbrs.end(),
                                       [&](Vertex w) { return is_support[w]; });
    (touches_support ? out.s_plus : out.s_minus).push_back(v);
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> out;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    VertexSet comp;
    std::vector<Vertex> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

Girth girth(const Graph& g) {
  // BFS from every root; a non-tree edge (v,w) closes a cycle of length at
  // most dist[v] + dist[w] + 1, and the minimum over all roots is exact.
  const std::size_t n = g.vertex_count();
  std::size_t best = SIZE_MAX;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), SIZE_MAX);
    dist[root] = 0;
    parent[root] = root;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop();
      if (2 * dist[v] + 1 >= best) break;
      for (Vertex w : g.neighbors(v)) {
        if (dist[w] == SIZE_MAX) {
          dist[w] = dist[v] + 1;
          parent[w] = v;
          queue.push(w);
        } else if (parent[v] != w) {
          best = std::min(best, dist[v] + dist[w] + 1);
        }
      }
    }
  }
  if (best == SIZE_MAX) return std::nullopt;
  return best;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> to_original(vertices.begin(), vertices.end());
  std::sort(to_original.begin(), to_original.end());
  to_original.erase(std::unique(to_original.begin(), to_original.end()), to_original.end());
  std::map<Vertex, Vertex> to_local;
  for (Vertex i = 0; i < to_original.size(); ++i) {
    if (to_original[i] >= g.vertex_count()) {
      throw DomainError("induced subgraph: unknown vertex id " + std::to_string(to_original[i]));
    }
    to_local[to_original[i]] = i;
  }
  std::vector<Edge> edges;
  for (Vertex i = 0; i < to_original.size(); ++i) {
    for (Vertex w : g.neighbors(to_original[i])) {
      auto it = to_local.find(w);
      if (it != to_local.end() && i < it->second) edges.emplace_back(i, it->second);
    }
  }
  // Unlabeled parents pass their ids down as labels so messages about the
  // subgraph still name parent vertices.
  std::vector<std::string> labels;
  for (Vertex v : to_original) labels.push_back(g.label(v));
  return {Graph(to_original.size(), edges, std::move(labels)), std::move(to_original)};
}

bool is_cycle_of_length(const Graph& g, std::size_t n) {
  if (n < 3 || g.vertex_count() != n) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != 2) return false;
  }
  return is_connected(g);
}

std::optional<std::size_t> k_family_parameter(const Graph& g) {
  const std::size_t n_total = g.vertex_count();
  if (n_total < 3) return std::nullopt;
  const std::size_t k = n_total - 2;
  if (g.edge_count() != 2 * k + 1) return std::nullopt;
  // Any hub pair must be an adjacent pair of degree-(k+1) vertices, and every
  // remaining vertex must see exactly that pair.
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) != k + 1 || g.degree(e.v) != k + 1) continue;
    bool ok = true;
    for (Vertex w = 0; w < n_total && ok; ++w) {
      if (w == e.u || w == e.v) continue;
      const auto& nbrs = g.neighbors(w);
      ok = nbrs.size() == 2 && nbrs[0] == e.u && nbrs[1] == e.v;
    }
    if (ok) return k;
  }
  return std::nullopt;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const auto shift = static_cast<Vertex>(a.vertex_count());
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + shift, e.v + shift);

  std::vector<std::string> labels;
  if (a.has_labels() || b.has_labels()) {
    std::set<std::string> seen;
    for (Vertex v = 0; v < a.vertex_count(); ++v) labels.push_back(a.label(v));
    for (Vertex v = 0; v < b.vertex_count(); ++v) labels.push_back(b.label(v));
    for (const auto& l : labels) seen.insert(l);
    if (seen.size() != labels.size()) labels.clear();
  }
  return Graph(a.vertex_count() + b.vertex_count(), edges, std::move(labels));
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.vertex_count()) throw DomainError("relabel: permutation size mismatch");
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.resize(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) labels[perm[v]] = g.label(v);
  }
  return Graph(g.vertex_count(), edges, std::move(labels));
}

}  // namespace tdmm
