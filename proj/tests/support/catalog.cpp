#include "catalog.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace tdmm::testing {
namespace {

using Partition = std::vector<std::vector<Vertex>>;

void refine(const Graph& g, Partition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::size_t> cell_of(g.vertex_count());
    for (std::size_t c = 0; c < cells.size(); ++c) {
      for (Vertex v : cells[c]) cell_of[v] = c;
    }
    Partition next;
    for (const auto& cell : cells) {
      std::map<std::vector<std::size_t>, std::vector<Vertex>> split;
      for (Vertex v : cell) {
        std::vector<std::size_t> sig(cells.size(), 0);
        for (Vertex w : g.neighbors(v)) ++sig[cell_of[w]];
        split[sig].push_back(v);
      }
      if (split.size() > 1) changed = true;
      for (auto& [sig, part] : split) next.push_back(std::move(part));
    }
    cells = std::move(next);
  }
}

std::uint64_t code_for(const Graph& g, const Partition& cells) {
  std::vector<Vertex> order;
  for (const auto& c : cells) order.push_back(c.front());
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      code = code << 1 | (g.has_edge(order[i], order[j]) ? 1U : 0U);
    }
  }
  return code;
}

std::uint64_t search(const Graph& g, Partition cells) {
  refine(g, cells);
  auto it = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
  if (it == cells.end()) return code_for(g, cells);
  const std::size_t at = static_cast<std::size_t>(it - cells.begin());
  std::uint64_t best = 0;
  bool first = true;
  for (Vertex v : cells[at]) {
    Partition child(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(at));
    child.push_back({v});
    std::vector<Vertex> rest;
    for (Vertex w : cells[at]) {
      if (w != v) rest.push_back(w);
    }
    child.push_back(std::move(rest));
    child.insert(child.end(), cells.begin() + static_cast<std::ptrdiff_t>(at) + 1, cells.end());
    const std::uint64_t c = search(g, std::move(child));
    if (first || c > best) best = c;
    first = false;
  }
  return best;
}

Graph from_code(std::size_t n, std::uint64_t code) {
  std::vector<Edge> edges;
  std::size_t bit = n * (n - 1) / 2;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      --bit;
      if (code >> bit & 1U) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  if (g.vertex_count() > 11) throw std::invalid_argument("canonical_code: n > 11");
  if (g.vertex_count() == 0) return 0;
  Partition all(1);
  for (Vertex v = 0; v < g.vertex_count(); ++v) all[0].push_back(v);
  return search(g, std::move(all));
}

std::vector<Graph> all_graphs(std::size_t n) {
  static std::map<std::size_t, std::vector<std::uint64_t>> memo;
  if (n == 0) return {Graph()};
  if (!memo.contains(n)) {
    std::set<std::uint64_t> codes;
    if (n == 1) {
      codes.insert(0);
    } else {
      for (const Graph& base : all_graphs(n - 1)) {
        const auto old_edges = base.edges();
        for (std::uint32_t mask = 0; mask < (1U << (n - 1)); ++mask) {
          std::vector<Edge> edges = old_edges;
          for (Vertex v = 0; v + 1 < n; ++v) {
            if (mask >> v & 1U) edges.emplace_back(v, static_cast<Vertex>(n - 1));
          }
          codes.insert(canonical_code(Graph(n, edges)));
        }
      }
    }
    memo[n].assign(codes.begin(), codes.end());
  }
  std::vector<Graph> out;
  for (std::uint64_t c : memo[n]) out.push_back(from_code(n, c));
  return out;
}

std::vector<Graph> connected_graphs(std::size_t n) {
  std::vector<Graph> out;
  for (Graph& g : all_graphs(n)) {
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace tdmm::testing
