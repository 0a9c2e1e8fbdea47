#include "tdmm/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "tdmm/errors.hpp"

namespace tdmm {

namespace {

void require_at_least(std::size_t value, std::size_t minimum, const char* what) {
  if (value < minimum) {
    throw DomainError(std::string(what) + " requires n >= " + std::to_string(minimum) + ", got " +
                      std::to_string(value));
  }
}

/// Mutable adjacency used while assembling a construction.
class Builder {
 public:
  Vertex add_vertex(std::string label) {
    adjacency_.emplace_back();
    labels_.push_back(std::move(label));
    return static_cast<Vertex>(adjacency_.size() - 1);
  }

  void add_edge(Vertex a, Vertex b) {
    if (a == b) throw DomainError("self-loop at " + labels_.at(a));
    adjacency_.at(a).insert(b);
    adjacency_.at(b).insert(a);
  }

  std::size_t size() const { return adjacency_.size(); }
  const std::set<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool share_neighbor(Vertex a, Vertex b) const {
    for (Vertex w : adjacency_[a]) {
      if (adjacency_[b].contains(w)) return true;
    }
    return false;
  }

  bool has_neighborhood(Vertex a, Vertex b) const {
    const std::set<Vertex> target{a, b};
    return std::any_of(adjacency_.begin(), adjacency_.end(),
                       [&](const auto& nbrs) { return nbrs == target; });
  }

  bool is_support(Vertex v) const {
    return std::any_of(adjacency_[v].begin(), adjacency_[v].end(),
                       [&](Vertex w) { return adjacency_[w].size() == 1; });
  }

  Graph build() const {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < adjacency_.size(); ++v) {
      for (Vertex w : adjacency_[v]) {
        if (v < w) edges.emplace_back(v, w);
      }
    }
    return Graph(adjacency_.size(), edges, labels_);
  }

 private:
  std::vector<std::set<Vertex>> adjacency_;
  std::vector<std::string> labels_;
};

Graph numbered(std::size_t n, const std::vector<Edge>& edges, const std::string& prefix) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return Graph(n, edges, std::move(labels));
}

}  // namespace

Graph spider(std::size_t n) {
  require_at_least(n, 1, "spider");
  Builder b;
  const Vertex center = b.add_vertex("c");
  for (std::size_t i = 1; i <= n; ++i) {
    const auto s = std::to_string(i);
    const Vertex x = b.add_vertex("x" + s);
    const Vertex y = b.add_vertex("y" + s);
    const Vertex z = b.add_vertex("z" + s);
    b.add_edge(center, x);
    b.add_edge(x, y);
    b.add_edge(y, z);
  }
  return b.build();
}

Graph subdivided_grid(std::size_t n) {
  require_at_least(n, 1, "subdivided grid");
  Builder b;
  std::vector<Vertex> top, bottom;
  for (std::size_t i = 1; i <= n + 1; ++i) top.push_back(b.add_vertex("u" + std::to_string(i)));
  for (std::size_t i = 1; i <= n + 1; ++i) bottom.push_back(b.add_vertex("v" + std::to_string(i)));
  for (std::size_t i = 0; i <= n; ++i) b.add_edge(top[i], bottom[i]);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex a = b.add_vertex("a" + std::to_string(i + 1));
    b.add_edge(top[i], a);
    b.add_edge(a, top[i + 1]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex s = b.add_vertex("b" + std::to_string(i + 1));
    b.add_edge(bottom[i], s);
    b.add_edge(s, bottom[i + 1]);
  }
  return b.build();
}

Graph k_family(std::size_t n) {
  require_at_least(n, 1, "k-family");
  Builder b;
  const Vertex u = b.add_vertex("u");
  const Vertex v = b.add_vertex("v");
  b.add_edge(u, v);
  for (std::size_t i = 1; i <= n; ++i) {
    const Vertex w = b.add_vertex("w" + std::to_string(i));
    b.add_edge(u, w);
    b.add_edge(v, w);
  }
  return b.build();
}

Graph cycle(std::size_t n) {
  require_at_least(n, 3, "cycle");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  }
  return numbered(n, edges, "v");
}

Graph path(std::size_t n) {
  require_at_least(n, 2, "path");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  }
  return numbered(n, edges, "v");
}

Graph complete(std::size_t n) {
  require_at_least(n, 1, "complete graph");
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return numbered(n, edges, "v");
}

Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return numbered(10, edges, "v");
}

Graph subdivide_edge(const Graph& g, const Edge& e) {
  if (!g.has_edge(e.u, e.v)) throw DomainError("subdivide_edge: edge not in graph");
  const auto mid = static_cast<Vertex>(g.vertex_count());
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) {
    if (f != e) edges.push_back(f);
  }
  edges.emplace_back(e.u, mid);
  edges.emplace_back(mid, e.v);
  std::vector<std::string> labels;
  for (Vertex v = 0; v < g.vertex_count(); ++v) labels.push_back(g.label(v));
  labels.push_back("s" + std::to_string(mid));
  return Graph(g.vertex_count() + 1, edges, std::move(labels));
}

Graph prop2_extremal(std::size_t n, std::size_t delta, Prop2Limits limits) {
  if (delta < 3) throw DomainError("prop2 requires delta >= 3, got " + std::to_string(delta));
  if (2 * n < delta + 1) {
    throw DomainError("prop2 requires n >= (delta + 1) / 2, got n = " + std::to_string(n) +
                      ", delta = " + std::to_string(delta));
  }
  // C(2n, delta) with an early bail-out once past the limit.
  const std::size_t base = 2 * n;
  std::size_t subsets = 1;
  for (std::size_t i = 1; i <= delta; ++i) {
    subsets = subsets * (base - delta + i) / i;
    if (subsets > limits.max_added_vertices) {
      throw ResourceError("prop2 would add more than " + std::to_string(limits.max_added_vertices) +
                          " vertices");
    }
  }

  Builder b;
  for (std::size_t i = 0; i < base; ++i) b.add_vertex("m" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    b.add_edge(static_cast<Vertex>(2 * i), static_cast<Vertex>(2 * i + 1));
  }
  // Enumerate delta-subsets of V(M) in lexicographic order.
  std::vector<Vertex> subset(delta);
  std::iota(subset.begin(), subset.end(), Vertex{0});
  std::size_t count = 0;
  while (true) {
    const Vertex hub = b.add_vertex("x" + std::to_string(count++));
    for (Vertex w : subset) b.add_edge(hub, w);
    std::size_t i = delta;
    while (i > 0 && subset[i - 1] == base - delta + (i - 1)) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < delta; ++j) subset[j] = subset[j - 1] + 1;
  }
  return b.build();
}

// ---------------------------------------------------------------------------
// Constructive family

bool FRecipe::is_marked(Vertex v) const { return std::binary_search(marked.begin(), marked.end(), v); }

VertexSet FRecipe::l_set() const {
  VertexSet out;
  for (Vertex v = 0; v < 2 * k2_count; ++v) {
    if (!is_marked(v ^ 1U)) out.push_back(v);
  }
  return out;
}

namespace {

Vertex partner_of(Vertex v) { return v ^ 1U; }

void validate(const FRecipe& r) {
  if (r.k2_count == 0) throw DomainError("recipe needs at least one K2");
  const std::size_t vm = 2 * r.k2_count;
  if (!std::is_sorted(r.marked.begin(), r.marked.end()) ||
      std::adjacent_find(r.marked.begin(), r.marked.end()) != r.marked.end()) {
    throw DomainError("recipe marked set must be sorted and duplicate-free");
  }
  for (Vertex v : r.marked) {
    if (v >= vm) throw DomainError("marked vertex m" + std::to_string(v) + " is outside V(M)");
  }
  if (r.a_edges.size() != r.a_count) {
    throw DomainError("recipe lists edges for " + std::to_string(r.a_edges.size()) +
                      " A vertices, expected " + std::to_string(r.a_count));
  }
  for (std::size_t i = 0; i < r.a_count; ++i) {
    std::set<Vertex> distinct(r.a_edges[i].begin(), r.a_edges[i].end());
    if (distinct.size() < 2) {
      throw DomainError("A vertex a" + std::to_string(i) + " needs at least two edges into V(M)");
    }
    if (*distinct.rbegin() >= vm) throw DomainError("A edge endpoint outside V(M)");
  }
  const VertexSet l = r.l_set();
  auto in_l = [&](Vertex v) { return std::binary_search(l.begin(), l.end(), v); };
  for (const auto& [v, a] : r.l_leaf_edges) {
    if (v >= vm || !in_l(v)) throw DomainError("leaf edge from m" + std::to_string(v) + ", not in L");
    if (a >= r.a_count) throw DomainError("leaf edge to unknown A vertex a" + std::to_string(a));
  }
  for (const Edge& e : r.extra_vm_edges) {
    if (e.v >= vm) throw DomainError("extra edge endpoint outside V(M)");
    if (in_l(e.u) || in_l(e.v)) {
      throw DomainError("extra edge m" + std::to_string(e.u) + "-m" + std::to_string(e.v) +
                        " touches L");
    }
  }
  for (const auto& [v, count] : r.pendant_counts) {
    if (!r.is_marked(v)) throw DomainError("pendant count for unmarked vertex m" + std::to_string(v));
  }
}

}  // namespace

FamilyFGraph family_f_from_recipe(const FRecipe& r, FBuildLimits limits) {
  validate(r);
  const std::size_t vm = 2 * r.k2_count;
  Builder b;
  auto check_budget = [&] {
    if (b.size() > limits.max_vertices) {
      throw ResourceError("family construction exceeded " + std::to_string(limits.max_vertices) +
                          " vertices");
    }
  };

  // Steps 1-2: the K2 copies; marks live in the recipe.
  for (std::size_t i = 0; i < vm; ++i) b.add_vertex("m" + std::to_string(i));
  std::vector<Edge> matching;
  for (std::size_t i = 0; i < r.k2_count; ++i) {
    b.add_edge(static_cast<Vertex>(2 * i), static_cast<Vertex>(2 * i + 1));
    matching.emplace_back(static_cast<Vertex>(2 * i), static_cast<Vertex>(2 * i + 1));
  }
  // Steps 3-5.
  std::vector<Vertex> a_ids;
  for (std::size_t i = 0; i < r.a_count; ++i) a_ids.push_back(b.add_vertex("a" + std::to_string(i)));
  check_budget();
  for (std::size_t i = 0; i < r.a_count; ++i) {
    for (Vertex w : r.a_edges[i]) b.add_edge(a_ids[i], w);
  }
  for (const auto& [v, a] : r.l_leaf_edges) b.add_edge(v, a_ids[a]);
  for (const Edge& e : r.extra_vm_edges) b.add_edge(e.u, e.v);

  const VertexSet l = r.l_set();

  // Steps 6-7 to a fixed point: new witness vertices can create fresh
  // common-neighbor pairs inside L.
  std::size_t witness_count = 0;
  auto ensure_witness = [&](Vertex a, Vertex c) {
    if (b.has_neighborhood(a, c)) return false;
    const Vertex x = b.add_vertex("w" + std::to_string(witness_count++));
    b.add_edge(x, a);
    b.add_edge(x, c);
    check_budget();
    return true;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < l.size(); ++i) {
      for (std::size_t j = i + 1; j < l.size(); ++j) {
        const Vertex u = l[i];
        const Vertex v = l[j];
        const Vertex pu = partner_of(u);
        const Vertex pv = partner_of(v);
        if (r.is_marked(u) || r.is_marked(v)) {
          if (b.share_neighbor(u, v)) changed |= ensure_witness(pu, pv);
        } else if (b.share_neighbor(u, v) || b.share_neighbor(pu, pv)) {
          changed |= ensure_witness(u, v);
          if (v != pu) changed |= ensure_witness(pu, pv);
        }
      }
    }
  }

  for (Vertex v : l) {
    if (!r.is_marked(v) && b.degree(v) < 2) {
      throw DomainError("unmarked L vertex m" + std::to_string(v) + " is a leaf; join it to A");
    }
  }

  // Step 8.
  std::size_t pendant_count = 0;
  for (Vertex v : r.marked) {
    const bool support = b.is_support(v);
    auto it = r.pendant_counts.find(v);
    const std::size_t count = it != r.pendant_counts.end() ? it->second : 1;
    if (count == 0 && !support) {
      throw DomainError("marked vertex m" + std::to_string(v) + " needs at least one pendant leaf");
    }
    for (std::size_t k = 0; k < count; ++k) {
      const Vertex leaf = b.add_vertex("p" + std::to_string(pendant_count++));
      b.add_edge(v, leaf);
    }
  }
  check_budget();

  return {b.build(), Matching(std::move(matching)), r};
}

namespace {

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

FRecipe draw_recipe(std::mt19937_64& rng, const FRandomParams& p) {
  FRecipe r;
  r.k2_count = uniform(rng, std::max<std::size_t>(1, p.min_k2), std::max(p.min_k2, p.max_k2));
  const auto vm = static_cast<Vertex>(2 * r.k2_count);
  for (Vertex v = 0; v < vm; ++v) {
    if (coin(rng, p.mark_prob)) r.marked.push_back(v);
  }
  const VertexSet l = r.l_set();
  const bool needs_a = std::any_of(l.begin(), l.end(), [&](Vertex v) { return !r.is_marked(v); });
  const std::size_t min_a = needs_a ? 1 : 0;
  r.a_count = uniform(rng, min_a, std::max(min_a, p.max_a));

  std::vector<std::size_t> degree(vm, 1);
  for (std::size_t i = 0; i < r.a_count; ++i) {
    VertexSet nbrs;
    for (Vertex w = 0; w < vm; ++w) {
      if (coin(rng, p.a_edge_prob)) nbrs.push_back(w);
    }
    while (nbrs.size() < 2) {
      const auto w = static_cast<Vertex>(uniform(rng, 0, vm - 1));
      if (!std::binary_search(nbrs.begin(), nbrs.end(), w)) {
        nbrs.insert(std::lower_bound(nbrs.begin(), nbrs.end(), w), w);
      }
    }
    for (Vertex w : nbrs) ++degree[w];
    r.a_edges.push_back(std::move(nbrs));
  }
  for (Vertex v : l) {
    if (degree[v] >= 2) continue;
    if (r.is_marked(v) && !coin(rng, 0.5)) continue;
    if (r.a_count == 0) continue;
    r.l_leaf_edges.emplace_back(v, uniform(rng, 0, r.a_count - 1));
  }
  VertexSet outside_l;
  for (Vertex v = 0; v < vm; ++v) {
    if (!std::binary_search(l.begin(), l.end(), v)) outside_l.push_back(v);
  }
  for (std::size_t i = 0; i < outside_l.size(); ++i) {
    for (std::size_t j = i + 1; j < outside_l.size(); ++j) {
      if (outside_l[j] == partner_of(outside_l[i])) continue;
      if (coin(rng, p.extra_edge_prob)) r.extra_vm_edges.emplace_back(outside_l[i], outside_l[j]);
    }
  }
  for (Vertex v : r.marked) {
    r.pendant_counts[v] = uniform(rng, 1, std::max<std::size_t>(1, p.max_pendants));
  }
  return r;
}

}  // namespace

FamilyFGraph family_f_random(std::uint64_t seed, const FRandomParams& params) {
  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; attempt < params.max_attempts; ++attempt) {
    const FRecipe recipe = draw_recipe(rng, params);
    try {
      return family_f_from_recipe(recipe, {params.max_vertices});
    } catch (const ResourceError&) {
      // Too large after closure; draw again from the same stream.
    }
  }
  throw ResourceError("no family member within " + std::to_string(params.max_vertices) +
                      " vertices after " + std::to_string(params.max_attempts) + " draws");
}

namespace {

std::vector<std::set<Vertex>> random_adjacency(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<std::set<Vertex>> adj(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (coin(rng, p)) {
        adj[a].insert(b);
        adj[b].insert(a);
      }
    }
  }
  return adj;
}

void connect_components(std::mt19937_64& rng, std::vector<std::set<Vertex>>& adj) {
  while (true) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < adj.size(); ++v) {
      for (Vertex w : adj[v]) {
        if (v < w) edges.emplace_back(v, w);
      }
    }
    const auto comps = connected_components(Graph(adj.size(), edges));
    if (comps.size() <= 1) return;
    const auto& first = comps[0];
    const auto& second = comps[1 + uniform(rng, 0, comps.size() - 2)];
    const Vertex a = first[uniform(rng, 0, first.size() - 1)];
    const Vertex b = second[uniform(rng, 0, second.size() - 1)];
    adj[a].insert(b);
    adj[b].insert(a);
  }
}

Graph freeze(const std::vector<std::set<Vertex>>& adj) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < adj.size(); ++v) {
    for (Vertex w : adj[v]) {
      if (v < w) edges.emplace_back(v, w);
    }
  }
  return numbered(adj.size(), edges, "v");
}

}  // namespace

Graph random_min_degree_two(std::uint64_t seed, std::size_t n, double edge_prob) {
  require_at_least(n, 3, "random minimum-degree-2 graph");
  std::mt19937_64 rng(seed);
  while (true) {
    auto adj = random_adjacency(rng, n, edge_prob);
    for (Vertex v = 0; v < n; ++v) {
      while (adj[v].size() < 2) {
        const auto w = static_cast<Vertex>(uniform(rng, 0, n - 1));
        if (w == v) continue;
        adj[v].insert(w);
        adj[w].insert(v);
      }
    }
    connect_components(rng, adj);
    Graph g = freeze(adj);
    if (min_degree(g) == 2) return g;
  }
}

Graph random_low_min_degree(std::uint64_t seed, std::size_t n, double edge_prob) {
  require_at_least(n, 2, "random low-minimum-degree graph");
  std::mt19937_64 rng(seed);
  while (true) {
    auto adj = random_adjacency(rng, n, edge_prob);
    connect_components(rng, adj);
    Graph g = freeze(adj);
    const std::size_t delta = min_degree(g);
    if (delta == 1 || delta == 2) return g;
  }
}

}  // namespace tdmm
