#include "tdmm/matching.hpp"

#include <algorithm>

#include "tdmm/errors.hpp"

namespace tdmm {

namespace {

bool build_partners(const std::vector<Edge>& edges, std::map<Vertex, Vertex>& partner) {
  for (const Edge& e : edges) {
    if (!partner.emplace(e.u, e.v).second) return false;
    if (!partner.emplace(e.v, e.u).second) return false;
  }
  return true;
}

}  // namespace

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  if (!build_partners(edges_, partner_)) {
    throw DomainError("edges share an endpoint: not a matching");
  }
}

std::optional<Matching> Matching::try_from(std::vector<Edge> edges) {
  try {
    return Matching(std::move(edges));
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

Vertex Matching::partner(Vertex w) const {
  auto it = partner_.find(w);
  if (it == partner_.end()) {
    throw DomainError("vertex " + std::to_string(w) + " is not covered by the matching");
  }
  return it->second;
}

VertexSet Matching::vertices() const {
  VertexSet out;
  out.reserve(partner_.size());
  for (const auto& [v, _] : partner_) out.push_back(v);
  return out;
}

VertexSet Matching::partners(std::span<const Vertex> vs) const {
  VertexSet out;
  for (Vertex v : vs) out.push_back(partner(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Matching::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

}  // namespace tdmm
