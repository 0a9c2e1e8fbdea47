#include <doctest.h>

#include "support/brute_force.hpp"
#include "support/fixtures.hpp"
#include "tdmm/characterization.hpp"
#include "tdmm/errors.hpp"
#include "tdmm/generators.hpp"
#include "tdmm/oracles.hpp"
#include "tdmm/recognizer.hpp"

using namespace tdmm;
using namespace tdmm::testing;

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

FRecipe three_mark_recipe() {
  FRecipe r;
  r.k2_count = 4;
  r.marked = {0, 1, 2};
  r.a_count = 3;
  r.a_edges = {{2, 6}, {0, 4, 5}, {4, 7}};
  r.extra_vm_edges = {Edge(1, 3)};
  r.pendant_counts = {{0, 1}, {1, 2}, {2, 1}};
  return r;
}

}  // namespace

TEST_CASE("spider") {
  Graph p4 = spider(1);
  CHECK(p4.vertex_count() == 4);
  CHECK(p4.edge_count() == 3);
  CHECK_FALSE(girth(p4).has_value());
  Graph s2 = spider(2);
  CHECK(s2.vertex_count() == 7);
  CHECK(s2.edge_count() == 6);
  CHECK(min_degree(s2) == 1);
  auto v = gamma_t_2mu_oracle(spider(3));
  CHECK(v.gamma_t == 6);
  CHECK(v.mu_star == 3);
  CHECK_THROWS_AS(spider(0), DomainError);
}

TEST_CASE("subdivided_grid") {
  CHECK(is_cycle_of_length(subdivided_grid(1), 6));
  Graph g2 = subdivided_grid(2);
  CHECK(g2.vertex_count() == 10);
  CHECK(min_degree(g2) == 2);
  auto v = gamma_t_2mu_oracle(g2);
  CHECK(v.gamma_t == 6);
  CHECK(v.mu_star == 3);
  for (std::size_t n = 1; n <= 5; ++n) {
    Graph g = subdivided_grid(n);
    CHECK(g.vertex_count() == 4 * n + 2);
    CHECK(g.edge_count() == 5 * n + 1);
  }
  CHECK_THROWS_AS(subdivided_grid(0), DomainError);
}

TEST_CASE("small families") {
  Graph k1 = k_family(1);
  CHECK(is_cycle_of_length(k1, 3));
  CHECK(is_cycle_of_length(cycle(6), 6));
  Graph k3 = k_family(3);
  CHECK(k3.vertex_count() == 5);
  CHECK(k3.edge_count() == 7);
  CHECK(brute_gamma_t(k3) == 2);
  CHECK(brute_mu_star(k3) == 1);
  CHECK(total_domination_number(k3).value == 2);
  CHECK(path(2).edge_count() == 1);
  CHECK(complete(5).edge_count() == 10);
  Graph p = petersen();
  CHECK(p.vertex_count() == 10);
  CHECK(p.edge_count() == 15);
  CHECK(min_degree(p) == 3);
  CHECK_THROWS_AS(k_family(0), DomainError);
  CHECK_THROWS_AS(cycle(2), DomainError);
  CHECK_THROWS_AS(path(1), DomainError);
}

TEST_CASE("subdivide_edge") {
  Graph g = subdivide_edge(petersen(), Edge(0, 1));
  CHECK(g.vertex_count() == 11);
  CHECK(g.edge_count() == 16);
  CHECK(min_degree(g) == 2);
  CHECK(degree_two_vertices(g) == VertexSet{10});
  CHECK_THROWS_AS(subdivide_edge(cycle(5), Edge(0, 2)), DomainError);
}

TEST_CASE("prop2_extremal") {
  Graph g = prop2_extremal(2, 3);
  CHECK(g.vertex_count() == 8);
  CHECK(min_degree(g) == 3);
  for (Vertex v = 0; v < 4; ++v) CHECK(g.degree(v) == 1 + binomial(3, 2));
  auto report = check_proposition1(g);
  CHECK(report.gamma_t == 3);
  CHECK(report.mu_star == 2);
  CHECK(report.slack() == 0);

  Graph big = prop2_extremal(3, 3);
  CHECK(big.vertex_count() == 26);
  CHECK(min_degree(big) == 3);
  for (Vertex v = 0; v < 6; ++v) CHECK(big.degree(v) == 1 + binomial(5, 2));

  CHECK_THROWS_AS(prop2_extremal(1, 3), DomainError);
  CHECK_THROWS_AS(prop2_extremal(2, 2), DomainError);
  CHECK_THROWS_AS(prop2_extremal(8, 6, Prop2Limits{1000}), ResourceError);
}

TEST_CASE("prop2_extremal meets the bound with equality at desk scale") {
  for (std::size_t delta = 3; delta <= 6; ++delta) {
    for (std::size_t n = (delta + 2) / 2; 2 * n + binomial(2 * n, delta) <= 14; ++n) {
      Graph g = prop2_extremal(n, delta);
      CHECK(g.vertex_count() == 2 * n + binomial(2 * n, delta));
      CHECK(min_degree(g) == delta);
      auto report = check_proposition1(g);
      CHECK(report.mu_star == n);
      CHECK(static_cast<long long>(report.gamma_t) == 2LL * static_cast<long long>(n) -
                                                          static_cast<long long>(delta) + 2);
    }
  }
}

TEST_CASE("family_f_from_recipe") {
  SUBCASE("one A vertex on three K2s") {
    FRecipe r;
    r.k2_count = 3;
    r.a_count = 1;
    r.a_edges = {{0, 2, 4}};
    auto f = family_f_from_recipe(r);
    CHECK(min_degree(f.graph) == 2);
    auto v = gamma_t_2mu_oracle(f.graph);
    CHECK(v.gamma_t == 6);
    CHECK(v.mu_star == 3);
    CHECK(brute_gamma_t(f.graph) == 6);
    CHECK(check_theorem1_conditions(f.graph, f.matching).holds());
  }
  SUBCASE("both endpoints marked gives P4") {
    FRecipe r;
    r.k2_count = 1;
    r.marked = {0, 1};
    auto f = family_f_from_recipe(r);
    CHECK(f.graph.vertex_count() == 4);
    CHECK(f.graph.edge_count() == 3);
    CHECK(is_connected(f.graph));
    CHECK(min_degree(f.graph) == 1);
    CHECK_FALSE(girth(f.graph).has_value());
  }
  SUBCASE("three marked vertices on four K2s") {
    auto f = family_f_from_recipe(three_mark_recipe());
    CHECK(f.graph.vertex_count() == 18);
    CHECK(f.graph.edge_count() == 22);
    std::size_t witnesses = 0;
    for (Vertex v = 0; v < f.graph.vertex_count(); ++v) {
      if (f.graph.label(v).front() == 'w') ++witnesses;
    }
    CHECK(witnesses == 3);
    CHECK(find_theorem1_matching(f.graph).has_value());
    CHECK(check_theorem1_conditions(f.graph, f.matching).holds());
    auto v = gamma_t_2mu_oracle(f.graph);
    CHECK(v.equal());
    CHECK(v.mu_star == 4);
  }
  SUBCASE("partner pairs get a single witness") {
    FRecipe r;
    r.k2_count = 2;
    r.a_count = 1;
    r.a_edges = {{0, 1, 2}};
    auto f = family_f_from_recipe(r);
    for (Vertex a = 0; a < 4; ++a) {
      for (Vertex c = a + 1; c < 4; ++c) {
        std::size_t exact = 0;
        for (Vertex x = 0; x < f.graph.vertex_count(); ++x) {
          if (f.graph.neighbors(x) == VertexSet{a, c}) ++exact;
        }
        CHECK(exact <= 1);
      }
    }
    CHECK(check_theorem1_conditions(f.graph, f.matching).holds());
  }
  SUBCASE("invalid recipes") {
    FRecipe r;
    r.k2_count = 0;
    CHECK_THROWS_AS(family_f_from_recipe(r), DomainError);
    r.k2_count = 2;
    r.a_count = 1;
    r.a_edges = {{0}};
    CHECK_THROWS_AS(family_f_from_recipe(r), DomainError);
    r.a_edges = {{0, 2}};
    r.extra_vm_edges = {Edge(1, 3)};
    CHECK_THROWS_AS(family_f_from_recipe(r), DomainError);
    r.extra_vm_edges.clear();
    r.pendant_counts = {{0, 1}};
    CHECK_THROWS_AS(family_f_from_recipe(r), DomainError);
    FRecipe lonely;
    lonely.k2_count = 1;
    CHECK_THROWS_AS(family_f_from_recipe(lonely), DomainError);
  }
  SUBCASE("vertex budget") {
    CHECK_THROWS_AS(family_f_from_recipe(three_mark_recipe(), FBuildLimits{10}), ResourceError);
  }
}

TEST_CASE("recipe text round trip") {
  FRecipe r = three_mark_recipe();
  r.l_leaf_edges = {{6, 0}};
  CHECK(parse_recipe(serialize_recipe(r)) == r);
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const FRecipe drawn = family_f_random(seed).recipe;
    CHECK(parse_recipe(serialize_recipe(drawn)) == drawn);
  }
  CHECK_THROWS_AS(parse_recipe("k2_count x"), FormatError);
  CHECK_THROWS_AS(parse_recipe("colour 3"), FormatError);
  CHECK_THROWS_AS(parse_recipe("k2_count 1 2"), FormatError);
}

TEST_CASE("family_f_random") {
  auto a = family_f_random(1);
  auto b = family_f_random(1);
  CHECK(serialize_edge_list(a.graph) == serialize_edge_list(b.graph));
  CHECK(a.recipe == b.recipe);

  FRandomParams unmarked;
  unmarked.mark_prob = 0.0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto f = family_f_random(seed, unmarked);
    CHECK(f.graph.vertex_count() <= unmarked.max_vertices);
    CHECK(min_degree(f.graph) == 2);
    CHECK(recognize(f.graph).verdict);
    CHECK(check_theorem1_conditions(f.graph, f.matching).holds());
  }
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto f = family_f_random(seed);
    CHECK(f.graph.vertex_count() <= 16);
    CHECK(check_theorem1_conditions(f.graph, f.matching).holds());
    CHECK(f.recipe.marked.empty() == (min_degree(f.graph) == 2));
  }
}

TEST_CASE("random degree-constrained graphs") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    Graph g = random_min_degree_two(seed, 6 + seed % 8);
    CHECK(g.vertex_count() == 6 + seed % 8);
    CHECK(min_degree(g) == 2);
    CHECK(is_connected(g));
    CHECK(serialize_edge_list(g) == serialize_edge_list(random_min_degree_two(seed, 6 + seed % 8)));
    Graph h = random_low_min_degree(seed, 4 + seed % 8);
    CHECK(is_connected(h));
    CHECK(min_degree(h) >= 1);
    CHECK(min_degree(h) <= 2);
  }
}
