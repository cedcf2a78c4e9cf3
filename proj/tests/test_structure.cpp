#include "doctest.h"
#include "oracles.hpp"
#include "tcg/constructions.hpp"
#include "tcg/error.hpp"
#include "tcg/matching.hpp"
#include "tcg/structure.hpp"

using namespace tcg;

TEST_CASE("lemma report on C4 singletons") {
  const auto report = verify_structural_lemmas(named::cycle(4), VertexPartition::singletons(4));
  CHECK(report.all_passed());
  CHECK(report.tcg_matching == 2);
  CHECK(report.check("equality").triggered);
  CHECK(report.check("equality").passed);
  CHECK(report.check("vertex_cover").triggered);
  CHECK_THROWS_AS((void)report.check("nope"), InputError);
}

TEST_CASE("lemma report on K2") {
  const auto report = verify_structural_lemmas(named::complete(2), VertexPartition::singletons(2));
  CHECK(report.all_passed());
  CHECK(report.tcg_matching == 1);
  CHECK(report.check("equality").triggered);
}

TEST_CASE("lemma report on the Delta = 4 extremal layout") {
  const auto l = build_quadratic_extremal(4);
  const auto report = verify_structural_lemmas(l.graph, l.partition);
  CHECK(report.all_passed());
  CHECK(report.tcg_matching == 3);
  CHECK(maximum_matching_size(report.tcg) == 3);
  CHECK_FALSE(report.check("equality").triggered);
}

TEST_CASE("predicted shapes") {
  const auto h6 = predicted_optimal_tcg(6);
  CHECK(h6.order() == 16);
  CHECK(max_degree(h6) == 6);
  CHECK(min_degree(h6) == 1);
  CHECK(maximum_matching_size(h6) == 4);
  for (Vertex c : {0, 4, 8, 12}) CHECK(h6.degree(c) == 6);
  CHECK(h6.induced({0, 4, 8, 12}) == named::complete(4));

  const auto h8 = predicted_optimal_tcg(8);
  CHECK(h8.order() == 25);
  CHECK(max_degree(h8) == 8);
  CHECK(maximum_matching_size(h8) == 5);

  const auto odd = predicted_optimal_tcg_variants(7);
  REQUIRE(odd.size() == 2);
  // 4 stars on 5 vertices, or 5 stars on 4 vertices.
  CHECK(odd[0].order() == 20);
  CHECK(odd[1].order() == 20);
  CHECK(maximum_matching_size(odd[0]) == 4);
  CHECK(maximum_matching_size(odd[1]) == 5);
  for (const auto& h : odd) CHECK(max_degree(h) == 7);

  CHECK_THROWS_AS((void)predicted_optimal_tcg(4), InputError);
  CHECK_THROWS_AS((void)predicted_optimal_tcg(7), InputError);
}

TEST_CASE("six-path filter") {
  CHECK(six_path_filter(named::complete_bipartite(3, 3)));
  CHECK_FALSE(six_path_filter(named::path(6)));
  auto three_k2 = disjoint_union(named::complete(2), disjoint_union(named::complete(2), named::complete(2)));
  CHECK(six_path_filter(three_k2));
  CHECK_FALSE(six_path_filter(named::cycle(6)));
  CHECK_THROWS_AS((void)six_path_filter(named::star(4)), InputError);
}
