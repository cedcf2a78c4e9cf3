#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tcg/error.hpp"
#include "tcg/graph.hpp"

using namespace tcg;

TEST_CASE("vertex set basics") {
  VertexSet s{0, 5, 64, 127};
  CHECK(s.count() == 4);
  CHECK(s.first() == 0);
  CHECK(s.bound() == 128);
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(63));
  std::vector<Vertex> seen(s.begin(), s.end());
  CHECK(seen == std::vector<Vertex>{0, 5, 64, 127});
  s.reset(0);
  CHECK(s.first() == 5);
  CHECK(VertexSet{}.first() == kMaxVertices);
  CHECK(VertexSet::first_n(64).count() == 64);
  CHECK(VertexSet::first_n(65).count() == 65);
  CHECK(VertexSet::first_n(128).count() == 128);
  CHECK((VertexSet{1, 2} - VertexSet{2}) == VertexSet{1});
  CHECK(VertexSet{1}.is_subset_of(VertexSet{1, 2}));
  CHECK_FALSE(VertexSet{1, 3}.is_subset_of(VertexSet{1, 2}));
}

TEST_CASE("factories validate input") {
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), InputError);
  CHECK_THROWS_AS(Graph::from_edges(129, {}), InputError);
  const auto g = Graph::from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(g.size() == 1);

  std::vector<VertexSet> asym(2);
  asym[0].set(1);
  CHECK_THROWS_AS(Graph::from_rows(asym), InputError);
}

TEST_CASE("vertex cover") {
  const auto c4 = named::cycle(4);
  CHECK(is_vertex_cover(c4, {0, 2}));
  CHECK_FALSE(is_vertex_cover(c4, {0}));
  CHECK(is_vertex_cover(c4, c4.vertices()));
}

TEST_CASE("complement of C4 is two disjoint edges") {
  const auto co = complement(named::cycle(4));
  CHECK(co.edges() == std::vector<Edge>{{0, 2}, {1, 3}});
  CHECK(oracle::isomorphic(co, disjoint_union(named::complete(2), named::complete(2))));
}

TEST_CASE("named graphs") {
  CHECK(named::complete(5).size() == 10);
  CHECK(named::cycle(6).size() == 6);
  CHECK(named::path(4).size() == 3);
  CHECK(named::star(3).order() == 4);
  CHECK(max_degree(named::star(3)) == 3);
  CHECK(named::complete_bipartite(3, 3).size() == 9);
  CHECK_FALSE(is_isolate_free(named::empty(2)));
  CHECK(is_isolate_free(named::path(2)));
  CHECK_THROWS_AS((void)min_degree(Graph{}), InputError);
}

TEST_CASE("random graphs are symmetric, loop-free, handshake holds") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 100;
    const auto g = oracle::random_graph(n, 0.1, rng);
    std::size_t sum = 0;
    for (Vertex v = 0; v < n; ++v) {
      CHECK_FALSE(g.has_edge(v, v));
      for (Vertex u : g.neighbors(v)) CHECK(g.has_edge(u, v));
      sum += g.degree(v);
    }
    CHECK(sum == 2 * g.size());
  }
}

TEST_CASE("relabel and induce") {
  const auto p = named::path(4);
  const std::vector<Vertex> perm{3, 2, 1, 0};
  const auto q = p.relabeled(perm);
  CHECK(q.has_edge(3, 2));
  CHECK(q.has_edge(1, 0));
  CHECK(p.induced({1, 2, 3}).edges() == std::vector<Edge>{{0, 1}, {1, 2}});
}
