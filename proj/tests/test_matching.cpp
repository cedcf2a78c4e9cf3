#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tcg/corpus.hpp"
#include "tcg/matching.hpp"

using namespace tcg;

TEST_CASE("matching on small named graphs") {
  CHECK(maximum_matching_size(named::complete(2)) == 1);
  CHECK(maximum_matching_size(named::cycle(5)) == 2);
  CHECK(maximum_matching_size(named::star(4)) == 1);
  CHECK(maximum_matching_size(named::complete_bipartite(3, 3)) == 3);
  CHECK(maximum_matching_size(named::empty(3)) == 0);
  // Two triangles joined by an edge: a blossom on each side.
  const auto g = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  CHECK(maximum_matching_size(g) == 3);
}

TEST_CASE("blossom agrees with edge-subset search up to 8 edges") {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& g : generate_graphs(n)) {
      if (g.size() > 8) continue;
      const auto m = maximum_matching(g);
      CHECK(is_matching(g, m));
      CHECK(m.size() == oracle::matching_number(g));
      ++checked;
    }
  }
  CHECK(checked > 300);
}

TEST_CASE("blossom on random graphs") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = oracle::random_graph(6 + rng() % 6, 0.25, rng);
    if (g.size() > 16) continue;
    const auto m = maximum_matching(g);
    CHECK(is_matching(g, m));
    CHECK(m.size() == oracle::matching_number(g));
  }
}

TEST_CASE("is_matching rejects shared endpoints and non-edges") {
  const auto p = named::path(4);
  CHECK_FALSE(is_matching(p, Matching{{{0, 1}, {1, 2}}}));
  CHECK_FALSE(is_matching(p, Matching{{{0, 3}}}));
  CHECK(is_matching(p, Matching{{{0, 1}, {2, 3}}}));
}
