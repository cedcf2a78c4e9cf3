#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tcg/coalition.hpp"
#include "tcg/corpus.hpp"
#include "tcg/error.hpp"
#include "tcg/solver.hpp"

using namespace tcg;

namespace {

// Maximum k over every set partition, by direct rule checking.
std::size_t brute_tc(const Graph& g) {
  std::size_t best = 0;
  const std::size_t n = g.order();
  oracle::for_each_labeling(n, [&](const std::vector<std::size_t>& labels) {
    std::size_t k = 0;
    for (auto l : labels) k = std::max(k, l + 1);
    if (k <= best) return;
    std::vector<unsigned> mask(k, 0);
    for (Vertex v = 0; v < n; ++v) mask[labels[v]] |= 1U << v;
    for (std::size_t i = 0; i < k; ++i)
      if (oracle::total_dominates(g, mask[i])) return;
    for (std::size_t i = 0; i < k; ++i) {
      bool partner = false;
      for (std::size_t j = 0; j < k && !partner; ++j) partner = j != i && oracle::total_dominates(g, mask[i] | mask[j]);
      if (!partner) return;
    }
    best = k;
  });
  return best;
}

}  // namespace

TEST_CASE("bounds") {
  auto b = tc_upper_bound(named::complete(7));
  CHECK(b.quadratic == 16);
  CHECK_FALSE(b.minmax.has_value());
  CHECK(b.minimum == 7);

  b = tc_upper_bound(named::complete_bipartite(3, 3));
  CHECK(b.quadratic == 6);
  CHECK(b.minimum == 6);

  // delta = 2, Delta = 5: K_{2,5}.
  b = tc_upper_bound(named::complete_bipartite(2, 5));
  REQUIRE(b.minmax.has_value());
  CHECK(*b.minmax == 10);
  REQUIRE(b.delta2.has_value());
  CHECK(*b.delta2 == 10);
  CHECK(b.quadratic == 12);
  CHECK(b.minimum == 7);

  b = tc_upper_bound(named::star(3));
  REQUIRE(b.delta1.has_value());
  CHECK(*b.delta1 == 4);

  for (std::size_t d = 1; d <= 12; ++d) {
    const std::size_t expected = d % 2 == 0 ? d * d / 4 + d + 1 : (d + 1) * (d + 3) / 4;
    CHECK(quadratic_bound(d) == expected);
  }
  CHECK_THROWS_AS((void)tc_upper_bound(named::empty(2)), InputError);
}

TEST_CASE("exact values") {
  auto r = tc_exact(named::complete(2));
  CHECK(r.status == TcStatus::exact);
  CHECK(r.tc == 2);
  CHECK(tc_exact(named::cycle(4)).tc == 4);
  CHECK(tc_exact(named::path(4)).tc == 2);
  CHECK(brute_tc(named::path(4)) == 2);
  const auto star = tc_exact(named::star(3));
  CHECK(star.tc <= 4);
  CHECK(star.tc == brute_tc(named::star(3)));
  CHECK_THROWS_AS((void)tc_exact(named::empty(3)), InputError);
}

TEST_CASE("oracle examples and limits") {
  CHECK(tc_oracle(named::cycle(4)) == 4);
  CHECK(tc_oracle(named::complete(2)) == 2);
  CHECK(tc_oracle(named::path(4)) == 2);
  CHECK_THROWS_AS((void)tc_oracle(named::cycle(10)), LimitError);
}

TEST_CASE("singleton partition test") {
  CHECK(singleton_partition_tc(named::complete_bipartite(3, 3)));
  CHECK(singleton_partition_tc(named::cycle(4)));
  CHECK_FALSE(singleton_partition_tc(named::path(4)));
}

TEST_CASE("solver and oracle agree with direct rule checking up to 6 vertices") {
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& g : generate_isolate_free_graphs(n)) {
      const auto expected = brute_tc(g);
      CHECK(tc_oracle(g) == expected);
      const auto r = tc_exact(g);
      CHECK(r.tc == expected);
      CHECK(r.tc <= r.bounds.minimum);
      if (expected == 0) {
        CHECK(r.status == TcStatus::no_partition);
      } else {
        REQUIRE(r.certificate.has_value());
        CHECK(r.certificate->size() == r.tc);
        CHECK(is_total_coalition_partition(g, *r.certificate));
      }
      CHECK(singleton_partition_tc(g) == (expected == n));
    }
  }
}

TEST_CASE("enumeration of k-class partitions matches brute force counts") {
  for (const auto& g : generate_isolate_free_graphs(5)) {
    for (std::size_t k = 2; k <= 5; ++k) {
      std::size_t visited = 0;
      for_each_total_coalition_partition(g, k, [&](const VertexPartition& p) {
        CHECK(p.size() == k);
        CHECK(is_total_coalition_partition(g, p));
        ++visited;
        return true;
      });
      std::size_t expected = 0;
      oracle::for_each_labeling(5, [&](const std::vector<std::size_t>& labels) {
        const auto p = VertexPartition::from_labels(labels);
        if (p.size() == k && is_total_coalition_partition(g, p)) ++expected;
      });
      CHECK(visited == expected);
    }
  }
}

TEST_CASE("certificates do not depend on the worker count") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = oracle::random_graph(7 + rng() % 4, 0.45, rng);
    if (!is_isolate_free(g)) continue;
    SolverOptions one;
    SolverOptions many;
    many.workers = 4;
    const auto a = tc_exact(g, one);
    const auto b = tc_exact(g, many);
    CHECK(a.tc == b.tc);
    CHECK(a.certificate == b.certificate);
  }
}

TEST_CASE("budget expiry is reported, not hidden") {
  SolverOptions tiny;
  tiny.budget = std::chrono::milliseconds(1);
  const auto g = named::cycle(60);
  const auto r = tc_exact(g, tiny);
  if (r.status == TcStatus::budget_exceeded) {
    CHECK_FALSE(r.exact());
    CHECK(r.lower_bound <= r.upper_bound);
    CHECK(r.upper_bound <= r.bounds.minimum);
  } else {
    CHECK(r.exact());
  }
}
