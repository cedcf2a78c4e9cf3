#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "tcg/coalition.hpp"
#include "tcg/corpus.hpp"
#include "tcg/domination.hpp"
#include "tcg/error.hpp"
#include "tcg/matching.hpp"

using namespace tcg;

namespace {

VertexPartition classes(std::initializer_list<VertexSet> sets) { return VertexPartition(std::vector<VertexSet>(sets)); }

}  // namespace

TEST_CASE("validate_partition") {
  const auto c4 = named::cycle(4);
  CHECK(validate_partition(c4, VertexPartition::singletons(4)).valid());

  const auto overlap = validate_partition(c4, classes({{0, 1}, {1, 2}, {3}}));
  CHECK_FALSE(overlap.valid());
  CHECK(overlap.overlapping == std::vector<Vertex>{1});

  const auto cover = validate_partition(c4, classes({{0}, {1}}));
  CHECK(cover.unassigned == VertexSet{2, 3});

  const auto range = validate_partition(c4, classes({{0, 1, 2, 3}, {7}, {}}));
  CHECK(range.out_of_range == std::vector<Vertex>{7});
  CHECK(range.empty_classes == std::vector<std::size_t>{2});
  CHECK_FALSE(range.describe().empty());
}

TEST_CASE("partition text format") {
  std::istringstream in("# header\n0, 2\n\n1,3  # trailing\n");
  const auto p = parse_partition(in);
  CHECK(p == classes({{0, 2}, {1, 3}}));
  std::istringstream back(to_partition_text(p));
  CHECK(parse_partition(back) == p);
  std::istringstream bad("0,x\n");
  CHECK_THROWS_AS((void)parse_partition(bad), ParseError);
}

TEST_CASE("labels round trip") {
  const std::vector<std::size_t> labels{0, 1, 0, 2, 1};
  const auto p = VertexPartition::from_labels(labels);
  CHECK(p.size() == 3);
  CHECK(p.labels(5) == labels);
}

TEST_CASE("total coalition partition examples") {
  const auto c4 = named::cycle(4);
  const auto check = check_total_coalition_partition(c4, VertexPartition::singletons(4));
  CHECK(check.ok);
  REQUIRE(check.partner[0].has_value());
  CHECK(*check.partner[0] == 1);

  const auto halves = check_total_coalition_partition(c4, classes({{0, 1}, {2, 3}}));
  CHECK_FALSE(halves.ok);
  CHECK(halves.dominating_classes == std::vector<std::size_t>{0, 1});

  CHECK(is_total_coalition_partition(named::complete(2), VertexPartition::singletons(2)));
  CHECK_THROWS_AS((void)is_total_coalition_partition(c4, classes({{0}, {1}})), InputError);
}

TEST_CASE("build_tcg examples") {
  const auto c4 = named::cycle(4);
  const auto tcg = build_tcg(c4, VertexPartition::singletons(4));
  // Pair {i,j} is a coalition iff N(i) u N(j) = V, which in C4 means i, j adjacent.
  for (Vertex i = 0; i < 4; ++i)
    for (Vertex j = i + 1; j < 4; ++j)
      CHECK(tcg.graph.has_edge(i, j) == ((c4.neighbors(i) | c4.neighbors(j)) == c4.vertices()));
  CHECK(tcg.graph == c4);
  CHECK(build_tcg(named::complete(2), VertexPartition::singletons(2)).graph == named::complete(2));
  const auto k33 = named::complete_bipartite(3, 3);
  CHECK(oracle::isomorphic(build_tcg(k33, VertexPartition::singletons(6)).graph, k33));
  CHECK_THROWS_AS((void)build_tcg(c4, classes({{0, 1}, {2, 3}})), InputError);
}

TEST_CASE("TCG degree and matching bounds over all partitions of isolate-free graphs on <= 6 vertices") {
  std::size_t partitions = 0;
  for (std::size_t n = 2; n <= 6; ++n) {
    for (const auto& g : generate_isolate_free_graphs(n)) {
      const auto delta = max_degree(g);
      const auto low = min_degree(g);
      oracle::for_each_labeling(n, [&](const std::vector<std::size_t>& labels) {
        const auto p = VertexPartition::from_labels(labels);
        if (!is_total_coalition_partition(g, p)) return;
        ++partitions;
        const auto tcg = build_tcg(g, p);
        // Edges against the pairwise definition.
        for (std::size_t i = 0; i < p.size(); ++i) {
          CHECK(tcg.graph.degree(i) >= 1);
          for (std::size_t j = i + 1; j < p.size(); ++j)
            CHECK(tcg.graph.has_edge(i, j) == forms_total_coalition(g, p[i], p[j]));
        }
        CHECK(max_degree(tcg.graph) <= delta);
        const auto nu = maximum_matching_size(tcg.graph);
        CHECK(nu <= std::min(delta, low));
        if (nu == delta) {
          CHECK(p.size() == 2 * delta);
          CHECK(n % delta == 0);
        }
        for (Vertex v = 0; v < tcg.graph.order(); ++v)
          if (tcg.graph.degree(v) == delta) CHECK(is_vertex_cover(tcg.graph, tcg.graph.neighbors(v)));
      });
    }
  }
  CHECK(partitions > 1000);
}
