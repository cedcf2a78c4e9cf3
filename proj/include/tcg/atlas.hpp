#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "tcg/graph.hpp"
#include "tcg/partition.hpp"

namespace tcg {

/// Shape of an optimal total coalition graph: host max degree `delta`,
/// matching number `nu`, and k = nu (delta - nu + 2) vertices made of nu
/// stars on delta - nu + 2 vertices each.
struct AtlasQuery {
  std::size_t delta = 0;
  std::size_t nu = 0;
  std::size_t expected_vertices = 0;

  /// Throws InputError unless 1 <= nu <= delta.
  static AtlasQuery make(std::size_t delta, std::size_t nu);

  [[nodiscard]] std::size_t star_order() const { return delta - nu + 2; }
  [[nodiscard]] std::size_t leaves_per_star() const { return delta - nu + 1; }
};

/// Names of the candidate constraints h fails; empty iff h is a candidate.
///  "order", "isolate_free", "max_degree", "matching", "star_system", "vertex_cover".
///
/// "star_system": V(h) splits into nu stars of the query's order. When the
/// stars have >= 2 leaves, the centers must also form a clique and no
/// center may touch a leaf of another star; with >= 3 leaves the leaves
/// must be independent.
[[nodiscard]] std::vector<std::string> atlas_violations(const Graph& h, const AtlasQuery& q);

/// Every candidate up to isomorphism, as canonically labelled graphs sorted
/// by canonical form. Throws InputError unless q.delta <= 4.
[[nodiscard]] std::vector<Graph> enumerate_optimal_tcg_candidates(const AtlasQuery& q, std::size_t workers = 1);

/// Canonical forms of TCG(g, P) over every total coalition partition P with
/// TC(g) classes. Throws InputError on isolated vertices, LimitError for n > 9.
[[nodiscard]] std::set<std::string> find_nonisomorphic_optimal_tcgs(const Graph& g);

/// A host graph and partition realizing some optimal total coalition graph.
struct KnownRealization {
  std::string name;
  Graph host;
  VertexPartition partition;
};

/// Built-in realizations whose optimality follows from the degree bound:
/// singleton partitions of K_2, C_4 and K_{3,3}, and the quadratic extremal
/// layouts for max degree 3 and 4.
[[nodiscard]] std::vector<KnownRealization> known_realizations();

}  // namespace tcg
