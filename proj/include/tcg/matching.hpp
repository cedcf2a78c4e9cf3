#pragma once

#include <cstddef>
#include <vector>

#include "tcg/graph.hpp"

namespace tcg {

/// A set of pairwise vertex-disjoint edges of some graph.
struct Matching {
  std::vector<Edge> edges;
  [[nodiscard]] std::size_t size() const noexcept { return edges.size(); }
};

/// Maximum cardinality matching (Edmonds' blossom algorithm).
[[nodiscard]] Matching maximum_matching(const Graph& g);

/// nu(g).
[[nodiscard]] std::size_t maximum_matching_size(const Graph& g);

/// True iff every pair is an edge of g and no vertex is used twice.
[[nodiscard]] bool is_matching(const Graph& g, const Matching& m);

}  // namespace tcg
