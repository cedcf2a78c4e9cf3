#pragma once

#include <cstddef>

#include "tcg/graph.hpp"

namespace tcg {

/// Union of N(v) over v in s: the vertices totally dominated by s.
[[nodiscard]] inline VertexSet dominated_by(const Graph& g, const VertexSet& s) {
  VertexSet out;
  for (Vertex v : s) out |= g.neighbors(v);
  return out;
}

/// Every vertex outside s has a neighbor in s.
[[nodiscard]] bool is_dominating(const Graph& g, const VertexSet& s);

/// Every vertex of g, members of s included, has a neighbor in s.
[[nodiscard]] inline bool is_total_dominating(const Graph& g, const VertexSet& s) {
  return dominated_by(g, s) == g.vertices();
}

/// Minimum size of a total dominating set, by exhaustive search over
/// subsets of size 2, 3, ... Throws InputError if g has an isolated vertex
/// and LimitError for n > 20.
[[nodiscard]] std::size_t min_total_dominating_size(const Graph& g);

/// Neither set is total dominating, their union is. Throws InputError if
/// the sets overlap or either is empty.
[[nodiscard]] bool forms_total_coalition(const Graph& g, const VertexSet& a, const VertexSet& b);

}  // namespace tcg
