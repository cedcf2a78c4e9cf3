#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tcg/graph.hpp"

namespace tcg {

/// Largest order handled by canonical_form.
inline constexpr std::size_t kCanonicalMaxOrder = 16;
/// Orders up to this use exhaustive permutation minimization.
inline constexpr std::size_t kExhaustiveCanonicalMaxOrder = 9;

/// A canonical relabeling: `perm[v]` is the new name of vertex v, and
/// `form` is the graph6 encoding of g.relabeled(perm). Two graphs of the
/// same order are isomorphic iff their forms are equal.
struct CanonicalLabeling {
  std::vector<Vertex> perm;
  std::string form;
};

/// Dispatches on order: exhaustive for n <= 9, refinement with
/// backtracking for 10 <= n <= 16. Throws LimitError above 16.
[[nodiscard]] CanonicalLabeling canonical_labeling(const Graph& g);
[[nodiscard]] std::string canonical_form(const Graph& g);

/// Branch-and-bound over all vertex orders, maximizing the upper-triangle
/// adjacency bit string; twin vertices are tried once per level.
/// Throws LimitError for n > 9.
[[nodiscard]] CanonicalLabeling canonical_labeling_exhaustive(const Graph& g);

/// Individualization-refinement with node-invariant and automorphism
/// pruning. Works for any order; fast for the small, structured graphs
/// this library produces.
[[nodiscard]] CanonicalLabeling canonical_labeling_refined(const Graph& g);

}  // namespace tcg
