#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tcg/graph.hpp"
#include "tcg/partition.hpp"

namespace tcg {

/// Outcome of one structural property of a total coalition graph.
/// `triggered` is false when the property's premise does not hold; such a
/// check always passes.
struct LemmaCheck {
  std::string name;
  bool triggered = true;
  bool passed = true;
  std::string detail;
};

struct StructuralReport {
  Graph tcg;
  std::size_t host_max_degree = 0;
  std::size_t host_min_degree = 0;
  std::size_t tcg_max_degree = 0;
  std::size_t tcg_matching = 0;
  std::vector<LemmaCheck> checks;

  [[nodiscard]] bool all_passed() const;
  [[nodiscard]] const LemmaCheck& check(const std::string& name) const;
};

/// Verifies, for the total coalition graph of (g, p):
///  - "max_degree":          Delta(TCG) <= Delta(G)
///  - "matching_max_degree": nu(TCG) <= Delta(G)
///  - "matching_min_degree": nu(TCG) <= delta(G)
///  - "equality":            if nu(TCG) = Delta(G): k = 2 Delta(G) and each matched
///                           pair of classes holds exactly n / Delta(G) vertices
///  - "vertex_cover":        neighbours of every TCG vertex of degree Delta(G) cover the TCG
/// Throws InputError if p is not a total coalition partition of g.
[[nodiscard]] StructuralReport verify_structural_lemmas(const Graph& g, const VertexPartition& p);

/// Predicted optimal total coalition graph for max degree `delta` and
/// matching number `nu`: nu disjoint stars on delta-nu+2 vertices with the
/// centers joined into a clique. Valid for even delta >= 6 with
/// nu = delta/2 + 1, and odd delta >= 5 with nu in {(delta+1)/2, (delta+3)/2}.
[[nodiscard]] Graph predicted_optimal_tcg(std::size_t delta, std::size_t nu);

/// Even delta >= 6 only; odd delta has two variants, use the two-argument form.
[[nodiscard]] Graph predicted_optimal_tcg(std::size_t delta);

/// Every variant for delta: one graph when even, two when odd.
[[nodiscard]] std::vector<Graph> predicted_optimal_tcg_variants(std::size_t delta);

/// Path/cycle test for candidates with maximum degree <= 3: false iff some
/// path x1..x6 on distinct vertices lacks the edge x2x5, or some 6-cycle
/// exists while h is not K_{3,3}. Throws InputError if Delta(h) > 3.
[[nodiscard]] bool six_path_filter(const Graph& h);

}  // namespace tcg
