#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tcg/graph.hpp"
#include "tcg/partition.hpp"

namespace tcg {

/// Half-open vertex index range [begin, end) with a name.
struct Block {
  std::string name;
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// A generated graph with its partition and block structure.
///
/// Blocks, in order: "hubs" (the clique whose members anchor the large
/// classes), "O" (singleton classes, hub-major), then "A1", "B1", "A2", ...
/// for the gadget cliques. Classes 0..hubs-1 are the large classes in hub
/// order; the remaining classes are the O singletons in vertex order.
struct ConstructionLayout {
  Graph graph;
  VertexPartition partition;
  std::vector<Block> blocks;
  std::size_t hubs = 0;
  std::size_t singletons_per_hub = 0;
  std::size_t copies = 0;
  std::size_t min_degree_param = 0;  // 0 for the quadratic family
  std::size_t max_degree_param = 0;

  /// Class count predicted by the family's formula.
  std::size_t expected_classes = 0;

  [[nodiscard]] const Block& block(const std::string& name) const;
};

/// Graph with maximum degree `delta` and a total coalition partition with
/// floor(((delta+2)/2)^2) classes. Throws InputError for delta < 3.
[[nodiscard]] ConstructionLayout build_quadratic_extremal(std::size_t delta);

/// Graph with minimum degree `min_deg`, maximum degree `max_deg` and a total
/// coalition partition with min_deg(max_deg - min_deg + 2) classes.
/// Requires max_deg >= 2 and 1 <= min_deg < floor((max_deg+2)/2).
[[nodiscard]] ConstructionLayout build_minmax_extremal(std::size_t min_deg, std::size_t max_deg);

struct Realization {
  Graph host;
  VertexPartition partition;  // class i holds v_i
};

/// Host graph H and partition P with TCG(H, P) isomorphic to g.
/// Host vertices: v_1..v_n (clique), then two vertices per edge of g in
/// g.edges() order, then one vertex per non-edge in lexicographic order.
/// Throws InputError if g has fewer than 2 vertices or an isolated vertex.
[[nodiscard]] Realization build_realizer(const Graph& g);

}  // namespace tcg
