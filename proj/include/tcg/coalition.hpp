#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tcg/graph.hpp"
#include "tcg/partition.hpp"

namespace tcg {

struct CoalitionCheck {
  bool ok = false;
  std::vector<std::size_t> dominating_classes;       // classes that are total dominating on their own
  std::vector<std::optional<std::size_t>> partner;   // lowest-index coalition partner per class
};

/// Checks that no class is total dominating and every class has a
/// coalition partner. Throws InputError if p is not a valid partition of g.
[[nodiscard]] CoalitionCheck check_total_coalition_partition(const Graph& g, const VertexPartition& p);
[[nodiscard]] bool is_total_coalition_partition(const Graph& g, const VertexPartition& p);

/// The total coalition graph: vertex i is class i of the partition, edges
/// are coalition pairs. `class_of[v]` is the class of host vertex v.
struct CoalitionGraph {
  Graph graph;
  std::vector<std::size_t> class_of;
};

/// Throws InputError unless p is a total coalition partition of g.
[[nodiscard]] CoalitionGraph build_tcg(const Graph& g, const VertexPartition& p);

}  // namespace tcg
