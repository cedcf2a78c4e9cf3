#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "tcg/graph.hpp"

namespace tcg {

/// All graphs on exactly n vertices up to isomorphism whose maximum degree
/// is at most `max_degree`, in canonical labeling, sorted by canonical form.
/// Built by vertex augmentation from the (n-1)-vertex list, which is valid
/// because bounded maximum degree is hereditary. n <= 9.
[[nodiscard]] std::vector<Graph> generate_graphs(std::size_t n,
                                                 std::size_t max_degree = std::numeric_limits<std::size_t>::max());

/// generate_graphs filtered to isolate-free graphs.
[[nodiscard]] std::vector<Graph> generate_isolate_free_graphs(
    std::size_t n, std::size_t max_degree = std::numeric_limits<std::size_t>::max());

}  // namespace tcg
