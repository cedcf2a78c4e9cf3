#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "tcg/graph.hpp"
#include "tcg/partition.hpp"

namespace tcg {

/// Upper bounds on TC(G) from the maximum and minimum degree.
struct TcBounds {
  std::size_t quadratic = 0;             // floor(((Delta+2)/2)^2)
  std::optional<std::size_t> minmax;     // delta(Delta-delta+2) when delta < floor((Delta+2)/2)
  std::optional<std::size_t> delta1;     // Delta+1 when delta == 1
  std::optional<std::size_t> delta2;     // 2 Delta when delta == 2
  std::size_t trivial = 0;               // n
  std::size_t minimum = 0;               // min over the applicable bounds
};

/// Throws InputError if g is empty or has an isolated vertex.
[[nodiscard]] TcBounds tc_upper_bound(const Graph& g);

/// floor(((delta+2)/2)^2), the largest TC for maximum degree `delta`.
[[nodiscard]] constexpr std::size_t quadratic_bound(std::size_t delta) {
  return (delta + 2) * (delta + 2) / 4;
}

enum class TcStatus {
  exact,            // tc is TC(G), certificate attached
  no_partition,     // no total coalition partition with k >= 2 classes exists
  budget_exceeded,  // search stopped early; see lower_bound/upper_bound
};

[[nodiscard]] std::string_view to_string(TcStatus status);

struct SolverOptions {
  std::chrono::milliseconds budget{60'000};
  std::size_t workers = 1;
};

struct TcReport {
  TcStatus status = TcStatus::exact;
  std::size_t tc = 0;
  std::optional<VertexPartition> certificate;
  TcBounds bounds;
  std::uint64_t nodes_explored = 0;
  std::size_t lower_bound = 0;
  std::size_t upper_bound = 0;

  [[nodiscard]] bool exact() const noexcept { return status != TcStatus::budget_exceeded; }
};

/// Exact TC(G) by descending-k restricted-growth backtracking. Certificates
/// are identical for any worker count. Throws InputError on isolated vertices.
[[nodiscard]] TcReport tc_exact(const Graph& g, const SolverOptions& options = {});

/// Calls `visit` for every total coalition partition of g with exactly k
/// classes, in restricted-growth order of the vertex labels. Stops early
/// when `visit` returns false.
void for_each_total_coalition_partition(const Graph& g, std::size_t k,
                                        const std::function<bool(const VertexPartition&)>& visit);

/// Maximum k over an unpruned enumeration of every set partition of V.
/// Returns 0 when no total coalition partition exists. Throws LimitError for n > 9.
[[nodiscard]] std::size_t tc_oracle(const Graph& g);

/// True iff the all-singletons partition is a total coalition partition.
[[nodiscard]] bool singleton_partition_tc(const Graph& g);

}  // namespace tcg
