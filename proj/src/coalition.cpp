#include "tcg/coalition.hpp"

#include "tcg/domination.hpp"
#include "tcg/error.hpp"

namespace tcg {

CoalitionCheck check_total_coalition_partition(const Graph& g, const VertexPartition& p) {
  if (auto report = validate_partition(g, p); !report.valid()) {
    throw InputError("invalid partition: " + report.describe());
  }
  const VertexSet all = g.vertices();
  const std::size_t k = p.size();
  std::vector<VertexSet> dom(k);
  for (std::size_t i = 0; i < k; ++i) dom[i] = dominated_by(g, p[i]);

  CoalitionCheck check;
  check.partner.assign(k, std::nullopt);
  for (std::size_t i = 0; i < k; ++i) {
    if (dom[i] == all) check.dominating_classes.push_back(i);
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (dom[i] == all) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i && dom[j] != all && (dom[i] | dom[j]) == all) {
        check.partner[i] = j;
        break;
      }
    }
  }
  check.ok = check.dominating_classes.empty();
  for (const auto& partner : check.partner) check.ok = check.ok && partner.has_value();
  return check;
}

bool is_total_coalition_partition(const Graph& g, const VertexPartition& p) {
  return check_total_coalition_partition(g, p).ok;
}

CoalitionGraph build_tcg(const Graph& g, const VertexPartition& p) {
  if (!is_total_coalition_partition(g, p)) throw InputError("partition is not a total coalition partition");
  const VertexSet all = g.vertices();
  const std::size_t k = p.size();
  std::vector<VertexSet> dom(k);
  for (std::size_t i = 0; i < k; ++i) dom[i] = dominated_by(g, p[i]);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if ((dom[i] | dom[j]) == all) edges.emplace_back(i, j);
    }
  }
  return {Graph::from_edges(k, edges), p.labels(g.order())};
}

}  // namespace tcg
