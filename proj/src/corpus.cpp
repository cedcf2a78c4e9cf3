#include "tcg/corpus.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "tcg/canonical.hpp"
#include "tcg/error.hpp"

namespace tcg {

std::vector<Graph> generate_graphs(std::size_t n, std::size_t max_degree) {
  if (n > kExhaustiveCanonicalMaxOrder) throw LimitError("graph generation supports n <= 9");
  std::map<std::string, Graph> level;
  level.emplace(canonical_form(Graph()), Graph());
  for (std::size_t order = 1; order <= n; ++order) {
    std::map<std::string, Graph> next;
    const std::size_t old = order - 1;
    for (const auto& [form, g] : level) {
      const auto base_edges = g.edges();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << old); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) > max_degree) continue;
        bool ok = true;
        std::vector<Edge> edges = base_edges;
        for (Vertex u = 0; u < old; ++u) {
          if ((mask >> u) & 1) {
            if (g.degree(u) + 1 > max_degree) {
              ok = false;
              break;
            }
            edges.emplace_back(u, old);
          }
        }
        if (!ok) continue;
        auto h = Graph::from_edges(order, edges);
        auto labeling = canonical_labeling(h);
        if (!next.contains(labeling.form)) next.emplace(labeling.form, h.relabeled(labeling.perm));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto& [form, g] : level) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> generate_isolate_free_graphs(std::size_t n, std::size_t max_degree) {
  auto all = generate_graphs(n, max_degree);
  std::erase_if(all, [](const Graph& g) { return !is_isolate_free(g); });
  return all;
}

}  // namespace tcg
