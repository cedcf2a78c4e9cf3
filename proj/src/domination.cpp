#include "tcg/domination.hpp"

#include <string>

#include "tcg/error.hpp"

namespace tcg {

bool is_dominating(const Graph& g, const VertexSet& s) {
  return (s | dominated_by(g, s)) == g.vertices();
}

namespace {

bool search_size(const Graph& g, std::size_t size, Vertex from, VertexSet covered, const VertexSet& all) {
  if (size == 0) return covered == all;
  for (Vertex v = from; v + size <= g.order(); ++v) {
    if (search_size(g, size - 1, v + 1, covered | g.neighbors(v), all)) return true;
  }
  return false;
}

}  // namespace

std::size_t min_total_dominating_size(const Graph& g) {
  if (g.order() > 20) throw LimitError("min_total_dominating_size supports n <= 20");
  if (!is_isolate_free(g)) throw InputError("graph has an isolated vertex; no total dominating set exists");
  const VertexSet all = g.vertices();
  for (std::size_t size = 2; size <= g.order(); ++size) {
    if (search_size(g, size, 0, VertexSet{}, all)) return size;
  }
  // An isolate-free graph always has V as a total dominating set.
  return g.order();
}

bool forms_total_coalition(const Graph& g, const VertexSet& a, const VertexSet& b) {
  if (a.intersects(b)) throw InputError("coalition candidates overlap");
  if (a.empty() || b.empty()) throw InputError("coalition candidates must be nonempty");
  const VertexSet da = dominated_by(g, a);
  const VertexSet db = dominated_by(g, b);
  const VertexSet all = g.vertices();
  return da != all && db != all && (da | db) == all;
}

}  // namespace tcg
