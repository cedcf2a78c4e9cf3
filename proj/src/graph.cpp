#include "tcg/graph.hpp"

#include <algorithm>
#include <string>

#include "tcg/error.hpp"

namespace tcg {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  if (n > kMaxVertices) {
    throw InputError("graph order " + std::to_string(n) + " exceeds capacity " +
                     std::to_string(kMaxVertices));
  }
  std::vector<VertexSet> rows(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has an endpoint out of range for n=" + std::to_string(n));
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    rows[u].set(v);
    rows[v].set(u);
  }
  return Graph(std::move(rows));
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
  const std::size_t n = rows.size();
  if (n > kMaxVertices) {
    throw InputError("graph order " + std::to_string(n) + " exceeds capacity " +
                     std::to_string(kMaxVertices));
  }
  const VertexSet all = VertexSet::first_n(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!rows[v].is_subset_of(all)) throw InputError("adjacency row " + std::to_string(v) + " out of range");
    if (rows[v].test(v)) throw InputError("self-loop at vertex " + std::to_string(v));
    for (Vertex u : rows[v]) {
      if (!rows[u].test(v)) throw InputError("adjacency rows are not symmetric");
    }
  }
  return Graph(std::move(rows));
}

std::size_t Graph::size() const noexcept {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(order());
  for (Vertex v = 0; v < order(); ++v) out[v] = adj_[v].count();
  return out;
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  const std::size_t n = order();
  if (perm.size() != n) throw InputError("permutation length does not match graph order");
  VertexSet seen;
  for (Vertex p : perm) {
    if (p >= n || seen.test(p)) throw InputError("relabeling is not a permutation");
    seen.set(p);
  }
  std::vector<VertexSet> rows(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : adj_[u]) rows[perm[u]].set(perm[v]);
  }
  return Graph(std::move(rows));
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<Vertex> index(order(), kMaxVertices);
  std::size_t next = 0;
  for (Vertex v : keep) {
    if (v >= order()) throw InputError("induced subgraph vertex out of range");
    index[v] = next++;
  }
  std::vector<VertexSet> rows(next);
  for (Vertex v : keep) {
    for (Vertex u : adj_[v] & keep) rows[index[v]].set(index[u]);
  }
  return Graph(std::move(rows));
}

bool is_isolate_free(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.neighbors(v).empty()) return false;
  }
  return true;
}

std::size_t min_degree(const Graph& g) {
  if (g.order() == 0) throw InputError("minimum degree of the empty graph is undefined");
  std::size_t best = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

std::size_t max_degree(const Graph& g) {
  if (g.order() == 0) throw InputError("maximum degree of the empty graph is undefined");
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

bool is_vertex_cover(const Graph& g, const VertexSet& s) {
  // Every vertex outside s must have all its neighbors inside s.
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!s.test(v) && !g.neighbors(v).is_subset_of(s)) return false;
  }
  return true;
}

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  const VertexSet all = VertexSet::first_n(n);
  std::vector<VertexSet> rows(n);
  for (Vertex v = 0; v < n; ++v) {
    rows[v] = all - g.neighbors(v);
    rows[v].reset(v);
  }
  return Graph::from_rows(std::move(rows));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  const std::size_t shift = a.order();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph::from_edges(a.order() + b.order(), edges);
}

namespace named {

Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph::from_edges(n, e);
}

Graph cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e);
}

Graph path(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

Graph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph::from_edges(a + b, e);
}

Graph empty(std::size_t n) { return Graph::from_edges(n, {}); }

}  // namespace named

}  // namespace tcg
