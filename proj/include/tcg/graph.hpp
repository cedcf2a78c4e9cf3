#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tcg/vertex_set.hpp"

namespace tcg {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1, n <= 128.
///
/// Rows are neighbor bit sets. The adjacency relation is symmetric and
/// loop-free by construction; every factory validates its input.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate pairs collapse to one
  /// edge. Throws InputError on a self-loop, an endpoint >= n, or n > 128.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Builds a graph from adjacency rows. Throws InputError unless the rows
  /// are symmetric, loop-free and confined to [0, rows.size()).
  static Graph from_rows(std::vector<VertexSet> rows);

  [[nodiscard]] std::size_t order() const noexcept { return adj_.size(); }
  [[nodiscard]] std::size_t size() const noexcept;  // edge count
  [[nodiscard]] const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  [[nodiscard]] std::size_t degree(Vertex v) const { return adj_[v].count(); }
  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const { return adj_[u].test(v); }
  [[nodiscard]] VertexSet vertices() const { return VertexSet::first_n(order()); }

  /// Edges (u, v) with u < v, sorted lexicographically.
  [[nodiscard]] std::vector<Edge> edges() const;
  [[nodiscard]] std::vector<std::size_t> degrees() const;

  /// Graph with vertex v renamed to perm[v]. perm must be a permutation of 0..n-1.
  [[nodiscard]] Graph relabeled(std::span<const Vertex> perm) const;

  /// Subgraph induced by `keep`, vertices renumbered in increasing order.
  [[nodiscard]] Graph induced(const VertexSet& keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::vector<VertexSet> rows) : adj_(std::move(rows)) {}

  std::vector<VertexSet> adj_;
};

[[nodiscard]] bool is_isolate_free(const Graph& g);

/// Minimum degree over all vertices. Throws InputError on the empty graph.
[[nodiscard]] std::size_t min_degree(const Graph& g);
/// Maximum degree over all vertices. Throws InputError on the empty graph.
[[nodiscard]] std::size_t max_degree(const Graph& g);

[[nodiscard]] bool is_vertex_cover(const Graph& g, const VertexSet& s);

[[nodiscard]] Graph complement(const Graph& g);

/// Vertices of `b` are shifted by a.order().
[[nodiscard]] Graph disjoint_union(const Graph& a, const Graph& b);

// Named small graphs used throughout tests and tools.
namespace named {
[[nodiscard]] Graph complete(std::size_t n);
[[nodiscard]] Graph cycle(std::size_t n);
[[nodiscard]] Graph path(std::size_t n);
[[nodiscard]] Graph star(std::size_t leaves);
[[nodiscard]] Graph complete_bipartite(std::size_t a, std::size_t b);
[[nodiscard]] Graph empty(std::size_t n);
}  // namespace named

}  // namespace tcg
