#include "tcg/matching.hpp"

#include <algorithm>
#include <array>
#include <deque>

namespace tcg {

namespace {

constexpr std::size_t kNone = kMaxVertices;

// Edmonds' algorithm with explicit blossom bases; O(n^3) on adjacency bit rows.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const Graph& g) : g_(g), n_(g.order()) {
    mate_.fill(kNone);
  }

  void run() {
    greedy_start();
    for (Vertex root = 0; root < n_; ++root) {
      if (mate_[root] == kNone) augment_from(root);
    }
  }

  [[nodiscard]] Matching result() const {
    Matching m;
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] != kNone && v < mate_[v]) m.edges.emplace_back(v, mate_[v]);
    }
    return m;
  }

 private:
  void greedy_start() {
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] != kNone) continue;
      for (Vertex u : g_.neighbors(v)) {
        if (mate_[u] == kNone) {
          mate_[v] = u;
          mate_[u] = v;
          break;
        }
      }
    }
  }

  Vertex lowest_common_ancestor(Vertex a, Vertex b) {
    std::array<bool, kMaxVertices> seen{};
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] == kNone) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child, std::array<bool, kMaxVertices>& in_blossom) {
    while (base_[v] != b) {
      in_blossom[base_[v]] = true;
      in_blossom[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  bool augment_from(Vertex root) {
    used_.fill(false);
    parent_.fill(kNone);
    for (Vertex v = 0; v < n_; ++v) base_[v] = v;
    used_[root] = true;
    std::deque<Vertex> queue{root};

    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : g_.neighbors(v)) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kNone && parent_[mate_[to]] != kNone)) {
          // Odd cycle: contract the blossom onto its base.
          const Vertex b = lowest_common_ancestor(v, to);
          std::array<bool, kMaxVertices> in_blossom{};
          mark_path(v, b, to, in_blossom);
          mark_path(to, b, v, in_blossom);
          for (Vertex i = 0; i < n_; ++i) {
            if (in_blossom[base_[i]]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = true;
                queue.push_back(i);
              }
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (mate_[to] == kNone) {
            flip(to);
            return true;
          }
          used_[mate_[to]] = true;
          queue.push_back(mate_[to]);
        }
      }
    }
    return false;
  }

  void flip(Vertex v) {
    while (v != kNone) {
      const Vertex pv = parent_[v];
      const Vertex next = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = next;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::array<Vertex, kMaxVertices> mate_{};
  std::array<Vertex, kMaxVertices> parent_{};
  std::array<Vertex, kMaxVertices> base_{};
  std::array<bool, kMaxVertices> used_{};
};

}  // namespace

Matching maximum_matching(const Graph& g) {
  BlossomMatcher matcher(g);
  matcher.run();
  return matcher.result();
}

std::size_t maximum_matching_size(const Graph& g) { return maximum_matching(g).size(); }

bool is_matching(const Graph& g, const Matching& m) {
  VertexSet used;
  for (const auto& [u, v] : m.edges) {
    if (u >= g.order() || v >= g.order() || !g.has_edge(u, v)) return false;
    if (used.test(u) || used.test(v)) return false;
    used.set(u);
    used.set(v);
  }
  return true;
}

}  // namespace tcg
