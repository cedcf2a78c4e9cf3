#include "tcg/canonical.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>

#include "tcg/error.hpp"
#include "tcg/graph_io.hpp"

namespace tcg {

namespace {

// ---------------------------------------------------------------------------
// Exhaustive path

class ExhaustiveSearch {
 public:
  explicit ExhaustiveSearch(const Graph& g) : g_(g), n_(g.order()) {
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex w = 0; w < n_; ++w) {
        if (u == w) continue;
        VertexSet nu = g.neighbors(u), nw = g.neighbors(w);
        nu.reset(w);
        nw.reset(u);
        if (nu == nw) twins_[u].set(w);
      }
    }
  }

  std::vector<Vertex> run() {
    order_.assign(n_, 0);
    current_.assign(n_ * (n_ > 0 ? n_ - 1 : 0) / 2, 0);
    best_.clear();
    recurse(0, VertexSet::first_n(n_), false);
    // best_order_[p] = vertex placed at position p; invert into perm.
    std::vector<Vertex> perm(n_);
    for (Vertex p = 0; p < n_; ++p) perm[best_order_[p]] = p;
    return perm;
  }

 private:
  // `ahead` means the current prefix already beats best_.
  void recurse(std::size_t pos, VertexSet unplaced, bool ahead) {
    if (pos == n_) {
      if (best_.empty() || ahead) {
        best_ = current_;
        best_order_ = order_;
      }
      return;
    }
    VertexSet tried;
    const std::size_t column_start = pos * (pos - (pos > 0 ? 1 : 0)) / 2;
    for (Vertex v : unplaced) {
      if (twins_[v].intersects(tried)) continue;
      tried.set(v);
      order_[pos] = v;
      for (std::size_t p = 0; p < pos; ++p) {
        current_[column_start + p] = g_.has_edge(order_[p], v) ? 1 : 0;
      }
      bool next_ahead = ahead;
      if (!best_.empty() && !ahead) {
        int cmp = 0;
        for (std::size_t p = 0; p < pos && cmp == 0; ++p) {
          cmp = static_cast<int>(current_[column_start + p]) - static_cast<int>(best_[column_start + p]);
        }
        if (cmp < 0) continue;
        next_ahead = cmp > 0;
      }
      VertexSet rest = unplaced;
      rest.reset(v);
      recurse(pos + 1, rest, next_ahead);
      // best_ may have been replaced; later siblings compare against it.
      if (next_ahead) ahead = false;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::array<VertexSet, kMaxVertices> twins_{};
  std::vector<Vertex> order_;
  std::vector<unsigned char> current_;
  std::vector<unsigned char> best_;
  std::vector<Vertex> best_order_;
};

// ---------------------------------------------------------------------------
// Refinement path

using Coloring = std::vector<int>;  // vertex -> cell index, cells numbered 0..c-1

int color_count(const Coloring& c) {
  return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
}

// Iterated neighbour-count refinement; colours renumbered by sorted key so the
// result is isomorphism-invariant.
Coloring refine(const Graph& g, Coloring colors) {
  const std::size_t n = g.order();
  int cells = color_count(colors);
  for (;;) {
    std::vector<std::vector<int>> keys(n);
    for (Vertex v = 0; v < n; ++v) {
      auto& key = keys[v];
      key.assign(static_cast<std::size_t>(cells) + 1, 0);
      key[0] = colors[v];
      for (Vertex u : g.neighbors(v)) ++key[static_cast<std::size_t>(colors[u]) + 1];
    }
    std::vector<std::vector<int>> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v = 0; v < n; ++v) {
      colors[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
    }
    const int next = static_cast<int>(sorted.size());
    if (next == cells) return colors;
    cells = next;
  }
}

// Cell sizes followed by the quotient matrix; isomorphism-invariant for an
// equitable colouring.
std::vector<int> node_invariant(const Graph& g, const Coloring& colors) {
  const int cells = color_count(colors);
  std::vector<int> inv(static_cast<std::size_t>(cells), 0);
  std::vector<Vertex> representative(static_cast<std::size_t>(cells), kMaxVertices);
  for (Vertex v = 0; v < g.order(); ++v) {
    ++inv[static_cast<std::size_t>(colors[v])];
    auto& rep = representative[static_cast<std::size_t>(colors[v])];
    if (rep == kMaxVertices) rep = v;
  }
  for (int c = 0; c < cells; ++c) {
    std::vector<int> row(static_cast<std::size_t>(cells), 0);
    for (Vertex u : g.neighbors(representative[static_cast<std::size_t>(c)])) ++row[static_cast<std::size_t>(colors[u])];
    inv.insert(inv.end(), row.begin(), row.end());
  }
  return inv;
}

Coloring individualize(const Coloring& colors, Vertex w) {
  Coloring out(colors.size());
  for (Vertex v = 0; v < colors.size(); ++v) {
    out[v] = colors[v] * 2 + ((colors[v] == colors[w] && v != w) ? 1 : 0);
  }
  // Compact to 0..c-1 keeping order.
  std::vector<int> used(out.begin(), out.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (auto& c : out) c = static_cast<int>(std::lower_bound(used.begin(), used.end(), c) - used.begin());
  return out;
}

class RefinedSearch {
 public:
  explicit RefinedSearch(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<Vertex> run() {
    Coloring start = refine(g_, Coloring(n_, 0));
    path_invariants_.clear();
    prefix_.clear();
    recurse(start);
    return best_perm_;
  }

 private:
  struct Automorphism {
    std::vector<Vertex> image;
  };

  // Lexicographic compare of the current invariant path with best_invariants_.
  int compare_prefix() const {
    const std::size_t d = path_invariants_.size();
    for (std::size_t i = 0; i < d && i < best_invariants_.size(); ++i) {
      if (path_invariants_[i] != best_invariants_[i]) return path_invariants_[i] < best_invariants_[i] ? -1 : 1;
    }
    return 0;
  }

  std::vector<std::size_t> orbits_fixing_prefix() const {
    std::vector<std::size_t> parent(n_);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& a : automorphisms_) {
      bool fixes = std::all_of(prefix_.begin(), prefix_.end(), [&](Vertex x) { return a.image[x] == x; });
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        auto r1 = find(v), r2 = find(a.image[v]);
        if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
      }
    }
    for (Vertex v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void recurse(const Coloring& colors) {
    path_invariants_.push_back(node_invariant(g_, colors));
    if (have_best_ && compare_prefix() > 0) {
      path_invariants_.pop_back();
      return;
    }
    const int cells = color_count(colors);
    if (static_cast<std::size_t>(cells) == n_) {
      leaf(colors);
      path_invariants_.pop_back();
      return;
    }
    // Target: first smallest non-singleton cell.
    std::vector<std::size_t> sizes(static_cast<std::size_t>(cells), 0);
    for (int c : colors) ++sizes[static_cast<std::size_t>(c)];
    int target = -1;
    for (int c = 0; c < cells; ++c) {
      if (sizes[static_cast<std::size_t>(c)] > 1 &&
          (target < 0 || sizes[static_cast<std::size_t>(c)] < sizes[static_cast<std::size_t>(target)])) {
        target = c;
      }
    }
    std::vector<Vertex> explored;
    for (Vertex w = 0; w < n_; ++w) {
      if (colors[w] != target) continue;
      if (!explored.empty() && !automorphisms_.empty()) {
        const auto orbit = orbits_fixing_prefix();
        if (std::any_of(explored.begin(), explored.end(), [&](Vertex u) { return orbit[u] == orbit[w]; })) continue;
      }
      explored.push_back(w);
      prefix_.push_back(w);
      recurse(refine(g_, individualize(colors, w)));
      prefix_.pop_back();
    }
    path_invariants_.pop_back();
  }

  void leaf(const Coloring& colors) {
    std::vector<Vertex> perm(n_);
    for (Vertex v = 0; v < n_; ++v) perm[v] = static_cast<Vertex>(colors[v]);
    std::string cert = to_graph6(g_.relabeled(perm));
    const int cmp = have_best_ ? compare_prefix() : -1;
    if (cmp < 0 || (cmp == 0 && cert < best_cert_)) {
      have_best_ = true;
      best_cert_ = std::move(cert);
      best_perm_ = std::move(perm);
      best_invariants_ = path_invariants_;
    } else if (cmp == 0 && cert == best_cert_) {
      // perm and best_perm_ give the same graph: best^-1 . perm is an automorphism.
      std::vector<Vertex> best_inverse(n_);
      for (Vertex v = 0; v < n_; ++v) best_inverse[best_perm_[v]] = v;
      Automorphism a{std::vector<Vertex>(n_)};
      for (Vertex v = 0; v < n_; ++v) a.image[v] = best_inverse[perm[v]];
      automorphisms_.push_back(std::move(a));
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::vector<int>> path_invariants_;
  std::vector<std::vector<int>> best_invariants_;
  std::vector<Vertex> prefix_;
  bool have_best_ = false;
  std::string best_cert_;
  std::vector<Vertex> best_perm_;
  std::vector<Automorphism> automorphisms_;
};

CanonicalLabeling finish(const Graph& g, std::vector<Vertex> perm) {
  CanonicalLabeling out;
  out.form = to_graph6(g.relabeled(perm));
  out.perm = std::move(perm);
  return out;
}

}  // namespace

CanonicalLabeling canonical_labeling_exhaustive(const Graph& g) {
  if (g.order() > kExhaustiveCanonicalMaxOrder) {
    throw LimitError("exhaustive canonical form supports at most " +
                     std::to_string(kExhaustiveCanonicalMaxOrder) + " vertices");
  }
  ExhaustiveSearch search(g);
  return finish(g, search.run());
}

CanonicalLabeling canonical_labeling_refined(const Graph& g) {
  RefinedSearch search(g);
  return finish(g, search.run());
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() <= kExhaustiveCanonicalMaxOrder) return canonical_labeling_exhaustive(g);
  if (g.order() <= kCanonicalMaxOrder) return canonical_labeling_refined(g);
  throw LimitError("canonical form supports at most " + std::to_string(kCanonicalMaxOrder) + " vertices, got " +
                   std::to_string(g.order()));
}

std::string canonical_form(const Graph& g) { return canonical_labeling(g).form; }

}  // namespace tcg
