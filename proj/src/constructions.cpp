#include "tcg/constructions.hpp"

#include <algorithm>

#include "tcg/error.hpp"
#include "tcg/solver.hpp"

namespace tcg {

const Block& ConstructionLayout::block(const std::string& name) const {
  for (const auto& b : blocks) {
    if (b.name == name) return b;
  }
  throw InputError("no block named " + name);
}

namespace {

// Shared skeleton of both extremal families.
//
// hubs * per_hub singletons hang off a hub clique; `copies` gadgets of two
// hub-sized cliques joined by a perfect matching carry the large classes.
// Each gadget vertex then spends its spare degree on O vertices its class
// does not dominate yet, stopping once the class misses only its own hub.
ConstructionLayout build_hub_gadget(std::size_t hubs, std::size_t per_hub, std::size_t copies,
                                    std::size_t max_deg) {
  const std::size_t o_begin = hubs;
  const std::size_t o_count = hubs * per_hub;
  const std::size_t gadget_begin = o_begin + o_count;
  const std::size_t n = gadget_begin + copies * 2 * hubs;
  if (n > kMaxVertices) throw InputError("construction needs " + std::to_string(n) + " vertices, capacity is 128");

  std::vector<Edge> edges;
  std::vector<std::size_t> degree(n, 0);
  auto connect = [&](Vertex u, Vertex v) {
    edges.emplace_back(u, v);
    ++degree[u];
    ++degree[v];
  };
  auto o_vertex = [&](std::size_t hub, std::size_t j) { return o_begin + hub * per_hub + j; };
  auto gadget_vertex = [&](std::size_t copy, bool b_side, std::size_t cls) {
    return gadget_begin + copy * 2 * hubs + (b_side ? hubs : 0) + cls;
  };

  for (std::size_t i = 0; i < hubs; ++i)
    for (std::size_t j = i + 1; j < hubs; ++j) connect(i, j);
  for (std::size_t i = 0; i < hubs; ++i)
    for (std::size_t j = 0; j < per_hub; ++j) connect(i, o_vertex(i, j));
  for (std::size_t t = 0; t < copies; ++t) {
    for (bool side : {false, true})
      for (std::size_t i = 0; i < hubs; ++i)
        for (std::size_t j = i + 1; j < hubs; ++j) connect(gadget_vertex(t, side, i), gadget_vertex(t, side, j));
    for (std::size_t i = 0; i < hubs; ++i) connect(gadget_vertex(t, false, i), gadget_vertex(t, true, i));
  }

  for (std::size_t cls = 0; cls < hubs; ++cls) {
    std::vector<Vertex> targets;
    for (std::size_t h = 0; h < hubs; ++h) {
      if (h == cls) continue;
      for (std::size_t j = 0; j < per_hub; ++j) targets.push_back(o_vertex(h, j));
    }
    std::sort(targets.begin(), targets.end());
    std::size_t next = 0;
    for (std::size_t t = 0; t < copies && next < targets.size(); ++t) {
      for (bool side : {false, true}) {
        const Vertex src = gadget_vertex(t, side, cls);
        while (next < targets.size() && degree[src] < max_deg) connect(src, targets[next++]);
      }
    }
    if (next < targets.size()) {
      throw InputError("gadget capacity insufficient for class " + std::to_string(cls));
    }
  }

  ConstructionLayout layout;
  layout.graph = Graph::from_edges(n, edges);
  std::vector<VertexSet> classes(hubs + o_count);
  for (std::size_t i = 0; i < hubs; ++i) {
    classes[i].set(i);
    for (std::size_t t = 0; t < copies; ++t) {
      classes[i].set(gadget_vertex(t, false, i));
      classes[i].set(gadget_vertex(t, true, i));
    }
  }
  for (std::size_t o = 0; o < o_count; ++o) classes[hubs + o].set(o_begin + o);
  layout.partition = VertexPartition(std::move(classes));
  layout.blocks.push_back({"hubs", 0, hubs});
  layout.blocks.push_back({"O", o_begin, o_begin + o_count});
  for (std::size_t t = 0; t < copies; ++t) {
    const std::size_t base = gadget_begin + t * 2 * hubs;
    layout.blocks.push_back({"A" + std::to_string(t + 1), base, base + hubs});
    layout.blocks.push_back({"B" + std::to_string(t + 1), base + hubs, base + 2 * hubs});
  }
  layout.hubs = hubs;
  layout.singletons_per_hub = per_hub;
  layout.copies = copies;
  layout.max_degree_param = max_deg;
  layout.expected_classes = hubs + o_count;
  return layout;
}

}  // namespace

ConstructionLayout build_quadratic_extremal(std::size_t delta) {
  if (delta < 3) {
    throw InputError("quadratic construction requires max degree >= 3 (no room for gadget edges below)");
  }
  const std::size_t r = delta / 2;
  const bool odd = delta % 2 == 1;
  const std::size_t per_hub = odd ? r + 1 : r;
  const std::size_t copies = odd ? (r + 2) / 2 : (r + 3) / 2;  // ceil((r+1)/2) or floor((r+3)/2)
  auto layout = build_hub_gadget(r + 1, per_hub, copies, delta);
  layout.expected_classes = quadratic_bound(delta);
  return layout;
}

ConstructionLayout build_minmax_extremal(std::size_t min_deg, std::size_t max_deg) {
  if (max_deg < 2) throw InputError("min-max construction requires max degree >= 2");
  if (min_deg < 1) throw InputError("min-max construction requires min degree >= 1");
  if (min_deg >= (max_deg + 2) / 2) {
    throw InputError("min-max construction requires min degree < floor((max degree + 2) / 2)");
  }
  const std::size_t per_hub = max_deg - min_deg + 1;
  const std::size_t copies = (min_deg + 1) / 2;
  auto layout = build_hub_gadget(min_deg, per_hub, copies, max_deg);
  layout.min_degree_param = min_deg;
  layout.expected_classes = min_deg * (max_deg - min_deg + 2);
  return layout;
}

Realization build_realizer(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw InputError("realizer requires at least 2 vertices");
  if (!is_isolate_free(g)) throw InputError("realizer requires an isolate-free graph");
  const auto edges = g.edges();
  std::vector<Edge> non_edges;
  for (Vertex j = 0; j < n; ++j)
    for (Vertex k = j + 1; k < n; ++k)
      if (!g.has_edge(j, k)) non_edges.emplace_back(j, k);

  const std::size_t total = n + 2 * edges.size() + non_edges.size();
  if (total > kMaxVertices) throw InputError("realizer host would need " + std::to_string(total) + " vertices");

  std::vector<Edge> host_edges;
  std::vector<VertexSet> classes(n);
  for (Vertex i = 0; i < n; ++i) {
    classes[i].set(i);
    for (Vertex j = i + 1; j < n; ++j) host_edges.emplace_back(i, j);
  }
  auto attach_all_but = [&](Vertex x, std::initializer_list<Vertex> skip) {
    for (Vertex v = 0; v < n; ++v) {
      if (std::find(skip.begin(), skip.end(), v) == skip.end()) host_edges.emplace_back(v, x);
    }
  };
  Vertex next = n;
  for (const auto& [j, k] : edges) {
    const Vertex u_j = next++;  // misses v_j, lives in V_k
    const Vertex u_k = next++;  // misses v_k, lives in V_j
    attach_all_but(u_j, {j});
    attach_all_but(u_k, {k});
    classes[k].set(u_j);
    classes[j].set(u_k);
  }
  for (const auto& [j, k] : non_edges) {
    const Vertex x = next++;
    attach_all_but(x, {j, k});
    Vertex home = 0;
    while (home == j || home == k) ++home;
    classes[home].set(x);
  }
  return {Graph::from_edges(total, host_edges), VertexPartition(std::move(classes))};
}

}  // namespace tcg
