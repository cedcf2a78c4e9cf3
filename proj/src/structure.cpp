#include "tcg/structure.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "tcg/canonical.hpp"
#include "tcg/coalition.hpp"
#include "tcg/error.hpp"
#include "tcg/matching.hpp"

namespace tcg {

bool StructuralReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return c.passed; });
}

const LemmaCheck& StructuralReport::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw InputError("no structural check named " + name);
}

StructuralReport verify_structural_lemmas(const Graph& g, const VertexPartition& p) {
  StructuralReport report;
  report.tcg = build_tcg(g, p).graph;
  const Graph& h = report.tcg;
  const std::size_t n = g.order();
  const std::size_t k = h.order();
  const std::size_t delta_max = max_degree(g);
  const std::size_t delta_min = min_degree(g);
  const Matching matching = maximum_matching(h);
  const std::size_t nu = matching.size();
  report.host_max_degree = delta_max;
  report.host_min_degree = delta_min;
  report.tcg_max_degree = max_degree(h);
  report.tcg_matching = nu;

  auto fmt = [](auto&&... parts) {
    std::ostringstream out;
    (out << ... << parts);
    return out.str();
  };

  report.checks.push_back({"max_degree", true, report.tcg_max_degree <= delta_max,
                           fmt("Delta(TCG)=", report.tcg_max_degree, " Delta(G)=", delta_max)});
  report.checks.push_back(
      {"matching_max_degree", true, nu <= delta_max, fmt("nu(TCG)=", nu, " Delta(G)=", delta_max)});
  report.checks.push_back(
      {"matching_min_degree", true, nu <= delta_min, fmt("nu(TCG)=", nu, " delta(G)=", delta_min)});

  LemmaCheck equality{"equality", nu == delta_max, true, ""};
  if (equality.triggered) {
    std::ostringstream detail;
    if (k != 2 * delta_max) {
      equality.passed = false;
      detail << "k=" << k << " but 2*Delta=" << 2 * delta_max << "; ";
    }
    if (n % delta_max != 0) {
      equality.passed = false;
      detail << "n=" << n << " not divisible by Delta; ";
    }
    for (const auto& [a, b] : matching.edges) {
      const std::size_t united = (p[a] | p[b]).count();
      if (united * delta_max != n) {
        equality.passed = false;
        detail << "classes " << a << "," << b << " hold " << united << " vertices; ";
      }
    }
    equality.detail = equality.passed ? fmt("k=", k, " = 2*Delta, matched unions of size n/Delta=", n / delta_max)
                                      : detail.str();
  } else {
    equality.detail = "nu(TCG) < Delta(G)";
  }
  report.checks.push_back(equality);

  LemmaCheck cover{"vertex_cover", report.tcg_max_degree == delta_max, true, ""};
  if (cover.triggered) {
    std::ostringstream detail;
    for (Vertex v = 0; v < k; ++v) {
      if (h.degree(v) == delta_max && !is_vertex_cover(h, h.neighbors(v))) {
        cover.passed = false;
        detail << "N(" << v << ") misses an edge; ";
      }
    }
    cover.detail = cover.passed ? "neighbourhoods of maximum-degree classes are vertex covers" : detail.str();
  } else {
    cover.detail = "Delta(TCG) < Delta(G)";
  }
  report.checks.push_back(cover);
  return report;
}

Graph predicted_optimal_tcg(std::size_t delta, std::size_t nu) {
  if (delta % 2 == 0) {
    if (delta < 6) throw InputError("predicted optimal TCG for even max degree requires Delta >= 6");
    if (nu != delta / 2 + 1) throw InputError("even max degree fixes nu = Delta/2 + 1");
  } else {
    if (delta < 5) throw InputError("predicted optimal TCG for odd max degree requires Delta >= 5");
    if (nu != (delta + 1) / 2 && nu != (delta + 3) / 2) {
      throw InputError("odd max degree allows nu = (Delta+1)/2 or (Delta+3)/2 only");
    }
  }
  const std::size_t star = delta - nu + 2;
  std::vector<Edge> edges;
  for (std::size_t t = 0; t < nu; ++t) {
    const Vertex center = t * star;
    for (std::size_t leaf = 1; leaf < star; ++leaf) edges.emplace_back(center, center + leaf);
    for (std::size_t u = t + 1; u < nu; ++u) edges.emplace_back(center, u * star);
  }
  return Graph::from_edges(nu * star, edges);
}

Graph predicted_optimal_tcg(std::size_t delta) {
  if (delta % 2 == 1) {
    throw InputError("odd max degree has two predicted shapes; pass nu = (Delta+1)/2 or (Delta+3)/2");
  }
  return predicted_optimal_tcg(delta, delta / 2 + 1);
}

std::vector<Graph> predicted_optimal_tcg_variants(std::size_t delta) {
  if (delta % 2 == 0) return {predicted_optimal_tcg(delta)};
  return {predicted_optimal_tcg(delta, (delta + 1) / 2), predicted_optimal_tcg(delta, (delta + 3) / 2)};
}

namespace {

// DFS over paths of 6 distinct vertices; returns false on the first violation.
bool paths_ok(const Graph& h, std::array<Vertex, 6>& path, std::size_t len, VertexSet used, bool is_k33) {
  if (len == 6) {
    if (!h.has_edge(path[1], path[4])) return false;
    if (h.has_edge(path[5], path[0]) && !is_k33) return false;
    return true;
  }
  for (Vertex next : h.neighbors(path[len - 1]) - used) {
    path[len] = next;
    VertexSet grown = used;
    grown.set(next);
    if (!paths_ok(h, path, len + 1, grown, is_k33)) return false;
  }
  return true;
}

}  // namespace

bool six_path_filter(const Graph& h) {
  if (h.order() > 0 && max_degree(h) > 3) throw InputError("six-path filter applies to graphs with max degree <= 3");
  const bool is_k33 = h.order() == 6 && canonical_form(h) == canonical_form(named::complete_bipartite(3, 3));
  std::array<Vertex, 6> path{};
  for (Vertex start = 0; start < h.order(); ++start) {
    path[0] = start;
    if (!paths_ok(h, path, 1, VertexSet::singleton(start), is_k33)) return false;
  }
  return true;
}

}  // namespace tcg
