#include "tcg/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "tcg/canonical.hpp"
#include "tcg/coalition.hpp"
#include "tcg/constructions.hpp"
#include "tcg/error.hpp"
#include "tcg/matching.hpp"
#include "tcg/solver.hpp"

namespace tcg {

AtlasQuery AtlasQuery::make(std::size_t delta, std::size_t nu) {
  if (nu < 1 || nu > delta) throw InputError("atlas query requires 1 <= nu <= Delta");
  return {delta, nu, nu * (delta - nu + 2)};
}

namespace {

bool is_clique(const Graph& h, const VertexSet& s) {
  for (Vertex v : s) {
    VertexSet others = s;
    others.reset(v);
    if (!others.is_subset_of(h.neighbors(v))) return false;
  }
  return true;
}

// Assigns each leaf in `rest` to an adjacent center with remaining capacity.
bool assign_leaves(const Graph& h, const std::vector<Vertex>& centers, std::vector<std::size_t>& room,
                   VertexSet rest) {
  if (rest.empty()) return true;
  const Vertex leaf = rest.first();
  rest.reset(leaf);
  for (std::size_t i = 0; i < centers.size(); ++i) {
    if (room[i] == 0 || !h.has_edge(leaf, centers[i])) continue;
    --room[i];
    if (assign_leaves(h, centers, room, rest)) return true;
    ++room[i];
  }
  return false;
}

bool star_system_for(const Graph& h, const AtlasQuery& q, const VertexSet& centers_set) {
  const std::size_t leaves = q.leaves_per_star();
  const VertexSet leaf_set = h.vertices() - centers_set;
  std::vector<Vertex> centers(centers_set.begin(), centers_set.end());
  if (leaves >= 2) {
    if (!is_clique(h, centers_set)) return false;
    // Each leaf sees exactly one center, which must be its own.
    std::vector<std::size_t> load(centers.size(), 0);
    for (Vertex l : leaf_set) {
      const VertexSet seen = h.neighbors(l) & centers_set;
      if (seen.count() != 1) return false;
      const auto idx = static_cast<std::size_t>(std::find(centers.begin(), centers.end(), seen.first()) - centers.begin());
      if (++load[idx] > leaves) return false;
    }
    if (leaves >= 3) {
      for (Vertex l : leaf_set) {
        if (h.neighbors(l).intersects(leaf_set)) return false;
      }
    }
    return true;
  }
  std::vector<std::size_t> room(centers.size(), leaves);
  return assign_leaves(h, centers, room, leaf_set);
}

bool has_star_system(const Graph& h, const AtlasQuery& q) {
  const std::size_t k = h.order();
  if (q.nu > k) return false;
  // Combinations of nu centers in increasing order.
  std::vector<Vertex> pick(q.nu);
  for (std::size_t i = 0; i < q.nu; ++i) pick[i] = i;
  for (;;) {
    VertexSet centers;
    for (Vertex c : pick) centers.set(c);
    if (star_system_for(h, q, centers)) return true;
    std::size_t i = q.nu;
    while (i > 0 && pick[i - 1] == k - q.nu + (i - 1)) --i;
    if (i == 0) return false;
    ++pick[i - 1];
    for (std::size_t j = i; j < q.nu; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::vector<std::string> atlas_violations(const Graph& h, const AtlasQuery& q) {
  std::vector<std::string> out;
  if (h.order() != q.expected_vertices) {
    out.emplace_back("order");
    return out;
  }
  if (!is_isolate_free(h)) out.emplace_back("isolate_free");
  if (h.order() > 0 && max_degree(h) > q.delta) out.emplace_back("max_degree");
  if (maximum_matching_size(h) != q.nu) out.emplace_back("matching");
  if (!has_star_system(h, q)) out.emplace_back("star_system");
  for (Vertex v = 0; v < h.order(); ++v) {
    if (h.degree(v) == q.delta && !is_vertex_cover(h, h.neighbors(v))) {
      out.emplace_back("vertex_cover");
      break;
    }
  }
  return out;
}

namespace {

// Labelled enumeration with the star system fixed on consecutive vertex
// blocks (center first). Adding edges never lowers nu or degrees, so both
// caps prune whole subtrees.
class CandidateEnumerator {
 public:
  explicit CandidateEnumerator(const AtlasQuery& q) : q_(q), k_(q.expected_vertices), rows_(k_) {
    const std::size_t s = q.star_order();
    for (std::size_t t = 0; t < q.nu; ++t) {
      for (std::size_t leaf = 1; leaf < s; ++leaf) add(t * s, t * s + leaf);
    }
    for (Vertex u = 0; u < k_; ++u)
      for (Vertex v = u + 1; v < k_; ++v)
        if (!rows_[u].test(v)) free_.emplace_back(u, v);
  }

  [[nodiscard]] std::size_t free_pairs() const { return free_.size(); }

  /// Enumerates the shard whose first `bits` decisions are given by `prefix`.
  void run_shard(std::size_t bits, std::uint64_t prefix, std::map<std::string, Graph>& found) {
    found_ = &found;
    bits = std::min(bits, free_.size());
    descend(0, bits, prefix);
  }

 private:
  void add(Vertex u, Vertex v) {
    rows_[u].set(v);
    rows_[v].set(u);
  }
  void remove(Vertex u, Vertex v) {
    rows_[u].reset(v);
    rows_[v].reset(u);
  }

  bool can_add(Vertex u, Vertex v) {
    if (rows_[u].count() >= q_.delta || rows_[v].count() >= q_.delta) return false;
    add(u, v);
    const bool ok = maximum_matching_size(Graph::from_rows(rows_)) <= q_.nu;
    remove(u, v);
    return ok;
  }

  void descend(std::size_t i, std::size_t bits, std::uint64_t prefix) {
    if (i == free_.size()) {
      Graph h = Graph::from_rows(rows_);
      if (!atlas_violations(h, q_).empty()) return;
      auto labeling = canonical_labeling(h);
      if (!found_->contains(labeling.form)) found_->emplace(labeling.form, h.relabeled(labeling.perm));
      return;
    }
    const auto [u, v] = free_[i];
    const bool forced = i < bits;
    const bool take = forced && ((prefix >> i) & 1);
    if (!forced || !take) descend(i + 1, bits, prefix);
    if ((!forced || take) && can_add(u, v)) {
      add(u, v);
      descend(i + 1, bits, prefix);
      remove(u, v);
    }
  }

  AtlasQuery q_;
  std::size_t k_;
  std::vector<VertexSet> rows_;
  std::vector<Edge> free_;
  std::map<std::string, Graph>* found_ = nullptr;
};

}  // namespace

std::vector<Graph> enumerate_optimal_tcg_candidates(const AtlasQuery& q, std::size_t workers) {
  if (q.delta > 4) throw InputError("candidate enumeration supports Delta <= 4");
  if (q.expected_vertices != q.nu * (q.delta - q.nu + 2) || q.nu < 1 || q.nu > q.delta) {
    throw InputError("inconsistent atlas query");
  }
  workers = std::max<std::size_t>(1, workers);
  const std::size_t free_pairs = CandidateEnumerator(q).free_pairs();
  const std::size_t bits = workers == 1 ? 0 : std::min<std::size_t>(free_pairs, 6);
  const std::size_t shards = std::size_t{1} << bits;

  std::vector<std::map<std::string, Graph>> partial(shards);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::size_t s = next.fetch_add(1);
      if (s >= shards) return;
      CandidateEnumerator enumerator(q);
      enumerator.run_shard(bits, s, partial[s]);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(work);
  }

  std::map<std::string, Graph> merged;
  for (auto& part : partial) merged.merge(part);
  std::vector<Graph> out;
  out.reserve(merged.size());
  for (auto& [form, g] : merged) out.push_back(std::move(g));
  return out;
}

std::set<std::string> find_nonisomorphic_optimal_tcgs(const Graph& g) {
  if (g.order() > 9) throw LimitError("find_nonisomorphic_optimal_tcgs supports n <= 9");
  SolverOptions options;
  options.budget = std::chrono::hours(1);
  const TcReport report = tc_exact(g, options);
  std::set<std::string> forms;
  if (report.status != TcStatus::exact) return forms;
  for_each_total_coalition_partition(g, report.tc, [&](const VertexPartition& p) {
    forms.insert(canonical_form(build_tcg(g, p).graph));
    return true;
  });
  return forms;
}

std::vector<KnownRealization> known_realizations() {
  std::vector<KnownRealization> out;
  auto singletons = [&](std::string name, Graph g) {
    auto p = VertexPartition::singletons(g.order());
    out.push_back({std::move(name), std::move(g), std::move(p)});
  };
  singletons("K_2 singletons", named::complete(2));
  singletons("C_4 singletons", named::cycle(4));
  singletons("K_{3,3} singletons", named::complete_bipartite(3, 3));
  for (std::size_t delta : {3, 4}) {
    auto layout = build_quadratic_extremal(delta);
    out.push_back({"quadratic extremal Delta=" + std::to_string(delta), layout.graph, layout.partition});
  }
  return out;
}

}  // namespace tcg
