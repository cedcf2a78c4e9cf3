#include "tcg/solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <vector>

#include "tcg/coalition.hpp"
#include "tcg/domination.hpp"
#include "tcg/error.hpp"

namespace tcg {

std::string_view to_string(TcStatus status) {
  switch (status) {
    case TcStatus::exact: return "exact";
    case TcStatus::no_partition: return "no_partition";
    case TcStatus::budget_exceeded: return "budget_exceeded";
  }
  return "unknown";
}

TcBounds tc_upper_bound(const Graph& g) {
  if (g.order() == 0) throw InputError("empty graph has no total coalition partition");
  if (!is_isolate_free(g)) throw InputError("graph has an isolated vertex");
  const std::size_t hi = max_degree(g);
  const std::size_t lo = min_degree(g);
  TcBounds b;
  b.quadratic = quadratic_bound(hi);
  if (lo < (hi + 2) / 2) b.minmax = lo * (hi - lo + 2);
  if (lo == 1) b.delta1 = hi + 1;
  if (lo == 2) b.delta2 = 2 * hi;
  b.trivial = g.order();
  b.minimum = std::min(b.quadratic, b.trivial);
  for (const auto& opt : {b.minmax, b.delta1, b.delta2}) {
    if (opt) b.minimum = std::min(b.minimum, *opt);
  }
  return b;
}

namespace {

constexpr std::size_t kNoBranch = std::numeric_limits<std::size_t>::max();

using Clock = std::chrono::steady_clock;

// Backtracking over restricted-growth label strings with exactly k classes.
class PartitionSearch {
 public:
  PartitionSearch(const Graph& g, std::size_t k) : g_(g), n_(g.order()), k_(k), all_(g.vertices()) {
    suffix_.assign(n_ + 1, VertexSet{});
    for (std::size_t v = n_; v-- > 0;) suffix_[v] = suffix_[v + 1] | g.neighbors(v);
    label_.assign(n_, 0);
    dom_.assign(k_, VertexSet{});
  }

  void set_deadline(Clock::time_point deadline) { deadline_ = deadline; }
  void set_cancel(const std::atomic<std::size_t>* winner, std::size_t branch) {
    winner_ = winner;
    branch_ = branch;
  }
  void set_visitor(const std::function<bool(const VertexPartition&)>* visit) { visit_ = visit; }

  /// Applies a forced label prefix; false if the prefix is already infeasible.
  bool apply_prefix(const std::vector<std::size_t>& prefix) {
    used_ = 0;
    for (std::size_t v = 0; v < prefix.size(); ++v) {
      const std::size_t c = prefix[v];
      if (c > used_ || c >= k_) return false;
      const VertexSet next = (c < used_ ? dom_[c] : VertexSet{}) | g_.neighbors(v);
      if (next == all_) return false;
      dom_[c] = next;
      label_[v] = c;
      if (c == used_) ++used_;
      if (!feasible(v)) return false;
    }
    start_ = prefix.size();
    return true;
  }

  /// Runs from the end of the prefix. True when a solution was accepted.
  bool run() { return dfs(start_); }

  [[nodiscard]] bool aborted() const { return aborted_; }
  [[nodiscard]] std::uint64_t nodes() const { return nodes_; }
  [[nodiscard]] const std::vector<std::size_t>& labels() const { return label_; }

 private:
  bool feasible(std::size_t v) const {
    const std::size_t remaining = n_ - v - 1;
    if (used_ + remaining < k_) return false;
    const VertexSet rest = suffix_[v + 1];
    for (std::size_t c = 0; c < used_; ++c) {
      const VertexSet reach = dom_[c] | rest;
      bool partner = used_ < k_ && reach == all_;
      for (std::size_t d = 0; d < used_ && !partner; ++d) {
        partner = d != c && (reach | dom_[d]) == all_;
      }
      if (!partner) return false;
    }
    return true;
  }

  bool leaf() {
    for (std::size_t c = 0; c < k_; ++c) {
      bool partner = false;
      for (std::size_t d = 0; d < k_ && !partner; ++d) partner = d != c && (dom_[c] | dom_[d]) == all_;
      if (!partner) return false;
    }
    if (visit_ != nullptr) {
      // Enumeration mode: report and keep going unless the visitor stops us.
      if (!(*visit_)(VertexPartition::from_labels(label_))) {
        aborted_ = true;
        return true;
      }
      return false;
    }
    return true;
  }

  bool check_abort() {
    if ((++nodes_ & 1023) != 0) return aborted_;
    if (winner_ != nullptr && winner_->load(std::memory_order_relaxed) < branch_) aborted_ = true;
    if (deadline_ && Clock::now() > *deadline_) aborted_ = true;
    return aborted_;
  }

  bool dfs(std::size_t v) {
    if (check_abort()) return false;
    if (v == n_) return leaf();
    const std::size_t options = std::min(used_ + 1, k_);
    for (std::size_t c = 0; c < options; ++c) {
      const bool opens = c == used_;
      const VertexSet saved = dom_[c];
      const VertexSet next = (opens ? VertexSet{} : saved) | g_.neighbors(v);
      if (next == all_) continue;  // class would be total dominating; stays so under growth
      dom_[c] = next;
      label_[v] = c;
      if (opens) ++used_;
      if (feasible(v) && dfs(v + 1)) return true;
      if (opens) --used_;
      dom_[c] = saved;
      if (aborted_) return false;
    }
    return false;
  }

  const Graph& g_;
  std::size_t n_;
  std::size_t k_;
  VertexSet all_;
  std::vector<VertexSet> suffix_;
  std::vector<std::size_t> label_;
  std::vector<VertexSet> dom_;
  std::size_t used_ = 0;
  std::size_t start_ = 0;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
  std::optional<Clock::time_point> deadline_;
  const std::atomic<std::size_t>* winner_ = nullptr;
  std::size_t branch_ = 0;
  const std::function<bool(const VertexPartition&)>* visit_ = nullptr;
};

// Restricted-growth prefixes for the first min(n, 3) vertices, in DFS order.
std::vector<std::vector<std::size_t>> top_level_branches(std::size_t n, std::size_t k) {
  const std::size_t depth = std::min<std::size_t>(n, 3);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> prefix;
  auto extend = [&](auto&& self, std::size_t used) -> void {
    if (prefix.size() == depth) {
      out.push_back(prefix);
      return;
    }
    for (std::size_t c = 0; c <= used && c < k; ++c) {
      prefix.push_back(c);
      self(self, std::max(used, c + 1));
      prefix.pop_back();
    }
  };
  extend(extend, 0);
  return out;
}

struct KResult {
  bool found = false;
  bool aborted = false;
  std::vector<std::size_t> labels;
  std::uint64_t nodes = 0;
};

KResult search_k(const Graph& g, std::size_t k, Clock::time_point deadline, std::size_t workers) {
  const auto branches = top_level_branches(g.order(), k);
  std::vector<KResult> results(branches.size());
  std::atomic<std::size_t> winner{kNoBranch};
  std::atomic<std::size_t> next{0};

  auto work = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= branches.size()) return;
      if (winner.load() < b) continue;
      PartitionSearch search(g, k);
      search.set_deadline(deadline);
      search.set_cancel(&winner, b);
      auto& r = results[b];
      if (search.apply_prefix(branches[b]) && search.run()) {
        r.found = true;
        r.labels = search.labels();
        std::size_t current = winner.load();
        while (b < current && !winner.compare_exchange_weak(current, b)) {
        }
      }
      r.aborted = search.aborted() && !r.found;
      r.nodes = search.nodes();
    }
  };

  workers = std::max<std::size_t>(1, std::min(workers, branches.size()));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(work);
  }

  KResult out;
  for (std::size_t b = 0; b < results.size(); ++b) {
    out.nodes += results[b].nodes;
    if (out.found) continue;
    if (results[b].found) {
      out.found = true;
      out.labels = results[b].labels;
    } else if (results[b].aborted) {
      // A lower branch was cut short by the clock, so a miss here proves nothing.
      out.aborted = true;
    }
  }
  if (out.found) out.aborted = false;
  return out;
}

}  // namespace

TcReport tc_exact(const Graph& g, const SolverOptions& options) {
  TcReport report;
  report.bounds = tc_upper_bound(g);
  const auto deadline = Clock::now() + options.budget;
  const std::size_t top = std::min(report.bounds.minimum, g.order());
  report.upper_bound = top;
  for (std::size_t k = top; k >= 2; --k) {
    KResult r = search_k(g, k, deadline, options.workers);
    report.nodes_explored += r.nodes;
    if (r.found) {
      report.status = TcStatus::exact;
      report.tc = k;
      report.lower_bound = report.upper_bound = k;
      report.certificate = VertexPartition::from_labels(r.labels);
      return report;
    }
    if (r.aborted) {
      report.status = TcStatus::budget_exceeded;
      report.tc = 0;
      report.lower_bound = 0;
      report.upper_bound = k;
      return report;
    }
  }
  report.status = TcStatus::no_partition;
  report.tc = 0;
  report.lower_bound = report.upper_bound = 0;
  return report;
}

void for_each_total_coalition_partition(const Graph& g, std::size_t k,
                                        const std::function<bool(const VertexPartition&)>& visit) {
  if (k < 2 || k > g.order()) return;
  PartitionSearch search(g, k);
  search.set_visitor(&visit);
  if (search.apply_prefix({})) search.run();
}

std::size_t tc_oracle(const Graph& g) {
  const std::size_t n = g.order();
  if (n > 9) throw LimitError("tc_oracle supports n <= 9");
  if (n == 0) return 0;
  // Iterate restricted-growth strings a with a[0] = 0, a[i] <= max(a[0..i-1]) + 1.
  std::vector<std::size_t> a(n, 0);
  std::size_t best = 0;
  for (;;) {
    const auto p = VertexPartition::from_labels(a);
    if (p.size() > best && is_total_coalition_partition(g, p)) best = p.size();
    std::size_t i = n;
    while (--i > 0) {
      const std::size_t ceiling = *std::max_element(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(i)) + 1;
      if (a[i] < ceiling) break;
    }
    if (i == 0) break;
    ++a[i];
    std::fill(a.begin() + static_cast<std::ptrdiff_t>(i) + 1, a.end(), 0);
  }
  return best;
}

bool singleton_partition_tc(const Graph& g) {
  if (g.order() == 0) return false;
  return is_total_coalition_partition(g, VertexPartition::singletons(g.order()));
}

}  // namespace tcg
