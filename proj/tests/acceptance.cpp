// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "tcg/atlas.hpp"
#include "tcg/canonical.hpp"
#include "tcg/coalition.hpp"
#include "tcg/constructions.hpp"
#include "tcg/corpus.hpp"
#include "tcg/graph_io.hpp"
#include "tcg/matching.hpp"
#include "tcg/solver.hpp"
#include "tcg/structure.hpp"

using namespace tcg;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& why) {
    if (!ok) {
      pass = false;
      detail << "[" << why << "] ";
    }
  }
};

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

bool connected(const Graph& g) {
  if (g.order() == 0) return true;
  VertexSet seen = VertexSet::singleton(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    frontier = next - seen;
    seen |= next;
  }
  return seen.count() == g.order();
}

template <typename Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn&& fn) {
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < std::max<std::size_t>(workers, 1); ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
}

std::size_t worker_count() { return std::max(1U, std::thread::hardware_concurrency()); }

Outcome ac1() {
  Outcome o;
  struct Case {
    const char* name;
    Graph g;
    std::size_t expected;
  };
  for (const auto& c : {Case{"K2", named::complete(2), 2}, Case{"C4", named::cycle(4), 4}}) {
    const auto start = Clock::now();
    const auto r = tc_exact(c.g);
    const double ms = ms_since(start);
    o.detail << c.name << "=" << r.tc << " in " << ms << " ms; ";
    o.require(r.status == TcStatus::exact && r.tc == c.expected, std::string(c.name) + " value");
    o.require(ms < 1.0, std::string(c.name) + " took >= 1 ms");
  }
  return o;
}

// Shared sweep for criteria 2-4: isolate-free graphs on <= 7 vertices, single-threaded.
struct Sweep {
  std::size_t graphs = 0;
  std::size_t connected7 = 0;
  std::size_t mismatches = 0;
  std::size_t bound_violations = 0;
  std::size_t certificates = 0;
  std::size_t lemma_violations = 0;
  std::size_t equality_triggered = 0;
  double millis = 0;
  std::vector<std::string> examples;
};

Sweep run_sweep() {
  Sweep s;
  const auto start = Clock::now();
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const auto& g : generate_isolate_free_graphs(n)) {
      ++s.graphs;
      if (n == 7 && connected(g)) ++s.connected7;
      const auto r = tc_exact(g, SolverOptions{std::chrono::minutes(5), 1});
      const auto expected = tc_oracle(g);
      if (!r.exact() || r.tc != expected) {
        ++s.mismatches;
        if (s.examples.size() < 5) s.examples.push_back(to_graph6(g) + " exact=" + std::to_string(r.tc) +
                                                        " oracle=" + std::to_string(expected));
      }
      if (r.tc > r.bounds.minimum) ++s.bound_violations;
      if (r.certificate) {
        ++s.certificates;
        const auto report = verify_structural_lemmas(g, *r.certificate);
        if (!report.all_passed()) {
          ++s.lemma_violations;
          if (s.examples.size() < 5) s.examples.push_back(to_graph6(g) + " lemma violation");
        }
        if (report.check("equality").triggered) ++s.equality_triggered;
      }
    }
  }
  s.millis = ms_since(start);
  return s;
}

Outcome ac2(const Sweep& s) {
  Outcome o;
  o.detail << s.graphs << " graphs (" << s.connected7 << " connected on 7 vertices), " << s.mismatches
           << " mismatches, " << s.millis / 1000.0 << " s single-threaded; ";
  o.require(s.graphs == 1 + 2 + 7 + 23 + 122 + 888, "corpus size");
  o.require(s.connected7 == 853, "connected 7-vertex count");
  o.require(s.mismatches == 0, "oracle mismatch");
  o.require(s.millis < 5 * 60 * 1000.0, "over 5 minutes");
  for (const auto& e : s.examples) o.detail << e << "; ";
  return o;
}

Outcome ac3(const Sweep& s) {
  Outcome o;
  o.detail << s.graphs << " graphs, " << s.bound_violations << " violations";
  o.require(s.bound_violations == 0, "bound violated");
  return o;
}

Outcome ac4(const Sweep& s) {
  Outcome o;
  o.detail << s.certificates << " certificates, " << s.lemma_violations << " violations, equality triggered on "
           << s.equality_triggered;
  o.require(s.certificates > 0, "no certificates");
  o.require(s.lemma_violations == 0, "lemma violated");
  return o;
}

Outcome ac5() {
  Outcome o;
  const auto start = Clock::now();
  for (std::size_t delta = 3; delta <= 8; ++delta) {
    const auto l = build_quadratic_extremal(delta);
    const std::size_t formula = delta % 2 == 0 ? delta * delta / 4 + delta + 1 : (delta + 1) * (delta + 3) / 4;
    const bool valid = is_total_coalition_partition(l.graph, l.partition);
    const auto bound = tc_upper_bound(l.graph).minimum;
    o.detail << "D=" << delta << ":" << l.partition.size() << "/" << formula << " ";
    const std::string tag = "quadratic D=" + std::to_string(delta);
    o.require(valid, tag + " invalid partition");
    o.require(l.partition.size() == formula, tag + " class count");
    o.require(max_degree(l.graph) == delta, tag + " max degree");
    o.require(bound == formula, tag + " bound " + std::to_string(bound) + " does not certify");
  }
  const std::pair<std::size_t, std::size_t> pairs[] = {{1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 8}};
  for (auto [low, high] : pairs) {
    const auto l = build_minmax_extremal(low, high);
    const std::size_t formula = low * (high - low + 2);
    const bool valid = is_total_coalition_partition(l.graph, l.partition);
    const auto bound = tc_upper_bound(l.graph).minimum;
    o.detail << "(" << low << "," << high << "):" << l.partition.size() << "/" << formula << " ";
    const std::string tag = "minmax (" + std::to_string(low) + "," + std::to_string(high) + ")";
    o.require(valid, tag + " invalid partition");
    o.require(l.partition.size() == formula, tag + " class count");
    o.require(min_degree(l.graph) == low && max_degree(l.graph) == high, tag + " degrees");
    o.require(bound == formula, tag + " bound " + std::to_string(bound) + " does not certify");
  }
  const double ms = ms_since(start);
  o.detail << "in " << ms << " ms";
  o.require(ms < 10'000.0, "over 10 s");
  return o;
}

Outcome ac6() {
  Outcome o;
  const auto start = Clock::now();
  std::size_t graphs = 0, failures = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const auto& g : generate_isolate_free_graphs(n)) {
      ++graphs;
      const auto r = build_realizer(g);
      if (canonical_form(build_tcg(r.host, r.partition).graph) != canonical_form(g)) {
        ++failures;
        o.detail << "fail " << to_graph6(g) << "; ";
      }
    }
  }
  const double ms = ms_since(start);
  o.detail << graphs << " graphs, " << failures << " failures, " << ms << " ms";
  o.require(graphs == 1 + 2 + 7 + 23, "corpus size");
  o.require(failures == 0, "realizer mismatch");
  o.require(ms < 60'000.0, "over 1 minute");
  return o;
}

Outcome ac7() {
  Outcome o;
  const auto workers = worker_count();
  const auto two = enumerate_optimal_tcg_candidates(AtlasQuery::make(2, 2), workers);
  std::set<std::string> two_forms;
  for (const auto& h : two) two_forms.insert(canonical_form(h));
  const std::set<std::string> two_expected{canonical_form(named::cycle(4)),
                                           canonical_form(disjoint_union(named::complete(2), named::complete(2))),
                                           canonical_form(named::path(4))};
  o.detail << "(2,2)=" << two.size() << " ";
  o.require(two.size() == 3 && two_forms == two_expected, "(2,2) is not {C4, 2K2, P4}");

  const auto three = enumerate_optimal_tcg_candidates(AtlasQuery::make(3, 3), workers);
  std::size_t survivors = 0;
  bool k33_survives = false;
  const auto k33 = named::complete_bipartite(3, 3);
  const auto k33_form = canonical_form(k33);
  std::ostringstream listing;
  for (const auto& h : three) {
    const bool ok = six_path_filter(h);
    survivors += ok ? 1 : 0;
    if (ok && canonical_form(h) == k33_form) k33_survives = true;
    listing << canonical_form(h) << (ok ? "+" : "x") << " ";
  }
  o.detail << "(3,3)=" << three.size() << " survivors=" << survivors << " filtered=" << three.size() - survivors << " ";
  if (three.size() != 13 || survivors != 8) o.detail << "canonical list: " << listing.str();
  o.require(three.size() == 13, "(3,3) count");
  o.require(survivors == 8 && three.size() - survivors == 5, "(3,3) six-path split");
  o.require(k33_survives, "K33 not among survivors");

  for (auto [d, m] : {std::pair<std::size_t, std::size_t>{3, 2}, {4, 3}}) {
    const auto got = enumerate_optimal_tcg_candidates(AtlasQuery::make(d, m), workers);
    o.detail << "(" << d << "," << m << ")=" << got.size() << " ";
    o.require(got.size() == 1, "(" + std::to_string(d) + "," + std::to_string(m) + ") not unique");
  }

  o.require(singleton_partition_tc(k33), "K33 singletons not a TC partition");
  o.require(canonical_form(build_tcg(k33, VertexPartition::singletons(6)).graph) == k33_form,
            "TCG of K33 singletons is not K33");
  return o;
}

Outcome ac8() {
  Outcome o;
  const auto start = Clock::now();
  std::vector<Graph> corpus;
  for (std::size_t n = 4; n <= 8; ++n) {
    for (auto& g : generate_isolate_free_graphs(n, 3))
      if (max_degree(g) == 3) corpus.push_back(std::move(g));
  }
  std::vector<std::size_t> classes(corpus.size(), 0);
  parallel_for(corpus.size(), worker_count(),
               [&](std::size_t i) { classes[i] = find_nonisomorphic_optimal_tcgs(corpus[i]).size(); });
  std::size_t witnesses = 0;
  std::string first;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (classes[i] >= 2) {
      if (witnesses == 0) first = to_graph6(corpus[i]) + " (" + std::to_string(classes[i]) + " classes)";
      ++witnesses;
    }
  }
  const double ms = ms_since(start);
  o.detail << corpus.size() << " graphs, " << witnesses << " with >= 2 optimal TCG classes";
  if (witnesses > 0) o.detail << ", e.g. " << first;
  o.detail << ", " << ms / 1000.0 << " s";
  o.require(witnesses >= 1, "no witness");
  o.require(ms < 30 * 60 * 1000.0, "over 30 minutes");
  return o;
}

Outcome ac9() {
  Outcome o;
  const auto start = Clock::now();
  const auto h = predicted_optimal_tcg(6);
  const auto violations = atlas_violations(h, AtlasQuery::make(6, 4));
  const auto nu = maximum_matching_size(h);
  const double ms = ms_since(start);
  o.detail << "n=" << h.order() << " Delta=" << max_degree(h) << " nu=" << nu << " violations=" << violations.size()
           << " in " << ms << " ms";
  for (const auto& v : violations) o.detail << " " << v;
  o.require(h.order() == 16, "order");
  o.require(max_degree(h) == 6, "max degree");
  o.require(nu == 4, "matching");
  o.require(violations.empty(), "atlas constraints");
  o.require(ms < 1.0, "over 1 ms");
  return o;
}

}  // namespace

int main() {
  bool all = true;
  auto report = [&](int id, const char* title, const std::function<Outcome()>& fn) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    all = all && o.pass;
    std::cout << "AC" << id << " " << (o.pass ? "PASS" : "FAIL") << "  " << title << ": " << o.detail.str()
              << std::endl;
  };
  report(1, "known exact values", ac1);
  std::optional<Sweep> sweep;
  auto with_sweep = [&](int id, const char* title, Outcome (*fn)(const Sweep&)) {
    report(id, title, [&] {
      if (!sweep) sweep = run_sweep();
      return fn(*sweep);
    });
  };
  with_sweep(2, "oracle equivalence, isolate-free n <= 7", ac2);
  with_sweep(3, "bound soundness, same corpus", ac3);
  with_sweep(4, "structural lemmas on optimal certificates", ac4);
  report(5, "extremal family exactness", ac5);
  report(6, "realizer correctness, isolate-free n <= 5", ac6);
  report(7, "atlas counts", ac7);
  report(8, "non-unique optimum exists, Delta = 3, n <= 8", ac8);
  report(9, "predicted shape self-consistency, Delta = 6", ac9);
  std::cout << (all ? "ALL PASS" : "SOME CRITERIA FAILED") << std::endl;
  return all ? 0 : 1;
}
