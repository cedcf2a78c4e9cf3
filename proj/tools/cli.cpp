#include "cli.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cache.hpp"
#include "json.hpp"
#include "tcg/atlas.hpp"
#include "tcg/canonical.hpp"
#include "tcg/coalition.hpp"
#include "tcg/constructions.hpp"
#include "tcg/corpus.hpp"
#include "tcg/domination.hpp"
#include "tcg/error.hpp"
#include "tcg/graph_io.hpp"
#include "tcg/matching.hpp"
#include "tcg/solver.hpp"
#include "tcg/structure.hpp"

namespace tcg::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

// Raised for exit-code-carrying failures inside subcommands.
struct Failure {
  int code;
  std::string message;
};

struct InputRecord {
  std::size_t line = 0;
  std::string label;  // graph6 text or file name
  Graph graph;
};

struct GraphSource {
  std::string g6;
  std::string g6_file;
  std::string edges;

  void attach(CLI::App* app) {
    app->add_option("--g6", g6, "graph6 string");
    app->add_option("--g6-file", g6_file, "file with one graph6 record per line ('-' for stdin)");
    app->add_option("--edges", edges, "edge-list file: \"n m\" then m lines \"u v\"");
  }

  [[nodiscard]] bool given() const { return !g6.empty() || !g6_file.empty() || !edges.empty(); }

  std::vector<InputRecord> read(std::istream& stdin_stream) const {
    const int sources = !g6.empty() + !g6_file.empty() + !edges.empty();
    if (sources != 1) throw Failure{kUsage, "exactly one of --g6, --g6-file, --edges is required"};
    std::vector<InputRecord> out;
    try {
      if (!g6.empty()) {
        out.push_back({1, g6, parse_graph6(g6)});
      } else if (!g6_file.empty()) {
        std::ifstream file;
        std::istream* in = &stdin_stream;
        if (g6_file != "-") {
          file.open(g6_file);
          if (!file) throw Failure{kUsage, "cannot open " + g6_file};
          in = &file;
        }
        for (auto& rec : read_graph6_stream(*in)) out.push_back({rec.line, rec.text, std::move(rec.graph)});
      } else {
        std::ifstream file(edges);
        if (!file) throw Failure{kUsage, "cannot open " + edges};
        out.push_back({1, edges, parse_edge_list(file)});
      }
    } catch (const ParseError& e) {
      std::ostringstream msg;
      msg << "parse error";
      if (e.line() > 0) msg << " at line " << e.line();
      msg << ", byte " << e.offset() << ": " << e.what();
      throw Failure{kParse, msg.str()};
    }
    return out;
  }

  Graph read_one(std::istream& stdin_stream) const {
    auto records = read(stdin_stream);
    if (records.size() != 1) throw Failure{kUsage, "expected exactly one graph"};
    return std::move(records.front().graph);
  }
};

json partition_json(const VertexPartition& p) {
  json out = json::array();
  for (const auto& cls : p) out.push_back(std::vector<Vertex>(cls.begin(), cls.end()));
  return out;
}

json edges_json(const Graph& g) {
  json out = json::array();
  for (const auto& [u, v] : g.edges()) out.push_back({u, v});
  return out;
}

json bounds_json(const TcBounds& b) {
  json out{{"quadratic", b.quadratic}, {"trivial", b.trivial}, {"minimum", b.minimum}};
  out["minmax"] = b.minmax ? json(*b.minmax) : json(nullptr);
  out["delta1"] = b.delta1 ? json(*b.delta1) : json(nullptr);
  out["delta2"] = b.delta2 ? json(*b.delta2) : json(nullptr);
  return out;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (!path.parent_path().empty()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw Failure{kUsage, "cannot write " + path.string()};
  out << text;
}

// ---------------------------------------------------------------------------
// compute

struct ComputeOptions {
  GraphSource source;
  long budget_ms = 60'000;
  std::size_t workers = 1;
  bool csv = false;
  bool json_out = false;
  bool no_timing = false;
  std::optional<std::string> cache_path;
  bool verify_cache = false;
};

struct ComputeResult {
  json record;
  std::string csv;
  std::optional<std::string> conflict;
};

ComputeResult compute_one(const InputRecord& rec, const ComputeOptions& opt, std::size_t solver_workers,
                          ResultCache* cache, std::mutex& cache_mutex) {
  const Graph& g = rec.graph;
  ComputeResult result;
  json& j = result.record;
  j["line"] = rec.line;
  j["input"] = rec.label;
  j["n"] = g.order();
  j["edges"] = edges_json(g);
  if (g.order() == 0 || !is_isolate_free(g)) {
    j["error"] = "graph has an isolated vertex; total coalitions are undefined";
    result.csv = std::to_string(rec.line) + "," + std::to_string(g.order()) + "," + std::to_string(g.size()) +
                 ",,,,,error,,,";
    return result;
  }
  j["delta_min"] = min_degree(g);
  j["delta_max"] = max_degree(g);
  const TcBounds bounds = tc_upper_bound(g);
  j["bounds"] = bounds_json(bounds);

  std::optional<CanonicalLabeling> labeling;
  if (cache != nullptr && g.order() <= kCanonicalMaxOrder) labeling = canonical_labeling(g);

  std::optional<CacheEntry> cached;
  if (labeling) {
    std::lock_guard lock(cache_mutex);
    cached = cache->find(labeling->form);
  }

  const auto start = Clock::now();
  TcReport report;
  bool from_cache = false;
  if (cached && cached->exact && !opt.verify_cache) {
    from_cache = true;
    report.bounds = bounds;
    report.tc = cached->tc;
    report.status = cached->status == "no_partition" ? TcStatus::no_partition : TcStatus::exact;
    report.lower_bound = report.upper_bound = cached->tc;
    if (cached->tc > 0) {
      std::vector<Vertex> inverse(g.order());
      for (Vertex v = 0; v < g.order(); ++v) inverse[labeling->perm[v]] = v;
      report.certificate = cached->certificate.relabeled(inverse);
    }
  } else {
    SolverOptions so;
    so.budget = std::chrono::milliseconds(opt.budget_ms);
    so.workers = solver_workers;
    report = tc_exact(g, so);
    if (labeling) {
      CacheEntry entry;
      entry.tc = report.tc;
      entry.exact = report.exact();
      entry.status = std::string(to_string(report.status));
      if (report.certificate) entry.certificate = report.certificate->relabeled(labeling->perm);
      std::lock_guard lock(cache_mutex);
      try {
        cache->store(labeling->form, entry);
      } catch (const CacheConflict& e) {
        result.conflict = e.what();
      }
    }
  }
  const auto millis = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();

  j["tc"] = report.tc;
  j["status"] = std::string(to_string(report.status));
  j["exact"] = report.exact();
  j["certificate"] = report.certificate ? partition_json(*report.certificate) : json(nullptr);
  j["lower_bound"] = report.lower_bound;
  j["upper_bound"] = report.upper_bound;
  j["nodes"] = report.nodes_explored;
  if (from_cache) j["cached"] = true;
  if (!opt.no_timing) j["millis"] = millis;

  std::ostringstream csv;
  csv << rec.line << ',' << g.order() << ',' << g.size() << ',' << min_degree(g) << ',' << max_degree(g) << ','
      << bounds.minimum << ',' << report.tc << ',' << to_string(report.status) << ',' << (report.exact() ? 1 : 0)
      << ',' << report.nodes_explored << ',' << (opt.no_timing ? std::string() : std::to_string(millis));
  result.csv = csv.str();
  return result;
}

template <typename Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn&& fn) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  }
}

std::optional<std::filesystem::path> resolve_cache_path(const std::optional<std::string>& flag) {
  if (const char* env = std::getenv("TC_CACHE"); env != nullptr && *env != '\0') return std::filesystem::path(env);
  if (flag) return std::filesystem::path(flag->empty() ? ".tc_cache" : *flag);
  return std::nullopt;
}

int cmd_compute(const ComputeOptions& opt, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto records = opt.source.read(in);
  std::unique_ptr<ResultCache> cache;
  if (auto path = resolve_cache_path(opt.cache_path)) cache = std::make_unique<ResultCache>(*path);
  std::mutex cache_mutex;

  std::vector<ComputeResult> results(records.size());
  // One graph: give the workers to the solver. Many: one worker per graph.
  const std::size_t solver_workers = records.size() == 1 ? opt.workers : 1;
  parallel_for(records.size(), records.size() == 1 ? 1 : opt.workers, [&](std::size_t i) {
    results[i] = compute_one(records[i], opt, solver_workers, cache.get(), cache_mutex);
  });

  if (opt.csv && !results.empty()) out << "line,n,m,delta_min,delta_max,bound,tc,status,exact,nodes,millis\n";
  int code = kOk;
  for (const auto& r : results) {
    if (opt.csv) {
      out << r.csv << '\n';
    } else {
      out << r.record.dump() << '\n';
    }
    if (r.conflict) {
      err << "tc: " << *r.conflict << '\n';
      code = kInvariant;
    }
  }
  return code;
}

// ---------------------------------------------------------------------------
// construct

json blocks_json(const std::vector<Block>& blocks) {
  json out = json::object();
  for (const auto& b : blocks) out[b.name] = {b.begin, b.end};
  return out;
}

int emit_construction(const std::string& family, const Graph& graph, const VertexPartition& partition,
                      std::size_t formula, bool extra_ok, json sidecar, const std::string& prefix,
                      std::ostream& out) {
  const auto check = check_total_coalition_partition(graph, partition);
  const bool valid = check.ok && extra_ok && partition.size() == formula;
  write_file(prefix + ".g6", to_graph6(graph) + "\n");
  write_file(prefix + ".part", to_partition_text(partition));
  sidecar["family"] = family;
  sidecar["n"] = graph.order();
  sidecar["classes"] = partition.size();
  write_file(prefix + ".json", sidecar.dump(2) + "\n");

  json summary{{"family", family},
               {"n", graph.order()},
               {"m", graph.size()},
               {"delta_min", min_degree(graph)},
               {"delta_max", max_degree(graph)},
               {"classes", partition.size()},
               {"formula", formula},
               {"verdict", valid ? "VALID" : "INVALID"},
               {"files", {prefix + ".g6", prefix + ".part", prefix + ".json"}}};
  out << summary.dump() << '\n';
  return valid ? kOk : kInvariant;
}

int cmd_construct_extremal(const ConstructionLayout& layout, const std::string& family, const std::string& prefix,
                           std::ostream& out) {
  json sidecar{{"blocks", blocks_json(layout.blocks)},
               {"hubs", layout.hubs},
               {"singletons_per_hub", layout.singletons_per_hub},
               {"copies", layout.copies},
               {"max_degree", layout.max_degree_param}};
  if (layout.min_degree_param > 0) sidecar["min_degree"] = layout.min_degree_param;
  bool degrees_ok = max_degree(layout.graph) == layout.max_degree_param;
  if (layout.min_degree_param > 0) degrees_ok = degrees_ok && min_degree(layout.graph) == layout.min_degree_param;
  return emit_construction(family, layout.graph, layout.partition, layout.expected_classes, degrees_ok, sidecar,
                           prefix, out);
}

int cmd_construct_realizer(const Graph& g, const std::string& prefix, std::ostream& out) {
  const auto realization = build_realizer(g);
  bool iso = true;
  json sidecar;
  const std::size_t n = g.order();
  const std::size_t m = g.size();
  sidecar["blocks"] = json{{"V", {0, n}}, {"U", {n, n + 2 * m}}, {"X", {n + 2 * m, realization.host.order()}}};
  sidecar["input"] = to_graph6(g);
  if (is_total_coalition_partition(realization.host, realization.partition)) {
    const Graph tcg = build_tcg(realization.host, realization.partition).graph;
    if (n <= kCanonicalMaxOrder) iso = canonical_form(tcg) == canonical_form(g);
    sidecar["tcg"] = to_graph6(tcg);
    sidecar["tcg_isomorphic_to_input"] = n <= kCanonicalMaxOrder ? json(iso) : json(nullptr);
  }
  return emit_construction("realizer", realization.host, realization.partition, n, iso, sidecar, prefix, out);
}

// ---------------------------------------------------------------------------
// atlas

int cmd_atlas(std::size_t delta, std::size_t nu, std::size_t workers, std::size_t sweep_max_n,
              const std::string& prefix, std::ostream& out) {
  const auto query = AtlasQuery::make(delta, nu);
  const auto candidates = enumerate_optimal_tcg_candidates(query, workers);

  std::map<std::string, std::vector<std::string>> realized;
  for (const auto& known : known_realizations()) {
    if (max_degree(known.host) != delta || known.partition.size() != quadratic_bound(delta)) continue;
    const Graph tcg = build_tcg(known.host, known.partition).graph;
    if (tcg.order() <= kCanonicalMaxOrder) realized[canonical_form(tcg)].push_back(known.name);
  }
  for (std::size_t n = 2; n <= std::min<std::size_t>(sweep_max_n, 9); ++n) {
    for (const auto& g : generate_isolate_free_graphs(n, delta)) {
      if (max_degree(g) != delta) continue;
      SolverOptions so;
      so.budget = std::chrono::hours(1);
      if (tc_exact(g, so).tc != quadratic_bound(delta)) continue;
      for (const auto& form : find_nonisomorphic_optimal_tcgs(g)) {
        auto& names = realized[form];
        if (names.size() < 4) names.push_back("sweep " + to_graph6(g));
      }
    }
  }

  json manifest{{"delta", delta}, {"nu", nu}, {"k", query.expected_vertices}};
  json list = json::array();
  std::size_t surviving = 0;
  std::string g6_lines;
  for (const auto& h : candidates) {
    const std::string form = canonical_form(h);
    json entry{{"canonical", form}};
    if (delta == 3) {
      const bool ok = six_path_filter(h);
      surviving += ok ? 1 : 0;
      entry["survives_six_path_filter"] = ok;
    } else {
      entry["survives_six_path_filter"] = nullptr;
    }
    auto it = realized.find(form);
    entry["matched_known_realizations"] = it == realized.end() ? json::array() : json(it->second);
    list.push_back(entry);
    g6_lines += form + "\n";
  }
  manifest["candidates"] = list;
  manifest["total"] = candidates.size();
  if (delta == 3) {
    manifest["surviving"] = surviving;
    manifest["filtered"] = candidates.size() - surviving;
  }
  if (!prefix.empty()) {
    write_file(prefix + ".g6", g6_lines);
    write_file(prefix + ".json", manifest.dump(2) + "\n");
  }
  out << manifest.dump() << '\n';
  return kOk;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const Graph& g, const std::string& partition_path, std::ostream& out) {
  std::ifstream file(partition_path);
  if (!file) throw Failure{kUsage, "cannot open " + partition_path};
  VertexPartition p;
  try {
    p = parse_partition(file);
  } catch (const ParseError& e) {
    throw Failure{kParse, "partition parse error at line " + std::to_string(e.line()) + ", byte " +
                              std::to_string(e.offset()) + ": " + e.what()};
  }
  json report{{"n", g.order()}, {"classes", p.size()}};
  const auto validity = validate_partition(g, p);
  report["partition_valid"] = validity.valid();
  report["partition_report"] = validity.describe();
  if (!validity.valid()) {
    report["verdict"] = "INVALID_PARTITION";
    out << report.dump() << '\n';
    return kOk;
  }
  const auto check = check_total_coalition_partition(g, p);
  report["total_coalition_partition"] = check.ok;
  report["dominating_classes"] = check.dominating_classes;
  json partners = json::array();
  for (const auto& partner : check.partner) partners.push_back(partner ? json(*partner) : json(nullptr));
  report["partners"] = partners;
  if (!check.ok) {
    report["verdict"] = "NOT_A_TOTAL_COALITION_PARTITION";
    out << report.dump() << '\n';
    return kOk;
  }
  const auto structural = verify_structural_lemmas(g, p);
  report["tcg"] = to_graph6(structural.tcg);
  json checks = json::array();
  for (const auto& c : structural.checks) {
    checks.push_back({{"name", c.name}, {"triggered", c.triggered}, {"passed", c.passed}, {"detail", c.detail}});
  }
  report["structural"] = checks;
  report["verdict"] = structural.all_passed() ? "VALID" : "LEMMA_VIOLATION";
  out << report.dump() << '\n';
  return structural.all_passed() ? kOk : kInvariant;
}

// ---------------------------------------------------------------------------
// batch

struct BatchOutcome {
  std::vector<std::string> reasons;
  std::uint64_t nodes = 0;
  bool skipped = false;
};

BatchOutcome batch_one(const Graph& g, long budget_ms, std::size_t oracle_max_n) {
  BatchOutcome outcome;
  if (g.order() == 0 || !is_isolate_free(g)) {
    outcome.skipped = true;
    return outcome;
  }
  SolverOptions so;
  so.budget = std::chrono::milliseconds(budget_ms);
  const TcReport report = tc_exact(g, so);
  outcome.nodes = report.nodes_explored;
  if (!report.exact()) {
    outcome.reasons.push_back("budget exceeded");
    return outcome;
  }
  if (report.tc > report.bounds.minimum) {
    outcome.reasons.push_back("tc " + std::to_string(report.tc) + " exceeds bound " +
                              std::to_string(report.bounds.minimum));
  }
  if (g.order() <= std::min<std::size_t>(oracle_max_n, 9)) {
    const std::size_t oracle = tc_oracle(g);
    if (oracle != report.tc) {
      outcome.reasons.push_back("tc_exact=" + std::to_string(report.tc) + " but oracle=" + std::to_string(oracle));
    }
  }
  if (report.certificate) {
    if (report.certificate->size() != report.tc || !is_total_coalition_partition(g, *report.certificate)) {
      outcome.reasons.push_back("certificate does not validate");
    } else {
      const auto structural = verify_structural_lemmas(g, *report.certificate);
      for (const auto& c : structural.checks) {
        if (!c.passed) outcome.reasons.push_back("lemma " + c.name + " violated: " + c.detail);
      }
    }
  }
  return outcome;
}

int cmd_batch(const std::string& corpus, std::size_t workers, long budget_ms, std::size_t oracle_max_n,
              std::istream& in, std::ostream& out) {
  GraphSource source;
  source.g6_file = corpus;
  const auto start = Clock::now();
  const auto records = source.read(in);
  std::vector<BatchOutcome> outcomes(records.size());
  parallel_for(records.size(), workers,
               [&](std::size_t i) { outcomes[i] = batch_one(records[i].graph, budget_ms, oracle_max_n); });

  std::size_t failures = 0;
  std::size_t skipped = 0;
  std::uint64_t max_nodes = 0;
  json failure_list = json::array();
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& o = outcomes[i];
    skipped += o.skipped ? 1 : 0;
    max_nodes = std::max(max_nodes, o.nodes);
    if (!o.reasons.empty()) {
      ++failures;
      failure_list.push_back({{"line", records[i].line}, {"graph6", records[i].label}, {"reasons", o.reasons}});
    }
  }
  const auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  json summary{{"graphs", records.size()}, {"skipped", skipped},        {"failures", failures},
               {"max_nodes", max_nodes},   {"wall_time_ms", wall},      {"failure_list", failure_list}};
  out << summary.dump() << '\n';
  return failures == 0 ? kOk : kInvariant;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Total coalition partitions: exact numbers, extremal constructions, candidate atlases", "tc"};
  app.require_subcommand(1);

  ComputeOptions compute;
  auto* c = app.add_subcommand("compute", "exact total coalition number with certificate, one JSON object per graph");
  compute.source.attach(c);
  c->add_option("--budget-ms", compute.budget_ms, "time budget per graph in milliseconds")->check(CLI::PositiveNumber);
  c->add_option("--workers", compute.workers, "worker threads")->check(CLI::PositiveNumber);
  auto* csv_flag = c->add_flag("--csv", compute.csv, "CSV output");
  c->add_flag("--json", compute.json_out, "JSON lines output (default)")->excludes(csv_flag);
  c->add_flag("--no-timing", compute.no_timing, "omit wall-clock fields");
  auto* cache_opt = c->add_option("--cache", "result cache file (TC_CACHE overrides the path)")->expected(0, 1);
  c->add_flag("--verify-cache", compute.verify_cache, "recompute cached graphs and fail on disagreement");

  auto* construct = app.add_subcommand("construct", "generate an extremal family member or a realizer");
  construct->require_subcommand(1);
  std::string out_prefix;
  std::size_t q_delta = 0;
  auto* quad = construct->add_subcommand("quadratic", "max degree Delta, floor(((Delta+2)/2)^2) classes");
  quad->add_option("--delta", q_delta, "maximum degree (>= 3)")->required();
  quad->add_option("--out", out_prefix, "output file prefix");
  std::size_t mm_min = 0, mm_max = 0;
  auto* minmax = construct->add_subcommand("minmax", "min degree d, max degree D, d(D-d+2) classes");
  minmax->add_option("--min", mm_min, "minimum degree")->required();
  minmax->add_option("--max", mm_max, "maximum degree")->required();
  minmax->add_option("--out", out_prefix, "output file prefix");
  GraphSource realizer_source;
  auto* realizer = construct->add_subcommand("realizer", "host graph whose total coalition graph is the input");
  realizer_source.attach(realizer);
  realizer->add_option("--out", out_prefix, "output file prefix");

  std::size_t atlas_delta = 0, atlas_nu = 0, atlas_workers = 1, atlas_sweep = 0;
  std::string atlas_out;
  auto* atlas = app.add_subcommand("atlas", "optimal total coalition graph candidates for Delta <= 4");
  atlas->add_option("--delta", atlas_delta, "host maximum degree")->required();
  atlas->add_option("--nu", atlas_nu, "matching number of the candidates")->required();
  atlas->add_option("--workers", atlas_workers, "worker threads")->check(CLI::PositiveNumber);
  atlas->add_option("--sweep-max-n", atlas_sweep, "also realize candidates by sweeping hosts on <= n vertices");
  atlas->add_option("--out", atlas_out, "write <prefix>.g6 and <prefix>.json");

  GraphSource verify_source;
  std::string verify_partition;
  auto* verify = app.add_subcommand("verify", "check a partition and the structural properties of its TCG");
  verify_source.attach(verify);
  verify->add_option("--partition", verify_partition, "partition file")->required();

  std::string batch_corpus;
  std::size_t batch_workers = 1, batch_oracle = 9;
  long batch_budget = 60'000;
  auto* batch = app.add_subcommand("batch", "sweep a graph6 corpus checking solver, oracle and lemmas");
  batch->add_option("corpus", batch_corpus, "graph6 corpus ('-' for stdin)")->required();
  batch->add_option("--workers", batch_workers, "worker threads")->check(CLI::PositiveNumber);
  batch->add_option("--budget-ms", batch_budget, "time budget per graph")->check(CLI::PositiveNumber);
  batch->add_option("--oracle-max-n", batch_oracle, "compare with the brute-force oracle up to this order");

  std::size_t gen_n = 0;
  std::size_t gen_max_degree = kMaxVertices;
  bool gen_isolate_free = false;
  auto* generate = app.add_subcommand("generate", "graph6 corpus of all graphs on n vertices up to isomorphism");
  generate->add_option("--n", gen_n, "order (<= 9)")->required();
  generate->add_option("--max-degree", gen_max_degree, "maximum degree bound");
  generate->add_flag("--isolate-free", gen_isolate_free, "drop graphs with isolated vertices");

  std::vector<std::string> argv_rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(argv_rest.begin(), argv_rest.end());
  try {
    app.parse(argv_rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "tc: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*c) {
      if (cache_opt->count() > 0) compute.cache_path = cache_opt->results().empty() ? "" : cache_opt->results()[0];
      return cmd_compute(compute, in, out, err);
    }
    if (*quad) {
      auto layout = build_quadratic_extremal(q_delta);
      return cmd_construct_extremal(layout, "quadratic",
                                    out_prefix.empty() ? "quadratic_d" + std::to_string(q_delta) : out_prefix, out);
    }
    if (*minmax) {
      auto layout = build_minmax_extremal(mm_min, mm_max);
      return cmd_construct_extremal(
          layout, "minmax",
          out_prefix.empty() ? "minmax_" + std::to_string(mm_min) + "_" + std::to_string(mm_max) : out_prefix, out);
    }
    if (*realizer) {
      return cmd_construct_realizer(realizer_source.read_one(in), out_prefix.empty() ? "realizer" : out_prefix, out);
    }
    if (*atlas) return cmd_atlas(atlas_delta, atlas_nu, atlas_workers, atlas_sweep, atlas_out, out);
    if (*verify) return cmd_verify(verify_source.read_one(in), verify_partition, out);
    if (*batch) return cmd_batch(batch_corpus, batch_workers, batch_budget, batch_oracle, in, out);
    if (*generate) {
      const auto graphs = gen_isolate_free ? generate_isolate_free_graphs(gen_n, gen_max_degree)
                                           : generate_graphs(gen_n, gen_max_degree);
      for (const auto& g : graphs) out << to_graph6(g) << '\n';
      return kOk;
    }
  } catch (const Failure& f) {
    err << "tc: " << f.message << '\n';
    return f.code;
  } catch (const CacheConflict& e) {
    err << "tc: " << e.what() << '\n';
    return kInvariant;
  } catch (const InputError& e) {
    err << "tc: " << e.what() << '\n';
    return kUsage;
  } catch (const LimitError& e) {
    err << "tc: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "tc: " << e.what() << '\n';
    return kParse;
  }
  return kUsage;
}

}  // namespace tcg::cli
