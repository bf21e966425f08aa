// Command-line surface over the library: constructions, pattern queries,
// closed-form bound reports, exhaustive searches with table updates, the
// cross-check suite, and interval scan data for plotting.
//
// Conventions: JSON on stdout, human-readable notes on stderr, files only
// under --out.  Every command is deterministic for a fixed configuration
// (timings and node counts never reach stdout or report files).
// Exit codes: 0 success, 1 check failure, 2 usage error, 3 budget exceeded.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "turan/bounds.hpp"
#include "turan/build.hpp"
#include "turan/ex_table.hpp"
#include "turan/family.hpp"
#include "turan/hypergraph.hpp"
#include "turan/search.hpp"
#include "turan/semibipartite.hpp"
#include "turan/solver.hpp"
#include "turan/verify.hpp"

using namespace turan;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Config {
  int threads = 1;
  std::uint64_t seed = 12345;
  std::string ex_table;  // empty: start from an empty in-memory table
  i64 node_cap = -1;
  double wall_cap = -1.0;
  std::string out;  // empty: nothing written to disk
};

SearchBudget budget_of(const Config& cfg) {
  SearchBudget b;
  b.node_cap = cfg.node_cap;
  b.wall_cap = cfg.wall_cap;
  b.threads = cfg.threads;
  b.allow_large = true;
  return b;
}

ExTable load_table(const Config& cfg) {
  if (cfg.ex_table.empty()) return {};
  std::ifstream probe(cfg.ex_table);
  if (!probe) {
    std::fprintf(stderr, "note: ex-table %s not found, starting empty\n", cfg.ex_table.c_str());
    return {};
  }
  return ExTable::load(cfg.ex_table);
}

void emit(const ordered_json& doc) { std::cout << doc.dump(2) << "\n"; }

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << body;
}

std::vector<int> parse_sizes(const std::string& list) {
  std::vector<int> sizes;
  std::size_t pos = 0;
  while (pos < list.size()) {
    std::size_t comma = list.find(',', pos);
    if (comma == std::string::npos) comma = list.size();
    sizes.push_back(std::stoi(list.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  if (sizes.empty()) throw std::invalid_argument("empty size list");
  return sizes;
}

std::string multipartite_name(const std::vector<int>& sizes) {
  std::string name = "K";
  for (std::size_t i = 0; i < sizes.size(); ++i)
    name += (i ? "," : "") + std::to_string(sizes[i]);
  return name;
}

// A host is either a file (header "r n m" plus edge lines) or a pattern name.
Hypergraph load_host(const std::string& spec) {
  std::ifstream in(spec);
  if (in) return from_stream(in);
  return pattern_by_name(spec);
}

ordered_json outcome_json(const SearchOutcome& out) {
  ordered_json j;
  j["optimum"] = out.optimum;
  j["status"] = out.status;
  j["method"] = out.method;
  j["witness"] = to_text(out.witness);
  return j;
}

template <class Rep>
ordered_json report_common_json(const Rep& rep) {
  ordered_json j;
  j["formula"] = rep.formula;
  ordered_json params = ordered_json::object();
  for (const auto& [k, v] : rep.params) params[k] = v;
  j["params"] = params;
  ordered_json pre = ordered_json::object();
  for (const Precondition& p : rep.preconditions) pre[p.name] = p.holds;
  j["preconditions"] = pre;
  if (!rep.missing.empty()) j["missing"] = rep.missing;
  j["deps-exact"] = rep.deps_exact;
  j["status"] = rep.status;
  return j;
}

ordered_json bound_json(const BoundReport& rep) {
  ordered_json j = report_common_json(rep);
  j["value"] = rep.value;
  j["value-floor"] = rep.value_floor;
  if (rep.has_exact) {
    j["num"] = rep.num;
    j["den"] = rep.den;
  } else {
    j["margin"] = rep.margin;
  }
  return j;
}

ordered_json range_json(const RangeReport& rep) {
  ordered_json j = report_common_json(rep);
  j["lo"] = rep.lo;
  j["hi"] = rep.hi;
  j["t-min"] = rep.t_min;
  j["t-max"] = rep.t_max;
  j["nonempty"] = rep.nonempty();
  return j;
}

// ---------------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------------

int cmd_construct(const Config& cfg, const std::string& kind,
                  const std::vector<std::string>& args) {
  auto need = [&](std::size_t k) {
    if (args.size() != k)
      throw CLI::ValidationError("construct " + kind + ": expected " + std::to_string(k) +
                                 " argument(s)");
  };
  Hypergraph g(0, 2, {});
  if (kind == "complete") {
    need(2);
    g = complete(std::stoi(args[0]), std::stoi(args[1]));
  } else if (kind == "complete-multipartite") {
    need(1);
    g = complete_multipartite(parse_sizes(args[0])).base;
  } else if (kind == "turan") {
    need(2);
    g = turan_graph(std::stoi(args[0]), std::stoi(args[1]));
  } else if (kind == "path") {
    need(1);
    g = path_graph(std::stoi(args[0]));
  } else if (kind == "cycle") {
    need(1);
    g = cycle_graph(std::stoi(args[0]));
  } else if (kind == "generalized-triangle") {
    need(1);
    g = generalized_triangle(std::stoi(args[0]));
  } else if (kind == "suspension") {
    need(1);
    g = suspension(load_host(args[0]));
  } else if (kind == "join") {
    need(2);
    g = join(load_host(args[0]), load_host(args[1]));
  } else if (kind == "disjoint-union") {
    need(2);
    g = disjoint_union(load_host(args[0]), load_host(args[1]));
  } else if (kind == "blocking") {
    need(4);
    g = b_construction(std::stoi(args[0]), std::stoi(args[1]), std::stoi(args[2]),
                       std::stoi(args[3]));
  } else if (kind == "g1-family" || kind == "g2-family" || kind == "g3-family") {
    // Lower-bound construction member; the inner extremal piece comes from
    // the table, so --ex-table must point at one with the needed witness.
    need(3);
    PatternFamily F = family_by_name(args[0]);
    i64 n = std::stoll(args[1]), t = std::stoll(args[2]);
    ExTable table = load_table(cfg);
    auto plans = construction_plans(table, F, n, t);
    const std::string tag = kind.substr(0, 2);
    for (const auto& plan : plans)
      if (plan.tag == tag) {
        if (!plan.fits)
          throw CLI::ValidationError("construct " + kind + ": head clique exceeds n");
        if (!plan.inner.ok)
          throw CLI::ValidationError("construct " + kind + ": no stored witness for " +
                                     plan.inner.key);
        g = plan.member;
      }
  } else {
    throw CLI::ValidationError("construct: unknown kind " + kind);
  }
  ordered_json j;
  j["kind"] = kind;
  j["n"] = g.n();
  j["r"] = g.r();
  j["edges"] = g.size();
  j["text"] = to_text(g);
  emit(j);
  if (!cfg.out.empty()) {
    write_file(cfg.out, to_text(g));
    std::fprintf(stderr, "wrote %s (%d vertices, %lld edges)\n", cfg.out.c_str(), g.n(),
                 (long long)g.size());
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// solve
// ---------------------------------------------------------------------------

int cmd_solve(const Config& cfg, const std::vector<std::string>& hosts,
              const std::string& pattern, const std::string& mode, int anchors) {
  if (pattern.empty()) throw CLI::ValidationError("solve: --pattern must not be empty");
  ordered_json j;
  j["mode"] = mode;
  const int exit = kExitOk;
  if (mode == "rainbow") {
    std::vector<Hypergraph> hs;
    for (const std::string& h : hosts) hs.push_back(load_host(h));
    RainbowResult res = rainbow_matching(hs, pattern_by_name(pattern));
    j["found"] = res.found;
    if (res.found) j["images"] = res.images;
  } else if (mode == "ordered") {
    if (hosts.size() != 1) throw CLI::ValidationError("ordered mode takes one host");
    Hypergraph host = load_host(hosts[0]);
    if (anchors < 0 || anchors > host.n())
      throw CLI::ValidationError("ordered mode needs --anchors in [0, n]");
    std::vector<int> v1, v2;
    for (int v = 0; v < host.n(); ++v) (v < anchors ? v1 : v2).push_back(v);
    SemibipartiteHost sb(host, v1, v2);
    ContainsResult res = ordered_contains(sb, complete_multipartite(parse_sizes(
                                                  pattern[0] == 'K' ? pattern.substr(1) : pattern)));
    j["found"] = res.found;
    if (res.found) j["witness-map"] = res.witness;
  } else {
    if (hosts.size() != 1) throw CLI::ValidationError("mode " + mode + " takes one host");
    Hypergraph host = load_host(hosts[0]);
    PatternFamily fam = family_by_name(pattern);
    if (mode == "contains") {
      FamilyContainsResult res = contains_family(host, fam);
      j["found"] = res.found;
      if (res.found) {
        j["member"] = res.member;
        j["witness-map"] = res.witness;
      }
    } else if (mode == "nu") {
      NuResult res = matching_number(host, fam);
      j["value"] = res.value;
      ordered_json packing = ordered_json::array();
      for (const PlacedCopy& c : res.matching.copies) packing.push_back(c.image);
      j["packing"] = packing;
    } else if (mode.rfind("free:", 0) == 0) {
      int t = std::stoi(mode.substr(5));
      NuResult res = matching_number(host, fam, t + 1);
      j["t"] = t;
      j["free"] = res.value <= t;
      if (res.value > t) {
        ordered_json packing = ordered_json::array();
        for (const PlacedCopy& c : res.matching.copies) packing.push_back(c.image);
        j["packing"] = packing;
      }
    } else {
      throw CLI::ValidationError("solve: unknown mode " + mode);
    }
  }
  emit(j);
  if (!cfg.out.empty()) write_file(cfg.out, j.dump(2) + "\n");
  return exit;
}

// ---------------------------------------------------------------------------
// bounds
// ---------------------------------------------------------------------------

int cmd_bounds(const Config& cfg, const std::string& formula,
               const std::vector<std::string>& args) {
  auto arg_i = [&](std::size_t i) { return std::stoll(args.at(i)); };
  auto arg_d = [&](std::size_t i) { return std::stod(args.at(i)); };
  ExTable table = load_table(cfg);
  ordered_json j;
  if (formula == "g1" || formula == "g2" || formula == "g3") {
    PatternFamily F = family_by_name(args.at(0));
    i64 n = arg_i(1), t = arg_i(2);
    if (formula == "g1") j = bound_json(g1(table, n, t, F));
    if (formula == "g2") {
      i64 tau = args.size() > 3 ? arg_i(3) : covering_number(F.members.front());
      j = bound_json(g2(table, n, t, tau, F));
    }
    if (formula == "g3") j = bound_json(g3(table, n, t, F.max_vertices(), F));
  } else if (formula == "erdos-gallai") {
    j = bound_json(erdos_gallai_bound(arg_i(0), arg_i(1)));
  } else if (formula == "kst") {
    j = bound_json(kst_bound(arg_i(0), (int)arg_i(1), (int)arg_i(2)));
  } else if (formula == "erdos-kst") {
    j = bound_json(erdos_kst_bound(arg_i(0), parse_sizes(args.at(1))));
  } else if (formula == "zarankiewicz-graph") {
    j = bound_json(zarankiewicz_graph_bound(arg_i(0), arg_i(1), (int)arg_i(2), (int)arg_i(3)));
  } else if (formula == "zarankiewicz-hypergraph") {
    j = bound_json(zarankiewicz_hypergraph_bound(arg_i(0), arg_i(1), parse_sizes(args.at(2))));
  } else if (formula == "star-turan") {
    j = bound_json(star_turan_bound(arg_i(0), arg_i(1), parse_sizes(args.at(2))));
  } else if (formula == "maxdeg-peel") {
    j = bound_json(trivial_maxdeg_bound(arg_i(0), arg_i(1), arg_i(2), arg_i(3), arg_i(4)));
  } else if (formula == "blocking-lower") {
    j = bound_json(i_independent_lower(arg_i(0), arg_i(1), arg_i(2), (int)arg_i(3), (int)arg_i(4)));
  } else if (formula == "interval1-t-max") {
    j = bound_json(
        interval1_t_max(arg_i(0), arg_d(1), arg_d(2), arg_i(3), (int)arg_i(4), arg_i(5)));
  } else if (formula == "interval2-range") {
    j = range_json(interval2_t_range(table, arg_i(0), parse_sizes(args.at(1)), args.at(2)));
  } else if (formula == "interval2-graph-range") {
    j = range_json(
        interval2_graph_t_range(table, arg_i(0), (int)arg_i(1), (int)arg_i(2), args.at(3)));
  } else if (formula == "interval3") {
    j = bound_json(interval3_bound(table, arg_i(0), arg_i(1), parse_sizes(args.at(2)), args.at(3)));
  } else if (formula == "interval3-graph") {
    j = bound_json(interval3_graph_bound(table, arg_i(0), arg_i(1), (int)arg_i(2), (int)arg_i(3),
                                         args.at(4)));
  } else if (formula == "interval3-range") {
    j = range_json(interval3_t_range(arg_i(0), parse_sizes(args.at(1))));
  } else if (formula == "interval3-graph-range") {
    j = range_json(interval3_graph_t_range(arg_i(0), (int)arg_i(1), (int)arg_i(2)));
  } else {
    throw CLI::ValidationError("bounds: unknown formula " + formula);
  }
  emit(j);
  if (!cfg.out.empty()) write_file(cfg.out, j.dump(2) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------------------
// search
// ---------------------------------------------------------------------------

int cmd_search(const Config& cfg, const std::string& target, const std::string& family, i64 n,
               i64 t, i64 m, const std::string& sizes_arg) {
  SearchBudget budget = budget_of(cfg);
  ExTable table = load_table(cfg);
  SearchOutcome out;
  std::string row_family = family, variant = "plain";
  i64 row_n = n;
  if (target == "ex") {
    out = exact_ex((int)n, family_by_name(family), budget);
  } else if (target == "packing") {
    PatternFamily F = family_by_name(family);
    if (F.members.size() != 1)
      throw CLI::ValidationError("search packing: single-pattern families only");
    out = exact_ex_packing((int)n, F.members.front(), (int)t, budget);
    variant = t == 0 ? "plain" : "";  // packing values are not table rows unless t = 0
  } else if (target == "star") {
    out = exact_star_ex((int)m, (int)n, family_by_name(family), budget);
    variant = "star:" + std::to_string(m);
  } else if (target == "zar") {
    std::vector<int> sizes = parse_sizes(sizes_arg.empty() ? family.substr(1) : sizes_arg);
    out = exact_zarankiewicz((int)m, (int)n, complete_multipartite(sizes), budget);
    row_family = multipartite_name(sizes);
    variant = "zar:" + std::to_string(m);
  } else {
    throw CLI::ValidationError("search: unknown target " + target);
  }
  if (!variant.empty()) {
    ex_table_update(table, row_family, variant, row_n, out);
    if (!cfg.ex_table.empty()) {
      table.save(cfg.ex_table);
      std::fprintf(stderr, "updated %s (%s|%s|%lld)\n", cfg.ex_table.c_str(), row_family.c_str(),
                   variant.c_str(), (long long)row_n);
    }
  }
  std::fprintf(stderr, "search %s: optimum %lld (%s), %lld nodes, %.2fs\n", target.c_str(),
               (long long)out.optimum, out.status.c_str(), (long long)out.nodes, out.seconds);
  ordered_json j = outcome_json(out);
  emit(j);
  if (!cfg.out.empty()) write_file(cfg.out, j.dump(2) + "\n");
  return out.status == "exact" ? kExitOk : kExitBudget;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int cmd_verify(const Config& cfg, const std::string& matrix) {
  ExTable table = load_table(cfg);
  SuiteConfig suite;
  if (matrix == "default")
    suite = default_suite_config();
  else if (matrix == "empty")
    suite = empty_suite_config();
  else
    throw CLI::ValidationError("verify: unknown matrix " + matrix);
  suite.threads = cfg.threads;
  suite.seed = cfg.seed;
  suite.search.node_cap = cfg.node_cap;
  suite.search.wall_cap = cfg.wall_cap;
  SuiteReport report = run_suite(table, suite);
  ordered_json doc = report.to_json();
  emit(doc);
  std::fprintf(stderr, "verify: %lld pass, %lld fail, %lld vacuous, %lld unresolved\n",
               (long long)report.count("pass"), (long long)report.count("fail"),
               (long long)report.count("vacuous"), (long long)report.count("unresolved"));
  if (!cfg.out.empty()) {
    std::filesystem::create_directories(cfg.out);
    write_file(cfg.out + "/report.json", doc.dump(2) + "\n");
    write_file(cfg.out + "/report.csv", report.to_csv());
    std::fprintf(stderr, "wrote %s/report.json and report.csv\n", cfg.out.c_str());
  }
  return report.exit_code();
}

// ---------------------------------------------------------------------------
// scan
// ---------------------------------------------------------------------------

int cmd_scan(const Config& cfg, const std::string& family, i64 n, i64 t_max) {
  ExTable table = load_table(cfg);
  PatternFamily F = family_by_name(family);
  if (F.members.size() != 1) throw CLI::ValidationError("scan: single-pattern families only");
  SearchBudget budget = budget_of(cfg);
  std::string csv = "t,bound,exact,construction\n";
  bool truncated = false;
  for (i64 t = 0; t <= t_max; ++t) {
    auto plans = construction_plans(table, F, n, t);
    i64 bound = -1, member = -1;
    for (const auto& plan : plans) {
      if (plan.rep.ok()) bound = std::max(bound, plan.rep.value_floor);
      if (plan.fits && plan.inner.ok && is_free(plan.member, F, (int)t))
        member = std::max(member, plan.member.size());
    }
    i64 exact;
    if ((t + 1) * F.max_vertices() > n) {
      exact = binom(n, F.r());  // too few vertices for t+1 disjoint copies
    } else {
      SearchOutcome out = exact_ex_packing((int)n, F.members.front(), (int)t, budget);
      exact = out.optimum;
      if (out.status != "exact") {
        truncated = true;
        std::fprintf(stderr, "t=%lld: search truncated, reporting incumbent %lld\n", (long long)t,
                     (long long)exact);
      }
    }
    csv += std::to_string(t) + "," + (bound < 0 ? "" : std::to_string(bound)) + "," +
           std::to_string(exact) + "," + (member < 0 ? "" : std::to_string(member)) + "\n";
  }
  std::cout << csv;
  if (!cfg.out.empty()) write_file(cfg.out, csv);
  return truncated ? kExitBudget : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact extremal hypergraph toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // accept the global options after the subcommand too
  Config cfg;
  app.add_option("--threads", cfg.threads, "worker threads")->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for randomized corpora")->capture_default_str();
  app.add_option("--ex-table", cfg.ex_table, "extremal-value table (JSON lines)");
  app.add_option("--node-cap", cfg.node_cap, "search node budget, -1 = unlimited")
      ->capture_default_str();
  app.add_option("--wall-cap", cfg.wall_cap, "search wall-clock budget in seconds, -1 = unlimited")
      ->capture_default_str();
  app.add_option("--out", cfg.out, "output file (construct/solve/bounds/search/scan) or directory (verify)");

  auto* c_construct = app.add_subcommand("construct", "emit a construction in the text format");
  std::string kind;
  std::vector<std::string> construct_args;
  c_construct->add_option("kind", kind,
                          "complete | complete-multipartite | turan | path | cycle | "
                          "generalized-triangle | suspension | join | disjoint-union | blocking | "
                          "g1-family | g2-family | g3-family")
      ->required();
  c_construct->add_option("args", construct_args, "construction arguments");

  auto* c_solve = app.add_subcommand("solve", "pattern queries against a host");
  std::vector<std::string> hosts;
  std::string pattern, mode = "contains";
  int anchors = -1;
  c_solve->add_option("--host", hosts, "host file or pattern name (repeat for rainbow)")
      ->required();
  c_solve->add_option("--pattern", pattern, "pattern file or name")->required();
  c_solve->add_option("--mode", mode, "contains | nu | free:T | ordered | rainbow");
  c_solve->add_option("--anchors", anchors, "ordered mode: first side = vertices [0, m)");

  auto* c_bounds = app.add_subcommand("bounds", "evaluate a closed-form bound");
  std::string formula;
  std::vector<std::string> bound_args;
  c_bounds->add_option("formula", formula,
                       "g1 | g2 | g3 | erdos-gallai | kst | erdos-kst | zarankiewicz-graph | "
                       "zarankiewicz-hypergraph | star-turan | maxdeg-peel | blocking-lower | "
                       "interval1-t-max | interval2-range | interval2-graph-range | interval3 | "
                       "interval3-graph | interval3-range | interval3-graph-range")
      ->required();
  c_bounds->add_option("args", bound_args, "formula arguments");

  auto* c_search = app.add_subcommand("search", "run an exhaustive search, update the table");
  std::string target, s_family, s_sizes;
  i64 s_n = 0, s_t = 0, s_m = 0;
  c_search->add_option("target", target, "ex | packing | star | zar")->required();
  c_search->add_option("--family", s_family, "pattern family name");
  c_search->add_option("--n", s_n, "host vertices (bulk side for zar)")->required();
  c_search->add_option("--t", s_t, "disjoint-copy budget (packing)");
  c_search->add_option("--m", s_m, "anchor count (star) / first side (zar)");
  c_search->add_option("--sizes", s_sizes, "part sizes for zar, e.g. 2,2");

  auto* c_verify = app.add_subcommand("verify", "run the cross-check suite");
  std::string matrix = "default";
  c_verify->add_option("--matrix", matrix, "default | empty");

  auto* c_scan = app.add_subcommand("scan", "CSV of (t, bound, exact, construction)");
  std::string scan_family = "K2,2";
  i64 scan_n = 10, scan_t_max = 2;
  c_scan->add_option("--family", scan_family, "pattern family")->capture_default_str();
  c_scan->add_option("--n", scan_n, "host vertices")->capture_default_str();
  c_scan->add_option("--t-max", scan_t_max, "largest copy budget")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  try {
    if (c_construct->parsed()) return cmd_construct(cfg, kind, construct_args);
    if (c_solve->parsed()) return cmd_solve(cfg, hosts, pattern, mode, anchors);
    if (c_bounds->parsed()) return cmd_bounds(cfg, formula, bound_args);
    if (c_search->parsed()) return cmd_search(cfg, target, s_family, s_n, s_t, s_m, s_sizes);
    if (c_verify->parsed()) return cmd_verify(cfg, matrix);
    if (c_scan->parsed()) return cmd_scan(cfg, scan_family, scan_n, scan_t_max);
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
