#pragma once

// Exact desk-scale maximisation: the largest edge sets avoiding forbidden
// patterns over plain, anchored-star, and semibipartite hosts, plus an
// isomorph-rejecting host generator.  Results carry canonical witnesses and
// honest status ("exact" vs budget-truncated "lower").

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "turan/binom.hpp"
#include "turan/canonical.hpp"
#include "turan/ex_table.hpp"
#include "turan/family.hpp"
#include "turan/hypergraph.hpp"
#include "turan/solver.hpp"

namespace turan {

struct SearchBudget {
  i64 node_cap = -1;            // max branch nodes, -1 = unlimited
  double wall_cap = -1.0;       // max seconds, -1 = unlimited (timing-sensitive)
  int threads = 1;              // workers over seeded root subproblems
  int orbit_depth = 2;          // symmetry-seeded forced prefix (effective 0..2)
  bool allow_large = false;     // lift the default host-size guard
  bool enumerate_only = false;  // exhaustive walk, no pruning or seeding
};

struct SearchOutcome {
  i64 optimum = 0;
  Hypergraph witness;     // canonical form with exactly `optimum` edges
  i64 nodes = 0;          // branch nodes expanded (thread-timing sensitive)
  double seconds = 0.0;
  std::string method;     // "enumerate" | "branch-bound"
  std::string status;     // "exact" | "lower"
};

namespace detail {

// Feasibility callback contract: `edges` is the tentative edge set, `added`
// is its most recently appended member, and the set without `added` is
// already known feasible.  Must be downward closed (subsets of feasible
// sets are feasible), which makes anchored incremental checks exact.
using FeasibleFn = std::function<bool(const std::vector<Edge>&, const Edge&)>;

struct MaxSearchProblem {
  int host_n = 0;
  int r = 2;
  std::vector<Edge> candidates;  // lex-sorted distinct r-sets
  std::vector<int> colors;       // per-vertex class for canonical forms; {} = none
  FeasibleFn feasible;
};

// True when the host gains a forbidden copy through `anchor` (-1 = anywhere).
// Exact as an incremental test: if host minus its newest edge is free, any
// new copy must use that edge, hence each of its vertices.
inline bool anchored_family_hit(const Hypergraph& host, const PatternFamily& fam, int anchor) {
  for (const Hypergraph& member : fam.members) {
    EmbedOptions opt;
    opt.required = anchor;
    bool hit = false;
    for_each_embedding(host, member,
                       [&](const std::vector<int>&) {
                         hit = true;
                         return false;
                       },
                       opt);
    if (hit) return true;
  }
  return false;
}

// Ordered variant: part 0 of the pattern must land in vertices [0, v1_count),
// the other parts in the rest.
inline bool anchored_ordered_hit(const Hypergraph& host, int v1_count, const PartitionedPattern& p,
                                 int anchor) {
  std::vector<Bitset> allowed(p.base.n(), Bitset(host.n()));
  Bitset side1(host.n()), side2(host.n());
  for (int v = 0; v < host.n(); ++v) (v < v1_count ? side1 : side2).set(v);
  for (std::size_t part = 0; part < p.parts.size(); ++part)
    for (int pv : p.parts[part]) allowed[pv] = part == 0 ? side1 : side2;
  EmbedOptions opt;
  opt.allowed = &allowed;
  opt.required = anchor;
  bool hit = false;
  for_each_embedding(host, p.base,
                     [&](const std::vector<int>&) {
                       hit = true;
                       return false;
                     },
                     opt);
  return hit;
}

// Packing variant: true when the host gains a (t+1)-strong disjoint copy
// collection through the edge `added`.  Exact as an incremental test: if
// the host minus `added` packs at most t copies, any larger packing must
// place one copy on that edge, so it suffices to try every copy whose
// image uses `added` and count t further copies among the other vertices.
inline bool anchored_packing_hit(const Hypergraph& host, const PatternFamily& fam, int t,
                                 const Edge& added) {
  Bitset rest(host.n());
  for (int v = 0; v < host.n(); ++v) rest.set(v);
  bool hit = false;
  for (const Hypergraph& member : fam.members) {
    std::vector<Edge> member_edges = member.edges();
    EmbedOptions opt;
    opt.required = added[0];
    for_each_embedding(host, member,
                       [&](const std::vector<int>& map) {
                         bool uses_added = false;
                         for (const Edge& pe : member_edges) {
                           Edge image;
                           image.reserve(pe.size());
                           for (int pv : pe) image.push_back(map[pv]);
                           std::sort(image.begin(), image.end());
                           if (image == added) {
                             uses_added = true;
                             break;
                           }
                         }
                         if (!uses_added) return true;
                         for (int hv : map) rest.reset(hv);
                         bool more = t == 0 || matching_number(host, fam, t, &rest).value >= t;
                         for (int hv : map) rest.set(hv);
                         if (more) {
                           hit = true;
                           return false;
                         }
                         return true;
                       },
                       opt);
    if (hit) break;
  }
  return hit;
}

// True when `masks` (vertex bitmasks of the current edges) contains `need`
// pairwise disjoint edges that also avoid the vertices in `used`.
inline bool disjoint_edges_exist(const std::vector<std::uint64_t>& masks, std::size_t idx,
                                 std::uint64_t used, int need) {
  if (need == 0) return true;
  for (std::size_t i = idx; i + static_cast<std::size_t>(need) <= masks.size(); ++i)
    if (!(masks[i] & used) && disjoint_edges_exist(masks, i + 1, used | masks[i], need - 1))
      return true;
  return false;
}

// Single-edge-pattern specialization of the anchored packing test: a
// matching of t+1 edges through `added` exists iff t pairwise disjoint
// edges avoid its vertices.  Hosts are capped at 64 vertices by callers.
inline bool anchored_matching_hit(const std::vector<Edge>& edges, const Edge& added, int t) {
  if (t == 0) return true;  // `added` alone is a copy
  std::uint64_t added_mask = 0;
  for (int v : added) added_mask |= std::uint64_t(1) << v;
  std::vector<std::uint64_t> masks;
  masks.reserve(edges.size());
  for (const Edge& e : edges) {
    std::uint64_t m = 0;
    for (int v : e) m |= std::uint64_t(1) << v;
    if (!(m & added_mask)) masks.push_back(m);
  }
  return disjoint_edges_exist(masks, 0, added_mask, t);
}

inline void atomic_fetch_max(std::atomic<i64>& target, i64 value) {
  i64 cur = target.load(std::memory_order_relaxed);
  while (cur < value && !target.compare_exchange_weak(cur, value, std::memory_order_relaxed)) {
  }
}

// One seeded root subproblem: `forced` is an already-included feasible
// prefix, `tail` the remaining candidates, each individually compatible
// with the prefix.
struct SeedJob {
  std::vector<int> forced;
  std::vector<int> tail;
};

struct JobResult {
  i64 best = -1;  // best edge count strictly above the shared baseline
  std::vector<int> best_set;
  i64 nodes = 0;
  bool truncated = false;
};

class JobRun {
 public:
  JobRun(const MaxSearchProblem& prob, std::atomic<i64>& shared_best, i64 node_cap,
         std::chrono::steady_clock::time_point deadline, bool has_deadline)
      : prob_(prob),
        shared_best_(shared_best),
        node_cap_(node_cap),
        deadline_(deadline),
        has_deadline_(has_deadline) {}

  // Branch-and-bound over `job.tail` on top of `job.forced`.  The local
  // bound prunes ties, the shared bound only strictly worse subtrees, so
  // optimum and first-found witness stay thread-count independent.
  JobResult run(const SeedJob& job, i64 baseline) {
    res_ = JobResult{};
    res_.best = baseline;
    chosen_ = job.forced;
    chosen_edges_.clear();
    for (int c : job.forced) chosen_edges_.push_back(prob_.candidates[c]);
    dfs(job.tail);
    res_.nodes = nodes_;
    return res_;
  }

  // Raw walk visiting every feasible subset of the candidate list.
  JobResult run_enumerate() {
    res_ = JobResult{};
    chosen_.clear();
    chosen_edges_.clear();
    walk(0);
    res_.nodes = nodes_;
    return res_;
  }

 private:
  bool budget_hit() {
    if (node_cap_ >= 0 && nodes_ >= node_cap_) return true;
    if (has_deadline_ && (nodes_ & 255) == 0 &&
        std::chrono::steady_clock::now() > deadline_)
      return true;
    return false;
  }

  bool can_add(int c) {
    chosen_edges_.push_back(prob_.candidates[c]);
    bool ok = prob_.feasible(chosen_edges_, prob_.candidates[c]);
    chosen_edges_.pop_back();
    return ok;
  }

  void record_leaf() {
    i64 v = static_cast<i64>(chosen_.size());
    if (v > res_.best) {
      res_.best = v;
      res_.best_set = chosen_;
      atomic_fetch_max(shared_best_, v);
    }
  }

  void dfs(std::vector<int> tail) {
    if (res_.truncated) return;
    ++nodes_;
    if (budget_hit()) {
      res_.truncated = true;
      return;
    }
    i64 potential = static_cast<i64>(chosen_.size() + tail.size());
    if (potential <= res_.best ||
        potential < shared_best_.load(std::memory_order_relaxed))
      return;
    if (tail.empty()) {
      record_leaf();
      return;
    }
    int e = tail.front();
    chosen_.push_back(e);
    chosen_edges_.push_back(prob_.candidates[e]);
    std::vector<int> sub;
    sub.reserve(tail.size() - 1);
    for (std::size_t i = 1; i < tail.size(); ++i)
      if (can_add(tail[i])) sub.push_back(tail[i]);
    dfs(std::move(sub));
    chosen_.pop_back();
    chosen_edges_.pop_back();
    if (res_.truncated) return;
    tail.erase(tail.begin());
    dfs(std::move(tail));
  }

  void walk(std::size_t pos) {
    if (res_.truncated) return;
    ++nodes_;
    if (budget_hit()) {
      res_.truncated = true;
      return;
    }
    record_leaf();
    if (pos >= prob_.candidates.size()) return;
    if (can_add(static_cast<int>(pos))) {
      chosen_.push_back(static_cast<int>(pos));
      chosen_edges_.push_back(prob_.candidates[pos]);
      walk(pos + 1);
      chosen_.pop_back();
      chosen_edges_.pop_back();
      if (res_.truncated) return;
    }
    walk(pos + 1);
  }

  const MaxSearchProblem& prob_;
  std::atomic<i64>& shared_best_;
  i64 node_cap_;
  std::chrono::steady_clock::time_point deadline_;
  bool has_deadline_;
  i64 nodes_ = 0;
  JobResult res_;
  std::vector<int> chosen_;
  std::vector<Edge> chosen_edges_;
};

// Group candidate indices by the canonical form of the forced edges plus
// one candidate; classes are ordered by first occurrence.
inline std::vector<std::vector<int>> orbit_classes(const MaxSearchProblem& prob,
                                                   const std::vector<Edge>& forced,
                                                   const std::vector<int>& pool) {
  std::vector<std::vector<int>> classes;
  std::map<std::string, std::size_t> index;
  for (int c : pool) {
    std::vector<Edge> edges = forced;
    edges.push_back(prob.candidates[c]);
    std::string key = canonical_key(Hypergraph(prob.host_n, prob.r, std::move(edges)), prob.colors);
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(std::move(key), classes.size());
      classes.push_back({c});
    } else {
      classes[it->second].push_back(c);
    }
  }
  return classes;
}

// Candidates of `pool` except classes before `keep_from` and the class
// representative itself; individual compatibility with `forced` re-checked.
inline std::vector<int> seeded_tail(const MaxSearchProblem& prob,
                                    const std::vector<std::vector<int>>& classes,
                                    std::size_t keep_from, int rep,
                                    const std::vector<Edge>& forced_edges) {
  std::vector<int> tail;
  for (std::size_t k = keep_from; k < classes.size(); ++k)
    for (int c : classes[k])
      if (c != rep) tail.push_back(c);
  std::sort(tail.begin(), tail.end());
  std::vector<int> ok;
  ok.reserve(tail.size());
  std::vector<Edge> probe = forced_edges;
  for (int c : tail) {
    probe.push_back(prob.candidates[c]);
    if (prob.feasible(probe, prob.candidates[c])) ok.push_back(c);
    probe.pop_back();
  }
  return ok;
}

// Root subproblems covering every solution of size >= depth; smaller
// solutions are covered by the greedy incumbent.  Some maximum solution is
// reachable in the first subproblem (in index order) whose forced prefix
// it can be mapped onto, by minimising over its isomorphism orbit; prefix
// exclusions of whole earlier classes keep this complete for depth <= 2.
inline std::vector<SeedJob> seed_jobs(const MaxSearchProblem& prob, int depth,
                                      const std::vector<int>& singles) {
  std::vector<SeedJob> jobs;
  if (singles.empty()) return jobs;
  if (depth <= 0) {
    jobs.push_back({{}, singles});
    return jobs;
  }
  std::vector<std::vector<int>> level1 = orbit_classes(prob, {}, singles);
  for (std::size_t i = 0; i < level1.size(); ++i) {
    int rep = level1[i][0];
    std::vector<Edge> forced_edges = {prob.candidates[rep]};
    std::vector<int> tail = seeded_tail(prob, level1, i, rep, forced_edges);
    if (depth == 1) {
      if (!tail.empty()) jobs.push_back({{rep}, tail});
      continue;
    }
    std::vector<std::vector<int>> level2 = orbit_classes(prob, forced_edges, tail);
    for (std::size_t j = 0; j < level2.size(); ++j) {
      int rep2 = level2[j][0];
      std::vector<Edge> pair_edges = {prob.candidates[rep], prob.candidates[rep2]};
      std::vector<int> tail2 = seeded_tail(prob, level2, j, rep2, pair_edges);
      jobs.push_back({{rep, rep2}, std::move(tail2)});
    }
  }
  return jobs;
}

inline SearchOutcome run_max_search(const MaxSearchProblem& prob, const SearchBudget& budget,
                                    const Hypergraph* warm) {
  auto t0 = std::chrono::steady_clock::now();
  bool has_deadline = budget.wall_cap >= 0;
  auto deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(has_deadline ? budget.wall_cap : 0));

  SearchOutcome out;
  out.method = budget.enumerate_only ? "enumerate" : "branch-bound";

  // Greedy lexicographic incumbent; doubles as the shared pruning baseline.
  std::vector<int> best_set;
  {
    std::vector<Edge> acc;
    for (std::size_t c = 0; c < prob.candidates.size(); ++c) {
      acc.push_back(prob.candidates[c]);
      if (prob.feasible(acc, prob.candidates[c]))
        best_set.push_back(static_cast<int>(c));
      else
        acc.pop_back();
    }
  }
  if (warm != nullptr) {
    if (warm->n() != prob.host_n || warm->r() != prob.r)
      throw std::invalid_argument("search: warm start host shape mismatch");
    std::vector<int> warm_set;
    std::vector<Edge> acc;
    for (const Edge& e : warm->edges()) {
      auto it = std::lower_bound(prob.candidates.begin(), prob.candidates.end(), e);
      if (it == prob.candidates.end() || *it != e)
        throw std::invalid_argument("search: warm start edge outside the candidate space");
      acc.push_back(e);
      if (!prob.feasible(acc, e))
        throw std::invalid_argument("search: warm start is not feasible");
      warm_set.push_back(static_cast<int>(it - prob.candidates.begin()));
    }
    if (warm_set.size() > best_set.size()) best_set = std::move(warm_set);
  }
  i64 best_val = static_cast<i64>(best_set.size());
  std::atomic<i64> shared_best{best_val};

  std::vector<SeedJob> jobs;
  if (budget.enumerate_only) {
    jobs.push_back({});  // placeholder; the enumerate walker scans everything
  } else {
    std::vector<int> singles;
    {
      std::vector<Edge> probe;
      for (std::size_t c = 0; c < prob.candidates.size(); ++c) {
        probe.push_back(prob.candidates[c]);
        if (prob.feasible(probe, prob.candidates[c])) singles.push_back(static_cast<int>(c));
        probe.pop_back();
      }
    }
    int depth = std::min(2, std::max(0, budget.orbit_depth));
    jobs = seed_jobs(prob, depth, singles);
  }

  std::vector<JobResult> results(jobs.size());
  if (!jobs.empty()) {
    i64 per_cap = -1, extra = 0;
    if (budget.node_cap >= 0) {
      per_cap = budget.node_cap / static_cast<i64>(jobs.size());
      extra = budget.node_cap % static_cast<i64>(jobs.size());
    }
    auto job_cap = [&](std::size_t i) {
      if (per_cap < 0) return static_cast<i64>(-1);
      return per_cap + (static_cast<i64>(i) < extra ? 1 : 0);
    };
    auto run_one = [&](std::size_t i) {
      JobRun runner(prob, shared_best, job_cap(i), deadline, has_deadline);
      results[i] = budget.enumerate_only ? runner.run_enumerate() : runner.run(jobs[i], best_val);
    };
    int threads = std::max(1, budget.threads);
    if (threads == 1 || jobs.size() == 1) {
      for (std::size_t i = 0; i < jobs.size(); ++i) run_one(i);
    } else {
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) run_one(i);
      };
      std::vector<std::thread> pool;
      int spawn = std::min<std::size_t>(threads, jobs.size());
      pool.reserve(spawn);
      for (int w = 0; w < spawn; ++w) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }
  }

  bool truncated = false;
  for (std::size_t i = 0; i < results.size(); ++i) {
    truncated = truncated || results[i].truncated;
    out.nodes += results[i].nodes;
    if (results[i].best > best_val) {
      best_val = results[i].best;
      best_set = results[i].best_set;
    }
  }

  std::vector<Edge> edges;
  edges.reserve(best_set.size());
  for (int c : best_set) edges.push_back(prob.candidates[c]);
  out.optimum = best_val;
  out.witness = canonical_form(Hypergraph(prob.host_n, prob.r, std::move(edges)), prob.colors).form;
  out.status = truncated ? "lower" : "exact";
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

inline void check_host_budget(const char* op, int n, int r, bool allow_large) {
  if (allow_large) return;
  if ((r == 2 && n <= 10) || (r == 3 && n <= 7)) return;
  throw std::invalid_argument(std::string(op) +
                              ": host beyond the default budget (r=2 needs n <= 10, r=3 needs "
                              "n <= 7); set allow_large to override");
}

inline int family_uniformity(const PatternFamily& fam) {
  int r = fam.members.front().r();
  for (const Hypergraph& m : fam.members)
    if (m.r() != r) throw std::invalid_argument("search: family members mix uniformities");
  return r;
}

}  // namespace detail

// Maximum edge count of an n-vertex host containing no member of `fam`,
// with a canonical extremal witness.  An optional warm start (a feasible
// host on the same vertex set) seeds the incumbent.
inline SearchOutcome exact_ex(int n, const PatternFamily& fam, const SearchBudget& budget = {},
                              const Hypergraph* warm = nullptr) {
  if (n < 0) throw std::invalid_argument("exact_ex: negative host size");
  int r = detail::family_uniformity(fam);
  detail::check_host_budget("exact_ex", n, r, budget.allow_large);
  if (contains_family(empty_hypergraph(n, r), fam).found)
    throw std::invalid_argument("exact_ex: the empty host already contains a member");
  detail::MaxSearchProblem prob;
  prob.host_n = n;
  prob.r = r;
  for_each_subset(n, r, [&](const std::vector<int>& s) {
    prob.candidates.push_back(s);
    return true;
  });
  prob.feasible = [n, r, &fam](const std::vector<Edge>& edges, const Edge& added) {
    return !detail::anchored_family_hit(Hypergraph(n, r, edges), fam, added[0]);
  };
  return detail::run_max_search(prob, budget, warm);
}

// Maximum edge count of an n-vertex host with no t+1 pairwise
// vertex-disjoint copies of `f`.
inline SearchOutcome exact_ex_packing(int n, const Hypergraph& f, int t,
                                      const SearchBudget& budget = {},
                                      const Hypergraph* warm = nullptr) {
  if (n < 0) throw std::invalid_argument("exact_ex_packing: negative host size");
  if (t < 0) throw std::invalid_argument("exact_ex_packing: negative copy budget");
  int r = f.r();
  detail::check_host_budget("exact_ex_packing", n, r, budget.allow_large);
  if (!is_free(empty_hypergraph(n, r), f, t))
    throw std::invalid_argument("exact_ex_packing: the empty host already packs t+1 copies");
  detail::MaxSearchProblem prob;
  prob.host_n = n;
  prob.r = r;
  for_each_subset(n, r, [&](const std::vector<int>& s) {
    prob.candidates.push_back(s);
    return true;
  });
  if (f.size() == 1 && f.n() == r && n <= 64) {
    prob.feasible = [t](const std::vector<Edge>& edges, const Edge& added) {
      return !detail::anchored_matching_hit(edges, added, t);
    };
  } else {
    PatternFamily fam = single_family(f, "packing-pattern");
    prob.feasible = [n, r, fam, t](const std::vector<Edge>& edges, const Edge& added) {
      return !detail::anchored_packing_hit(Hypergraph(n, r, edges), fam, t, added);
    };
  }
  return detail::run_max_search(prob, budget, warm);
}

// Maximum edge count over n-vertex hosts in which the anchor set [0, m)
// meets every edge, containing no member of `fam`.
inline SearchOutcome exact_star_ex(int m, int n, const PatternFamily& fam,
                                   const SearchBudget& budget = {}) {
  if (n < 0 || m < 0 || m > n)
    throw std::invalid_argument("exact_star_ex: need 0 <= m <= n");
  int r = detail::family_uniformity(fam);
  detail::check_host_budget("exact_star_ex", n, r, budget.allow_large);
  if (contains_family(empty_hypergraph(n, r), fam).found)
    throw std::invalid_argument("exact_star_ex: the empty host already contains a member");
  detail::MaxSearchProblem prob;
  prob.host_n = n;
  prob.r = r;
  for_each_subset(n, r, [&](const std::vector<int>& s) {
    if (s[0] < m) prob.candidates.push_back(s);
    return true;
  });
  prob.colors.assign(n, 1);
  for (int v = 0; v < m; ++v) prob.colors[v] = 0;
  prob.feasible = [n, r, &fam](const std::vector<Edge>& edges, const Edge& added) {
    return !detail::anchored_family_hit(Hypergraph(n, r, edges), fam, added[0]);
  };
  return detail::run_max_search(prob, budget, nullptr);
}

// Maximum edge count over hosts on anchor side [0, m) plus bulk side
// [m, m+n), every edge meeting the anchor side exactly once, containing no
// part-respecting copy of `p` (part 0 on the anchor side).
inline SearchOutcome exact_zarankiewicz(int m, int n, const PartitionedPattern& p,
                                        const SearchBudget& budget = {}) {
  if (m < 0 || n < 0) throw std::invalid_argument("exact_zarankiewicz: negative side size");
  int r = p.base.r();
  if (!budget.allow_large && (n < r - 1 ? 0 : static_cast<i64>(m) * binom(n, r - 1)) > 45)
    throw std::invalid_argument(
        "exact_zarankiewicz: candidate space beyond the default budget (m*C(n,r-1) <= 45); set "
        "allow_large to override");
  int host_n = m + n;
  if (detail::anchored_ordered_hit(empty_hypergraph(host_n, r), m, p, -1))
    throw std::invalid_argument("exact_zarankiewicz: the empty host already contains the pattern");
  detail::MaxSearchProblem prob;
  prob.host_n = host_n;
  prob.r = r;
  for (int a = 0; a < m; ++a) {
    for_each_subset(n, r - 1, [&](const std::vector<int>& s) {
      Edge e;
      e.reserve(r);
      e.push_back(a);
      for (int v : s) e.push_back(m + v);
      prob.candidates.push_back(std::move(e));
      return true;
    });
  }
  std::sort(prob.candidates.begin(), prob.candidates.end());
  prob.colors.assign(host_n, 1);
  for (int v = 0; v < m; ++v) prob.colors[v] = 0;
  prob.feasible = [host_n, r, m, &p](const std::vector<Edge>& edges, const Edge& added) {
    return !detail::anchored_ordered_hit(Hypergraph(host_n, r, edges), m, p, added[0]);
  };
  return detail::run_max_search(prob, budget, nullptr);
}

// Visit exactly one representative per isomorphism class of r-uniform
// hosts on n vertices, in edge-count levels and canonical text order
// within a level.  Returns the class count.
template <class Yield>
inline i64 generate_nonisomorphic(int n, int r, Yield&& yield, bool allow_large = false) {
  if (n < 0 || r < 1) throw std::invalid_argument("generate_nonisomorphic: bad parameters");
  if (!allow_large && !((r == 2 && n <= 9) || (r == 3 && n <= 6)))
    throw std::invalid_argument(
        "generate_nonisomorphic: beyond the default budget (r=2 needs n <= 9, r=3 needs n <= 6); "
        "set allow_large to override");
  std::vector<Edge> all_edges;
  for_each_subset(n, r, [&](const std::vector<int>& s) {
    all_edges.push_back(s);
    return true;
  });
  std::vector<Hypergraph> level = {empty_hypergraph(n, r)};
  i64 count = 1;
  yield(level.front());
  while (!level.empty()) {
    std::map<std::string, Hypergraph> next;
    for (const Hypergraph& g : level) {
      for (const Edge& e : all_edges) {
        if (g.has_edge(e)) continue;
        std::vector<Edge> edges = g.edges();
        edges.push_back(e);
        Hypergraph form = canonical_form(Hypergraph(n, r, std::move(edges))).form;
        std::string key = to_text(form);
        next.emplace(std::move(key), std::move(form));
      }
    }
    level.clear();
    level.reserve(next.size());
    for (auto& kv : next) {
      yield(kv.second);
      ++count;
      level.push_back(std::move(kv.second));
    }
  }
  return count;
}

inline std::vector<Hypergraph> all_nonisomorphic(int n, int r, bool allow_large = false) {
  std::vector<Hypergraph> out;
  generate_nonisomorphic(
      n, r, [&](const Hypergraph& h) { out.push_back(h); }, allow_large);
  return out;
}

// Fold a search outcome into the value table under the given key.
inline void ex_table_update(ExTable& table, const std::string& family, const std::string& variant,
                            i64 n, const SearchOutcome& outcome) {
  ExRecord rec;
  rec.value = outcome.optimum;
  rec.status = outcome.status == "exact" ? "exact" : "lower";
  rec.witness = outcome.witness;
  table.upsert(ExKey{family, variant, n}, rec);
}

}  // namespace turan
