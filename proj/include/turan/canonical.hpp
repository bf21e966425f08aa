#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

namespace detail {

// One round of colour refinement: each vertex gets (its colour, the sorted
// multiset of colour-tuples of its incident edges).  New colour ids are the
// ranks of the distinct signatures, so class ordering is label-invariant.
inline bool refine_once(const Hypergraph& h, std::vector<int>& color) {
  int n = h.n();
  using Sig = std::pair<int, std::vector<std::vector<int>>>;
  std::vector<Sig> sig(n);
  for (int v = 0; v < n; ++v) {
    std::vector<std::vector<int>> around;
    around.reserve(h.incident(v).size());
    for (int ei : h.incident(v)) {
      std::vector<int> tuple;
      tuple.reserve(h.r());
      for (int u : h.edge(ei)) tuple.push_back(color[u]);
      std::sort(tuple.begin(), tuple.end());
      around.push_back(std::move(tuple));
    }
    std::sort(around.begin(), around.end());
    sig[v] = {color[v], std::move(around)};
  }
  std::map<Sig, int> rank;
  for (int v = 0; v < n; ++v) rank.emplace(sig[v], 0);
  int next = 0;
  for (auto& kv : rank) kv.second = next++;
  bool changed = false;
  for (int v = 0; v < n; ++v) {
    int c = rank[sig[v]];
    if (c != color[v]) changed = true;
    color[v] = c;
  }
  return changed;
}

inline void refine(const Hypergraph& h, std::vector<int>& color) {
  while (refine_once(h, color)) {
  }
}

// Does swapping u and v map the edge set onto itself?
inline bool transposition_is_automorphism(const Hypergraph& h, int u, int v) {
  for (auto e : h.edges()) {
    bool touched = false;
    for (auto& x : e) {
      if (x == u) {
        x = v;
        touched = true;
      } else if (x == v) {
        x = u;
        touched = true;
      }
    }
    if (!touched) continue;
    std::sort(e.begin(), e.end());
    if (!h.has_edge(e)) return false;
  }
  return true;
}

struct CanonSearch {
  const Hypergraph& h;
  std::vector<Edge> best_edges;
  std::vector<int> best_perm;  // original vertex -> canonical position
  bool have_best = false;

  explicit CanonSearch(const Hypergraph& h_) : h(h_) {}

  void leaf(const std::vector<int>& color) {
    std::vector<Edge> edges;
    edges.reserve(h.edges().size());
    for (auto e : h.edges()) {
      for (auto& v : e) v = color[v];
      std::sort(e.begin(), e.end());
      edges.push_back(std::move(e));
    }
    std::sort(edges.begin(), edges.end());
    if (!have_best || edges < best_edges) {
      best_edges = std::move(edges);
      best_perm = color;
      have_best = true;
    }
  }

  void run(std::vector<int> color) {
    refine(h, color);
    int n = h.n();
    // locate the first class with more than one member
    std::vector<int> count(n + 1, 0);
    for (int v = 0; v < n; ++v) count[color[v]]++;
    int target = -1;
    for (int c = 0; c < n; ++c)
      if (count[c] > 1) {
        target = c;
        break;
      }
    if (target < 0) {
      leaf(color);
      return;
    }
    std::vector<int> cell;
    for (int v = 0; v < n; ++v)
      if (color[v] == target) cell.push_back(v);
    // one branch per transposition-equivalence class inside the cell
    std::vector<int> reps;
    for (int v : cell) {
      bool dup = false;
      for (int r : reps)
        if (transposition_is_automorphism(h, r, v)) {
          dup = true;
          break;
        }
      if (!dup) reps.push_back(v);
    }
    for (int w : reps) {
      std::vector<int> child(color);
      for (int v = 0; v < n; ++v) {
        if (child[v] > target) child[v]++;
        else if (child[v] == target && v != w) child[v]++;
      }
      run(std::move(child));
    }
  }
};

}  // namespace detail

// Label-invariant canonical relabelling.  Optional initial colours constrain
// the result: vertices keep the relative order of their colour classes, so
// two coloured hypergraphs get equal forms iff a colour-preserving
// isomorphism exists.
struct CanonicalResult {
  std::vector<int> to_canonical;  // original vertex -> canonical position
  Hypergraph form;
};

inline CanonicalResult canonical_form(const Hypergraph& h, std::vector<int> init_color = {}) {
  if (init_color.empty()) init_color.assign(h.n(), 0);
  if (static_cast<int>(init_color.size()) != h.n())
    throw std::invalid_argument("canonical_form: colour vector size mismatch");
  detail::CanonSearch search(h);
  search.run(std::move(init_color));
  if (!search.have_best) {  // n == 0
    return {{}, Hypergraph(0, h.r(), {})};
  }
  return {search.best_perm, Hypergraph(h.n(), h.r(), search.best_edges)};
}

inline std::string canonical_key(const Hypergraph& h, std::vector<int> init_color = {}) {
  std::string prefix;
  if (!init_color.empty()) {
    std::vector<int> sorted(init_color);
    std::sort(sorted.begin(), sorted.end());
    for (int c : sorted) prefix += std::to_string(c) + ",";
    prefix += "|";
  }
  return prefix + to_text(canonical_form(h, std::move(init_color)).form);
}

inline bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.n() != b.n() || a.r() != b.r() || a.size() != b.size()) return false;
  std::vector<int> da, db;
  for (int v = 0; v < a.n(); ++v) da.push_back(a.degree(v));
  for (int v = 0; v < b.n(); ++v) db.push_back(b.degree(v));
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a).form == canonical_form(b).form;
}

}  // namespace turan
