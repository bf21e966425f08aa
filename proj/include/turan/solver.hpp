#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "turan/bitset.hpp"
#include "turan/family.hpp"
#include "turan/hypergraph.hpp"

namespace turan {

namespace detail {

// Pattern vertex placement order: start at a maximum-degree vertex, then
// repeatedly take the vertex most attached to the placed set (ties broken
// by degree, then index).  Keeps the partial maps edge-constrained early.
inline std::vector<int> placement_order(const Hypergraph& pattern) {
  int s = pattern.n();
  std::vector<int> order;
  std::vector<bool> placed(s, false);
  for (int step = 0; step < s; ++step) {
    int best = -1, best_att = -1, best_deg = -1;
    for (int v = 0; v < s; ++v) {
      if (placed[v]) continue;
      int att = 0;
      for (int ei : pattern.incident(v)) {
        for (int u : pattern.edge(ei))
          if (placed[u]) {
            ++att;
            break;
          }
      }
      int deg = pattern.degree(v);
      if (att > best_att || (att == best_att && deg > best_deg)) {
        best = v;
        best_att = att;
        best_deg = deg;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }
  return order;
}

struct EmbedOptions {
  const Bitset* active = nullptr;                 // usable host vertices
  const std::vector<Bitset>* allowed = nullptr;   // per-pattern-vertex host filter
  int required = -1;                              // host vertex the image must use
};

// Enumerate injective edge-preserving maps pattern -> host in a fixed
// deterministic order; f(map) returning false stops the walk.  Returns
// false iff stopped early.  For an edgeless pattern the map is forced to
// be increasing along the placement order, so each image appears once.
template <class F>
inline bool for_each_embedding(const Hypergraph& host, const Hypergraph& pattern, F&& f,
                               const EmbedOptions& opt = {}) {
  if (pattern.r() != host.r() && pattern.size() > 0)
    throw std::invalid_argument("embedding: uniformity mismatch");
  int s = pattern.n();
  if (s > host.n()) return true;
  std::vector<int> order = placement_order(pattern);
  std::vector<int> pos(s, -1);  // pattern vertex -> placement step
  for (int i = 0; i < s; ++i) pos[order[i]] = i;
  bool edgeless = pattern.size() == 0;

  // pattern edges become checkable at the step their last vertex is placed
  std::vector<std::vector<int>> check_at(s);
  for (int ei = 0; ei < static_cast<int>(pattern.size()); ++ei) {
    int last = -1;
    for (int v : pattern.edge(ei)) last = std::max(last, pos[v]);
    check_at[last].push_back(ei);
  }

  std::vector<int> map(s, -1);
  std::vector<bool> used(host.n(), false);
  Edge image(host.r());

  auto step = [&](auto&& self, int depth) -> bool {
    if (depth == s) {
      if (opt.required >= 0 && !used[opt.required]) return true;
      return f(static_cast<const std::vector<int>&>(map));
    }
    int pv = order[depth];
    bool force_required =
        opt.required >= 0 && !used[opt.required] && depth == s - 1;
    int lo = edgeless && depth > 0 ? map[order[depth - 1]] + 1 : 0;
    for (int u = lo; u < host.n(); ++u) {
      if (force_required && u != opt.required) continue;
      if (used[u]) continue;
      if (opt.active && !opt.active->test(u)) continue;
      if (opt.allowed && !(*opt.allowed)[pv].test(u)) continue;
      if (host.degree(u) < pattern.degree(pv)) continue;
      map[pv] = u;
      bool ok = true;
      for (int ei : check_at[depth]) {
        int k = 0;
        for (int v : pattern.edge(ei)) image[k++] = map[v];
        std::sort(image.begin(), image.end());
        if (!host.has_edge(image)) {
          ok = false;
          break;
        }
      }
      if (ok) {
        used[u] = true;
        bool cont = self(self, depth + 1);
        used[u] = false;
        if (!cont) {
          map[pv] = -1;
          return false;
        }
      }
      map[pv] = -1;
    }
    return true;
  };
  return step(step, 0);
}

}  // namespace detail

struct ContainsResult {
  bool found = false;
  std::vector<int> witness;  // pattern vertex -> host vertex
};

// Subgraph containment (not induced): edges of the pattern must map to
// edges of the host.  An edgeless pattern on s vertices is contained iff
// the host has at least s usable vertices.
inline ContainsResult contains(const Hypergraph& host, const Hypergraph& pattern,
                               const Bitset* active = nullptr) {
  ContainsResult res;
  detail::EmbedOptions opt;
  opt.active = active;
  detail::for_each_embedding(host, pattern,
                             [&](const std::vector<int>& map) {
                               res.found = true;
                               res.witness = map;
                               return false;
                             },
                             opt);
  return res;
}

struct FamilyContainsResult {
  bool found = false;
  int member = -1;
  std::vector<int> witness;
};

inline FamilyContainsResult contains_family(const Hypergraph& host, const PatternFamily& fam,
                                            const Bitset* active = nullptr) {
  if (fam.members.empty()) throw std::invalid_argument("contains_family: empty family");
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    ContainsResult r = contains(host, fam.members[i], active);
    if (r.found) return {true, static_cast<int>(i), std::move(r.witness)};
  }
  return {};
}

struct PlacedCopy {
  int member = 0;            // index into the family
  std::vector<int> map;      // pattern vertex -> host vertex
  std::vector<int> image;    // sorted host image
};

struct Matching {
  std::vector<PlacedCopy> copies;
};

struct NuResult {
  int value = 0;
  bool cap_hit = false;
  Matching matching;
};

namespace detail {

// All distinct copy images of any family member inside `active` that use
// vertex v; ordered by (image, member).  One witness map per image.
inline std::vector<PlacedCopy> copies_through(const Hypergraph& host, const PatternFamily& fam,
                                              const Bitset& active, int v) {
  std::map<std::vector<int>, PlacedCopy> by_image;
  for (std::size_t mi = 0; mi < fam.members.size(); ++mi) {
    EmbedOptions opt;
    opt.active = &active;
    opt.required = v;
    for_each_embedding(host, fam.members[mi],
                       [&](const std::vector<int>& map) {
                         std::vector<int> image(map);
                         std::sort(image.begin(), image.end());
                         auto it = by_image.find(image);
                         if (it == by_image.end()) {
                           PlacedCopy c{static_cast<int>(mi), map, image};
                           by_image.emplace(std::move(image), std::move(c));
                         }
                         return true;
                       },
                       opt);
  }
  std::vector<PlacedCopy> out;
  out.reserve(by_image.size());
  for (auto& kv : by_image) out.push_back(kv.second);
  return out;
}

struct NuSearch {
  const Hypergraph& host;
  const PatternFamily& fam;
  int cap;
  int min_pattern_vertices;
  int best = -1;
  Matching best_matching;
  std::vector<PlacedCopy> stack;

  NuSearch(const Hypergraph& h, const PatternFamily& f, int cap_)
      : host(h), fam(f), cap(cap_) {
    min_pattern_vertices = fam.members.front().n();
    for (auto& m : fam.members) min_pattern_vertices = std::min(min_pattern_vertices, m.n());
  }

  void record(int count) {
    if (count > best) {
      best = count;
      best_matching.copies = stack;
    }
  }

  void run(Bitset active, int count) {
    record(count);
    if (best >= cap) return;
    if (count + active.count() / std::max(1, min_pattern_vertices) <= best) return;
    int v = active.next(0);
    if (v < 0) return;
    for (auto& copy : copies_through(host, fam, active, v)) {
      Bitset child = active;
      for (int u : copy.image) child.reset(u);
      stack.push_back(copy);
      run(std::move(child), count + 1);
      stack.pop_back();
      if (best >= cap) return;
    }
    // discard v entirely
    active.reset(v);
    run(std::move(active), count);
  }
};

}  // namespace detail

// Maximum number of pairwise vertex-disjoint copies of family members,
// truncated at cap (cap < 0 means unbounded).  cap_hit reports that the
// cap was reached, i.e. the true value may be larger than `value`.
inline NuResult matching_number(const Hypergraph& host, const PatternFamily& fam, int cap = -1,
                                const Bitset* active = nullptr) {
  if (fam.members.empty()) throw std::invalid_argument("matching_number: empty family");
  int trivial = host.n();  // no packing can exceed n / min vertices
  int effective_cap = cap < 0 ? trivial + 1 : cap;
  detail::NuSearch search(host, fam, effective_cap);
  Bitset act = active ? *active : Bitset(host.n());
  if (!active)
    for (int v = 0; v < host.n(); ++v) act.set(v);
  search.run(std::move(act), 0);
  NuResult res;
  res.value = search.best;
  res.cap_hit = cap >= 0 && search.best >= cap;
  res.matching = std::move(search.best_matching);
  return res;
}

// H contains no t+1 disjoint copies of any members  <=>  nu(H) <= t.
inline bool is_free(const Hypergraph& host, const PatternFamily& fam, int t) {
  return matching_number(host, fam, t + 1).value <= t;
}

inline bool is_free(const Hypergraph& host, const Hypergraph& pattern, int t) {
  return is_free(host, single_family(pattern, "pattern"), t);
}

// Ordered containment in a semibipartite host: part 1 of the pattern goes
// into the distinguished side, all other parts into the bulk side.
inline ContainsResult ordered_contains(const SemibipartiteHost& s, const PartitionedPattern& p,
                                       const Bitset* active = nullptr) {
  if (p.base.r() != s.host.r()) throw std::invalid_argument("ordered_contains: uniformity mismatch");
  std::vector<Bitset> allowed(p.base.n(), Bitset(s.host.n()));
  Bitset side1(s.host.n()), side2(s.host.n());
  for (int v : s.v1) side1.set(v);
  for (int v : s.v2) side2.set(v);
  for (std::size_t part = 0; part < p.parts.size(); ++part)
    for (int pv : p.parts[part]) allowed[pv] = part == 0 ? side1 : side2;
  detail::EmbedOptions opt;
  opt.active = active;
  opt.allowed = &allowed;
  ContainsResult res;
  detail::for_each_embedding(s.host, p.base,
                             [&](const std::vector<int>& map) {
                               res.found = true;
                               res.witness = map;
                               return false;
                             },
                             opt);
  return res;
}

struct RainbowResult {
  bool found = false;
  std::vector<std::vector<int>> images;  // images[i] = sorted vertex set used in host i
  std::vector<std::vector<int>> maps;    // maps[i] = pattern -> vertex map in host i
};

// Disjoint vertex sets S_0..S_{k-1}, one per host, with a copy of the
// pattern inside host_i[S_i].  All hosts must share the vertex count.
inline RainbowResult rainbow_matching(const std::vector<Hypergraph>& hosts,
                                      const Hypergraph& pattern) {
  if (hosts.empty()) throw std::invalid_argument("rainbow_matching: no hosts");
  int n = hosts[0].n();
  for (auto& h : hosts)
    if (h.n() != n || h.r() != pattern.r())
      throw std::invalid_argument("rainbow_matching: hosts must share vertex count and uniformity");
  RainbowResult res;
  res.images.resize(hosts.size());
  res.maps.resize(hosts.size());
  Bitset active(n);
  for (int v = 0; v < n; ++v) active.set(v);

  auto step = [&](auto&& self, std::size_t i, Bitset act) -> bool {
    if (i == hosts.size()) return true;
    detail::EmbedOptions opt;
    opt.active = &act;
    bool done = !detail::for_each_embedding(
        hosts[i], pattern,
        [&](const std::vector<int>& map) {
          std::vector<int> image(map);
          std::sort(image.begin(), image.end());
          Bitset child = act;
          for (int u : image) child.reset(u);
          if (self(self, i + 1, std::move(child))) {
            res.images[i] = image;
            res.maps[i] = map;
            return false;  // success: unwind
          }
          return true;
        },
        opt);
    return done;
  };
  res.found = step(step, 0, std::move(active));
  if (!res.found) {
    res.images.clear();
    res.maps.clear();
  }
  return res;
}

}  // namespace turan
