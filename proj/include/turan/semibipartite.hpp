#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "turan/binom.hpp"
#include "turan/bitset.hpp"
#include "turan/build.hpp"
#include "turan/hypergraph.hpp"
#include "turan/solver.hpp"

namespace turan {

// Constructive ordered-matching passes on semibipartite hosts.  Both entry
// points return whatever disjoint ordered copies they manage to collect and
// report, per named hypothesis, whether the size guarantee applies.

struct MatchingCondition {
  std::string name;
  bool holds = true;
};

struct MatchingOutcome {
  Matching matching;        // pairwise disjoint ordered copies, always valid
  i64 target = 0;           // copy count promised when the hypotheses hold
  bool hypotheses_hold = false;
  bool size_floor_met = false;  // bulk side reaches the configured floor
  bool guaranteed = false;      // hypotheses + floor + target attained
  std::vector<MatchingCondition> conditions;

  int size() const { return static_cast<int>(matching.copies.size()); }
};

// Below this bulk-side size the guarantee flags are advisory only: the
// matching lemmas hold for large hosts and give no explicit threshold.
inline constexpr int kDefaultGuaranteeFloor = 50;

namespace detail {

inline void check_ordered_sizes(const SemibipartiteHost& s, const std::vector<int>& sizes,
                                double alpha) {
  if (static_cast<int>(sizes.size()) != s.host.r())
    throw std::invalid_argument("ordered matching: need one part size per edge slot");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] < 1) throw std::invalid_argument("ordered matching: part sizes must be >= 1");
    if (i > 0 && sizes[i] < sizes[i - 1])
      throw std::invalid_argument("ordered matching: part sizes must be non-decreasing");
  }
  if (!(alpha > 0.0)) throw std::invalid_argument("ordered matching: alpha must be positive");
}

// One greedy sweep: repeatedly take the lexicographically least ordered
// copy whose anchor lies in `anchors` and whose bulk vertices lie in
// `active`, removing every used vertex from both masks.
inline void greedy_sweep(const SemibipartiteHost& s, const PartitionedPattern& p, Bitset& active,
                         const Bitset& anchors, Matching& out) {
  while (true) {
    Bitset stage = active & anchors;
    for (int v : s.v2) stage.set(v);
    stage &= active;
    ContainsResult res = ordered_contains(s, p, &stage);
    if (!res.found) return;
    PlacedCopy copy;
    copy.member = 0;
    copy.map = res.witness;
    copy.image = res.witness;
    std::sort(copy.image.begin(), copy.image.end());
    for (int v : copy.image) active.reset(v);
    out.copies.push_back(std::move(copy));
  }
}

inline bool in_side(const std::vector<int>& side, int v) {
  return std::find(side.begin(), side.end(), v) != side.end();
}

}  // namespace detail

// True iff every copy maps pattern edges to host edges injectively, the
// first pattern part lands in the anchor side and the rest in the bulk
// side, and distinct copies are vertex-disjoint.
inline bool ordered_matching_valid(const SemibipartiteHost& s, const PartitionedPattern& p,
                                   const Matching& matching) {
  Bitset used(s.host.n());
  for (const PlacedCopy& copy : matching.copies) {
    if (static_cast<int>(copy.map.size()) != p.base.n()) return false;
    for (int v : copy.map)
      if (v < 0 || v >= s.host.n()) return false;
    for (std::size_t part = 0; part < p.parts.size(); ++part)
      for (int pv : p.parts[part]) {
        const std::vector<int>& side = part == 0 ? s.v1 : s.v2;
        if (!detail::in_side(side, copy.map[pv])) return false;
      }
    for (const Edge& e : p.base.edges()) {
      Edge image;
      for (int pv : e) image.push_back(copy.map[pv]);
      std::sort(image.begin(), image.end());
      if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
      if (!s.host.has_edge(image)) return false;
    }
    for (int v : copy.map) {
      if (used.test(v)) return false;
      used.set(v);
    }
  }
  return true;
}

// Maximal collection of pairwise disjoint ordered copies of the complete
// multipartite pattern with the given part sizes, grown greedily.  When the
// anchor side is small relative to the bulk side (m <= alpha n / (s - s1))
// and every anchor vertex has degree at least alpha n^{r-1}, a maximal
// collection on a large host cannot stop before floor(m/s1 - 4/alpha)
// copies, so that value is reported as the guarantee target.
inline MatchingOutcome greedy_semibipartite_matching(const SemibipartiteHost& s,
                                                     const std::vector<int>& sizes, double alpha,
                                                     int guarantee_floor = kDefaultGuaranteeFloor) {
  detail::check_ordered_sizes(s, sizes, alpha);
  const int r = s.host.r();
  const double m = static_cast<double>(s.v1.size());
  const double n = static_cast<double>(s.v2.size());
  const int s1 = sizes.front();
  int total = 0;
  for (int sz : sizes) total += sz;

  MatchingOutcome out;
  bool sides_ok = m * (total - s1) <= alpha * n;
  out.conditions.push_back({"anchor side small: m <= alpha n / (s - s1)", sides_ok});
  bool degrees_ok = true;
  const double degree_floor = alpha * std::pow(n, r - 1);
  for (int v : s.v1) degrees_ok = degrees_ok && s.host.degree(v) >= degree_floor;
  out.conditions.push_back({"anchor degrees: d(v) >= alpha n^{r-1}", degrees_ok});
  bool s1_ok = s1 >= 2;
  out.conditions.push_back({"smallest part size at least two", s1_ok});

  PartitionedPattern pattern = complete_multipartite(sizes);
  Bitset active(s.host.n()), anchors(s.host.n());
  for (int v = 0; v < s.host.n(); ++v) active.set(v);
  for (int v : s.v1) anchors.set(v);
  detail::greedy_sweep(s, pattern, active, anchors, out.matching);
  if (!ordered_matching_valid(s, pattern, out.matching))
    throw std::logic_error("greedy matching produced an invalid collection");

  out.target = std::max<i64>(static_cast<i64>(std::floor(m / s1 - 4.0 / alpha)), 0);
  out.hypotheses_hold = sides_ok && degrees_ok && s1_ok;
  out.size_floor_met = s.v2.size() >= static_cast<std::size_t>(guarantee_floor);
  out.guaranteed = out.hypotheses_hold && out.size_floor_met && out.size() >= out.target;
  return out;
}

// Perfect-on-the-anchor-side collection: first a greedy sweep anchored at
// the low-degree vertices, then each leftover low-degree vertex is absorbed
// into a copy together with s1 - 1 near-full-degree partners from L, and a
// final sweep finishes the remaining anchors.  Under the recorded
// hypotheses every stage succeeds and exactly floor(m/s1) copies come back.
inline MatchingOutcome absorption_matching(const SemibipartiteHost& s,
                                           const std::vector<int>& sizes, double alpha,
                                           const std::vector<int>& high_degree,
                                           int guarantee_floor = kDefaultGuaranteeFloor) {
  detail::check_ordered_sizes(s, sizes, alpha);
  const int r = s.host.r();
  const double m = static_cast<double>(s.v1.size());
  const double n = static_cast<double>(s.v2.size());
  const int s1 = sizes.front();
  int total = 0;
  for (int sz : sizes) total += sz;

  Bitset anchor_side(s.host.n());
  for (int v : s.v1) anchor_side.set(v);
  Bitset high(s.host.n());
  for (int v : high_degree) {
    if (v < 0 || v >= s.host.n() || !anchor_side.test(v) || high.test(v))
      throw std::invalid_argument(
          "absorption matching: high-degree set must be distinct anchor vertices");
    high.set(v);
  }

  MatchingOutcome out;
  bool sides_ok = 8.0 * m * (total - s1) <= alpha * n;
  out.conditions.push_back({"anchor side small: m <= alpha n / (8(s - s1))", sides_ok});
  bool degrees_ok = true;
  const double degree_floor = alpha * std::pow(n, r - 1);
  for (int v : s.v1) degrees_ok = degrees_ok && s.host.degree(v) >= degree_floor;
  out.conditions.push_back({"anchor degrees: d(v) >= alpha n^{r-1}", degrees_ok});
  const double near_full =
      static_cast<double>(binom(s.v2.size(), r - 1)) - alpha * std::pow(n, r - 1) / (2.0 * s1);
  bool members_ok = true;
  for (int v : high_degree) members_ok = members_ok && s.host.degree(v) >= near_full;
  out.conditions.push_back({"high-degree set meets the near-full threshold", members_ok});
  bool floor_const = static_cast<double>(high_degree.size()) >= 5.0 * s1 * (s1 - 1) / alpha;
  bool floor_prop = static_cast<double>(high_degree.size()) * s1 >= (s1 - 1) * m;
  out.conditions.push_back({"high-degree count reaches the constant floor", floor_const});
  out.conditions.push_back({"high-degree count reaches the proportional floor", floor_prop});

  PartitionedPattern pattern = complete_multipartite(sizes);
  Bitset active(s.host.n());
  for (int v = 0; v < s.host.n(); ++v) active.set(v);

  // Stage one: sweep with anchors restricted to the low-degree vertices.
  Bitset low_anchors = anchor_side;
  low_anchors.subtract(high);
  detail::greedy_sweep(s, pattern, active, low_anchors, out.matching);

  // Stage two: absorb each uncovered low-degree vertex with s1 - 1 partners.
  std::vector<int> leftovers;
  for (int v : s.v1)
    if (active.test(v) && !high.test(v)) leftovers.push_back(v);
  std::sort(leftovers.begin(), leftovers.end());
  for (int v : leftovers) {
    std::vector<int> partners;
    for (int u = active.next(0); u >= 0 && static_cast<int>(partners.size()) < s1 - 1;
         u = active.next(u + 1))
      if (high.test(u)) partners.push_back(u);
    if (static_cast<int>(partners.size()) < s1 - 1) break;
    Bitset stage = active;
    for (int u : s.v1)
      if (active.test(u)) stage.reset(u);
    stage.set(v);
    for (int u : partners) stage.set(u);
    ContainsResult res = ordered_contains(s, pattern, &stage);
    if (!res.found) continue;
    PlacedCopy copy;
    copy.member = 0;
    copy.map = res.witness;
    copy.image = res.witness;
    std::sort(copy.image.begin(), copy.image.end());
    for (int u : copy.image) active.reset(u);
    out.matching.copies.push_back(std::move(copy));
  }

  // Stage three: sweep the remaining anchors (all high-degree when the
  // hypotheses hold, plus any vertex a failed absorption left behind).
  detail::greedy_sweep(s, pattern, active, anchor_side, out.matching);
  if (!ordered_matching_valid(s, pattern, out.matching))
    throw std::logic_error("absorption matching produced an invalid collection");

  out.target = static_cast<i64>(s.v1.size()) / s1;
  out.hypotheses_hold = sides_ok && degrees_ok && members_ok && (floor_const || floor_prop);
  out.size_floor_met = s.v2.size() >= static_cast<std::size_t>(guarantee_floor);
  out.guaranteed = out.hypotheses_hold && out.size_floor_met && out.size() >= out.target;
  return out;
}

// Convenience overload: the high-degree set is read off the host as every
// anchor vertex within alpha n^{r-1} / (2 s1) of full bulk-side degree.
inline MatchingOutcome absorption_matching(const SemibipartiteHost& s,
                                           const std::vector<int>& sizes, double alpha,
                                           int guarantee_floor = kDefaultGuaranteeFloor) {
  detail::check_ordered_sizes(s, sizes, alpha);
  const int r = s.host.r();
  const double n = static_cast<double>(s.v2.size());
  const int s1 = sizes.front();
  const double near_full =
      static_cast<double>(binom(s.v2.size(), r - 1)) - alpha * std::pow(n, r - 1) / (2.0 * s1);
  std::vector<int> high;
  for (int v : s.v1)
    if (s.host.degree(v) >= near_full) high.push_back(v);
  return absorption_matching(s, sizes, alpha, high, guarantee_floor);
}

}  // namespace turan
