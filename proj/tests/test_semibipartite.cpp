#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "turan/build.hpp"
#include "turan/rng.hpp"
#include "turan/semibipartite.hpp"

using namespace turan;

namespace {

// Anchors are vertices 0..m-1, bulk vertices m..m+n-1.
SemibipartiteHost host_from_edges(int m, int n, std::vector<Edge> edges) {
  std::vector<int> v1(m), v2(n);
  std::iota(v1.begin(), v1.end(), 0);
  std::iota(v2.begin(), v2.end(), m);
  return SemibipartiteHost(Hypergraph(m + n, 2, std::move(edges)), std::move(v1), std::move(v2));
}

// Complete semibipartite graph: every anchor adjacent to every bulk vertex.
SemibipartiteHost complete_host(int m, int n) {
  std::vector<Edge> edges;
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < n; ++b) edges.push_back({a, m + b});
  return host_from_edges(m, n, std::move(edges));
}

// Each anchor gets a uniformly sampled bulk neighborhood of exact size deg.
SemibipartiteHost random_host(int m, int n, int deg, Rng& rng) {
  std::vector<Edge> edges;
  for (int a = 0; a < m; ++a) {
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), m);
    for (int i = n - 1; i > 0; --i)
      std::swap(pool[i], pool[static_cast<int>(rng.below(i + 1))]);
    pool.resize(deg);
    for (int b : pool) edges.push_back({a, b});
  }
  return host_from_edges(m, n, std::move(edges));
}

// Like random_host but with a per-anchor degree list.
SemibipartiteHost planted_host(const std::vector<int>& degs, int n, Rng& rng) {
  int m = static_cast<int>(degs.size());
  std::vector<Edge> edges;
  for (int a = 0; a < m; ++a) {
    std::vector<int> pool(n);
    std::iota(pool.begin(), pool.end(), m);
    for (int i = n - 1; i > 0; --i)
      std::swap(pool[i], pool[static_cast<int>(rng.below(i + 1))]);
    pool.resize(degs[a]);
    for (int b : pool) edges.push_back({a, b});
  }
  return host_from_edges(m, n, std::move(edges));
}

bool condition_named(const MatchingOutcome& out, const std::string& needle, bool expect) {
  for (const auto& c : out.conditions)
    if (c.name.find(needle) != std::string::npos) return c.holds == expect;
  return false;
}

// No further ordered copy fits next to the collected ones.
bool sweep_is_maximal(const SemibipartiteHost& s, const std::vector<int>& sizes,
                      const MatchingOutcome& out) {
  Bitset active(s.host.n());
  for (int v = 0; v < s.host.n(); ++v) active.set(v);
  for (const auto& copy : out.matching.copies)
    for (int v : copy.image) active.reset(v);
  return !ordered_contains(s, complete_multipartite(sizes), &active).found;
}

}  // namespace

TEST_SUITE_BEGIN("semibipartite");

TEST_CASE("complete host sweeps to the anchor cap") {
  SemibipartiteHost s = complete_host(5, 12);
  MatchingOutcome out = greedy_semibipartite_matching(s, {2, 2}, 1.0);
  CHECK(out.size() == 2);  // floor(5/2) anchors pair up
  CHECK(ordered_matching_valid(s, complete_multipartite({2, 2}), out.matching));
  CHECK(out.hypotheses_hold);   // 5*2 <= 12, degrees are full
  CHECK(out.target == 0);       // floor(5/2 - 4) clamps at zero
  CHECK(!out.size_floor_met);   // 12 < default floor
  CHECK(!out.guaranteed);

  MatchingOutcome low_floor = greedy_semibipartite_matching(s, {2, 2}, 1.0, 10);
  CHECK(low_floor.size_floor_met);
  CHECK(low_floor.guaranteed);
  CHECK(sweep_is_maximal(s, {2, 2}, low_floor));
}

TEST_CASE("hypothesis violations keep the matching but drop the guarantee") {
  // Anchor 2 is isolated: the degree condition fails, the sweep still runs.
  std::vector<Edge> edges;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 8; ++b) edges.push_back({a, 3 + b});
  SemibipartiteHost s = host_from_edges(3, 8, std::move(edges));
  MatchingOutcome out = greedy_semibipartite_matching(s, {2, 2}, 0.5, 5);
  CHECK(condition_named(out, "anchor degrees", false));
  CHECK(!out.hypotheses_hold);
  CHECK(!out.guaranteed);
  CHECK(out.size() == 1);
  CHECK(ordered_matching_valid(s, complete_multipartite({2, 2}), out.matching));

  // Too many anchors for the bulk side: the side-size condition fails.
  SemibipartiteHost wide = complete_host(9, 8);
  MatchingOutcome out2 = greedy_semibipartite_matching(wide, {2, 2}, 1.0, 5);
  CHECK(condition_named(out2, "anchor side small", false));
  CHECK(!out2.hypotheses_hold);
  CHECK(out2.size() == 4);
}

TEST_CASE("large random instances meet the near-perfect floor") {
  // Dense instance whose floor is comfortably positive.
  Rng rng(2024);
  SemibipartiteHost s = random_host(30, 200, 170, rng);
  MatchingOutcome out = greedy_semibipartite_matching(s, {2, 2}, 0.8);
  CHECK(out.hypotheses_hold);  // 30*2 <= 0.8*200 and 170 >= 160
  CHECK(out.size_floor_met);
  CHECK(out.target == 10);  // floor(30/2 - 5)
  CHECK(out.size() >= 10);
  CHECK(out.guaranteed);
  CHECK(ordered_matching_valid(s, complete_multipartite({2, 2}), out.matching));
  CHECK(sweep_is_maximal(s, {2, 2}, out));

  // Sparse-floor instance from a fixed seed: floor clamps to zero yet the
  // sweep still finds copies.
  Rng rng2(7);
  SemibipartiteHost s2 = random_host(12, 200, 110, rng2);
  MatchingOutcome out2 = greedy_semibipartite_matching(s2, {2, 2}, 0.5);
  CHECK(out2.hypotheses_hold);
  CHECK(out2.target == 0);
  CHECK(out2.size() >= 1);
  CHECK(out2.guaranteed);

  // Identical inputs give identical witnesses.
  Rng rng3(2024);
  SemibipartiteHost s3 = random_host(30, 200, 170, rng3);
  MatchingOutcome again = greedy_semibipartite_matching(s3, {2, 2}, 0.8);
  REQUIRE(again.size() == out.size());
  for (int i = 0; i < out.size(); ++i) CHECK(again.matching.copies[i].map == out.matching.copies[i].map);
}

TEST_CASE("unbalanced patterns and three-uniform hosts sweep correctly") {
  Rng rng(91);
  SemibipartiteHost s = random_host(24, 220, 200, rng);
  MatchingOutcome out = greedy_semibipartite_matching(s, {2, 3}, 0.8);
  CHECK(out.hypotheses_hold);  // 24*3 <= 0.8*220 and 200 >= 176
  CHECK(out.size() >= out.target);
  CHECK(out.guaranteed);
  CHECK(ordered_matching_valid(s, complete_multipartite({2, 3}), out.matching));

  // r = 3: anchors extend pairs from the bulk side.  Each anchor sees about
  // four fifths of all bulk pairs, clearing the 0.3 n^2 floor at n = 80.
  int m = 6, n = 80;
  std::vector<Edge> edges;
  for (int a = 0; a < m; ++a)
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((a + i + j) % 5 != 0) edges.push_back({a, m + i, m + j});
  std::vector<int> v1(m), v2(n);
  std::iota(v1.begin(), v1.end(), 0);
  std::iota(v2.begin(), v2.end(), m);
  SemibipartiteHost s3(Hypergraph(m + n, 3, std::move(edges)), v1, v2);
  MatchingOutcome out3 = greedy_semibipartite_matching(s3, {2, 2, 2}, 0.3, 20);
  CHECK(out3.hypotheses_hold);  // 6*4 <= 0.3*80 exactly, degrees >= 1920
  CHECK(ordered_matching_valid(s3, complete_multipartite({2, 2, 2}), out3.matching));
  CHECK(out3.size() == 3);  // all six anchors pair up
}

TEST_CASE("absorption covers every anchor on the complete host") {
  SemibipartiteHost s = complete_host(2, 40);
  MatchingOutcome out = absorption_matching(s, {2, 2}, 1.0, 30);
  CHECK(out.target == 1);
  CHECK(out.size() == 1);
  CHECK(condition_named(out, "proportional floor", true));
  CHECK(out.hypotheses_hold);
  CHECK(out.guaranteed);
  CHECK(ordered_matching_valid(s, complete_multipartite({2, 2}), out.matching));

  // Supplying L = V1 explicitly reduces to the greedy case.
  MatchingOutcome explicit_l = absorption_matching(s, {2, 2}, 1.0, {0, 1}, 30);
  CHECK(explicit_l.size() == 1);
  CHECK(explicit_l.hypotheses_hold);
}

TEST_CASE("planted instances recover the full quota") {
  // Seven near-full anchors and five merely dense ones; the proportional
  // branch of the high-degree floor carries the hypotheses.
  Rng rng(5150);
  std::vector<int> degs(12);
  for (int i = 0; i < 7; ++i) degs[i] = 400 - static_cast<int>(rng.below(40));  // >= 350
  for (int i = 7; i < 12; ++i) degs[i] = 220 + static_cast<int>(rng.below(60));
  SemibipartiteHost s = planted_host(degs, 400, rng);
  std::vector<int> high;
  for (int v = 0; v < 7; ++v) high.push_back(v);
  MatchingOutcome out = absorption_matching(s, {2, 2}, 0.5, high);
  CHECK(condition_named(out, "near-full threshold", true));
  CHECK(condition_named(out, "proportional floor", true));
  CHECK(out.hypotheses_hold);
  CHECK(out.target == 6);
  CHECK(out.size() == 6);
  CHECK(out.guaranteed);
  CHECK(ordered_matching_valid(s, complete_multipartite({2, 2}), out.matching));

  // The auto-detected high-degree set finds the same quota.
  MatchingOutcome auto_l = absorption_matching(s, {2, 2}, 0.5);
  CHECK(auto_l.size() == 6);
}

TEST_CASE("low anchors with disjoint neighborhoods need the absorbers") {
  // Three low anchors see pairwise disjoint bulk blocks, so no two of them
  // fit in one copy; each must be absorbed by a near-full partner.
  int n = 600;
  std::vector<Edge> edges;
  for (int a = 0; a < 3; ++a)
    for (int i = 0; i < 190; ++i) edges.push_back({a, 8 + a * 190 + i});
  for (int a = 3; a < 8; ++a)
    for (int i = 0; i < n; ++i) edges.push_back({a, 8 + i});
  SemibipartiteHost s = host_from_edges(8, n, std::move(edges));
  std::vector<int> high = {3, 4, 5, 6, 7};
  MatchingOutcome out = absorption_matching(s, {2, 2}, 0.3, high);
  CHECK(condition_named(out, "constant floor", false));  // needs 33 vertices
  CHECK(condition_named(out, "proportional floor", true));
  CHECK(out.hypotheses_hold);
  CHECK(out.target == 4);
  CHECK(out.size() == 4);
  CHECK(out.guaranteed);
  CHECK(ordered_matching_valid(s, complete_multipartite({2, 2}), out.matching));

  // Every copy that contains a low anchor also contains a high partner.
  for (const auto& copy : out.matching.copies) {
    int lows = 0, highs = 0;
    for (int v : copy.image) {
      if (v < 3) ++lows;
      if (v >= 3 && v < 8) ++highs;
    }
    CHECK(lows <= 1);
    if (lows == 1) CHECK(highs == 1);
  }
}

TEST_CASE("either branch of the high-degree floor suffices") {
  // Constant branch only: 22 absorbers clear 5 s1 (s1-1) / alpha = 20 but
  // fall short of the proportional floor (s1-1) m / s1 = 25.
  Rng rng(33);
  std::vector<int> degs(50, 0);
  for (int i = 0; i < 22; ++i) degs[i] = 1600;
  for (int i = 22; i < 50; ++i) degs[i] = 1000;
  SemibipartiteHost s = planted_host(degs, 1600, rng);
  std::vector<int> high(22);
  std::iota(high.begin(), high.end(), 0);
  MatchingOutcome out = absorption_matching(s, {2, 2}, 0.5, high);
  CHECK(condition_named(out, "constant floor", true));
  CHECK(condition_named(out, "proportional floor", false));
  CHECK(out.hypotheses_hold);
  CHECK(out.target == 25);
  CHECK(out.size() == 25);
  CHECK(out.guaranteed);

  // Neither branch: a three-vertex pool fails both floors.
  MatchingOutcome none = absorption_matching(s, {2, 2}, 0.5, {0, 1, 2});
  CHECK(condition_named(none, "constant floor", false));
  CHECK(condition_named(none, "proportional floor", false));
  CHECK(!none.hypotheses_hold);
  CHECK(ordered_matching_valid(s, complete_multipartite({2, 2}), none.matching));
}

TEST_CASE("malformed requests are rejected") {
  SemibipartiteHost s = complete_host(4, 10);
  CHECK_THROWS_AS(greedy_semibipartite_matching(s, {2, 2, 2}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(greedy_semibipartite_matching(s, {3, 2}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(greedy_semibipartite_matching(s, {0, 2}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(greedy_semibipartite_matching(s, {2, 2}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(absorption_matching(s, {2, 2}, 1.0, std::vector<int>{4}),
                  std::invalid_argument);  // not an anchor
  CHECK_THROWS_AS(absorption_matching(s, {2, 2}, 1.0, std::vector<int>{0, 0}),
                  std::invalid_argument);  // duplicate
}

TEST_CASE("the validity checker rejects corrupted collections") {
  SemibipartiteHost s = complete_host(4, 10);
  PartitionedPattern p = complete_multipartite({2, 2});
  MatchingOutcome out = greedy_semibipartite_matching(s, {2, 2}, 1.0, 5);
  REQUIRE(out.size() == 2);
  REQUIRE(ordered_matching_valid(s, p, out.matching));

  Matching overlap = out.matching;
  overlap.copies[1] = overlap.copies[0];
  CHECK(!ordered_matching_valid(s, p, overlap));

  Matching wrong_side = out.matching;
  std::swap(wrong_side.copies[0].map[0], wrong_side.copies[0].map[2]);
  CHECK(!ordered_matching_valid(s, p, wrong_side));

  Matching out_of_range = out.matching;
  out_of_range.copies[0].map[3] = s.host.n();
  CHECK(!ordered_matching_valid(s, p, out_of_range));
}

TEST_SUITE_END();
