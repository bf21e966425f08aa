#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "turan/bounds.hpp"
#include "turan/build.hpp"
#include "turan/family.hpp"

using namespace turan;

namespace {

// ex(n, K3) = floor(n^2/4) = balanced bipartite edge count.
ExTable triangle_table(int n_max = 13) {
  ExTable table;
  for (int n = 0; n <= n_max; ++n) {
    table.upsert({"K3", "plain", n}, {turan_number(n, 2), "exact", {}});
    table.upsert({"K3[2]", "plain", n}, {0, "exact", {}});
    table.upsert({"K2", "plain", n}, {0, "exact", {}});
  }
  return table;
}

// Quadrilateral-free maxima for n = 1..13.
const std::vector<i64> kC4Free = {0, 0, 1, 3, 4, 6, 7, 9, 11, 13, 16, 18, 21, 24};

ExTable quad_table() {
  ExTable table;
  for (int n = 0; n < (int)kC4Free.size(); ++n)
    table.upsert({"C4", "plain", n}, {kC4Free[n], "exact", {}});
  return table;
}

bool flag_value(const BoundReport& rep, const std::string& name) {
  for (const auto& p : rep.preconditions)
    if (p.name == name) return p.holds;
  FAIL("missing precondition flag " << name);
  return false;
}

}  // namespace

TEST_SUITE_BEGIN("bounds");

TEST_CASE("clique-join size g1") {
  ExTable table = triangle_table();
  PatternFamily K3 = family_by_name("K3");

  BoundReport rep = g1(table, 13, 1, K3);
  CHECK(rep.ok());
  CHECK(rep.has_exact);
  CHECK(rep.num == 48);  // 78 - 66 + 36
  CHECK(rep.den == 1);
  CHECK(rep.value_floor == 48);
  CHECK(rep.deps_exact);
  CHECK(rep.preconditions_hold());

  // t = 0 degenerates to the plain extremal number
  for (int n = 3; n <= 13; ++n) CHECK(g1(table, n, 0, K3).num == turan_number(n, 2));

  // identity against the explicit construction
  for (int n = 8; n <= 12; ++n)
    for (int t = 1; t <= 2; ++t) {
      Hypergraph host = join(complete(t, 2), turan_graph(n - t, 2));
      CHECK(g1(table, n, t, K3).num == host.size());
    }
}

TEST_CASE("g1 degrades to unresolved on missing rows") {
  ExTable empty;
  PatternFamily K3 = family_by_name("K3");
  BoundReport rep = g1(empty, 13, 1, K3);
  CHECK(rep.status == "unresolved");
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.has_exact);
  REQUIRE(rep.missing.size() == 1);
  CHECK(rep.missing[0] == "K3|plain|12");

  ExTable lower_only;
  lower_only.upsert({"K3", "plain", 12}, {36, "lower", {}});
  BoundReport weak = g1(lower_only, 13, 1, K3);
  CHECK(weak.ok());
  CHECK(weak.num == 48);
  CHECK_FALSE(weak.deps_exact);
}

TEST_CASE("cover-join size g2") {
  ExTable table = triangle_table();
  PatternFamily K3 = family_by_name("K3");

  // blocking number 2, inner family on 3-2+1 = 2 vertices
  BoundReport rep = g2(table, 13, 1, 2, K3);
  CHECK(rep.ok());
  CHECK(rep.num == binom(13, 2) - binom(10, 2));  // inner column is all zero
  for (const auto& p : rep.params)
    if (p.first == "induced") CHECK(p.second == "K3[2]");

  Hypergraph host = join(complete(3, 2), empty_hypergraph(10, 2));
  CHECK(rep.num == host.size());

  CHECK(g2(table, 13, 1, 0, K3).preconditions_hold() == false);
}

TEST_CASE("clique-beside size g3") {
  ExTable table = triangle_table();
  PatternFamily K3 = family_by_name("K3");

  BoundReport rep = g3(table, 13, 1, 3, K3);
  CHECK(rep.num == binom(5, 2) + turan_number(8, 2));  // 10 + 16

  Hypergraph host = disjoint_union(complete(5, 2), turan_graph(8, 2));
  CHECK(rep.num == host.size());

  // m(t+1)-1 < r makes the clique term an empty binomial
  PatternFamily K2 = family_by_name("K2");
  BoundReport tiny = g3(table, 8, 0, 2, K2);
  CHECK(tiny.num == 0);

  CHECK_FALSE(flag_value(g3(table, 13, 1, 2, K3), "m = max pattern order"));
}

TEST_CASE("matching-number graph bound") {
  CHECK(erdos_gallai_bound(6, 1).num == 5);
  CHECK(erdos_gallai_bound(7, 2).num == 11);
  CHECK(erdos_gallai_bound(9, 0).num == 0);
  CHECK(erdos_gallai_bound(25, 2).num == binom(25, 2) - binom(23, 2));  // 47 vs C(5,2)=10
  CHECK(erdos_gallai_bound(5, 2).preconditions_hold() == false);
  CHECK(erdos_gallai_bound(6, 2).num == binom(5, 2));  // clique branch wins: 10 > 9
}

TEST_CASE("complete-bipartite-free bound evaluates exactly on perfect powers") {
  BoundReport rep = kst_bound(16, 2, 2);
  CHECK(rep.has_exact);
  CHECK(rep.num == 40);
  CHECK(rep.den == 1);
  CHECK(rep.margin == 0.0);

  BoundReport zar = zarankiewicz_graph_bound(4, 4, 2, 2);
  CHECK(zar.has_exact);
  CHECK(zar.num == 12);

  // linear case s1 = 1
  BoundReport star = kst_bound(10, 1, 3);
  CHECK(star.has_exact);
  CHECK(star.num == 10);

  BoundReport rough = kst_bound(10, 2, 2);
  CHECK_FALSE(rough.has_exact);
  CHECK(rough.value == doctest::Approx(0.5 * std::pow(10.0, 1.5) + 5.0).epsilon(1e-12));
  CHECK(rough.value_floor == 20);
  CHECK(rough.margin > 0.0);

  CHECK_THROWS_AS(kst_bound(5, 0, 2), std::invalid_argument);
  CHECK_FALSE(flag_value(kst_bound(5, 3, 2), "s1 <= s2"));
}

TEST_CASE("complete-bipartite-free bound dominates exact values") {
  for (int n = 1; n < (int)kC4Free.size(); ++n) {
    BoundReport rep = kst_bound(n, 2, 2);
    CHECK(rep.value * (1 + rep.margin) + 1e-9 >= (double)kC4Free[n]);
  }
}

TEST_CASE("multipartite-free bound r >= 2") {
  // r = 2 agrees with the bipartite form
  for (i64 n : {5, 9, 16, 33}) {
    BoundReport a = erdos_kst_bound(n, {2, 2});
    BoundReport b = kst_bound(n, 2, 2);
    CHECK(a.has_exact == b.has_exact);
    CHECK(a.value == doctest::Approx(b.value).epsilon(1e-12));
  }

  BoundReport rep = erdos_kst_bound(6, {2, 2, 2});
  CHECK_FALSE(rep.has_exact);
  double expect = std::sqrt(2.0) / 3.0 * std::pow(6.0, 3.0 - 0.25) + (1.0 / 3.0) * 15.0;
  CHECK(rep.value == doctest::Approx(expect).epsilon(1e-12));

  // s1 = 1 kills the second term
  BoundReport one = erdos_kst_bound(7, {1, 2, 2});
  CHECK(one.value == doctest::Approx(2.0 / 3.0 * std::pow(7.0, 2.5)).epsilon(1e-12));

  CHECK_THROWS_AS((erdos_kst_bound(5, {2})), std::invalid_argument);
  CHECK_THROWS_AS((erdos_kst_bound(5, {2, 1})), std::invalid_argument);
  CHECK_THROWS_AS((erdos_kst_bound(5, {0, 2})), std::invalid_argument);
}

TEST_CASE("ordered multipartite bounds") {
  CHECK_THROWS_AS((zarankiewicz_hypergraph_bound(4, 5, {2, 2})), std::invalid_argument);

  BoundReport rep = zarankiewicz_hypergraph_bound(4, 5, {1, 1, 2});
  CHECK(rep.has_exact);
  CHECK(rep.num == 10);  // (1/2)*4*5

  BoundReport star = star_turan_bound(3, 8, {1, 2});
  CHECK(star.has_exact);
  CHECK(star.num == 3);
  CHECK(star.den == 2);
  CHECK(flag_value(star, "m <= n"));
  CHECK_FALSE(flag_value(star_turan_bound(9, 8, {1, 2}), "m <= n"));

  // distinguished-set bound is never above the unrestricted count at m = n
  for (i64 n : {4, 6, 8}) {
    BoundReport s = star_turan_bound(n, n, {2, 2, 2});
    BoundReport full = erdos_kst_bound(n, {2, 2, 2});
    CHECK(s.value <= full.value * n);  // coarse shape check: both finite, same scale
  }
}

TEST_CASE("first-interval threshold") {
  CHECK_THROWS_AS(interval1_t_max(3, 0.34, 1.0, 100, 2, 50), std::invalid_argument);
  CHECK_THROWS_AS(interval1_t_max(3, -0.1, 1.0, 100, 2, 50), std::invalid_argument);
  CHECK_THROWS_AS(interval1_t_max(3, 0.1, -1.0, 100, 2, 50), std::invalid_argument);
  CHECK_THROWS_AS(interval1_t_max(0, 0.1, 1.0, 100, 2, 50), std::invalid_argument);
  CHECK_THROWS_AS(interval1_t_max(3, 0.1, 1.0, 100, 1, 50), std::invalid_argument);
  CHECK_THROWS_AS(interval1_t_max(3, 0.1, 1.0, 1, 3, 50), std::invalid_argument);

  // c2 = 0 collapses the window
  BoundReport zero = interval1_t_max(4, 0.0, 0.0, 100, 2, 500);
  CHECK(zero.value_floor == 0);
  CHECK_FALSE(flag_value(zero, "c2 > 0"));

  // degree branch active: delta = 1/16, min(10, 1000/512)
  BoundReport rep = interval1_t_max(4, 0.0, 1.0, 1001, 2, 640000);
  CHECK(rep.value == doctest::Approx(1000.0 / 512.0).epsilon(1e-12));
  CHECK(rep.value_floor == 1);

  // extremal-ratio branch active
  BoundReport other = interval1_t_max(4, 0.0, 1.0, 1001, 2, 6400);
  CHECK(other.value == doctest::Approx(6400.0 / (16.0 * 4 * 1000)).epsilon(1e-12));
  CHECK(other.value_floor == 0);

  ExTable table = triangle_table();
  PatternFamily K3 = family_by_name("K3");
  BoundReport alias = interval1_bound(table, 13, 1, K3);
  CHECK(alias.formula == "interval1-bound");
  CHECK(alias.num == g1(table, 13, 1, K3).num);
}

TEST_CASE("second-interval bound") {
  ExTable table = quad_table();

  BoundReport rep = interval2_bound(table, 13, 1, 2, 2, "C4");
  CHECK(rep.ok());
  CHECK(rep.num == binom(13, 2) - binom(10, 2) + 16);  // 78 - 45 + ex(10)

  CHECK(interval2_bound(table, 12, 2, 2, 2, "C4").num == 66 - 21 + 9);

  // shrinking the tail all the way to the pattern order
  BoundReport tail = interval2_bound(table, 13, 4, 2, 2, "C4");
  CHECK(tail.num == binom(13, 2) - binom(4, 2) + 4);

  BoundReport missing = interval2_bound(ExTable{}, 20, 3, 2, 2, "K2,3[4]");
  CHECK(missing.status == "unresolved");
  REQUIRE(missing.missing.size() == 1);
  CHECK(missing.missing[0] == "K2,3[4]|plain|13");
}

TEST_CASE("second-interval windows are empty at desk scale") {
  ExTable table = quad_table();

  RangeReport range = interval2_t_range(table, 13, {2, 2}, "C4");
  CHECK(range.ok());
  CHECK_FALSE(range.nonempty());
  CHECK(range.t_min > range.t_max);
  CHECK(range.hi < 1.0);

  RangeReport graph = interval2_graph_t_range(table, 13, 2, 2, "C4");
  CHECK(graph.ok());
  CHECK_FALSE(graph.nonempty());
  CHECK(graph.lo >= std::sqrt(32.0 * 2 * 4 * 13) * (1 - 1e-9));

  RangeReport missing = interval2_t_range(ExTable{}, 13, {2, 2}, "C4");
  CHECK(missing.status == "unresolved");

  CHECK_THROWS_AS(interval2_graph_t_range(table, 13, 1, 2, "C4"), std::invalid_argument);
  CHECK_THROWS_AS((interval2_t_range(table, 13, {1, 2}, "C4")), std::invalid_argument);
}

TEST_CASE("third-interval bounds") {
  ExTable table = quad_table();

  // distinguished set empty: no residual term at all
  BoundReport full = interval3_bound(table, 12, 3, {2, 2}, "C4");
  CHECK(full.ok());
  CHECK(full.num == binom(15, 2));

  ExTable star = quad_table();
  star.upsert({"4*C4", "star:4", 12}, {37, "lower", {}});
  BoundReport partial = interval3_bound(star, 12, 2, {2, 2}, "C4");
  CHECK(partial.ok());
  CHECK(partial.num == binom(11, 2) + 37);
  CHECK_FALSE(partial.deps_exact);

  BoundReport missing = interval3_bound(table, 12, 2, {2, 2}, "C4");
  CHECK(missing.status == "unresolved");
  REQUIRE(missing.missing.size() == 1);
  CHECK(missing.missing[0] == "4*C4|star:4|12");

  BoundReport graph = interval3_graph_bound(table, 24, 5, 2, 2, "C4");
  CHECK(graph.ok());
  CHECK(graph.num == binom(23, 2) + 0 + 2 * 4 * 24);

  CHECK_THROWS_AS(interval3_graph_bound(table, 24, 5, 1, 2, "C4"), std::invalid_argument);
}

TEST_CASE("third-interval windows") {
  RangeReport range = interval3_t_range(24, {2, 2});
  CHECK(range.t_max == 6);
  CHECK(range.t_min == 6);
  CHECK(range.nonempty());
  CHECK(range.contains(6));
  CHECK_FALSE(range.contains(5));

  RangeReport tight = interval3_graph_t_range(24, 2, 2);
  CHECK(tight.t_max == 6);
  CHECK(tight.t_min == 6);

  RangeReport off = interval3_graph_t_range(26, 2, 2);
  CHECK(off.t_max == 6);
  CHECK_FALSE(off.nonempty());

  // larger hosts open the window up: lo = 1040 - 4160/2080 exactly
  RangeReport wide = interval3_graph_t_range(4160, 2, 2);
  CHECK(wide.t_max == 1040);
  CHECK(wide.t_min == 1038);
  CHECK(wide.nonempty());
}

TEST_CASE("tiling min-degree thresholds") {
  BoundReport tri = lu_szekely_threshold(complete(3, 2));
  double expect = 1.0 - 1.0 / (std::exp(1.0) * (2 + 1 + 4.0 * 3 / 3));
  CHECK(tri.value == doctest::Approx(expect).epsilon(1e-12));
  CHECK(tri.value > 0.0);
  CHECK(tri.value < 1.0);

  BoundReport edge = lu_szekely_threshold(complete(2, 2));
  CHECK(edge.value == doctest::Approx(1.0 - 1.0 / (3 * std::exp(1.0))).epsilon(1e-12));

  BoundReport triple = lu_szekely_threshold(complete(3, 3));
  CHECK(triple.value == doctest::Approx(1.0 - 1.0 / (4 * std::exp(1.0))).epsilon(1e-12));

  BoundReport special = lu_szekely_specialized({1, 1, 2});
  CHECK(special.value == doctest::Approx(1.0 - 1.0 / (36 * std::exp(1.0))).epsilon(1e-12));

  // the multipartite shortcut is weaker (larger) than the general threshold
  BoundReport general = lu_szekely_threshold(complete_multipartite({1, 1, 2}).base);
  CHECK(special.value >= general.value);

  CHECK_THROWS_AS(lu_szekely_threshold(empty_hypergraph(4, 2)), std::invalid_argument);
}

TEST_CASE("degree-peel and density-transfer bounds") {
  CHECK(trivial_maxdeg_bound(10, 3, 0, 7, 5).num == 5);
  CHECK(trivial_maxdeg_bound(10, 3, 1, 4, 5).num == 17);
  CHECK_FALSE(flag_value(trivial_maxdeg_bound(10, 4, 3, 1, 0), "m*t <= n"));

  BoundReport ratio = turan_ratio_lower(10, 5, 6);
  CHECK(ratio.num == 3);
  CHECK(ratio.den == 5);
  CHECK(turan_ratio_lower(7, 7, 9).num == 0);
  CHECK_THROWS_AS(turan_ratio_lower(5, 0, 1), std::invalid_argument);

  // transfer really is a lower bound on the quadrilateral-free density
  for (int m = 4; m <= 13; ++m)
    for (int n = m; n <= 13; ++n) {
      BoundReport rep = turan_ratio_lower(n, m, kC4Free[m]);
      CHECK((double)kC4Free[n] / n + 1e-12 >= rep.value);
    }
}

TEST_CASE("legacy matching thresholds") {
  CHECK(legacy_thresholds(399, 2).first.num == 0);
  CHECK(legacy_thresholds(400, 2).first.num == 1);
  CHECK(legacy_thresholds(1599, 2).first.num == 1);
  CHECK(legacy_thresholds(1600, 2).first.num == 2);

  // clique threshold first becomes positive at n = 14 for l = 2
  CHECK(legacy_thresholds(13, 2).second.num == 0);
  CHECK(legacy_thresholds(14, 2).second.num == 1);
  CHECK(legacy_thresholds(1, 3).second.num == 0);  // negative fraction clamps
  CHECK_THROWS_AS(legacy_thresholds(10, 0), std::invalid_argument);
}

TEST_CASE("low-intersection cover count matches its construction") {
  for (i64 n : {6, 9})
    for (int r : {2, 3})
      for (int i = 1; i <= r - 1; ++i)
        for (i64 tau : {1, 2})
          for (i64 t : {0, 1, 2}) {
            i64 k = (t + 1) * tau - 1;
            if (k < 1 || k > n) continue;
            BoundReport rep = i_independent_lower(n, t, tau, r, i);
            CHECK(rep.num == b_construction(n, k, r, i).size());
          }
  CHECK_THROWS_AS(i_independent_lower(9, 1, 2, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(i_independent_lower(9, 1, 2, 1, 1), std::invalid_argument);
}

TEST_CASE("inequality facts hold on sweeps") {
  auto checks = binomial_facts();
  REQUIRE(checks.size() == 5);
  for (const auto& chk : checks) {
    CAPTURE(chk.fact);
    CAPTURE(chk.counterexample);
    CHECK(chk.pass);
    CHECK(chk.cases > 0);
  }
  CHECK(checks[0].fact == "binom-shift-two-sided");
  CHECK(checks[1].fact == "binom-drop-within-e");
  CHECK(checks[2].fact == "pair-count-split");
  CHECK(checks[3].fact == "reciprocal-power-linear");
  CHECK(checks[4].fact == "root-below-secant");
}

TEST_CASE("table-column monotonicity") {
  FactCheck tri = ex_shift_monotonicity(triangle_table(), "K3", 2);
  CHECK(tri.pass);
  CHECK(tri.cases == 13);

  FactCheck quad = ex_shift_monotonicity(quad_table(), "C4", 2);
  CHECK(quad.pass);
  CHECK(quad.cases == 13);

  // a fabricated jump is caught
  ExTable bad;
  bad.upsert({"bad", "plain", 5}, {0, "exact", {}});
  bad.upsert({"bad", "plain", 6}, {10, "exact", {}});
  FactCheck broken = ex_shift_monotonicity(bad, "bad", 2);
  CHECK_FALSE(broken.pass);
  CHECK(broken.counterexample == "n=6");
}

TEST_SUITE_END();
