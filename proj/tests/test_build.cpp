#include <doctest.h>

#include <stdexcept>

#include "turan/build.hpp"

using namespace turan;

TEST_SUITE_BEGIN("build");

TEST_CASE("complete hypergraphs") {
  for (int r = 1; r <= 4; ++r)
    for (int n = 0; n <= 8; ++n) CHECK(complete(n, r).size() == binom(n, r));
  CHECK(complete(2, 3).size() == 0);
  CHECK(complete(3, 3).edges() == std::vector<Edge>{{0, 1, 2}});
}

TEST_CASE("turan_graph") {
  for (int n = 0; n <= 12; ++n)
    for (int l = 1; l <= 5; ++l) CHECK(turan_graph(n, l).size() == turan_number(n, l));
  CHECK_THROWS_AS(turan_graph(5, 0), std::invalid_argument);
  CHECK(turan_graph(4, 2).edges() == std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

TEST_CASE("complete_multipartite") {
  auto p = complete_multipartite({2, 2});
  CHECK(p.base.n() == 4);
  CHECK(p.base.size() == 4);
  CHECK(p.parts == std::vector<std::vector<int>>{{0, 1}, {2, 3}});

  auto q = complete_multipartite({2, 1, 3});
  CHECK(q.base.n() == 6);
  CHECK(q.base.r() == 3);
  CHECK(q.base.size() == 2 * 1 * 3);
  CHECK(q.sorted_sizes() == std::vector<int>{1, 2, 3});
  for (auto& e : q.base.edges()) {
    int a = 0, b = 0, c = 0;
    for (int v : e) {
      a += v < 2;
      b += v == 2;
      c += v > 2;
    }
    CHECK(a == 1);
    CHECK(b == 1);
    CHECK(c == 1);
  }
  CHECK_THROWS_AS(complete_multipartite({}), std::invalid_argument);
  CHECK_THROWS_AS(complete_multipartite({2, 0}), std::invalid_argument);
}

TEST_CASE("join size identity") {
  // |G * H| = C(n,r) - C(n - v(G), r) - C(n - v(H), r) + |G| + |H| is the
  // crossing count plus both edge sets; check directly against the builder.
  for (int r : {2, 3}) {
    Hypergraph g = complete(3, r);
    Hypergraph h = empty_hypergraph(4, r);
    Hypergraph j = join(g, h);
    int n = g.n() + h.n();
    i64 crossing = binom(n, r) - binom(g.n(), r) - binom(h.n(), r);
    CHECK(j.n() == n);
    CHECK(j.size() == g.size() + h.size() + crossing);
  }
  // joining complete with complete gives complete
  CHECK(join(complete(2, 2), complete(3, 2)) == complete(5, 2));
  CHECK_THROWS_AS(join(complete(3, 2), complete(3, 3)), std::invalid_argument);
}

TEST_CASE("join puts G's vertices first") {
  Hypergraph g = empty_hypergraph(1, 2);
  Hypergraph h(2, 2, {{0, 1}});
  Hypergraph j = join(g, h);  // K3 on {0,1,2} with h's edge at {1,2}
  CHECK(j == complete(3, 2));
}

TEST_CASE("disjoint union and copies") {
  Hypergraph k2(2, 2, {{0, 1}});
  Hypergraph u = disjoint_union(k2, k2);
  CHECK(u.n() == 4);
  CHECK(u.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK(disjoint_copies(k2, 3).size() == 3);
  CHECK(disjoint_copies(k2, 3).n() == 6);
  CHECK(family_disjoint_union({k2, complete(3, 2)}).size() == 4);
  CHECK_THROWS_AS(family_disjoint_union({}), std::invalid_argument);
  CHECK_THROWS_AS(disjoint_union(k2, complete(3, 3)), std::invalid_argument);
}

TEST_CASE("suspension preserves edge count and raises uniformity") {
  Hypergraph tri = complete(3, 2);
  Hypergraph hat = suspension(tri);
  CHECK(hat.n() == 4);
  CHECK(hat.r() == 3);
  CHECK(hat.size() == tri.size());
  CHECK(hat.edges() == std::vector<Edge>{{0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  // the shadow of the suspension contains every original edge
  Hypergraph sh = shadow(hat);
  for (auto& e : tri.edges()) CHECK(sh.has_edge(e));
}

TEST_CASE("generalized triangle") {
  CHECK(generalized_triangle(2) == complete(3, 2));
  Hypergraph t3 = generalized_triangle(3);
  CHECK(t3.n() == 5);
  CHECK(t3.r() == 3);
  CHECK(t3.edges() == std::vector<Edge>{{0, 1, 2}, {0, 1, 3}, {2, 3, 4}});
  Hypergraph t4 = generalized_triangle(4);
  CHECK(t4.n() == 7);
  CHECK(t4.edges() == std::vector<Edge>{{0, 1, 2, 3}, {0, 1, 2, 4}, {3, 4, 5, 6}});
  CHECK_THROWS_AS(generalized_triangle(1), std::invalid_argument);
}

TEST_CASE("b_construction counts match the closed form") {
  for (int r : {2, 3}) {
    for (int n = r; n <= 9; ++n)
      for (int m = 0; m <= n; ++m)
        for (int i = 1; i <= r; ++i) {
          i64 expect = 0;
          for (int j = 1; j <= i; ++j) expect += binom(m, j) * binom(n - m, r - j);
          CHECK(b_construction(n, m, r, i).size() == expect);
        }
  }
  CHECK_THROWS_AS(b_construction(5, 6, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(b_construction(5, 2, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(b_construction(5, 2, 2, 3), std::invalid_argument);
}

TEST_CASE("link, neighborhood, shadow") {
  Hypergraph k4 = complete(4, 3);
  Hypergraph lk = link(k4, {0});
  CHECK(lk == complete(3, 2));
  CHECK_THROWS_AS(link(k4, {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(link(k4, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(link(k4, {9}), std::invalid_argument);

  CHECK(neighborhood(k4, {1, 2}) == std::vector<int>{0, 3});
  CHECK_THROWS_AS(neighborhood(k4, {1}), std::invalid_argument);

  Hypergraph one(4, 3, {{0, 2, 3}});
  Hypergraph sh = shadow(one);
  CHECK(sh.r() == 2);
  CHECK(sh.n() == 4);
  CHECK(sh.edges() == std::vector<Edge>{{0, 2}, {0, 3}, {2, 3}});
  CHECK(shadow(complete(5, 3)) == complete(5, 2));
  CHECK_THROWS_AS(shadow(complete(3, 1)), std::invalid_argument);
}

TEST_CASE("induced subgraph") {
  Hypergraph h(5, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});  // 5-cycle
  Hypergraph s = induced_subgraph(h, {0, 1, 2});
  CHECK(s.n() == 3);
  CHECK(s.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(induced_subgraph(h, {}).n() == 0);
  CHECK_THROWS_AS(induced_subgraph(h, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(induced_subgraph(h, {7}), std::invalid_argument);
}

TEST_SUITE_END();
