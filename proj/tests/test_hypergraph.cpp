#include <doctest.h>

#include <stdexcept>

#include "turan/hypergraph.hpp"

using namespace turan;

TEST_SUITE_BEGIN("hypergraph");

TEST_CASE("construction validates and indexes") {
  Hypergraph h(4, 2, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(h.n() == 4);
  CHECK(h.r() == 2);
  CHECK(h.size() == 3);
  // edges stored in lex order regardless of input order
  CHECK(h.edge(0) == Edge{0, 1});
  CHECK(h.edge(1) == Edge{0, 2});
  CHECK(h.edge(2) == Edge{1, 2});
  CHECK(h.degree(0) == 2);
  CHECK(h.degree(3) == 0);
  CHECK(h.has_edge({0, 2}));
  CHECK(!h.has_edge({0, 3}));
  CHECK(h.adjacency(0).test(1));
  CHECK(!h.adjacency(0).test(3));

  // handshake: sum of degrees equals r * |edges|
  int degsum = 0;
  for (int v = 0; v < h.n(); ++v) degsum += h.degree(v);
  CHECK(degsum == h.r() * h.size());
}

TEST_CASE("construction rejects malformed input") {
  CHECK_THROWS_AS(Hypergraph(3, 2, {{0, 1, 2}}), std::invalid_argument);  // arity
  CHECK_THROWS_AS(Hypergraph(3, 2, {{1, 0}}), std::invalid_argument);     // not increasing
  CHECK_THROWS_AS(Hypergraph(3, 2, {{0, 0}}), std::invalid_argument);     // repeat inside edge
  CHECK_THROWS_AS(Hypergraph(3, 2, {{0, 3}}), std::invalid_argument);     // out of range
  CHECK_THROWS_AS(Hypergraph(3, 2, {{0, 1}, {0, 1}}), std::invalid_argument);  // duplicate
  CHECK_THROWS_AS(Hypergraph(3, 0, {}), std::invalid_argument);           // uniformity
  CHECK_THROWS_AS(Hypergraph(-1, 2, {}), std::invalid_argument);
}

TEST_CASE("empty hypergraph is first-class") {
  Hypergraph h = empty_hypergraph(5, 3);
  CHECK(h.n() == 5);
  CHECK(h.r() == 3);
  CHECK(h.size() == 0);
  Hypergraph z = empty_hypergraph(0, 2);
  CHECK(z.n() == 0);
}

TEST_CASE("partitioned pattern validates transversality") {
  Hypergraph k22(4, 2, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  PartitionedPattern p(k22, {{0, 1}, {2, 3}});
  CHECK(p.sizes() == std::vector<int>{2, 2});
  CHECK(p.sorted_sizes() == std::vector<int>{2, 2});

  Hypergraph tri(3, 2, {{0, 1}, {0, 2}, {1, 2}});
  CHECK_THROWS_AS(PartitionedPattern(tri, {{0, 1}, {2}}), std::invalid_argument);
  CHECK_THROWS_AS(PartitionedPattern(k22, {{0}, {1, 2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(PartitionedPattern(k22, {{0, 1, 2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(PartitionedPattern(k22, {{0, 1}, {2}}), std::invalid_argument);  // not a partition
}

TEST_CASE("semibipartite host validates the edge split") {
  Hypergraph h(5, 3, {{0, 3, 4}, {1, 3, 4}});
  SemibipartiteHost s(h, {0, 1, 2}, {3, 4});
  CHECK(s.v1.size() == 3);

  Hypergraph bad(5, 3, {{0, 1, 3}});  // two vertices on the first side
  CHECK_THROWS_AS(SemibipartiteHost(bad, {0, 1, 2}, {3, 4}), std::invalid_argument);
  Hypergraph bad2(5, 3, {{2, 3, 4}});
  CHECK_THROWS_AS(SemibipartiteHost(bad2, {0, 1}, {2, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(SemibipartiteHost(h, {0, 1}, {3, 4}), std::invalid_argument);  // misses 2
}

TEST_CASE("text round-trip is byte-exact") {
  Hypergraph h(5, 3, {{0, 1, 4}, {0, 2, 3}, {1, 2, 4}});
  std::string text = to_text(h);
  CHECK(text == "3 5 3\n0 1 4\n0 2 3\n1 2 4\n");
  Hypergraph back = from_text(text);
  CHECK(back == h);
  CHECK(to_text(back) == text);

  Hypergraph e = empty_hypergraph(4, 2);
  CHECK(to_text(e) == "2 4 0\n");
  CHECK(from_text(to_text(e)) == e);
}

TEST_CASE("text parser skips comments and reports line numbers") {
  Hypergraph h = from_text("# header comment\n  # indented comment\n2 3 1\n# mid\n0 2\n");
  CHECK(h.n() == 3);
  CHECK(h.size() == 1);
  CHECK(h.edge(0) == Edge{0, 2});

  CHECK_THROWS_AS(from_text(""), ParseError);
  CHECK_THROWS_AS(from_text("2 3\n"), ParseError);
  CHECK_THROWS_AS(from_text("2 3 2\n0 1\n"), ParseError);      // missing edge line
  CHECK_THROWS_AS(from_text("2 3 1\n0 1 2\n"), ParseError);    // arity
  CHECK_THROWS_AS(from_text("2 3 1\n0 x\n"), ParseError);      // bad token
  CHECK_THROWS_AS(from_text("2 3 1\n1 0\n"), ParseError);      // not increasing
  try {
    from_text("2 3 1\n# c\n0 x\n");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
  }
}

TEST_SUITE_END();
