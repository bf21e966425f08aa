#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "turan/build.hpp"
#include "turan/ex_table.hpp"

using namespace turan;

TEST_SUITE_BEGIN("ex_table");

TEST_CASE("insert and find") {
  ExTable table;
  table.upsert({"K3", "plain", 5}, {6, "exact", {}});
  table.upsert({"K3", "plain", 6}, {9, "exact", {}});
  table.upsert({"C4", "star:3", 8}, {7, "lower", {}});
  table.upsert({"C4", "zar:4", 8}, {11, "upper", {}});

  REQUIRE(table.size() == 4);
  auto rec = table.find("K3", 5);
  REQUIRE(rec.has_value());
  CHECK(rec->value == 6);
  CHECK(rec->status == "exact");
  CHECK(table.find("K3", 7) == std::nullopt);
  CHECK(table.find("K3", 5, "star:3") == std::nullopt);
  CHECK(table.find("C4", 8, "star:3")->value == 7);
  CHECK(table.find("C4", 8, "zar:4")->status == "upper");
}

TEST_CASE("upsert prefers exact and improves bounds") {
  ExTable table;
  ExKey key{"C4", "plain", 9};

  table.upsert(key, {10, "lower", {}});
  table.upsert(key, {12, "lower", {}});
  CHECK(table.find("C4", 9)->value == 12);
  table.upsert(key, {11, "lower", {}});  // weaker, ignored
  CHECK(table.find("C4", 9)->value == 12);

  table.upsert(key, {13, "exact", {}});
  CHECK(table.find("C4", 9)->status == "exact");
  table.upsert(key, {12, "lower", {}});  // consistent, keeps exact
  CHECK(table.find("C4", 9)->value == 13);
  CHECK(table.find("C4", 9)->status == "exact");

  ExKey up{"C4", "plain", 10};
  table.upsert(up, {30, "upper", {}});
  table.upsert(up, {25, "upper", {}});
  table.upsert(up, {28, "upper", {}});
  CHECK(table.find("C4", 10)->value == 25);
}

TEST_CASE("upsert rejects contradictions") {
  ExTable table;
  ExKey key{"K3", "plain", 6};
  table.upsert(key, {9, "exact", {}});
  CHECK_THROWS_AS(table.upsert(key, {8, "exact", {}}), std::logic_error);
  CHECK_THROWS_AS(table.upsert(key, {10, "lower", {}}), std::logic_error);
  CHECK_THROWS_AS(table.upsert(key, {8, "upper", {}}), std::logic_error);

  ExKey other{"K3", "plain", 7};
  table.upsert(other, {12, "lower", {}});
  CHECK_THROWS_AS(table.upsert(other, {11, "exact", {}}), std::logic_error);
  CHECK_THROWS_AS(table.upsert(other, {14, "upper", {}}), std::logic_error);

  CHECK_THROWS_AS(table.upsert({"X", "plain", 3}, {1, "guess", {}}), std::invalid_argument);
  CHECK_THROWS_AS(table.upsert({"X", "plain", 3}, {-1, "exact", {}}), std::invalid_argument);
}

TEST_CASE("witness edge count must match the value") {
  ExTable table;
  Hypergraph w = turan_graph(5, 2);  // 6 edges
  table.upsert({"K3", "plain", 5}, {6, "exact", w});
  CHECK(table.find("K3", 5)->witness->size() == 6);
  CHECK_THROWS_AS(table.upsert({"K3", "plain", 6}, ExRecord{7, "exact", w}),
                  std::invalid_argument);
}

TEST_CASE("exact upsert keeps the first witness seen") {
  ExTable table;
  ExKey key{"K3", "plain", 5};
  table.upsert(key, {6, "exact", {}});
  table.upsert(key, {6, "exact", turan_graph(5, 2)});
  REQUIRE(table.find("K3", 5)->witness.has_value());
  table.upsert(key, {6, "exact", complete(4, 2)});  // also 6 edges
  CHECK(table.find("K3", 5)->witness->n() == 5);
}

TEST_CASE("serialization round trip is byte-stable") {
  ExTable table;
  table.upsert({"K3", "plain", 4}, {4, "exact", turan_graph(4, 2)});
  table.upsert({"K3", "plain", 5}, {6, "exact", {}});
  table.upsert({"C4", "plain", 5}, {6, "lower", {}});
  table.upsert({"C4", "star:2", 7}, {5, "upper", {}});

  std::string text = table.to_string();
  std::istringstream in(text);
  ExTable back = ExTable::from_stream(in);
  REQUIRE(back.size() == table.size());
  CHECK(back.to_string() == text);
  CHECK(back.find("K3", 4)->witness.has_value());
  CHECK(back.find("K3", 4)->witness->size() == 4);
  CHECK(back.find("C4", 7, "star:2")->status == "upper");

  // rows are emitted sorted by (family, variant, n)
  CHECK(text.find("\"C4\"") < text.find("\"K3\""));
}

TEST_CASE("parser skips comments and reports line numbers") {
  std::istringstream good(
      "# comment line\n"
      "\n"
      "{\"family\":\"K3\",\"n\":5,\"value\":6,\"status\":\"exact\"}\n"
      "{\"family\":\"C4\",\"variant\":\"star:2\",\"n\":6,\"value\":4,\"status\":\"lower\"}\n");
  ExTable table = ExTable::from_stream(good);
  CHECK(table.size() == 2);
  CHECK(table.find("K3", 5)->value == 6);  // variant defaults to plain
  CHECK(table.find("C4", 6, "star:2")->value == 4);

  std::istringstream bad("{\"family\":\"K3\",\"n\":5,\"value\":6,\"status\":\"exact\"}\nnot json\n");
  try {
    ExTable::from_stream(bad);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }

  std::istringstream missing_field("{\"family\":\"K3\",\"n\":5}\n");
  CHECK_THROWS_AS(ExTable::from_stream(missing_field), ParseError);

  std::istringstream bad_witness(
      "{\"family\":\"K3\",\"n\":5,\"value\":6,\"status\":\"exact\",\"witness\":\"2 5 1\\n0\\n\"}\n");
  CHECK_THROWS_AS(ExTable::from_stream(bad_witness), ParseError);
}

TEST_SUITE_END();
