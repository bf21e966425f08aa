#pragma once

#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "turan/hypergraph.hpp"

namespace turan {

using ordered_json = nlohmann::ordered_json;

// Key of one extremal-number row.  variant is "plain" for ex(n, F),
// "star:m" for the m-star variant ex_star(m, n, F), and "zar:m" for the
// semibipartite Zarankiewicz number Z(m, n, .).
struct ExKey {
  std::string family;
  std::string variant = "plain";
  i64 n = 0;

  bool operator<(const ExKey& o) const {
    if (family != o.family) return family < o.family;
    if (variant != o.variant) return variant < o.variant;
    return n < o.n;
  }
  bool operator==(const ExKey& o) const {
    return family == o.family && variant == o.variant && n == o.n;
  }
  std::string str() const { return family + "|" + variant + "|" + std::to_string(n); }
};

struct ExRecord {
  i64 value = 0;
  std::string status = "exact";  // exact | lower | upper
  std::optional<Hypergraph> witness;
};

// Persistent store of computed extremal numbers.  Upserts prefer exact
// records, improve non-exact ones, and refuse contradictions loudly.
class ExTable {
 public:
  const std::map<ExKey, ExRecord>& rows() const { return rows_; }

  std::optional<ExRecord> find(const std::string& family, i64 n,
                               const std::string& variant = "plain") const {
    auto it = rows_.find(ExKey{family, variant, n});
    if (it == rows_.end()) return std::nullopt;
    return it->second;
  }

  void upsert(const ExKey& key, ExRecord rec) {
    check_record(rec);
    auto it = rows_.find(key);
    if (it == rows_.end()) {
      rows_.emplace(key, std::move(rec));
      return;
    }
    ExRecord& old = it->second;
    auto contradiction = [&](const char* what) {
      throw std::logic_error("ex-table: " + std::string(what) + " at " + key.str());
    };
    if (old.status == "exact" && rec.status == "exact") {
      if (old.value != rec.value) contradiction("conflicting exact values");
      if (!old.witness && rec.witness) old.witness = std::move(rec.witness);
    } else if (old.status == "exact") {
      if (rec.status == "lower" && rec.value > old.value) contradiction("lower bound above exact");
      if (rec.status == "upper" && rec.value < old.value) contradiction("upper bound below exact");
    } else if (rec.status == "exact") {
      if (old.status == "lower" && old.value > rec.value) contradiction("exact below known lower");
      if (old.status == "upper" && old.value < rec.value) contradiction("exact above known upper");
      old = std::move(rec);
    } else if (old.status == rec.status) {
      bool improves = old.status == "lower" ? rec.value > old.value : rec.value < old.value;
      if (improves) old = std::move(rec);
    } else {
      contradiction("mixed lower/upper rows for one key are not supported");
    }
  }

  std::size_t size() const { return rows_.size(); }

  static ExTable from_stream(std::istream& in) {
    ExTable table;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos || line[start] == '#') continue;
      ordered_json row = ordered_json::parse(line, nullptr, false);
      if (row.is_discarded()) throw ParseError(lineno, "malformed JSON row");
      try {
        ExKey key{row.at("family").get<std::string>(),
                  row.value("variant", std::string("plain")), row.at("n").get<i64>()};
        ExRecord rec;
        rec.value = row.at("value").get<i64>();
        rec.status = row.at("status").get<std::string>();
        if (row.contains("witness")) rec.witness = from_text(row["witness"].get<std::string>());
        table.upsert(key, std::move(rec));
      } catch (const std::exception& e) {
        throw ParseError(lineno, e.what());
      }
    }
    return table;
  }

  static ExTable load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("ex-table: cannot open " + path);
    return from_stream(in);
  }

  std::string to_string() const {
    std::ostringstream out;
    for (auto& [key, rec] : rows_) {
      ordered_json row;
      row["family"] = key.family;
      row["variant"] = key.variant;
      row["n"] = key.n;
      row["value"] = rec.value;
      row["status"] = rec.status;
      if (rec.witness) row["witness"] = to_text(*rec.witness);
      out << row.dump() << '\n';
    }
    return out.str();
  }

  void save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("ex-table: cannot write " + path);
    out << to_string();
  }

 private:
  static void check_record(const ExRecord& rec) {
    if (rec.status != "exact" && rec.status != "lower" && rec.status != "upper")
      throw std::invalid_argument("ex-table: unknown status " + rec.status);
    if (rec.value < 0) throw std::invalid_argument("ex-table: negative value");
    if (rec.witness && rec.witness->size() != rec.value)
      throw std::invalid_argument("ex-table: witness edge count differs from value");
  }

  std::map<ExKey, ExRecord> rows_;
};

}  // namespace turan
