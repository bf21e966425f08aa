#pragma once

#include <fstream>
#include <regex>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "turan/build.hpp"
#include "turan/canonical.hpp"
#include "turan/hypergraph.hpp"

namespace turan {

// Non-empty list of same-uniformity patterns, pairwise non-isomorphic
// (isomorphic duplicates are dropped on construction, keeping the first).
struct PatternFamily {
  std::string name;
  std::vector<Hypergraph> members;

  int r() const { return members.front().r(); }
  int max_vertices() const {
    int m = 0;
    for (auto& f : members) m = std::max(m, f.n());
    return m;
  }
};

inline PatternFamily make_family(std::string name, std::vector<Hypergraph> members) {
  if (members.empty()) throw std::invalid_argument("family: needs at least one member");
  int r = members.front().r();
  std::vector<Hypergraph> kept;
  std::set<std::string> seen;
  for (auto& f : members) {
    if (f.r() != r) throw std::invalid_argument("family: mixed uniformities");
    if (seen.insert(canonical_key(f)).second) kept.push_back(std::move(f));
  }
  return PatternFamily{std::move(name), std::move(kept)};
}

inline PatternFamily single_family(const Hypergraph& f, std::string name) {
  return make_family(std::move(name), {f});
}

// All induced subgraphs on exactly s vertices of any member, up to
// isomorphism.  Members smaller than s contribute nothing.
inline PatternFamily induced_family(const PatternFamily& base, int s, std::string name = "") {
  if (s < 0) throw std::invalid_argument("induced_family: need s >= 0");
  if (name.empty()) name = base.name + "[" + std::to_string(s) + "]";
  std::vector<Hypergraph> out;
  std::set<std::string> seen;
  for (auto& f : base.members) {
    if (f.n() < s) continue;
    for_each_subset(f.n(), s, [&](const std::vector<int>& sub) {
      Hypergraph g = induced_subgraph(f, sub);
      if (seen.insert(canonical_key(g)).second) out.push_back(std::move(g));
      return true;
    });
  }
  if (out.empty())
    throw std::invalid_argument("induced_family: no member has " + std::to_string(s) +
                                " vertices");
  return PatternFamily{std::move(name), std::move(out)};
}

// ---- name registry ----------------------------------------------------
// Grammar (first match wins):
//   K<k>r<r>        complete r-uniform K_k^r
//   K<s1>,<s2>,...  complete multipartite graph / r-partite r-graph
//   K<k>            complete graph
//   C<k>            cycle on k >= 3 vertices
//   P<k>            path on k >= 1 vertices
//   T<r>            generalized triangle
//   hat:<name>      suspension of <name>
//   <k>*<name>      k vertex-disjoint copies of <name>
//   anything else   path to a file in the text format
// Family names additionally allow a trailing [s] for the induced family.

inline Hypergraph cycle_graph(int k) {
  if (k < 3) throw std::invalid_argument("cycle: need >= 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, k - 1});
  return Hypergraph(k, 2, std::move(edges));
}

inline Hypergraph path_graph(int k) {
  if (k < 1) throw std::invalid_argument("path: need >= 1 vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
  return Hypergraph(k, 2, std::move(edges));
}

inline Hypergraph pattern_by_name(const std::string& name) {
  static const std::regex complete_r_re(R"(^K(\d+)r(\d+)$)");
  static const std::regex multipartite_re(R"(^K(\d+(?:,\d+)+)$)");
  static const std::regex complete_re(R"(^K(\d+)$)");
  static const std::regex cycle_re(R"(^C(\d+)$)");
  static const std::regex path_re(R"(^P(\d+)$)");
  static const std::regex gtriangle_re(R"(^T(\d+)$)");
  static const std::regex copies_re(R"(^(\d+)\*(.+)$)");
  std::smatch m;
  if (std::regex_match(name, m, complete_r_re))
    return complete(std::stoi(m[1]), std::stoi(m[2]));
  if (std::regex_match(name, m, multipartite_re)) {
    std::vector<int> sizes;
    std::string list = m[1];
    std::size_t pos = 0;
    while (pos < list.size()) {
      std::size_t comma = list.find(',', pos);
      if (comma == std::string::npos) comma = list.size();
      sizes.push_back(std::stoi(list.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    return complete_multipartite(sizes).base;
  }
  if (std::regex_match(name, m, complete_re)) return complete(std::stoi(m[1]), 2);
  if (std::regex_match(name, m, cycle_re)) return cycle_graph(std::stoi(m[1]));
  if (std::regex_match(name, m, path_re)) return path_graph(std::stoi(m[1]));
  if (std::regex_match(name, m, gtriangle_re)) return generalized_triangle(std::stoi(m[1]));
  if (name.rfind("hat:", 0) == 0) return suspension(pattern_by_name(name.substr(4)));
  if (std::regex_match(name, m, copies_re))
    return disjoint_copies(pattern_by_name(m[2]), std::stoi(m[1]));
  std::ifstream in(name);
  if (in) return from_stream(in);
  throw std::invalid_argument("unknown pattern name: " + name);
}

inline PatternFamily family_by_name(const std::string& name) {
  static const std::regex induced_re(R"(^(.*)\[(\d+)\]$)");
  std::smatch m;
  if (std::regex_match(name, m, induced_re))
    return induced_family(family_by_name(m[1]), std::stoi(m[2]));
  return single_family(pattern_by_name(name), name);
}

}  // namespace turan
