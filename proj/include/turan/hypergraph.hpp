#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "turan/binom.hpp"
#include "turan/bitset.hpp"

namespace turan {

using Edge = std::vector<int>;  // strictly increasing vertex indices

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// r-uniform hypergraph on vertex set {0..n-1}.  Edges are strictly
// increasing r-tuples, stored in lexicographic order without duplicates.
// Derived indices (vertex -> incident edge ids, plus r = 2 adjacency
// bitsets) are rebuilt on construction; treat instances as immutable.
class Hypergraph {
 public:
  Hypergraph() = default;

  Hypergraph(int n, int r, std::vector<Edge> edges) : n_(n), r_(r), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("hypergraph: negative vertex count");
    if (r_ < 1) throw std::invalid_argument("hypergraph: uniformity must be >= 1");
    for (auto& e : edges_) {
      if (static_cast<int>(e.size()) != r_)
        throw std::invalid_argument("hypergraph: edge arity != uniformity");
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] >= n_) throw std::invalid_argument("hypergraph: vertex out of range");
        if (i > 0 && e[i - 1] >= e[i])
          throw std::invalid_argument("hypergraph: edge not strictly increasing");
      }
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i)
      if (edges_[i - 1] == edges_[i]) throw std::invalid_argument("hypergraph: duplicate edge");
    build_index();
  }

  int n() const { return n_; }
  int r() const { return r_; }
  i64 size() const { return static_cast<i64>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }

  int degree(int v) const { return static_cast<int>(incident_[v].size()); }
  const std::vector<int>& incident(int v) const { return incident_[v]; }

  // r = 2 only: bitset of neighbors of v.
  const Bitset& adjacency(int v) const { return adj_[v]; }

  bool has_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  bool operator==(const Hypergraph& o) const {
    return n_ == o.n_ && r_ == o.r_ && edges_ == o.edges_;
  }

 private:
  void build_index() {
    incident_.assign(n_, {});
    for (std::size_t i = 0; i < edges_.size(); ++i)
      for (int v : edges_[i]) incident_[v].push_back(static_cast<int>(i));
    if (r_ == 2) {
      adj_.assign(n_, Bitset(n_));
      for (auto& e : edges_) {
        adj_[e[0]].set(e[1]);
        adj_[e[1]].set(e[0]);
      }
    }
  }

  int n_ = 0;
  int r_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incident_;
  std::vector<Bitset> adj_;
};

inline Hypergraph empty_hypergraph(int n, int r) { return Hypergraph(n, r, {}); }

// Pattern with an ordered r-partition W_1..W_r; every edge of the base must
// take exactly one vertex from each part.  Part sizes are kept as given
// (the conventional sorted view is available via sorted_sizes()).
struct PartitionedPattern {
  Hypergraph base;
  std::vector<std::vector<int>> parts;

  PartitionedPattern(Hypergraph base_, std::vector<std::vector<int>> parts_)
      : base(std::move(base_)), parts(std::move(parts_)) {
    if (static_cast<int>(parts.size()) != base.r())
      throw std::invalid_argument("partitioned pattern: need exactly r parts");
    std::vector<int> owner(base.n(), -1);
    int covered = 0;
    for (std::size_t p = 0; p < parts.size(); ++p) {
      if (parts[p].empty()) throw std::invalid_argument("partitioned pattern: empty part");
      for (int v : parts[p]) {
        if (v < 0 || v >= base.n() || owner[v] != -1)
          throw std::invalid_argument("partitioned pattern: parts must partition the vertex set");
        owner[v] = static_cast<int>(p);
        ++covered;
      }
    }
    if (covered != base.n())
      throw std::invalid_argument("partitioned pattern: parts must partition the vertex set");
    for (auto& e : base.edges()) {
      std::vector<int> seen(parts.size(), 0);
      for (int v : e) seen[owner[v]]++;
      for (int c : seen)
        if (c != 1) throw std::invalid_argument("partitioned pattern: edge not transversal");
    }
  }

  std::vector<int> sizes() const {
    std::vector<int> s;
    for (auto& p : parts) s.push_back(static_cast<int>(p.size()));
    return s;
  }
  std::vector<int> sorted_sizes() const {
    auto s = sizes();
    std::sort(s.begin(), s.end());
    return s;
  }
};

// Host split into a distinguished side V1 and a bulk side V2; every edge
// meets V1 in exactly one vertex and V2 in r-1 vertices.
struct SemibipartiteHost {
  Hypergraph host;
  std::vector<int> v1, v2;

  SemibipartiteHost(Hypergraph host_, std::vector<int> v1_, std::vector<int> v2_)
      : host(std::move(host_)), v1(std::move(v1_)), v2(std::move(v2_)) {
    std::vector<int> side(host.n(), -1);
    for (int v : v1) {
      if (v < 0 || v >= host.n() || side[v] != -1)
        throw std::invalid_argument("semibipartite: sides must partition the vertex set");
      side[v] = 1;
    }
    for (int v : v2) {
      if (v < 0 || v >= host.n() || side[v] != -1)
        throw std::invalid_argument("semibipartite: sides must partition the vertex set");
      side[v] = 2;
    }
    for (int v = 0; v < host.n(); ++v)
      if (side[v] == -1)
        throw std::invalid_argument("semibipartite: sides must partition the vertex set");
    for (auto& e : host.edges()) {
      int in1 = 0;
      for (int v : e)
        if (side[v] == 1) ++in1;
      if (in1 != 1)
        throw std::invalid_argument("semibipartite: each edge must meet the first side once");
    }
  }
};

// ---- text form: "r n m" header then m edge lines, '#' starts a comment ----

inline std::string to_text(const Hypergraph& h) {
  std::ostringstream out;
  out << h.r() << ' ' << h.n() << ' ' << h.size() << '\n';
  for (auto& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  return out.str();
}

inline Hypergraph from_stream(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_data_line = [&](std::string& target) -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      std::size_t start = line.find_first_not_of(" \t\r");
      if (start == std::string::npos || line[start] == '#') continue;
      target = line;
      return true;
    }
    return false;
  };

  std::string header;
  if (!next_data_line(header)) throw ParseError(lineno, "missing header");
  std::istringstream hs(header);
  long long r, n, m;
  if (!(hs >> r >> n >> m)) throw ParseError(lineno, "header must be: r n m");
  std::string junk;
  if (hs >> junk) throw ParseError(lineno, "trailing tokens after header");
  if (r < 1 || n < 0 || m < 0) throw ParseError(lineno, "header values out of range");

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    std::string data;
    if (!next_data_line(data)) throw ParseError(lineno, "expected edge line");
    std::istringstream es(data);
    Edge e;
    long long v;
    while (es >> v) e.push_back(static_cast<int>(v));
    if (!es.eof()) throw ParseError(lineno, "malformed vertex index");
    if (static_cast<long long>(e.size()) != r) throw ParseError(lineno, "edge arity mismatch");
    edges.push_back(std::move(e));
  }
  try {
    return Hypergraph(static_cast<int>(n), static_cast<int>(r), std::move(edges));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(lineno, ex.what());
  }
}

inline Hypergraph from_text(const std::string& text) {
  std::istringstream in(text);
  return from_stream(in);
}

}  // namespace turan
