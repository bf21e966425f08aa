#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "turan/hypergraph.hpp"

namespace turan {

// Complete r-uniform hypergraph K_n^r (empty edge set when n < r).
inline Hypergraph complete(int n, int r) {
  std::vector<Edge> edges;
  for_each_subset(n, r, [&](const Edge& e) {
    edges.push_back(e);
    return true;
  });
  return Hypergraph(n, r, std::move(edges));
}

// Balanced complete l-partite graph T(n, l) with part sizes as equal as
// possible; the first n mod l parts get the extra vertex.  Vertices are
// assigned to parts in contiguous blocks.
inline Hypergraph turan_graph(int n, int l) {
  if (l <= 0) throw std::invalid_argument("turan_graph: need l >= 1");
  std::vector<int> part(n);
  int q = l > 0 ? n / l : 0, rem = n % l, v = 0;
  for (int p = 0; p < l && v < n; ++p) {
    int sz = q + (p < rem ? 1 : 0);
    for (int i = 0; i < sz; ++i) part[v++] = p;
  }
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (part[a] != part[b]) edges.push_back({a, b});
  return Hypergraph(n, 2, std::move(edges));
}

// Complete r-partite r-uniform pattern K^r_{s1..sr}: parts are contiguous
// blocks in the given order, edges are all transversals.
inline PartitionedPattern complete_multipartite(const std::vector<int>& sizes) {
  int r = static_cast<int>(sizes.size());
  if (r < 1) throw std::invalid_argument("complete_multipartite: need >= 1 part");
  for (int s : sizes)
    if (s < 1) throw std::invalid_argument("complete_multipartite: part sizes must be >= 1");
  std::vector<std::vector<int>> parts(r);
  int v = 0;
  for (int p = 0; p < r; ++p)
    for (int i = 0; i < sizes[p]; ++i) parts[p].push_back(v++);
  int n = v;
  std::vector<Edge> edges;
  std::vector<int> pick(r, 0);
  while (true) {
    Edge e;
    for (int p = 0; p < r; ++p) e.push_back(parts[p][pick[p]]);
    std::sort(e.begin(), e.end());
    edges.push_back(std::move(e));
    int p = r - 1;
    while (p >= 0 && pick[p] == sizes[p] - 1) pick[p--] = 0;
    if (p < 0) break;
    ++pick[p];
  }
  return PartitionedPattern(Hypergraph(n, r, std::move(edges)), std::move(parts));
}

// Join: edges of G, edges of H, plus every r-set meeting both sides.
// G's vertices come first, H's are shifted by G's vertex count.
inline Hypergraph join(const Hypergraph& g, const Hypergraph& h) {
  if (g.r() != h.r()) throw std::invalid_argument("join: uniformity mismatch");
  int r = g.r(), gn = g.n(), n = gn + h.n();
  std::vector<Edge> edges = g.edges();
  for (auto e : h.edges()) {
    for (auto& v : e) v += gn;
    edges.push_back(std::move(e));
  }
  // crossing edges: at least one vertex on each side
  for_each_subset(n, r, [&](const Edge& e) {
    bool in_g = e.front() < gn, in_h = e.back() >= gn;
    if (in_g && in_h) edges.push_back(e);
    return true;
  });
  return Hypergraph(n, r, std::move(edges));
}

// Disjoint union; G's vertices first.
inline Hypergraph disjoint_union(const Hypergraph& g, const Hypergraph& h) {
  if (g.r() != h.r()) throw std::invalid_argument("disjoint_union: uniformity mismatch");
  int gn = g.n();
  std::vector<Edge> edges = g.edges();
  for (auto e : h.edges()) {
    for (auto& v : e) v += gn;
    edges.push_back(std::move(e));
  }
  return Hypergraph(gn + h.n(), g.r(), std::move(edges));
}

inline Hypergraph family_disjoint_union(const std::vector<Hypergraph>& parts) {
  if (parts.empty()) throw std::invalid_argument("family_disjoint_union: empty list");
  Hypergraph acc = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) acc = disjoint_union(acc, parts[i]);
  return acc;
}

// k vertex-disjoint copies of F.
inline Hypergraph disjoint_copies(const Hypergraph& f, int k) {
  if (k < 1) throw std::invalid_argument("disjoint_copies: need k >= 1");
  return family_disjoint_union(std::vector<Hypergraph>(k, f));
}

// Suspension: add one apex vertex (index v(F)) to every edge, raising the
// uniformity by one.  Edge count is preserved.
inline Hypergraph suspension(const Hypergraph& f) {
  int apex = f.n();
  std::vector<Edge> edges;
  for (auto e : f.edges()) {
    e.push_back(apex);
    edges.push_back(std::move(e));
  }
  return Hypergraph(f.n() + 1, f.r() + 1, std::move(edges));
}

// Generalized triangle on 2r-1 vertices: two edges sharing an (r-1)-set,
// plus the edge formed by the two private vertices and the rest.
inline Hypergraph generalized_triangle(int r) {
  if (r < 2) throw std::invalid_argument("generalized_triangle: need r >= 2");
  Edge core, tail;
  for (int i = 0; i < r - 1; ++i) core.push_back(i);
  for (int i = r + 1; i <= 2 * r - 2; ++i) tail.push_back(i);
  Edge e1 = core, e2 = core, e3 = {r - 1, r};
  e1.push_back(r - 1);
  e2.push_back(r);
  e3.insert(e3.end(), tail.begin(), tail.end());
  return Hypergraph(2 * r - 1, r, {e1, e2, e3});
}

// All r-sets e of {0..n-1} with 1 <= |e intersect {0..m-1}| <= i.
inline Hypergraph b_construction(int n, int m, int r, int i) {
  if (m < 0 || m > n) throw std::invalid_argument("b_construction: need 0 <= m <= n");
  if (i < 1 || i > r) throw std::invalid_argument("b_construction: need 1 <= i <= r");
  std::vector<Edge> edges;
  for_each_subset(n, r, [&](const Edge& e) {
    int hit = 0;
    for (int v : e)
      if (v < m) ++hit;
    if (hit >= 1 && hit <= i) edges.push_back(e);
    return true;
  });
  return Hypergraph(n, r, std::move(edges));
}

// Link of a vertex set S (|S| < r): edges containing S, with S removed and
// the remaining vertices relabeled densely in increasing order.
inline Hypergraph link(const Hypergraph& h, const std::vector<int>& s) {
  if (static_cast<int>(s.size()) >= h.r())
    throw std::invalid_argument("link: |S| must be smaller than the uniformity");
  std::vector<bool> in_s(h.n(), false);
  for (int v : s) {
    if (v < 0 || v >= h.n()) throw std::invalid_argument("link: vertex out of range");
    if (in_s[v]) throw std::invalid_argument("link: repeated vertex in S");
    in_s[v] = true;
  }
  std::vector<int> relabel(h.n(), -1);
  int nn = 0;
  for (int v = 0; v < h.n(); ++v)
    if (!in_s[v]) relabel[v] = nn++;
  std::set<Edge> edges;
  for (auto& e : h.edges()) {
    int hit = 0;
    for (int v : e)
      if (in_s[v]) ++hit;
    if (hit != static_cast<int>(s.size())) continue;
    Edge rest;
    for (int v : e)
      if (!in_s[v]) rest.push_back(relabel[v]);
    edges.insert(std::move(rest));
  }
  return Hypergraph(nn, h.r() - static_cast<int>(s.size()),
                    std::vector<Edge>(edges.begin(), edges.end()));
}

// Vertices v with T + {v} an edge, for |T| = r - 1.
inline std::vector<int> neighborhood(const Hypergraph& h, const std::vector<int>& t) {
  if (static_cast<int>(t.size()) != h.r() - 1)
    throw std::invalid_argument("neighborhood: need |T| = r - 1");
  std::vector<int> out;
  std::vector<bool> in_t(h.n(), false);
  for (int v : t) {
    if (v < 0 || v >= h.n()) throw std::invalid_argument("neighborhood: vertex out of range");
    in_t[v] = true;
  }
  for (int v = 0; v < h.n(); ++v) {
    if (in_t[v]) continue;
    Edge e = t;
    e.push_back(v);
    std::sort(e.begin(), e.end());
    if (h.has_edge(e)) out.push_back(v);
  }
  return out;
}

// Shadow: all (r-1)-subsets of edges (r >= 2), on the same vertex set.
inline Hypergraph shadow(const Hypergraph& h) {
  if (h.r() < 2) throw std::invalid_argument("shadow: need uniformity >= 2");
  std::set<Edge> out;
  for (auto& e : h.edges()) {
    for (std::size_t skip = 0; skip < e.size(); ++skip) {
      Edge sub;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (i != skip) sub.push_back(e[i]);
      out.insert(std::move(sub));
    }
  }
  return Hypergraph(h.n(), h.r() - 1, std::vector<Edge>(out.begin(), out.end()));
}

// Subhypergraph induced by the vertex set S (relabeled densely, order kept).
inline Hypergraph induced_subgraph(const Hypergraph& h, const std::vector<int>& s) {
  std::vector<int> relabel(h.n(), -1);
  int nn = 0;
  std::vector<int> sorted = s;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    int v = sorted[i];
    if (v < 0 || v >= h.n()) throw std::invalid_argument("induced_subgraph: vertex out of range");
    if (relabel[v] != -1) throw std::invalid_argument("induced_subgraph: repeated vertex");
    relabel[v] = nn++;
  }
  std::vector<Edge> edges;
  for (auto& e : h.edges()) {
    Edge mapped;
    for (int v : e) {
      if (relabel[v] == -1) break;
      mapped.push_back(relabel[v]);
    }
    if (static_cast<int>(mapped.size()) == h.r()) {
      std::sort(mapped.begin(), mapped.end());
      edges.push_back(std::move(mapped));
    }
  }
  return Hypergraph(nn, h.r(), std::move(edges));
}

}  // namespace turan
