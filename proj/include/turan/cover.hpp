#pragma once

#include <optional>
#include <stdexcept>

#include "turan/hypergraph.hpp"

namespace turan {

// Minimum size of a vertex set meeting every edge; 0 for an edgeless graph.
inline int covering_number(const Hypergraph& f) {
  if (f.size() == 0) return 0;
  for (int k = 1; k <= f.n(); ++k) {
    bool found = !for_each_subset(f.n(), k, [&](const std::vector<int>& s) {
      std::vector<bool> in(f.n(), false);
      for (int v : s) in[v] = true;
      for (auto& e : f.edges()) {
        bool hit = false;
        for (int v : e)
          if (in[v]) {
            hit = true;
            break;
          }
        if (!hit) return true;  // keep scanning
      }
      return false;  // cover found, stop
    });
    if (found) return k;
  }
  return f.n();  // unreachable: the full vertex set covers everything
}

// Minimum size of a cover S with |S intersect e| <= i for every edge
// ("i-independent").  May not exist; absence is surfaced as nullopt.
// i must lie in [1, r-1].
inline std::optional<int> i_independent_cover(const Hypergraph& f, int i) {
  if (i < 1 || i > f.r() - 1)
    throw std::invalid_argument("i_independent_cover: need 1 <= i <= r - 1");
  if (f.size() == 0) return 0;
  for (int k = 1; k <= f.n(); ++k) {
    bool found = !for_each_subset(f.n(), k, [&](const std::vector<int>& s) {
      std::vector<bool> in(f.n(), false);
      for (int v : s) in[v] = true;
      for (auto& e : f.edges()) {
        int hit = 0;
        for (int v : e)
          if (in[v]) ++hit;
        if (hit < 1 || hit > i) return true;  // keep scanning
      }
      return false;  // valid i-independent cover, stop
    });
    if (found) return k;
  }
  return std::nullopt;
}

}  // namespace turan
