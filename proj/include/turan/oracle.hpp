#pragma once

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <vector>

#include "turan/bitset.hpp"
#include "turan/family.hpp"
#include "turan/solver.hpp"

namespace turan {

// All distinct copy images (vertex bitsets) of any family member in the
// host, in ascending bitset order.  Reference implementation used to
// cross-check the branching solver and the subset-scan search.
inline std::vector<Bitset> all_copy_images(const Hypergraph& host, const PatternFamily& fam) {
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Bitset> out;
  for (auto& member : fam.members) {
    detail::for_each_embedding(host, member, [&](const std::vector<int>& map) {
      Bitset image(host.n());
      for (int u : map) image.set(u);
      if (seen.insert(image.words()).second) out.push_back(std::move(image));
      return true;
    });
  }
  std::sort(out.begin(), out.end(),
            [](const Bitset& a, const Bitset& b) { return a.words() < b.words(); });
  return out;
}

// Maximum set packing over the explicit copy-image list: plain
// include/exclude recursion over indices, no vertex branching.  Serves as
// the independent oracle for matching_number.
inline int packing_oracle(const Hypergraph& host, const PatternFamily& fam) {
  std::vector<Bitset> images = all_copy_images(host, fam);
  int best = 0;
  Bitset used(host.n());
  auto rec = [&](auto&& self, std::size_t from, int count) -> void {
    best = std::max(best, count);
    for (std::size_t i = from; i < images.size(); ++i) {
      if (images[i].intersects(used)) continue;
      used |= images[i];
      self(self, i + 1, count + 1);
      used.subtract(images[i]);
    }
  };
  rec(rec, 0, 0);
  return best;
}

// Edge subsets of the host shell that realize each copy of a member.
// Masks are bitsets over the shell's edge indices, deduplicated.
inline std::vector<Bitset> copy_edge_masks(const Hypergraph& shell, const PatternFamily& fam) {
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<Bitset> out;
  int m = static_cast<int>(shell.size());
  for (auto& member : fam.members) {
    if (member.size() == 0)
      throw std::invalid_argument("copy_edge_masks: edgeless member admits no free host");
    detail::for_each_embedding(shell, member, [&](const std::vector<int>& map) {
      Bitset mask(m);
      Edge image(shell.r());
      for (auto& e : member.edges()) {
        int k = 0;
        for (int v : e) image[k++] = map[v];
        std::sort(image.begin(), image.end());
        int idx = static_cast<int>(std::lower_bound(shell.edges().begin(), shell.edges().end(),
                                                    image) -
                                   shell.edges().begin());
        mask.set(idx);
      }
      if (seen.insert(mask.words()).second) out.push_back(std::move(mask));
      return true;
    });
  }
  std::sort(out.begin(), out.end(),
            [](const Bitset& a, const Bitset& b) { return a.words() < b.words(); });
  return out;
}

struct ScanResult {
  i64 optimum = 0;
  Hypergraph witness;
};

// Exhaustive maximum over every edge subset of the shell avoiding all
// forbidden masks.  Shell must have at most 30 edges.  The witness is the
// first subset (in ascending mask order) attaining the optimum.
inline ScanResult all_subsets_max(const Hypergraph& shell, const std::vector<Bitset>& forbidden) {
  int m = static_cast<int>(shell.size());
  if (m > 30) throw std::invalid_argument("all_subsets_max: shell too large");
  std::vector<std::uint32_t> bad;
  bad.reserve(forbidden.size());
  for (auto& f : forbidden) {
    std::uint32_t w = f.words().empty() ? 0 : static_cast<std::uint32_t>(f.words()[0]);
    if (f.count() == 0) throw std::invalid_argument("all_subsets_max: empty forbidden mask");
    bad.push_back(w);
  }
  int best = -1;
  std::uint32_t best_mask = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    bool ok = true;
    for (std::uint32_t b : bad)
      if ((mask & b) == b) {
        ok = false;
        break;
      }
    if (!ok) continue;
    int c = std::popcount(mask);
    if (c > best) {
      best = c;
      best_mask = mask;
    }
  }
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i)
    if (best_mask >> i & 1) edges.push_back(shell.edge(i));
  return {best, Hypergraph(shell.n(), shell.r(), std::move(edges))};
}

// Unions of exactly k pairwise vertex-disjoint copy masks; the scan
// forbidding these is exactly "no k disjoint copies".
inline std::vector<Bitset> disjoint_union_masks(const Hypergraph& shell, const PatternFamily& fam,
                                                int k) {
  if (k < 1) throw std::invalid_argument("disjoint_union_masks: need k >= 1");
  struct Copy {
    Bitset image, mask;
  };
  std::vector<Copy> copies;
  std::set<std::vector<std::uint64_t>> seen_mask;
  int m = static_cast<int>(shell.size());
  for (auto& member : fam.members) {
    detail::for_each_embedding(shell, member, [&](const std::vector<int>& map) {
      Bitset image(shell.n()), mask(m);
      for (int u : map) image.set(u);
      Edge img(shell.r());
      for (auto& e : member.edges()) {
        int t = 0;
        for (int v : e) img[t++] = map[v];
        std::sort(img.begin(), img.end());
        mask.set(static_cast<int>(std::lower_bound(shell.edges().begin(), shell.edges().end(),
                                                   img) -
                                  shell.edges().begin()));
      }
      if (seen_mask.insert(mask.words()).second) copies.push_back({std::move(image), std::move(mask)});
      return true;
    });
  }
  std::set<std::vector<std::uint64_t>> seen_union;
  std::vector<Bitset> out;
  auto rec = [&](auto&& self, std::size_t from, int left, Bitset used, Bitset acc) -> void {
    if (left == 0) {
      if (seen_union.insert(acc.words()).second) out.push_back(std::move(acc));
      return;
    }
    for (std::size_t i = from; i < copies.size(); ++i) {
      if (copies[i].image.intersects(used)) continue;
      self(self, i + 1, left - 1, used | copies[i].image, acc | copies[i].mask);
    }
  };
  rec(rec, 0, k, Bitset(shell.n()), Bitset(m));
  std::sort(out.begin(), out.end(),
            [](const Bitset& a, const Bitset& b) { return a.words() < b.words(); });
  return out;
}

}  // namespace turan
