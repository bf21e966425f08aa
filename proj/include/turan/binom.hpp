#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace turan {

using i64 = long long;

// C(n, k), exact in 64 bits.  Out-of-range arguments (n < 0, k < 0, k > n)
// yield 0 so that shifted expressions like C(n - t, r) stay total.
inline i64 binom(i64 n, i64 k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 acc = 1;
  for (i64 i = 1; i <= k; ++i) {
    acc = acc * static_cast<unsigned long long>(n - k + i);
    acc /= static_cast<unsigned long long>(i);  // exact: acc == C(n-k+i, i)
    if (acc > static_cast<unsigned __int128>(INT64_MAX))
      throw std::overflow_error("binom: value exceeds 64 bits");
  }
  return static_cast<i64>(acc);
}

inline i64 factorial(i64 n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  i64 acc = 1;
  for (i64 i = 2; i <= n; ++i) {
    if (acc > INT64_MAX / i) throw std::overflow_error("factorial: value exceeds 64 bits");
    acc *= i;
  }
  return acc;
}

// n^k for small exact integer powers; throws on 64-bit overflow.
inline i64 ipow(i64 n, i64 k) {
  if (k < 0) throw std::invalid_argument("ipow: negative exponent");
  if (n < 0) throw std::invalid_argument("ipow: negative base");
  i64 acc = 1;
  for (i64 i = 0; i < k; ++i) {
    if (n != 0 && acc > INT64_MAX / n) throw std::overflow_error("ipow: value exceeds 64 bits");
    acc *= n;
  }
  return acc;
}

// Largest t >= 0 with t*t <= x (x >= 0).
inline i64 isqrt(i64 x) {
  if (x < 0) throw std::invalid_argument("isqrt: negative argument");
  i64 t = static_cast<i64>(std::max(0.0, std::sqrt(static_cast<double>(x)) - 2));
  while ((t + 1) * (t + 1) <= x) ++t;
  return t;
}

// Number of edges of the Turan graph T(n, l): complete l-partite, balanced.
inline i64 turan_number(i64 n, i64 l) {
  if (n < 0 || l <= 0) throw std::invalid_argument("turan_number: need n >= 0, l >= 1");
  i64 q = n / l, rem = n % l;
  // parts: rem of size q+1, l-rem of size q
  i64 internal = rem * binom(q + 1, 2) + (l - rem) * binom(q, 2);
  return binom(n, 2) - internal;
}

// Rank of a strictly increasing k-subset of {0..n-1} in lexicographic order.
inline i64 subset_rank(const std::vector<int>& s, int n) {
  i64 rank = 0;
  int k = static_cast<int>(s.size());
  int prev = -1;
  for (int i = 0; i < k; ++i) {
    for (int v = prev + 1; v < s[i]; ++v) rank += binom(n - 1 - v, k - 1 - i);
    prev = s[i];
  }
  return rank;
}

// Inverse of subset_rank.
inline std::vector<int> subset_unrank(i64 rank, int n, int k) {
  std::vector<int> s;
  s.reserve(k);
  int v = 0;
  for (int i = 0; i < k; ++i) {
    while (true) {
      i64 c = binom(n - 1 - v, k - 1 - i);
      if (rank < c) break;
      rank -= c;
      ++v;
    }
    s.push_back(v++);
  }
  return s;
}

// Visit all strictly increasing k-subsets of {0..n-1} in lex order.
// f may return false to stop early; returns false iff stopped.
template <class F>
inline bool for_each_subset(int n, int k, F&& f) {
  if (k < 0 || k > n) return true;
  std::vector<int> s(k);
  for (int i = 0; i < k; ++i) s[i] = i;
  while (true) {
    if (!f(static_cast<const std::vector<int>&>(s))) return false;
    int i = k - 1;
    while (i >= 0 && s[i] == n - k + i) --i;
    if (i < 0) return true;
    ++s[i];
    for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
  }
}

}  // namespace turan
