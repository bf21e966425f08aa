#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "turan/binom.hpp"
#include "turan/ex_table.hpp"
#include "turan/family.hpp"
#include "turan/hypergraph.hpp"
#include "turan/rng.hpp"

namespace turan {

struct Precondition {
  std::string name;
  bool holds = true;
};

// Self-describing result of one closed-form evaluation.  Edge-count
// formulas carry an exact rational (num/den) and its floor; formulas with
// irrational factors carry a float value plus the relative slack used
// whenever that value takes part in a comparison.
struct BoundReport {
  std::string formula;
  std::vector<std::pair<std::string, std::string>> params;
  double value = 0.0;
  i64 value_floor = 0;
  bool has_exact = false;
  i64 num = 0;
  i64 den = 1;
  double margin = 0.0;  // relative upward slack of `value` when !has_exact
  std::vector<Precondition> preconditions;
  std::vector<std::string> missing;  // unresolved table keys
  bool deps_exact = true;            // all resolved lookups had status "exact"
  std::string status = "ok";         // ok | unresolved

  bool ok() const { return status == "ok"; }
  bool preconditions_hold() const {
    for (const auto& p : preconditions)
      if (!p.holds) return false;
    return true;
  }
};

// Integer window [t_min, t_max] cut from a real interval [lo, hi].
struct RangeReport {
  std::string formula;
  std::vector<std::pair<std::string, std::string>> params;
  double lo = 0.0;
  double hi = 0.0;
  i64 t_min = 0;
  i64 t_max = -1;
  std::vector<Precondition> preconditions;
  std::vector<std::string> missing;
  bool deps_exact = true;
  std::string status = "ok";

  bool ok() const { return status == "ok"; }
  bool nonempty() const { return ok() && t_min <= t_max; }
  bool contains(i64 t) const { return ok() && t_min <= t && t <= t_max; }
};

namespace detail {

constexpr double kRelSlack = 1e-12;

inline i64 floor_div(i64 a, i64 b) {
  // b > 0; rounds toward minus infinity.
  i64 q = a / b, r = a % b;
  return (r != 0 && a < 0) ? q - 1 : q;
}

template <class Rep>
inline void add_param(Rep& rep, const std::string& key, const std::string& value) {
  rep.params.emplace_back(key, value);
}

template <class Rep, class T>
inline void add_param(Rep& rep, const std::string& key, const T& value) {
  std::ostringstream out;
  out << value;
  rep.params.emplace_back(key, out.str());
}

template <class Rep>
inline bool flag(Rep& rep, const std::string& name, bool holds) {
  rep.preconditions.push_back({name, holds});
  return holds;
}

inline void set_exact(BoundReport& rep, i64 num, i64 den) {
  if (den == 0) throw std::logic_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i64 g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  rep.num = num;
  rep.den = den;
  rep.has_exact = true;
  rep.margin = 0.0;
  rep.value = static_cast<double>(num) / static_cast<double>(den);
  rep.value_floor = floor_div(num, den);
}

inline void set_real(BoundReport& rep, long double v) {
  rep.has_exact = false;
  rep.margin = kRelSlack;
  rep.value = static_cast<double>(v);
  long double padded = v + fabsl(v) * (long double)kRelSlack + 1e-15L;
  rep.value_floor = static_cast<i64>(floorl(padded));
}

using u128 = unsigned __int128;

inline bool mul_overflows(u128 a, u128 b, u128& out) {
  if (a != 0 && b > ~(u128)0 / a) return true;
  out = a * b;
  return false;
}

inline std::optional<u128> pow_u128(u128 base, i64 exp) {
  u128 result = 1;
  for (i64 i = 0; i < exp; ++i)
    if (mul_overflows(result, base, result)) return std::nullopt;
  return result;
}

// Integer value of (A^apow * B^bpow)^(1/root) when it exists and fits.
inline std::optional<i64> exact_root_of_product(i64 A, i64 apow, i64 B, i64 bpow, i64 root) {
  if (A < 0 || B < 0 || apow < 0 || bpow < 0 || root < 1) return std::nullopt;
  auto pa = pow_u128((u128)A, apow);
  auto pb = pow_u128((u128)B, bpow);
  if (!pa || !pb) return std::nullopt;
  u128 product;
  if (mul_overflows(*pa, *pb, product)) return std::nullopt;
  constexpr i64 kMax = std::numeric_limits<i64>::max();
  if (root == 1) return product <= (u128)kMax ? std::optional<i64>((i64)product) : std::nullopt;
  long double guess = powl((long double)product, 1.0L / root);
  if (guess > 9.0e18L) return std::nullopt;
  i64 center = (i64)llroundl(guess);
  for (i64 c = std::max<i64>(center - 2, 0); c <= center + 2; ++c) {
    auto p = pow_u128((u128)c, root);
    if (p && *p == product) return c;
  }
  return std::nullopt;
}

// (mult/divisor) * (A^apow * n^npow)^(1/root) + (c2num/c2den) * extra,
// exact rational when the root resolves to an integer.
inline void eval_power_sum(BoundReport& rep, i64 mult, i64 divisor, i64 A, i64 apow, i64 nbase,
                           i64 npow, i64 root, i64 c2num, i64 c2den, i64 extra) {
  constexpr i64 kMax = std::numeric_limits<i64>::max();
  if (auto rt = exact_root_of_product(A, apow, nbase, npow, root)) {
    __int128 num = (__int128)mult * *rt * c2den + (__int128)c2num * extra * divisor;
    __int128 den = (__int128)divisor * c2den;
    if (num <= (__int128)kMax && num >= -(__int128)kMax && den <= (__int128)kMax) {
      set_exact(rep, (i64)num, (i64)den);
      return;
    }
  }
  long double t1 = (long double)mult / divisor * powl((long double)A, (long double)apow / root) *
                   powl((long double)nbase, (long double)npow / root);
  long double t2 = (long double)c2num * extra / c2den;
  set_real(rep, t1 + t2);
}

// Looks up ex(n, family) under the given variant; n == 0 is identically 0.
// A miss downgrades the report to "unresolved" and records the key.
template <class Rep>
inline std::optional<i64> lookup_ex(const ExTable& table, Rep& rep, const std::string& family,
                                    i64 n, const std::string& variant = "plain") {
  if (n == 0) return 0;
  ExKey key{family, variant, n};
  if (n > 0) {
    if (auto rec = table.find(family, n, variant)) {
      add_param(rep, "dep:" + key.str(), rec->status);
      if (rec->status != "exact") rep.deps_exact = false;
      return rec->value;
    }
  }
  rep.missing.push_back(key.str());
  rep.status = "unresolved";
  return std::nullopt;
}

inline void check_sizes(const std::vector<int>& sizes, int min_r, int min_s1) {
  if ((int)sizes.size() < min_r)
    throw std::invalid_argument("at least " + std::to_string(min_r) + " part sizes required");
  if (sizes.front() < min_s1) throw std::invalid_argument("smallest part size too small");
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] < sizes[i - 1])
      throw std::invalid_argument("part sizes must be nondecreasing");
}

inline std::string sizes_str(const std::vector<int>& sizes) {
  std::string out;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(sizes[i]);
  }
  return out;
}

inline void set_window(RangeReport& rep, long double lo, long double hi) {
  rep.lo = static_cast<double>(lo);
  rep.hi = static_cast<double>(hi);
  rep.t_min = (i64)ceill(lo - fabsl(lo) * (long double)kRelSlack - 1e-15L);
  if (rep.t_min < 0) rep.t_min = 0;
  rep.t_max = (i64)floorl(hi + fabsl(hi) * (long double)kRelSlack + 1e-15L);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Lower-bound construction sizes.
// ---------------------------------------------------------------------------

// Edge count of the n-vertex host built by joining a t-clique to an
// extremal F-free host: C(n,r) - C(n-t,r) + ex(n-t, F).
inline BoundReport g1(const ExTable& table, i64 n, i64 t, const PatternFamily& F) {
  BoundReport rep;
  rep.formula = "g1";
  int r = F.r();
  i64 m = F.max_vertices();
  detail::add_param(rep, "n", n);
  detail::add_param(rep, "t", t);
  detail::add_param(rep, "family", F.name);
  detail::flag(rep, "t >= 1", t >= 1);
  detail::flag(rep, "n >= m*t", n >= m * t);
  i64 head = binom(n, r) - binom(n - t, r);
  auto ex = detail::lookup_ex(table, rep, F.name, n - t);
  if (ex)
    detail::set_exact(rep, head + *ex, 1);
  else
    detail::add_param(rep, "head", head);
  return rep;
}

// Edge count of the host joining a clique on tau*(t+1)-1 vertices to an
// extremal host avoiding every induced sub-pattern on m-tau+1 vertices:
// C(n,r) - C(n-k,r) + ex(n-k, F[m-tau+1]) with k = tau*(t+1)-1.
inline BoundReport g2(const ExTable& table, i64 n, i64 t, i64 tau, const PatternFamily& F) {
  BoundReport rep;
  rep.formula = "g2";
  int r = F.r();
  i64 m = F.max_vertices();
  i64 k = tau * (t + 1) - 1;
  std::string induced_id = F.name + "[" + std::to_string(m - tau + 1) + "]";
  detail::add_param(rep, "n", n);
  detail::add_param(rep, "t", t);
  detail::add_param(rep, "tau", tau);
  detail::add_param(rep, "family", F.name);
  detail::add_param(rep, "induced", induced_id);
  detail::flag(rep, "t >= 1", t >= 1);
  detail::flag(rep, "n >= m*t", n >= m * t);
  detail::flag(rep, "1 <= tau <= m", 1 <= tau && tau <= m);
  i64 head = binom(n, r) - binom(n - k, r);
  auto ex = detail::lookup_ex(table, rep, induced_id, n - k);
  if (ex)
    detail::set_exact(rep, head + *ex, 1);
  else
    detail::add_param(rep, "head", head);
  return rep;
}

// Edge count of the host placing a clique on m*(t+1)-1 vertices next to a
// disjoint extremal F-free host: C(m(t+1)-1, r) + ex(n - m(t+1) + 1, F).
inline BoundReport g3(const ExTable& table, i64 n, i64 t, i64 m, const PatternFamily& F) {
  BoundReport rep;
  rep.formula = "g3";
  int r = F.r();
  i64 k = m * (t + 1) - 1;
  detail::add_param(rep, "n", n);
  detail::add_param(rep, "t", t);
  detail::add_param(rep, "m", m);
  detail::add_param(rep, "family", F.name);
  detail::flag(rep, "t >= 1", t >= 1);
  detail::flag(rep, "n >= m*t", n >= m * t);
  detail::flag(rep, "m = max pattern order", m == F.max_vertices());
  i64 head = binom(k, r);
  auto ex = detail::lookup_ex(table, rep, F.name, n - k);
  if (ex)
    detail::set_exact(rep, head + *ex, 1);
  else
    detail::add_param(rep, "head", head);
  return rep;
}

// max{C(2t+1,2), C(n,2) - C(n-t,2)} — the classical matching-number bound
// for graphs.
inline BoundReport erdos_gallai_bound(i64 n, i64 t) {
  BoundReport rep;
  rep.formula = "erdos-gallai";
  detail::add_param(rep, "n", n);
  detail::add_param(rep, "t", t);
  detail::flag(rep, "2*(t+1) <= n", 2 * (t + 1) <= n);
  i64 clique = binom(2 * t + 1, 2);
  i64 book = binom(n, 2) - binom(n - t, 2);
  detail::add_param(rep, "max_branch",
                    clique > book ? "clique" : (book > clique ? "cover" : "tie"));
  detail::set_exact(rep, std::max(clique, book), 1);
  return rep;
}

// ---------------------------------------------------------------------------
// Kővári–Sós–Turán-type upper bounds.
// ---------------------------------------------------------------------------

// ex(n, K_{s1,s2}) <= ((s2-1)^{1/s1}/2) n^{2-1/s1} + ((s1-1)/2) n.
inline BoundReport kst_bound(i64 n, int s1, int s2) {
  if (s1 < 1 || s2 < 1) throw std::invalid_argument("part sizes must be >= 1");
  BoundReport rep;
  rep.formula = "kst";
  detail::add_param(rep, "n", n);
  detail::add_param(rep, "s1", s1);
  detail::add_param(rep, "s2", s2);
  detail::flag(rep, "s1 <= s2", s1 <= s2);
  detail::eval_power_sum(rep, 1, 2, s2 - 1, 1, n, 2 * s1 - 1, s1, s1 - 1, 2, n);
  return rep;
}

// Ordered copies across a bipartition: Z(m,n; s1,s2) <=
// (s2-1)^{1/s1} m n^{1-1/s1} + (s1-1) n.
inline BoundReport zarankiewicz_graph_bound(i64 m, i64 n, int s1, int s2) {
  if (s1 < 1 || s2 < 1) throw std::invalid_argument("part sizes must be >= 1");
  BoundReport rep;
  rep.formula = "zarankiewicz-graph";
  detail::add_param(rep, "m", m);
  detail::add_param(rep, "n", n);
  detail::add_param(rep, "s1", s1);
  detail::add_param(rep, "s2", s2);
  detail::flag(rep, "s1 <= s2", s1 <= s2);
  detail::eval_power_sum(rep, m, 1, s2 - 1, 1, n, s1 - 1, s1, s1 - 1, 1, n);
  return rep;
}

// ex(n, K^r_{s1..sr}) <= ((s2+..+sr-r+1)^{1/s1}/r) n^{r-1/(s1...s_{r-1})}
//                        + ((s1-1)/r) C(n,r-1).
inline BoundReport erdos_kst_bound(i64 n, const std::vector<int>& sizes) {
  detail::check_sizes(sizes, 2, 1);
  BoundReport rep;
  rep.formula = "erdos-kst";
  int r = (int)sizes.size();
  int s1 = sizes.front();
  i64 A = 1 - r;
  for (int i = 1; i < r; ++i) A += sizes[i];
  i64 D = 1;
  for (int i = 0; i + 1 < r; ++i) D *= sizes[i];
  detail::add_param(rep, "n", n);
  detail::add_param(rep, "sizes", detail::sizes_str(sizes));
  detail::eval_power_sum(rep, 1, r, A, D / s1, n, r * D - 1, D, s1 - 1, r, binom(n, r - 1));
  return rep;
}

// Z(m, n, K^r_{s1..sr}) <= ((s2+..+sr-r+1)^{1/s1}/(r-1)) m n^{r-1-1/(s1...s_{r-1})}
//                          + (s1-1) C(n,r-1), for r >= 3.
inline BoundReport zarankiewicz_hypergraph_bound(i64 m, i64 n, const std::vector<int>& sizes) {
  detail::check_sizes(sizes, 3, 1);
  BoundReport rep;
  rep.formula = "zarankiewicz-hypergraph";
  int r = (int)sizes.size();
  int s1 = sizes.front();
  i64 A = 1 - r;
  for (int i = 1; i < r; ++i) A += sizes[i];
  i64 D = 1;
  for (int i = 0; i + 1 < r; ++i) D *= sizes[i];
  detail::add_param(rep, "m", m);
  detail::add_param(rep, "n", n);
  detail::add_param(rep, "sizes", detail::sizes_str(sizes));
  detail::eval_power_sum(rep, m, r - 1, A, D / s1, n, (r - 1) * D - 1, D, s1 - 1, 1,
                         binom(n, r - 1));
  return rep;
}

// Hosts where every edge meets a fixed m-set:
// ex_star(m, n, K^r_{s1..sr}) <= ((s2+..+sr-r+1)^{1/s1}/r) m n^{r-1-1/(s1...s_{r-1})}
//                                + ((s1-1)/r) C(n,r-1).
inline BoundReport star_turan_bound(i64 m, i64 n, const std::vector<int>& sizes) {
  detail::check_sizes(sizes, 2, 1);
  BoundReport rep;
  rep.formula = "star-turan";
  int r = (int)sizes.size();
  int s1 = sizes.front();
  i64 A = 1 - r;
  for (int i = 1; i < r; ++i) A += sizes[i];
  i64 D = 1;
  for (int i = 0; i + 1 < r; ++i) D *= sizes[i];
  detail::add_param(rep, "m", m);
  detail::add_param(rep, "n", n);
  detail::add_param(rep, "sizes", detail::sizes_str(sizes));
  detail::flag(rep, "m <= n", m <= n);
  detail::eval_power_sum(rep, m, r, A, D / s1, n, (r - 1) * D - 1, D, s1 - 1, r, binom(n, r - 1));
  return rep;
}

// ---------------------------------------------------------------------------
// t-interval endpoints.
// ---------------------------------------------------------------------------

// Largest t covered by the first interval:
// min{ delta ex(n,F) / (m C(n-1,r-1)), delta (n-1) / (8m(r-1)) } with
// delta = min{(1/m - c1)/4, c2/4}.
inline BoundReport interval1_t_max(i64 m, double c1, double c2, i64 n, int r, i64 ex_n) {
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (r < 2) throw std::invalid_argument("r must be >= 2");
  if (c1 * m >= 1.0) throw std::invalid_argument("c1 must be below 1/m");
  if (c1 < 0 || c2 < 0) throw std::invalid_argument("constants must be nonnegative");
  if (n - 1 < r - 1) throw std::invalid_argument("n too small");
  if (ex_n < 0) throw std::invalid_argument("ex value must be nonnegative");
  BoundReport rep;
  rep.formula = "interval1-t-max";
  detail::add_param(rep, "m", m);
  detail::add_param(rep, "c1", c1);
  detail::add_param(rep, "c2", c2);
  detail::add_param(rep, "n", n);
  detail::add_param(rep, "r", r);
  detail::add_param(rep, "ex_n", ex_n);
  detail::flag(rep, "c2 > 0", c2 > 0);
  long double delta = std::min((1.0L / m - (long double)c1) / 4.0L, (long double)c2 / 4.0L);
  detail::add_param(rep, "delta", (double)delta);
  long double v1 = delta * ex_n / ((long double)m * binom(n - 1, r - 1));
  long double v2 = delta * (n - 1) / (8.0L * m * (r - 1));
  long double v = std::min(v1, v2);
  rep.has_exact = false;
  rep.margin = detail::kRelSlack;
  rep.value = (double)v;
  rep.value_floor = (i64)floorl(v + fabsl(v) * (long double)detail::kRelSlack + 1e-15L);
  if (rep.value_floor < 0) rep.value_floor = 0;
  return rep;
}

// Value attained throughout the first interval; identical to g1.
inline BoundReport interval1_bound(const ExTable& table, i64 n, i64 t, const PatternFamily& F) {
  BoundReport rep = g1(table, n, t, F);
  rep.formula = "interval1-bound";
  return rep;
}

// Second-interval upper bound:
// C(n,r) - C(n-s1(t+1)+1, r) + ex(n-s1(t+1)+1, family).
// `family_id` is the pattern itself for r >= 3 hosts, or the induced family
// id "B[s2+1]" in the graph case.
inline BoundReport interval2_bound(const ExTable& table, i64 n, i64 t, int s1, int r,
                                   const std::string& family_id) {
  BoundReport rep;
  rep.formula = "interval2-bound";
  i64 k = (i64)s1 * (t + 1) - 1;
  detail::add_param(rep, "n", n);
  detail::add_param(rep, "t", t);
  detail::add_param(rep, "s1", s1);
  detail::add_param(rep, "r", r);
  detail::add_param(rep, "family", family_id);
  detail::flag(rep, "s1 >= 2", s1 >= 2);
  detail::flag(rep, "t >= 1", t >= 1);
  detail::flag(rep, "n >= s1*(t+1)-1", n >= k);
  i64 head = binom(n, r) - binom(n - k, r);
  auto ex = detail::lookup_ex(table, rep, family_id, n - k);
  if (ex)
    detail::set_exact(rep, head + *ex, 1);
  else
    detail::add_param(rep, "head", head);
  return rep;
}

// t-window of the second interval for r-uniform hosts:
// 320 e s1 s (ex(n,B)/C(n-1,r-1) + 320 e s1 s^2 r!) <= t <= n/(512 e s1 s^3 r!).
inline RangeReport interval2_t_range(const ExTable& table, i64 n, const std::vector<int>& sizes,
                                     const std::string& family_id) {
  detail::check_sizes(sizes, 2, 2);
  RangeReport rep;
  rep.formula = "interval2-t-range";
  int r = (int)sizes.size();
  i64 s1 = sizes.front();
  i64 s = 0;
  for (int v : sizes) s += v;
  detail::add_param(rep, "n", n);
  detail::add_param(rep, "sizes", detail::sizes_str(sizes));
  detail::add_param(rep, "family", family_id);
  detail::flag(rep, "n > 1", n > 1);
  long double e = expl(1.0L);
  long double rf = (long double)factorial(r);
  long double hi = n / (512.0L * e * s1 * s * s * s * rf);
  auto ex = detail::lookup_ex(table, rep, family_id, n);
  if (!ex) {
    detail::set_window(rep, 0.0L, hi);
    rep.t_max = -1;
    return rep;
  }
  long double lo =
      320.0L * e * s1 * s * ((long double)*ex / binom(n - 1, r - 1) + 320.0L * e * s1 * s * s * rf);
  detail::set_window(rep, lo, hi);
  return rep;
}

// t-window of the second interval for graph hosts:
// max{ sqrt(32 s1 s n), (12800 e s^5 / s1)(ex(n,B)/(n-1) + 288 e s1 s^2 r!) }
//   <= t <= n/(1024 e s1 s^3),  r = 2.
inline RangeReport interval2_graph_t_range(const ExTable& table, i64 n, int s1, int s2,
                                           const std::string& family_id) {
  RangeReport rep;
  rep.formula = "interval2-graph-t-range";
  if (s1 < 2 || s2 < s1) throw std::invalid_argument("need s2 >= s1 >= 2");
  i64 s = (i64)s1 + s2;
  detail::add_param(rep, "n", n);
  detail::add_param(rep, "s1", s1);
  detail::add_param(rep, "s2", s2);
  detail::add_param(rep, "family", family_id);
  detail::flag(rep, "n > 1", n > 1);
  long double e = expl(1.0L);
  long double rf = 2.0L;  // r! at r = 2
  long double hi = n / (1024.0L * e * s1 * s * s * s);
  auto ex = detail::lookup_ex(table, rep, family_id, n);
  if (!ex) {
    detail::set_window(rep, 0.0L, hi);
    rep.t_max = -1;
    return rep;
  }
  long double sq = sqrtl(32.0L * s1 * s * (long double)n);
  long double br = 12800.0L * e * powl((long double)s, 5) / s1 *
                   ((long double)*ex / (n - 1) + 288.0L * e * s1 * s * s * rf);
  detail::set_window(rep, std::max(sq, br), hi);
  return rep;
}

// Third-interval upper bound for r-uniform hosts:
// C(s(t+1)-1, r) + ex_star(n-st, n, s disjoint copies of B), s = sum sizes.
inline BoundReport interval3_bound(const ExTable& table, i64 n, i64 t,
                                   const std::vector<int>& sizes, const std::string& b_name) {
  detail::check_sizes(sizes, 2, 1);
  BoundReport rep;
  rep.formula = "interval3-bound";
  int r = (int)sizes.size();
  i64 s = 0;
  for (int v : sizes) s += v;
  i64 m_star = n - s * t;
  detail::add_param(rep, "n", n);
  detail::add_param(rep, "t", t);
  detail::add_param(rep, "sizes", detail::sizes_str(sizes));
  detail::add_param(rep, "pattern", b_name);
  detail::flag(rep, "t >= 1", t >= 1);
  detail::flag(rep, "s*t <= n", s * t <= n);
  i64 head = binom(s * (t + 1) - 1, r);
  std::optional<i64> star;
  if (m_star == 0)
    star = 0;  // no edge can meet an empty distinguished set
  else
    star = detail::lookup_ex(table, rep, std::to_string(s) + "*" + b_name, n,
                             "star:" + std::to_string(m_star));
  if (star)
    detail::set_exact(rep, head + *star, 1);
  else
    detail::add_param(rep, "head", head);
  return rep;
}

// Third-interval upper bound for graph hosts:
// C(s(t+1)-1, 2) + ex(n-s(t+1)+1, B) + s1 s n.
inline BoundReport interval3_graph_bound(const ExTable& table, i64 n, i64 t, int s1, int s2,
                                         const std::string& b_name) {
  if (s1 < 2 || s2 < s1) throw std::invalid_argument("need s2 >= s1 >= 2");
  BoundReport rep;
  rep.formula = "interval3-graph-bound";
  i64 s = (i64)s1 + s2;
  i64 k = s * (t + 1) - 1;
  detail::add_param(rep, "n", n);
  detail::add_param(rep, "t", t);
  detail::add_param(rep, "s1", s1);
  detail::add_param(rep, "s2", s2);
  detail::add_param(rep, "pattern", b_name);
  detail::flag(rep, "t >= 1", t >= 1);
  detail::flag(rep, "s*t <= n", s * t <= n);
  i64 head = binom(k, 2) + s1 * s * n;
  auto ex = detail::lookup_ex(table, rep, b_name, n - k);
  if (ex)
    detail::set_exact(rep, head + *ex, 1);
  else
    detail::add_param(rep, "head", head);
  return rep;
}

// Third-interval t-window for r-uniform hosts:
// n/s - n/(16 e^2 r^4 s^2 prod(sizes)) <= t <= n/s.
inline RangeReport interval3_t_range(i64 n, const std::vector<int>& sizes) {
  detail::check_sizes(sizes, 2, 1);
  RangeReport rep;
  rep.formula = "interval3-t-range";
  int r = (int)sizes.size();
  i64 s = 0, prod = 1;
  for (int v : sizes) {
    s += v;
    prod *= v;
  }
  detail::add_param(rep, "n", n);
  detail::add_param(rep, "sizes", detail::sizes_str(sizes));
  long double e = expl(1.0L);
  long double lo = (long double)n / s - n / (16.0L * e * e * powl((long double)r, 4) * s * s * prod);
  detail::set_window(rep, lo, (long double)n / s);
  rep.t_max = detail::floor_div(n, s);  // upper endpoint is exactly n/s
  return rep;
}

// Third-interval t-window for graph hosts: n/s - n/(65 s1 s^2) <= t <= n/s.
inline RangeReport interval3_graph_t_range(i64 n, int s1, int s2) {
  if (s1 < 2 || s2 < s1) throw std::invalid_argument("need s2 >= s1 >= 2");
  RangeReport rep;
  rep.formula = "interval3-graph-t-range";
  i64 s = (i64)s1 + s2;
  detail::add_param(rep, "n", n);
  detail::add_param(rep, "s1", s1);
  detail::add_param(rep, "s2", s2);
  long double lo = (long double)n / s - (long double)n / (65.0L * s1 * s * s);
  detail::set_window(rep, lo, (long double)n / s);
  rep.t_max = detail::floor_div(n, s);
  return rep;
}

// ---------------------------------------------------------------------------
// Minimum-degree matching thresholds.
// ---------------------------------------------------------------------------

// Min-degree fraction guaranteeing a perfect F-tiling matching count:
// 1 - 1/(e (d + 1 + r^2 |F| / v(F))), where d is the largest number of
// other edges any single edge of F intersects.
inline BoundReport lu_szekely_threshold(const Hypergraph& F) {
  if (F.size() == 0) throw std::invalid_argument("pattern must have at least one edge");
  BoundReport rep;
  rep.formula = "lu-szekely";
  int d = 0;
  for (int i = 0; i < F.size(); ++i) {
    int meet = 0;
    for (int j = 0; j < F.size(); ++j) {
      if (i == j) continue;
      const auto &a = F.edge(i), &b = F.edge(j);
      std::size_t x = 0, y = 0;
      bool hit = false;
      while (x < a.size() && y < b.size()) {
        if (a[x] == b[y]) {
          hit = true;
          break;
        }
        (a[x] < b[y]) ? ++x : ++y;
      }
      if (hit) ++meet;
    }
    d = std::max(d, meet);
  }
  long double r = F.r();
  long double inner = d + 1 + r * r * F.size() / (long double)F.n();
  detail::add_param(rep, "d", d);
  detail::add_param(rep, "edges", F.size());
  detail::add_param(rep, "vertices", F.n());
  detail::set_real(rep, 1.0L - 1.0L / (expl(1.0L) * inner));
  return rep;
}

// Specialization for complete multipartite patterns:
// 1 - 1/(2 e r^2 prod(sizes)).
inline BoundReport lu_szekely_specialized(const std::vector<int>& sizes) {
  detail::check_sizes(sizes, 2, 1);
  BoundReport rep;
  rep.formula = "lu-szekely-multipartite";
  long double r = (long double)sizes.size();
  i64 prod = 1;
  for (int v : sizes) prod *= v;
  detail::add_param(rep, "sizes", detail::sizes_str(sizes));
  detail::set_real(rep, 1.0L - 1.0L / (2.0L * expl(1.0L) * r * r * prod));
  return rep;
}

// ---------------------------------------------------------------------------
// Assorted exact-arithmetic bounds.
// ---------------------------------------------------------------------------

// Hosts with no t+1 disjoint pattern copies satisfy
// |H| <= m t Delta(H) + ex(n - m t, F); all inputs supplied as scalars.
inline BoundReport trivial_maxdeg_bound(i64 n, i64 m, i64 t, i64 max_deg, i64 ex_rest) {
  BoundReport rep;
  rep.formula = "maxdeg-peel";
  detail::add_param(rep, "n", n);
  detail::add_param(rep, "m", m);
  detail::add_param(rep, "t", t);
  detail::add_param(rep, "max_deg", max_deg);
  detail::add_param(rep, "ex_rest", ex_rest);
  detail::flag(rep, "t >= 0", t >= 0);
  detail::flag(rep, "m >= 1", m >= 1);
  detail::flag(rep, "m*t <= n", m * t <= n);
  detail::set_exact(rep, m * t * max_deg + ex_rest, 1);
  return rep;
}

// Density transfer for connected patterns: ex(n,F)/n >= (1 - m/n) ex(m,F)/m,
// reported as the exact rational (n-m) ex_m / (n m).
inline BoundReport turan_ratio_lower(i64 n, i64 m, i64 ex_m) {
  if (m < 1 || n < 1) throw std::invalid_argument("orders must be positive");
  BoundReport rep;
  rep.formula = "density-transfer";
  detail::add_param(rep, "n", n);
  detail::add_param(rep, "m", m);
  detail::add_param(rep, "ex_m", ex_m);
  detail::flag(rep, "n >= m", n >= m);
  detail::set_exact(rep, (n - m) * ex_m, n * m);
  return rep;
}

// Older matching-threshold guarantees: largest t with 400 t^2 <= n, and the
// clique version floor((2n - 3l^2 + 2l)/(l^3 + 2l^2 + l + 1)).
inline std::pair<BoundReport, BoundReport> legacy_thresholds(i64 n, i64 l) {
  if (n < 0 || l < 1) throw std::invalid_argument("need n >= 0 and l >= 1");
  BoundReport erdos;
  erdos.formula = "legacy-matching-t-max";
  detail::add_param(erdos, "n", n);
  detail::set_exact(erdos, isqrt(n / 400), 1);

  BoundReport moon;
  moon.formula = "legacy-clique-t-max";
  detail::add_param(moon, "n", n);
  detail::add_param(moon, "l", l);
  i64 den = l * l * l + 2 * l * l + l + 1;
  i64 t = detail::floor_div(2 * n - 3 * l * l + 2 * l, den);
  detail::set_exact(moon, std::max<i64>(t, 0), 1);
  return {erdos, moon};
}

// Count of edges meeting a blocking set in at most i vertices:
// sum_{j=1..i} C((t+1) tau_i - 1, j) C(n - (t+1) tau_i + 1, r - j).
inline BoundReport i_independent_lower(i64 n, i64 t, i64 tau_i, int r, int i) {
  if (r < 2 || i < 1 || i > r - 1) throw std::invalid_argument("need r >= 2 and i in [1, r-1]");
  BoundReport rep;
  rep.formula = "i-independent-lower";
  i64 k = (t + 1) * tau_i - 1;
  detail::add_param(rep, "n", n);
  detail::add_param(rep, "t", t);
  detail::add_param(rep, "tau_i", tau_i);
  detail::add_param(rep, "r", r);
  detail::add_param(rep, "i", i);
  detail::flag(rep, "t >= 0", t >= 0);
  detail::flag(rep, "tau_i >= 1", tau_i >= 1);
  detail::flag(rep, "k <= n", k <= n);
  i64 total = 0;
  for (int j = 1; j <= i; ++j) total += binom(k, j) * binom(n - k, r - j);
  detail::set_exact(rep, total, 1);
  return rep;
}

// ---------------------------------------------------------------------------
// Inequality fact checks.
// ---------------------------------------------------------------------------

struct FactCheck {
  std::string fact;
  bool pass = true;
  i64 cases = 0;
  std::string counterexample;  // empty when pass

  void fail(const std::string& witness) {
    if (pass) {
      pass = false;
      counterexample = witness;
    }
  }
};

// Verifies the binomial and elementary inequalities used throughout the
// interval arguments: exhaustive integer sweeps where the statement is
// integral, dense grids plus seeded samples where it is real-valued.
inline std::vector<FactCheck> binomial_facts(int n_max = 60, int r_max = 5,
                                             std::uint64_t seed = 12345) {
  using detail::u128;
  std::vector<FactCheck> out;
  long double e = expl(1.0L);

  {  // C(n-t,r) <= (1-t/n)^r C(n,r) and C(n,r) <= (n/(n-t-r))^r C(n-t,r),
     // checked in the cross-multiplied integer forms.
    FactCheck chk{"binom-shift-two-sided"};
    for (i64 n = 1; n <= n_max; ++n)
      for (i64 r = 1; r <= std::min<i64>(r_max, n); ++r)
        for (i64 t = 1; t <= n; ++t) {
          u128 nr = *detail::pow_u128((u128)n, r);
          u128 lhs = (u128)binom(n - t, r) * nr;
          u128 rhs = *detail::pow_u128((u128)(n - t), r) * (u128)binom(n, r);
          ++chk.cases;
          if (lhs > rhs)
            chk.fail("n=" + std::to_string(n) + " r=" + std::to_string(r) +
                     " t=" + std::to_string(t) + " (first)");
          if (n - t - r > 0) {
            u128 l2 = (u128)binom(n, r) * *detail::pow_u128((u128)(n - t - r), r);
            u128 r2 = nr * (u128)binom(n - t, r);
            ++chk.cases;
            if (l2 > r2)
              chk.fail("n=" + std::to_string(n) + " r=" + std::to_string(r) +
                       " t=" + std::to_string(t) + " (second)");
          }
        }
    out.push_back(std::move(chk));
  }

  {  // C(n,r) <= n^r/r! <= e C(n-b,r) for b(r+1) <= n-r^2+1.
    FactCheck chk{"binom-drop-within-e"};
    for (i64 n = 1; n <= n_max; ++n)
      for (i64 r = 1; r <= std::min<i64>(r_max, n); ++r)
        for (i64 b = 1; b * (r + 1) <= n - r * r + 1; ++b) {
          u128 nr = *detail::pow_u128((u128)n, r);
          ++chk.cases;
          if ((u128)binom(n, r) * (u128)factorial(r) > nr)
            chk.fail("n=" + std::to_string(n) + " r=" + std::to_string(r) + " (left)");
          long double rhs = e * (long double)factorial(r) * (long double)binom(n - b, r);
          ++chk.cases;
          if ((long double)nr > rhs * (1.0L + 1e-15L))
            chk.fail("n=" + std::to_string(n) + " r=" + std::to_string(r) +
                     " b=" + std::to_string(b) + " (right)");
        }
    out.push_back(std::move(chk));
  }

  {  // C(n,2)-C(n-l-x,2) >= C(n,2)-C(n-l,2) + x(n-l-x).
    FactCheck chk{"pair-count-split"};
    for (i64 n = 0; n <= n_max; ++n)
      for (i64 l = 0; l <= n; ++l)
        for (i64 x = 0; l + x <= n; ++x) {
          ++chk.cases;
          if (binom(n - l, 2) - binom(n - l - x, 2) < x * (n - l - x))
            chk.fail("n=" + std::to_string(n) + " l=" + std::to_string(l) +
                     " x=" + std::to_string(x));
        }
    out.push_back(std::move(chk));
  }

  Rng rng(seed);
  {  // (1/(1-x))^r <= 1 + 4rx for integer r >= 1, 0 <= x <= 1/(4r).
    FactCheck chk{"reciprocal-power-linear"};
    for (int r = 1; r <= n_max; ++r) {
      std::vector<long double> xs;
      for (int k = 0; k <= 64; ++k) xs.push_back((long double)k / (64.0L * 4 * r));
      for (int k = 0; k < 40; ++k) xs.push_back((long double)rng.uniform01() / (4.0L * r));
      for (long double x : xs) {
        ++chk.cases;
        long double lhs = powl(1.0L / (1.0L - x), r);
        long double rhs = 1.0L + 4.0L * r * x;
        if (lhs > rhs * (1.0L + 1e-12L))
          chk.fail("r=" + std::to_string(r) + " x=" + std::to_string((double)x));
      }
    }
    out.push_back(std::move(chk));
  }

  {  // (1-x)^{1/r} <= 1 - x/r for real x <= 1, real r >= 1.
    FactCheck chk{"root-below-secant"};
    std::vector<long double> rs = {1.0L, 1.0001L, 1.5L, 2.0L, e, 3.0L, 5.5L, 12.0L, 60.0L};
    std::vector<long double> xs = {1.0L,  0.999L, 0.875L, 0.5L,  0.25L, 0.0L,
                                   -0.3L, -1.0L,  -7.5L,  -20.L, -60.L};
    for (int k = 0; k < 60; ++k) {
      rs.push_back(1.0L + 59.0L * (long double)rng.uniform01());
      xs.push_back(1.0L - 61.0L * (long double)rng.uniform01());
    }
    for (long double r : rs)
      for (long double x : xs) {
        ++chk.cases;
        long double lhs = powl(1.0L - x, 1.0L / r);
        long double rhs = 1.0L - x / r;
        if (lhs > rhs + fabsl(rhs) * 1e-12L + 1e-15L)
          chk.fail("r=" + std::to_string((double)r) + " x=" + std::to_string((double)x));
      }
    out.push_back(std::move(chk));
  }

  return out;
}

// Monotonicity of x -> C(n,r) - C(n-x,r) + ex(n-x, F) over one exact table
// column, checked in the equivalent consecutive-difference form
// ex(k) - ex(k-1) <= C(k-1, r-1) for all adjacent exact rows.
inline FactCheck ex_shift_monotonicity(const ExTable& table, const std::string& family, int r,
                                       const std::string& variant = "plain") {
  FactCheck chk{"ex-shift-monotone:" + family};
  std::optional<i64> prev_n, prev_v;
  for (const auto& [key, rec] : table.rows()) {
    if (key.family != family || key.variant != variant || rec.status != "exact") continue;
    if (prev_n && key.n == *prev_n + 1) {
      ++chk.cases;
      if (rec.value - *prev_v > binom(key.n - 1, r - 1))
        chk.fail("n=" + std::to_string(key.n));
    }
    prev_n = key.n;
    prev_v = rec.value;
  }
  return chk;
}

}  // namespace turan
