// Copyright 2026 The binmat Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Points of the Grassmannian Gr(r, n; F_p) and its distinct-column locus.
//
// Every r-dimensional subspace of F_p^n has exactly one full-rank RREF
// representative, so the Grassmannian is enumerated by walking pivot sets in
// lexicographic order and, for each, the free entries as an odometer (last
// free entry in row-major order turns fastest). Each column is tracked as an
// integer code sum_i a_ij p^i, which makes the distinct-column test a stamp
// lookup instead of a vector comparison.
//
// The counting side (closed forms, the last-pivot recursion and the
// configuration-space factors) works for any integer q >= 2.

#ifndef BINMAT_GRASSMANN_HPP_
#define BINMAT_GRASSMANN_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "binmat/bits.hpp"
#include "binmat/errors.hpp"
#include "binmat/exact.hpp"
#include "binmat/gf.hpp"

namespace binmat {

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

struct EnumerationOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  int jobs = 1;
};

// q-analog binomial [n choose r]_q; 0 when r is outside [0, n].
inline BigInt gaussian_binomial(int r, int n, long long q) {
  if (q < 2) throw InvalidArgument("gaussian_binomial requires q >= 2");
  if (r < 0 || r > n) return 0;
  BigInt num = 1;
  BigInt den = 1;
  const BigInt qq = q;
  for (int i = 0; i < r; ++i) {
    num *= ipow(qq, n - i) - 1;
    den *= ipow(qq, i + 1) - 1;
  }
  return num / den;
}

// A full-rank RREF representative of an r-dimensional subspace.
struct SubspaceRREF {
  GFMatrix matrix;
  std::vector<int> pivots;  // 1-based

  friend bool operator==(const SubspaceRREF&, const SubspaceRREF&) = default;
};

// Transient view of the current point during enumeration.
class GrassmannPoint {
 public:
  GrassmannPoint(int r, int n, int p, std::span<const int> pivots,
                 std::span<const std::uint32_t> codes)
      : r_(r), n_(n), p_(p), pivots_(pivots), codes_(codes) {}

  int r() const { return r_; }
  int n() const { return n_; }
  int p() const { return p_; }
  // 0-based pivot columns.
  std::span<const int> pivot_columns() const { return pivots_; }
  int last_pivot() const { return pivots_.back() + 1; }
  // Column j (0-based) as sum_i a_ij p^i.
  std::span<const std::uint32_t> column_codes() const { return codes_; }

  Residue entry(int i, int j) const {
    std::uint32_t c = codes_[j];
    for (int k = 0; k < i; ++k) c /= p_;
    return static_cast<Residue>(c % p_);
  }

  GFMatrix matrix() const {
    GFMatrix m(PrimeField(p_), r_, n_);
    for (int j = 0; j < n_; ++j) {
      std::uint32_t c = codes_[j];
      for (int i = 0; i < r_; ++i, c /= p_) m.set(i, j, static_cast<Residue>(c % p_));
    }
    return m;
  }

  SubspaceRREF subspace() const {
    std::vector<int> piv(pivots_.begin(), pivots_.end());
    for (int& c : piv) ++c;
    return {matrix(), std::move(piv)};
  }

 private:
  int r_;
  int n_;
  int p_;
  std::span<const int> pivots_;
  std::span<const std::uint32_t> codes_;
};

namespace detail {

inline void check_grassmann_args(int r, int n, int p) {
  if (r < 1 || r > n) throw InvalidArgument("need 1 <= r <= n");
  if (!PrimeField::is_prime(p) || p > PrimeField::kMaxPrime) {
    throw InvalidArgument("enumeration needs a prime p <= 31");
  }
  if (n > kMaxGroundSet) throw SizeLimit("n > 32");
  BigInt states = ipow(BigInt(p), r);
  if (states > BigInt(1) << 24) throw SizeLimit("p^r too large for column codes");
}

inline void check_cap(int r, int n, int p, std::uint64_t cap) {
  const BigInt total = gaussian_binomial(r, n, p);
  if (total > cap) {
    throw CapExceeded("Gr(" + std::to_string(r) + "," + std::to_string(n) +
                      ";F_" + std::to_string(p) + ") has " + total.str() +
                      " points, cap is " + std::to_string(cap));
  }
}

// Visits the points whose pivot set has index % stride == offset.
template <typename Fn>
void walk_grassmannian(int r, int n, int p, int offset, int stride, Fn&& fn) {
  std::vector<std::uint32_t> pow_p(r + 1, 1);
  for (int i = 1; i <= r; ++i) pow_p[i] = pow_p[i - 1] * p;

  std::vector<int> pivots(r);
  std::vector<std::uint32_t> codes(n);
  std::vector<int> free_row;
  std::vector<int> free_col;
  std::vector<int> digits;
  long long index = -1;

  for_each_k_subset(n, r, [&](Mask pivot_mask) {
    if (++index % stride != offset) return;
    const std::vector<int> piv_labels = elements_of(pivot_mask);
    for (int i = 0; i < r; ++i) pivots[i] = piv_labels[i] - 1;

    std::fill(codes.begin(), codes.end(), 0);
    for (int i = 0; i < r; ++i) codes[pivots[i]] = pow_p[i];
    free_row.clear();
    free_col.clear();
    for (int i = 0; i < r; ++i) {
      for (int j = pivots[i] + 1; j < n; ++j) {
        if (!(pivot_mask & (Mask{1} << j))) {
          free_row.push_back(i);
          free_col.push_back(j);
        }
      }
    }
    const int free_count = static_cast<int>(free_row.size());
    digits.assign(free_count, 0);

    const GrassmannPoint point(r, n, p, pivots, codes);
    while (true) {
      fn(point);
      int t = free_count - 1;
      while (t >= 0) {
        const std::uint32_t step = pow_p[free_row[t]];
        if (++digits[t] < p) {
          codes[free_col[t]] += step;
          break;
        }
        digits[t] = 0;
        codes[free_col[t]] -= step * (p - 1);
        --t;
      }
      if (t < 0) break;
    }
  });
}

// Runs `visit(acc, point)` over all points, split across `jobs` workers by
// pivot set, and folds the per-worker accumulators in worker order.
template <typename Acc, typename Visit, typename Merge>
Acc reduce_grassmannian(int r, int n, int p, const EnumerationOptions& options,
                        Acc init, Visit visit, Merge merge) {
  check_grassmann_args(r, n, p);
  check_cap(r, n, p, options.cap);
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    walk_grassmannian(r, n, p, 0, 1, [&](const GrassmannPoint& pt) { visit(init, pt); });
    return init;
  }
  std::vector<Acc> partial(jobs, init);
  {
    std::vector<std::jthread> workers;
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        walk_grassmannian(r, n, p, w, jobs,
                          [&](const GrassmannPoint& pt) { visit(partial[w], pt); });
      });
    }
  }
  Acc result = init;
  for (auto& acc : partial) merge(result, acc);
  return result;
}

// Distinct nonzero column codes over p^r possible codes.
class ColumnChecker {
 public:
  explicit ColumnChecker(std::size_t states) : seen_(states, 0) {}

  bool distinct_nonzero(std::span<const std::uint32_t> codes) {
    if (++epoch_ == 0) {
      std::fill(seen_.begin(), seen_.end(), 0);
      epoch_ = 1;
    }
    for (std::uint32_t c : codes) {
      if (c == 0 || seen_[c] == epoch_) return false;
      seen_[c] = epoch_;
    }
    return true;
  }

 private:
  std::vector<std::uint32_t> seen_;
  std::uint32_t epoch_ = 0;
};

inline std::size_t code_states(int r, int p) {
  std::size_t s = 1;
  for (int i = 0; i < r; ++i) s *= static_cast<std::size_t>(p);
  return s;
}

}  // namespace detail

// Calls fn(const GrassmannPoint&) once per point, in the deterministic order
// described above. Throws CapExceeded before visiting anything if the
// Grassmannian is larger than options.cap.
template <typename Fn>
void for_each_subspace(int r, int n, int p, Fn&& fn,
                       const EnumerationOptions& options = {}) {
  detail::check_grassmann_args(r, n, p);
  detail::check_cap(r, n, p, options.cap);
  detail::walk_grassmannian(r, n, p, 0, 1, std::forward<Fn>(fn));
}

inline std::vector<SubspaceRREF> enumerate_grassmannian(
    int r, int n, int p, const EnumerationOptions& options = {}) {
  std::vector<SubspaceRREF> out;
  for_each_subspace(r, n, p, [&](const GrassmannPoint& pt) { out.push_back(pt.subspace()); },
                    options);
  return out;
}

// |Gr^dc(r, n; F_p)| by exhaustive enumeration.
inline BigInt grdc_bruteforce_count(int r, int n, int p,
                                    const EnumerationOptions& options = {}) {
  if (r < 1 || n < r) return 0;
  struct Acc {
    std::uint64_t count = 0;
    detail::ColumnChecker checker;
  };
  const Acc total = detail::reduce_grassmannian(
      r, n, p, options, Acc{0, detail::ColumnChecker(detail::code_states(r, p))},
      [](Acc& acc, const GrassmannPoint& pt) {
        if (acc.checker.distinct_nonzero(pt.column_codes())) ++acc.count;
      },
      [](Acc& into, const Acc& from) { into.count += from.count; });
  return BigInt(total.count);
}

// |Gr^dc(1, n; F_q)|: ordered (n-1)-tuples of distinct elements of
// F_q \ {0, 1}, i.e. (q-2)(q-3)...(q-n).
inline BigInt grdc_r1_count(int n, long long q) {
  if (n < 1) return 0;
  if (q < 2) throw InvalidArgument("q must be >= 2");
  if (n == 1) return 1;
  if (n > q - 1) return 0;
  return falling_product(BigInt(q), 1, n);
}

// Counts of Gr^dc(r, n; F_q) for r <= n <= q^r - 1 (the support).
struct CountTable {
  long long q = 2;
  int r = 1;
  std::map<int, BigInt> entries;

  BigInt at(int n) const {
    auto it = entries.find(n);
    return it == entries.end() ? BigInt(0) : it->second;
  }
};

namespace detail {

// counts[s][m] for 1 <= s <= r and 0 <= m <= n_max via
//   G(s+1, m) = sum_{k=s+1}^{m} G(s, k-1) prod_{j=k+1}^{m} (q^{s+1} - j).
inline std::vector<std::vector<BigInt>> grdc_levels(int r, int n_max, long long q) {
  if (q < 2) throw InvalidArgument("q must be >= 2");
  if (r < 1) throw InvalidArgument("r must be >= 1");
  std::vector<std::vector<BigInt>> levels(r + 1);
  levels[1].resize(n_max + 1);
  for (int m = 0; m <= n_max; ++m) levels[1][m] = grdc_r1_count(m, q);

  for (int s = 1; s < r; ++s) {
    const std::vector<BigInt>& below = levels[s];
    std::vector<BigInt>& cur = levels[s + 1];
    cur.assign(n_max + 1, 0);
    const BigInt ambient = ipow(BigInt(q), s + 1);
    int top = -1;  // largest k with G(s, k-1) != 0
    for (int k = 1; k <= n_max + 1 && k - 1 <= n_max; ++k) {
      if (below[k - 1] != 0) top = k;
    }
    for (int m = s + 1; m <= n_max; ++m) {
      const int k_hi = std::min(m, top);
      if (k_hi < s + 1) continue;
      BigInt prod = falling_product(ambient, k_hi, m);
      BigInt sum = 0;
      for (int k = k_hi; k >= s + 1 && prod != 0; --k) {
        if (below[k - 1] != 0) sum += below[k - 1] * prod;
        prod *= ambient - k;
      }
      cur[m] = sum;
    }
  }
  return levels;
}

inline long long support_end(long long q, int r) {
  BigInt top = ipow(BigInt(q), r) - 1;
  if (top > (1 << 20)) throw SizeLimit("q^r - 1 exceeds 2^20 terms");
  return static_cast<long long>(top);
}

}  // namespace detail

// |Gr^dc(r, n; F_q)| from the last-pivot recursion with the r = 1 count as
// base. q is any integer >= 2.
inline BigInt grdc_count_recursive(int r, int n, long long q) {
  if (q < 2) throw InvalidArgument("q must be >= 2");
  if (r < 1) throw InvalidArgument("r must be >= 1");
  if (n < r) return 0;
  return detail::grdc_levels(r, n, q)[r][n];
}

// Recursive counts over the whole support r <= n <= q^r - 1.
inline CountTable grdc_count_table(int r, long long q) {
  const long long top = detail::support_end(q, r);
  CountTable table{q, r, {}};
  if (top < r) return table;
  const auto levels = detail::grdc_levels(r, static_cast<int>(top), q);
  for (int n = r; n <= top; ++n) table.entries.emplace(n, levels[r][n]);
  return table;
}

// Ordered configurations of m distinct points in a set of size
// ambient - excluded: prod_{i=0}^{m-1} (ambient - excluded - i).
inline BigInt conf_count(int m, const BigInt& ambient, long long excluded) {
  if (m < 0) throw InvalidArgument("conf_count requires m >= 0");
  const BigInt avail = ambient - excluded;
  if (avail < m) return 0;
  BigInt result = 1;
  for (int i = 0; i < m; ++i) result *= avail - i;
  return result;
}

// Number of Gr^dc(r+1, n; F_p) points whose last pivot sits in column k,
// keyed by k (every k in [r+1, n] is present).
inline std::map<int, BigInt> yk_partition(int r_plus_1, int n, int p,
                                          const EnumerationOptions& options = {}) {
  if (r_plus_1 < 2) throw InvalidArgument("yk_partition needs r+1 >= 2");
  struct Acc {
    std::vector<std::uint64_t> per_k;
    detail::ColumnChecker checker;
  };
  const Acc total = detail::reduce_grassmannian(
      r_plus_1, n, p, options,
      Acc{std::vector<std::uint64_t>(n + 1, 0),
          detail::ColumnChecker(detail::code_states(r_plus_1, p))},
      [](Acc& acc, const GrassmannPoint& pt) {
        if (acc.checker.distinct_nonzero(pt.column_codes())) ++acc.per_k[pt.last_pivot()];
      },
      [](Acc& into, const Acc& from) {
        for (std::size_t i = 0; i < into.per_k.size(); ++i) into.per_k[i] += from.per_k[i];
      });
  const auto& per_k = total.per_k;
  std::map<int, BigInt> out;
  for (int k = r_plus_1; k <= n; ++k) out.emplace(k, BigInt(per_k[k]));
  return out;
}

// The product each stratum should have:
//   |Y_k| = |Gr^dc(r, k-1; F_p)| * |Conf_{n-k}(A^{r+1} minus k+1 points)|,
// with the first factor taken from brute-force enumeration.
inline std::map<int, BigInt> yk_expected(int r_plus_1, int n, int p,
                                         const EnumerationOptions& options = {}) {
  const int r = r_plus_1 - 1;
  const BigInt ambient = ipow(BigInt(p), r_plus_1);
  std::map<int, BigInt> out;
  for (int k = r_plus_1; k <= n; ++k) {
    out.emplace(k, grdc_bruteforce_count(r, k - 1, p, options) *
                       conf_count(n - k, ambient, k + 1));
  }
  return out;
}

}  // namespace binmat

#endif  // BINMAT_GRASSMANN_HPP_
