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

// Virtual Euler characteristics of rank-r simple binary matroids,
//
//   chi(B(r)) = sum_{n >= r} sum_{classes Q} (-1)^n / |Aut(Q)|,
//
// computed three independent ways (class enumeration, distinct-column point
// counts, closed product) together with exact checks of the identities that
// connect them.
//
// The three routes never share counting code: chi_enumerated() only uses
// GL_r(F_2) orbits on point subsets, chi_via_counts() only uses the
// last-pivot recursion, and chi_closed() is a bare product.

#ifndef BINMAT_EULER_HPP_
#define BINMAT_EULER_HPP_

#include <string>
#include <vector>

#include "binmat/errors.hpp"
#include "binmat/exact.hpp"
#include "binmat/grassmann.hpp"
#include "binmat/matroid.hpp"

namespace binmat {

enum class ChiMethod { kEnumerated, kViaCounts, kClosed };

inline std::string to_string(ChiMethod m) {
  switch (m) {
    case ChiMethod::kEnumerated: return "enumerated";
    case ChiMethod::kViaCounts: return "via_counts";
    case ChiMethod::kClosed: return "closed";
  }
  return "unknown";
}

struct ChiTerm {
  int n = 0;
  // |Gr^dc(r, n)| for via_counts, sum of 1/|Aut| over classes for
  // enumerated.
  BigRat count;
  BigRat term;  // signed contribution to the total
};

struct ChiReport {
  long long q = 2;
  int r = 1;
  ChiMethod method = ChiMethod::kClosed;
  bool partial = false;
  std::vector<ChiTerm> terms;  // ascending n
  BigRat total;
};

// prod_{i=1}^{r} 1 / (1 - q^i)
inline BigRat chi_closed(long long q, int r) {
  if (q < 2) throw InvalidArgument("chi_closed requires q >= 2");
  if (r < 1) throw InvalidArgument("chi_closed requires r >= 1");
  BigInt den = 1;
  for (int i = 1; i <= r; ++i) den *= 1 - ipow(BigInt(q), i);
  return BigRat(BigInt(1), den);
}

inline ChiReport chi_closed_report(long long q, int r) {
  return {q, r, ChiMethod::kClosed, false, {}, chi_closed(q, r)};
}

// Sum over isomorphism classes of simple binary matroids, one GL_r(F_2)
// orbit enumeration per ground-set size.
inline ChiReport chi_enumerated(int r) {
  if (r < 1 || r > kMaxBinaryClassRank) {
    throw SizeLimit("chi_enumerated supports 1 <= r <= 4");
  }
  ChiReport report{2, r, ChiMethod::kEnumerated, false, {}, 0};
  const int top = (1 << r) - 1;
  for (int n = r; n <= top; ++n) {
    BigRat weight = 0;
    for (const IsoClass& c : enumerate_binary_classes(r, n)) weight += BigRat(BigInt(1), c.aut_order);
    const BigRat term = weight * sign_pow(n);
    report.terms.push_back({n, weight, term});
    report.total += term;
  }
  return report;
}

// sum_{n=r}^{q^r-1} (-1)^n / n! * |Gr^dc(r, n; F_q)| with recursive counts.
inline ChiReport chi_via_counts(long long q, int r) {
  const CountTable table = grdc_count_table(r, q);
  ChiReport report{q, r, ChiMethod::kViaCounts, false, {}, 0};
  BigInt n_fact = factorial(r);
  for (const auto& [n, count] : table.entries) {
    if (n > r) n_fact *= n;
    const BigRat term = BigRat(count * sign_pow(n), n_fact);
    report.terms.push_back({n, BigRat(count), term});
    report.total += term;
  }
  return report;
}

struct LemmaSides {
  BigRat lhs;
  BigRat rhs;
  bool holds() const { return lhs == rhs; }
};

// With Q = q^{r+1}:
//   lhs = sum_{n=k}^{Q-1} (-1)^n / n! prod_{j=k+1}^{n} (Q - j)
//   rhs = (-1)^k / ((Q - 1) (k - 1)!)
// Accepts 1 <= k <= Q - 1.
inline LemmaSides lemma_sum(long long q, int r, long long k) {
  if (q < 2 || r < 0) throw InvalidArgument("lemma_sum requires q >= 2, r >= 0");
  const BigInt big_q = ipow(BigInt(q), r + 1);
  if (k < 1) throw InvalidArgument("lemma_sum requires k >= 1");
  if (big_q - 1 < k) throw InvalidArgument("lemma_sum requires k <= q^(r+1) - 1");
  const long long top = static_cast<long long>(big_q - 1);

  LemmaSides sides{0, 0};
  BigInt n_fact = factorial(k);
  BigInt prod = 1;
  for (long long n = k; n <= top; ++n) {
    if (n > k) {
      n_fact *= n;
      prod *= big_q - n;
    }
    sides.lhs += BigRat(prod * sign_pow(n), n_fact);
  }
  sides.rhs = BigRat(BigInt(sign_pow(k)), (big_q - 1) * factorial(k - 1));
  return sides;
}

// chi(q, r+1) = -chi(q, r) / (q^{r+1} - 1), checked on via_counts totals.
inline LemmaSides telescoping_step(long long q, int r) {
  const BigRat next = chi_via_counts(q, r + 1).total;
  const BigRat prev = chi_via_counts(q, r).total;
  return {next, -prev / BigRat(ipow(BigInt(q), r + 1) - 1)};
}

struct Prop22Report {
  int r = 0;
  int n = 0;
  std::size_t num_classes = 0;
  BigRat lhs;  // sum over classes of 1/|Aut|
  BigInt grdc;
  BigRat rhs;  // grdc / n!
  bool holds() const { return lhs == rhs; }
};

// sum_{classes} 1/|Aut(Q)| against |Gr^dc(r, n; F_2)| / n!, the latter by
// brute-force Grassmannian enumeration.
inline Prop22Report verify_prop22(int r, int n, const EnumerationOptions& options = {}) {
  Prop22Report report;
  report.r = r;
  report.n = n;
  const auto classes = enumerate_binary_classes(r, n);
  report.num_classes = classes.size();
  report.lhs = 0;
  for (const IsoClass& c : classes) report.lhs += BigRat(BigInt(1), c.aut_order);
  report.grdc = grdc_bruteforce_count(r, n, 2, options);
  report.rhs = BigRat(report.grdc, factorial(n));
  return report;
}

struct BetaReport {
  int r = 0;
  CharPoly poly;      // of the rank-(r+1) binary projective geometry
  BigInt beta_raw;    // chi'(1) as literally defined
  BigInt beta;        // sign-normalized
  BigRat chi;         // chi_closed(2, r)
  BigRat product;     // beta * chi
  int expected = 0;   // (-1)^r
  bool holds() const { return product == BigRat(expected); }
};

// beta(P^r over F_2) * chi(B(r)) = (-1)^r, with P^r the rank-(r+1) binary
// projective geometry.
inline BetaReport verify_beta_relation(int r) {
  if (r < 1 || r > 3) throw SizeLimit("verify_beta_relation supports 1 <= r <= 3");
  const Matroid pg = pg_matroid(r + 1);
  BetaReport report;
  report.r = r;
  report.poly = characteristic_polynomial(pg);
  report.beta_raw = report.poly.derivative().evaluate(1);
  report.beta = r % 2 == 0 ? report.beta_raw : BigInt(-report.beta_raw);
  report.chi = chi_closed(2, r);
  report.product = BigRat(report.beta) * report.chi;
  report.expected = sign_pow(r);
  return report;
}

// Largest ground set of a simple rank-r matroid over F_p: (p^r - 1)/(p - 1).
inline long long projective_bound(int p, int r) {
  long long points = 0;
  long long pw = 1;
  for (int i = 0; i < r; ++i, pw *= p) points += pw;
  return points;
}

// Partial sum over simple F_p-realizable classes with n <= n_max. Marked
// partial unless n_max reaches the projective bound.
inline ChiReport chi_p_partial(int p, int r, int n_max, const EnumerationOptions& options = {}) {
  if (!PrimeField::is_prime(p)) throw InvalidArgument("chi_p_partial requires a prime p");
  if (r < 1) throw InvalidArgument("chi_p_partial requires r >= 1");
  ChiReport report{p, r, ChiMethod::kEnumerated, n_max < projective_bound(p, r), {}, 0};
  const int top = static_cast<int>(std::min<long long>(n_max, projective_bound(p, r)));
  for (int n = r; n <= top; ++n) {
    BigRat weight = 0;
    for (const auto& c : enumerate_realizable_classes(p, r, n, options)) {
      weight += BigRat(BigInt(1), c.iso.aut_order);
    }
    const BigRat term = weight * sign_pow(n);
    report.terms.push_back({n, weight, term});
    report.total += term;
  }
  return report;
}

}  // namespace binmat

#endif  // BINMAT_EULER_HPP_
