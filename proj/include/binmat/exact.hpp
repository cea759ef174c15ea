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

// Exact integer and rational arithmetic plus the combinatorial helpers
// (factorials, binomials, falling products) that every count is built from.

#ifndef BINMAT_EXACT_HPP_
#define BINMAT_EXACT_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "binmat/errors.hpp"

namespace binmat {

// Unbounded signed integer. cpp_int keeps its magnitude canonical (no leading
// zero limbs, zero is non-negative), which is what the rest of the library
// relies on for structural equality.
using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& x) { return x.str(); }

// Parses an optionally signed decimal integer. Throws ParseError.
inline BigInt parse_bigint(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw ParseError("empty integer literal");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (text[j] < '0' || text[j] > '9') {
      throw ParseError("invalid integer literal '" + std::string(text) + "'");
    }
  }
  BigInt value(std::string(text.substr(i)));
  return text[0] == '-' ? BigInt(-value) : value;
}

// Exact rational, always in lowest terms with a positive denominator.
class BigRat {
 public:
  BigRat() = default;
  BigRat(std::int64_t n) : value_(n) {}  // NOLINT(runtime/explicit)
  BigRat(const BigInt& n) : value_(n) {}  // NOLINT(runtime/explicit)
  BigRat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    // The Boost 1.74 adaptor rejects negative denominators.
    value_ = den < 0 ? Impl(BigInt(-num), BigInt(-den)) : Impl(num, den);
  }

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const {
    return boost::multiprecision::denominator(value_);
  }
  bool is_zero() const { return value_ == 0; }
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  BigRat operator-() const { return BigRat(Impl(-value_)); }
  BigRat& operator+=(const BigRat& o) { value_ += o.value_; return *this; }
  BigRat& operator-=(const BigRat& o) { value_ -= o.value_; return *this; }
  BigRat& operator*=(const BigRat& o) { value_ *= o.value_; return *this; }
  BigRat& operator/=(const BigRat& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
  friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
  friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
  friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

  friend bool operator==(const BigRat& a, const BigRat& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const BigRat& a, const BigRat& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (a.value_ > b.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  BigRat reciprocal() const { return BigRat(1) / *this; }

  // "num/den"; integers keep the explicit "/1".
  std::string str() const {
    return numerator().str() + "/" + denominator().str();
  }

  // Accepts "num/den" or a bare integer "n".
  static BigRat parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRat(parse_bigint(text));
    return BigRat(parse_bigint(text.substr(0, slash)),
                  parse_bigint(text.substr(slash + 1)));
  }

 private:
  using Impl = boost::multiprecision::cpp_rational;
  explicit BigRat(Impl v) : value_(std::move(v)) {}

  Impl value_;
};

inline std::ostream& operator<<(std::ostream& os, const BigRat& x) {
  return os << x.str();
}
inline std::string to_string(const BigRat& x) { return x.str(); }

// (-1)^k as a small integer.
constexpr int sign_pow(long long k) { return (k % 2 == 0) ? 1 : -1; }

inline BigInt factorial(long long n) {
  if (n < 0) throw InvalidArgument("factorial of a negative number");
  BigInt result = 1;
  for (long long i = 2; i <= n; ++i) result *= i;
  return result;
}

// prod_{j=k+1}^{n} (a - j). Factors may be zero or negative; n == k gives 1.
inline BigInt falling_product(const BigInt& a, long long k, long long n) {
  if (n < k) throw InvalidArgument("falling_product requires n >= k");
  BigInt result = 1;
  for (long long j = k + 1; j <= n; ++j) {
    result *= a - j;
    if (result == 0) break;
  }
  return result;
}

// Zero outside 0 <= k <= n.
inline BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

inline BigInt ipow(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

}  // namespace binmat

#endif  // BINMAT_EXACT_HPP_
