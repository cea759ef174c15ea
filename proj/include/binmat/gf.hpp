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

// Linear algebra over small prime fields: matrices, row-reduced echelon form,
// determinants and Plücker coordinates. Over F_2 rows are packed into 64-bit
// words and reduced with XOR.

#ifndef BINMAT_GF_HPP_
#define BINMAT_GF_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "binmat/bits.hpp"
#include "binmat/errors.hpp"

namespace binmat {

using Residue = std::uint8_t;

class PrimeField {
 public:
  static constexpr int kMaxPrime = 31;

  explicit PrimeField(int p) : p_(p) {
    if (!is_prime(p) || p > kMaxPrime) {
      throw InvalidArgument("field modulus must be a prime in [2, 31], got " +
                            std::to_string(p));
    }
  }

  static constexpr bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d) {
      if (p % d == 0) return false;
    }
    return true;
  }

  int p() const { return p_; }

  Residue reduce(long long x) const {
    long long r = x % p_;
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const { return reduce(int{a} + b); }
  Residue sub(Residue a, Residue b) const { return reduce(int{a} - b); }
  Residue mul(Residue a, Residue b) const { return reduce(int{a} * b); }
  Residue neg(Residue a) const { return reduce(-int{a}); }

  // Fermat inverse; a must be nonzero.
  Residue inv(Residue a) const {
    if (a == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(p_));
    Residue result = 1;
    Residue base = a;
    for (int e = p_ - 2; e > 0; e >>= 1) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  int p_;
};

// Dense r x n matrix over F_p. Indices are 0-based in the accessors; the
// 1-based column labels of the combinatorial API are converted at the edges.
class GFMatrix {
 public:
  GFMatrix(PrimeField field, int rows, int cols)
      : field_(field), rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw InvalidArgument("matrix must be at least 1x1");
    if (cols > kMaxGroundSet) throw SizeLimit("at most 32 columns are supported");
    data_.assign(static_cast<std::size_t>(rows) * cols, 0);
  }

  // Entries are reduced mod p, so -1 may be written for p-1.
  static GFMatrix from_rows(PrimeField field,
                            const std::vector<std::vector<long long>>& rows) {
    if (rows.empty() || rows[0].empty()) throw InvalidArgument("empty matrix");
    GFMatrix m(field, static_cast<int>(rows.size()),
               static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows_; ++i) {
      if (static_cast<int>(rows[i].size()) != m.cols_) {
        throw InvalidArgument("ragged matrix rows");
      }
      for (int j = 0; j < m.cols_; ++j) m.set(i, j, field.reduce(rows[i][j]));
    }
    return m;
  }

  static GFMatrix from_rows(int p, const std::vector<std::vector<long long>>& rows) {
    return from_rows(PrimeField(p), rows);
  }

  static GFMatrix identity(PrimeField field, int r) {
    GFMatrix m(field, r, r);
    for (int i = 0; i < r; ++i) m.set(i, i, 1);
    return m;
  }

  const PrimeField& field() const { return field_; }
  int p() const { return field_.p(); }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Residue operator()(int i, int j) const { return data_[index(i, j)]; }
  void set(int i, int j, Residue v) { data_[index(i, j)] = field_.reduce(v); }

  std::span<const Residue> row(int i) const {
    return {data_.data() + static_cast<std::size_t>(i) * cols_,
            static_cast<std::size_t>(cols_)};
  }

  std::vector<Residue> column(int j) const {
    std::vector<Residue> c(rows_);
    for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  // Submatrix of the given 0-based columns, in the order listed.
  GFMatrix select_columns(std::span<const int> cols) const {
    GFMatrix m(field_, rows_, static_cast<int>(cols.size()));
    for (int i = 0; i < rows_; ++i) {
      for (std::size_t c = 0; c < cols.size(); ++c) m.set(i, static_cast<int>(c), (*this)(i, cols[c]));
    }
    return m;
  }

  // Columns indexed by a subset mask, increasing order.
  GFMatrix select_columns(Mask subset) const {
    std::vector<int> cols;
    for (int e : elements_of(subset)) cols.push_back(e - 1);
    return select_columns(cols);
  }

  std::vector<std::vector<long long>> to_rows() const {
    std::vector<std::vector<long long>> out(rows_, std::vector<long long>(cols_));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
    return out;
  }

  friend GFMatrix operator*(const GFMatrix& a, const GFMatrix& b) {
    if (a.field_ != b.field_ || a.cols_ != b.rows_) {
      throw InvalidArgument("incompatible matrix product");
    }
    GFMatrix c(a.field_, a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
      for (int j = 0; j < b.cols_; ++j) {
        long long acc = 0;
        for (int k = 0; k < a.cols_; ++k) acc += int{a(i, k)} * b(k, j);
        c.set(i, j, a.field_.reduce(acc));
      }
    }
    return c;
  }

  friend bool operator==(const GFMatrix&, const GFMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * cols_ + j;
  }

  PrimeField field_;
  int rows_;
  int cols_;
  std::vector<Residue> data_;
};

inline std::ostream& operator<<(std::ostream& os, const GFMatrix& m) {
  os << "F_" << m.p() << "[";
  for (int i = 0; i < m.rows(); ++i) {
    os << (i ? ";" : "");
    for (int j = 0; j < m.cols(); ++j) os << (j ? " " : "") << int{m(i, j)};
  }
  return os << "]";
}

// Packed matrix over F_2; row i is a word whose bit j is entry (i, j).
class Gf2Matrix {
 public:
  Gf2Matrix(int rows, int cols) : cols_(cols), rows_(rows, 0) {
    if (cols > 64) throw SizeLimit("packed F_2 rows hold at most 64 columns");
  }

  static Gf2Matrix pack(const GFMatrix& m) {
    if (m.p() != 2) throw InvalidArgument("pack() requires an F_2 matrix");
    Gf2Matrix out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        if (m(i, j)) out.rows_[i] |= std::uint64_t{1} << j;
    return out;
  }

  GFMatrix unpack() const {
    GFMatrix m(PrimeField(2), rows(), cols_);
    for (int i = 0; i < rows(); ++i)
      for (int j = 0; j < cols_; ++j) m.set(i, j, (rows_[i] >> j) & 1U);
    return m;
  }

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  std::uint64_t row(int i) const { return rows_[i]; }
  std::uint64_t& row(int i) { return rows_[i]; }

  // In-place reduction to RREF; returns 0-based pivot columns.
  std::vector<int> reduce() {
    std::vector<int> pivots;
    int next = 0;
    for (int col = 0; col < cols_ && next < rows(); ++col) {
      const std::uint64_t bit = std::uint64_t{1} << col;
      int found = -1;
      for (int i = next; i < rows(); ++i) {
        if (rows_[i] & bit) { found = i; break; }
      }
      if (found < 0) continue;
      std::swap(rows_[next], rows_[found]);
      for (int i = 0; i < rows(); ++i) {
        if (i != next && (rows_[i] & bit)) rows_[i] ^= rows_[next];
      }
      pivots.push_back(col);
      ++next;
    }
    return pivots;
  }

 private:
  int cols_;
  std::vector<std::uint64_t> rows_;
};

// Rank of up to 64 vectors of F_2^r given as bit words (bit i = coordinate i).
inline int gf2_rank(std::span<const std::uint64_t> vectors) {
  std::uint64_t basis[64] = {};
  int rank = 0;
  for (std::uint64_t v : vectors) {
    for (int b = 63; b >= 0 && v; --b) {
      if (!((v >> b) & 1U)) continue;
      if (!basis[b]) {
        basis[b] = v;
        ++rank;
        v = 0;
      } else {
        v ^= basis[b];
      }
    }
  }
  return rank;
}

struct RrefResult {
  GFMatrix matrix;
  int rank;
  std::vector<int> pivots;  // 1-based, strictly increasing
};

namespace detail {

inline RrefResult rref_generic(const GFMatrix& a) {
  const PrimeField& f = a.field();
  GFMatrix m = a;
  std::vector<int> pivots;
  int next = 0;
  for (int col = 0; col < m.cols() && next < m.rows(); ++col) {
    int found = -1;
    for (int i = next; i < m.rows(); ++i) {
      if (m(i, col) != 0) { found = i; break; }
    }
    if (found < 0) continue;
    if (found != next) {
      for (int j = 0; j < m.cols(); ++j) {
        const Residue t = m(next, j);
        m.set(next, j, m(found, j));
        m.set(found, j, t);
      }
    }
    const Residue scale = f.inv(m(next, col));
    for (int j = 0; j < m.cols(); ++j) m.set(next, j, f.mul(m(next, j), scale));
    for (int i = 0; i < m.rows(); ++i) {
      const Residue factor = m(i, col);
      if (i == next || factor == 0) continue;
      for (int j = 0; j < m.cols(); ++j) {
        m.set(i, j, f.sub(m(i, j), f.mul(factor, m(next, j))));
      }
    }
    pivots.push_back(col + 1);
    ++next;
  }
  return {std::move(m), next, std::move(pivots)};
}

inline RrefResult rref_gf2(const GFMatrix& a) {
  Gf2Matrix packed = Gf2Matrix::pack(a);
  std::vector<int> pivots = packed.reduce();
  for (int& c : pivots) c += 1;
  const int rank = static_cast<int>(pivots.size());
  return {packed.unpack(), rank, std::move(pivots)};
}

}  // namespace detail

// Unique reduced row echelon form. Zero rows stay at the bottom.
inline RrefResult rref(const GFMatrix& a) {
  return a.p() == 2 ? detail::rref_gf2(a) : detail::rref_generic(a);
}

inline int rank(const GFMatrix& a) { return rref(a).rank; }

inline Residue det(const GFMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("det of a non-square matrix");
  const PrimeField& f = a.field();
  GFMatrix m = a;
  const int n = m.rows();
  Residue result = 1;
  for (int col = 0; col < n; ++col) {
    int found = -1;
    for (int i = col; i < n; ++i) {
      if (m(i, col) != 0) { found = i; break; }
    }
    if (found < 0) return 0;
    if (found != col) {
      for (int j = 0; j < n; ++j) {
        const Residue t = m(col, j);
        m.set(col, j, m(found, j));
        m.set(found, j, t);
      }
      result = f.neg(result);
    }
    result = f.mul(result, m(col, col));
    const Residue pinv = f.inv(m(col, col));
    for (int i = col + 1; i < n; ++i) {
      const Residue factor = f.mul(m(i, col), pinv);
      if (factor == 0) continue;
      for (int j = col; j < n; ++j) {
        m.set(i, j, f.sub(m(i, j), f.mul(factor, m(col, j))));
      }
    }
  }
  return result;
}

// p_I = det A_I for every r-subset I of the columns, I as a column mask.
class PluckerVector {
 public:
  PluckerVector(PrimeField field, int r, int n, std::map<Mask, Residue> coords)
      : field_(field), r_(r), n_(n), coords_(std::move(coords)) {}

  const PrimeField& field() const { return field_; }
  int r() const { return r_; }
  int n() const { return n_; }
  const std::map<Mask, Residue>& coords() const { return coords_; }

  Residue at(Mask subset) const {
    auto it = coords_.find(subset);
    if (it == coords_.end()) throw InvalidArgument("not an r-subset of [n]");
    return it->second;
  }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const auto& kv) { return kv.second == 0; });
  }

  // det[A_I | A_k]: the column k appended after the columns I (|I| = r-1).
  // Zero when k is in I; otherwise the sorted coordinate times the sign of
  // the shuffle that moves k into place.
  Residue appended(Mask rest, int k) const {
    const Mask kb = element_bit(k);
    if (rest & kb) return 0;
    const int after = popcount(rest & ~full_mask(k));
    const Residue v = at(rest | kb);
    return after % 2 == 0 ? v : field_.neg(v);
  }

 private:
  PrimeField field_;
  int r_;
  int n_;
  std::map<Mask, Residue> coords_;
};

inline PluckerVector plucker(const GFMatrix& a) {
  if (rank(a) != a.rows()) throw InvalidArgument("plucker() requires a full-rank matrix");
  std::map<Mask, Residue> coords;
  for_each_k_subset(a.cols(), a.rows(),
                    [&](Mask s) { coords.emplace(s, det(a.select_columns(s))); });
  return PluckerVector(a.field(), a.rows(), a.cols(), std::move(coords));
}

// Membership of the row space in the distinct-column locus, decided from the
// Plücker coordinates alone. Column i vanishes iff p_{I+i} = 0 for every
// (r-1)-set I avoiding i. Columns i and j agree iff det[A_I|A_i] equals
// det[A_I|A_j] for every (r-1)-set I; the functionals det[A_I|.] span the dual
// of F^r when A has full rank, so restricting to I that avoid i and j is not
// enough (it misses U_{2,3} over F_2, for example).
inline bool distinct_columns_via_plucker(const PluckerVector& pv) {
  const int n = pv.n();
  const int r = pv.r();
  const std::vector<Mask> rests = k_subsets(n, r - 1);
  for (int i = 1; i <= n; ++i) {
    bool vanishes = true;
    for (Mask rest : rests) {
      if (!(rest & element_bit(i)) && pv.at(rest | element_bit(i)) != 0) {
        vanishes = false;
        break;
      }
    }
    if (vanishes) return false;
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      bool equal = true;
      for (Mask rest : rests) {
        if (pv.appended(rest, i) != pv.appended(rest, j)) {
          equal = false;
          break;
        }
      }
      if (equal) return false;
    }
  }
  return true;
}

// Literal check: no zero column, no two equal columns.
inline bool columns_distinct_nonzero(const GFMatrix& a) {
  std::vector<std::vector<Residue>> cols;
  for (int j = 0; j < a.cols(); ++j) {
    auto c = a.column(j);
    if (std::all_of(c.begin(), c.end(), [](Residue v) { return v == 0; })) return false;
    cols.push_back(std::move(c));
  }
  std::sort(cols.begin(), cols.end());
  return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

}  // namespace binmat

#endif  // BINMAT_GF_HPP_
