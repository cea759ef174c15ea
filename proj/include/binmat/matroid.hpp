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

// Matroids stored as their family of bases, with isomorphism machinery and
// the invariants used by the Euler characteristic checks.

#ifndef BINMAT_MATROID_HPP_
#define BINMAT_MATROID_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "binmat/bits.hpp"
#include "binmat/errors.hpp"
#include "binmat/exact.hpp"
#include "binmat/gf.hpp"
#include "binmat/grassmann.hpp"

namespace binmat {

// A rank-r family of r-subsets of [n]. Construction only checks shape
// (nonempty, right sizes, inside [n]); the exchange axiom is checked
// separately by check_basis_exchange().
class Matroid {
 public:
  Matroid(int n, int r, std::vector<Mask> bases) : n_(n), r_(r), bases_(std::move(bases)) {
    if (n < 0 || n > kMaxGroundSet) throw InvalidArgument("ground set size out of range");
    if (r < 0 || r > n) throw InvalidArgument("rank out of range");
    if (bases_.empty()) throw InvalidArgument("a matroid needs at least one basis");
    for (Mask b : bases_) {
      if (popcount(b) != r || (b & ~full_mask(n)) != 0) {
        throw InvalidArgument("basis has wrong size or leaves the ground set");
      }
    }
    std::sort(bases_.begin(), bases_.end());
    bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());
  }

  // Bases given as 1-based element lists.
  static Matroid from_lists(int n, int r, const std::vector<std::vector<int>>& lists) {
    std::vector<Mask> masks;
    masks.reserve(lists.size());
    for (const auto& l : lists) {
      const Mask m = mask_of(l);
      if (popcount(m) != static_cast<int>(l.size())) {
        throw InvalidArgument("repeated element in basis");
      }
      masks.push_back(m);
    }
    return Matroid(n, r, std::move(masks));
  }

  static Matroid uniform(int r, int n) { return Matroid(n, r, k_subsets(n, r)); }

  int n() const { return n_; }
  int r() const { return r_; }
  const std::vector<Mask>& bases() const { return bases_; }
  std::size_t num_bases() const { return bases_.size(); }

  bool is_basis(Mask m) const {
    return std::binary_search(bases_.begin(), bases_.end(), m);
  }

  std::vector<std::vector<int>> bases_as_lists() const {
    std::vector<Mask> lex = bases_;
    std::sort(lex.begin(), lex.end(), [](Mask a, Mask b) {
      return elements_of(a) < elements_of(b);
    });
    std::vector<std::vector<int>> out;
    for (Mask b : lex) out.push_back(elements_of(b));
    return out;
  }

  // image[i] is the new 1-based label of element i + 1.
  Matroid relabel(std::span<const int> image) const {
    if (static_cast<int>(image.size()) != n_) throw InvalidArgument("relabel size mismatch");
    std::vector<Mask> out;
    out.reserve(bases_.size());
    for (Mask b : bases_) {
      Mask m = 0;
      for (int e : elements_of(b)) m |= element_bit(image[e - 1]);
      out.push_back(m);
    }
    return Matroid(n_, r_, std::move(out));
  }

  friend bool operator==(const Matroid&, const Matroid&) = default;
  // Canonical order: ground set, rank, then the sorted mask lists.
  friend auto operator<=>(const Matroid& a, const Matroid& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.r_ <=> b.r_; c != 0) return c;
    return a.bases_ <=> b.bases_;
  }

 private:
  int n_;
  int r_;
  std::vector<Mask> bases_;
};

namespace detail {

// O(1) basis membership for ground sets up to 22 elements.
class BasisTable {
 public:
  explicit BasisTable(const Matroid& q) : dense_(q.n() <= 22) {
    if (dense_) {
      table_.assign(std::size_t{1} << q.n(), 0);
      for (Mask b : q.bases()) table_[b] = 1;
    } else {
      sparse_.insert(q.bases().begin(), q.bases().end());
    }
  }
  bool operator()(Mask m) const { return dense_ ? table_[m] != 0 : sparse_.contains(m); }

 private:
  bool dense_;
  std::vector<std::uint8_t> table_;
  std::unordered_set<Mask> sparse_;
};

}  // namespace detail

// Q(A): the r-subsets of columns with a nonvanishing maximal minor.
inline Matroid matroid_of_matrix(const GFMatrix& a) {
  const int r = a.rows();
  const int n = a.cols();
  if (rank(a) != r) throw InvalidArgument("matroid_of_matrix requires full row rank");
  std::vector<Mask> bases;
  if (a.p() == 2) {
    std::vector<std::uint64_t> cols(n, 0);
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < r; ++i)
        if (a(i, j)) cols[j] |= std::uint64_t{1} << i;
    std::vector<std::uint64_t> picked(r);
    for_each_k_subset(n, r, [&](Mask s) {
      int t = 0;
      for (Mask m = s; m; m &= m - 1) picked[t++] = cols[std::countr_zero(m)];
      if (gf2_rank(picked) == r) bases.push_back(s);
    });
  } else {
    for_each_k_subset(n, r, [&](Mask s) {
      if (det(a.select_columns(s)) != 0) bases.push_back(s);
    });
  }
  return Matroid(n, r, std::move(bases));
}

inline bool check_basis_exchange(const Matroid& q) {
  const detail::BasisTable is_basis(q);
  for (Mask b1 : q.bases()) {
    for (Mask b2 : q.bases()) {
      if (b1 == b2) continue;
      for (Mask xs = b1 & ~b2; xs; xs &= xs - 1) {
        const Mask x = xs & (~xs + 1);
        bool found = false;
        for (Mask ys = b2 & ~b1; ys && !found; ys &= ys - 1) {
          const Mask y = ys & (~ys + 1);
          found = is_basis((b1 & ~x) | y);
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

// Size of the largest independent subset of S (independent = inside a basis).
inline int rank_of_subset(const Matroid& q, Mask s) {
  int best = 0;
  for (Mask b : q.bases()) best = std::max(best, popcount(b & s));
  return best;
}

inline bool is_simple(const Matroid& q) {
  for (int i = 1; i <= q.n(); ++i) {
    if (rank_of_subset(q, element_bit(i)) != 1) return false;
    for (int j = i + 1; j <= q.n(); ++j) {
      if (rank_of_subset(q, element_bit(i) | element_bit(j)) != 2) return false;
    }
  }
  return true;
}

// |GL_r(F_q)| = prod_{i=0}^{r-1} (q^r - q^i).
inline BigInt glq_order(int r, long long q) {
  if (q < 2) throw InvalidArgument("glq_order requires q >= 2");
  const BigInt qr = ipow(BigInt(q), r);
  BigInt result = 1;
  for (int i = 0; i < r; ++i) result *= qr - ipow(BigInt(q), i);
  return result;
}

// --- Automorphisms -------------------------------------------------------

inline constexpr int kMaxAutSearchN = 16;

namespace detail {

// Backtracking over partial bijections. Elements are placed in an order that
// starts with a basis, so the first full-size subset check happens at depth
// r. Candidates must match the per-element and per-pair basis counts, and
// every r-subset inside the placed prefix must keep its basis status.
class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Matroid& q)
      : n_(q.n()), r_(q.r()), is_basis_(q),
        degree_(n_, 0), pair_(static_cast<std::size_t>(n_) * n_, 0) {
    for (Mask b : q.bases()) {
      const auto els = elements_of(b);
      for (int x : els) {
        ++degree_[x - 1];
        for (int y : els) ++pair_[static_cast<std::size_t>(x - 1) * n_ + (y - 1)];
      }
    }
    const Mask first = q.bases().front();
    for (int e : elements_of(first)) order_.push_back(e - 1);
    for (int e = 0; e < n_; ++e)
      if (!(first & (Mask{1} << e))) order_.push_back(e);
  }

  // fn(image) for every automorphism; image[x] is the 0-based image of x.
  // Returning false from fn stops the search.
  void run(const std::function<bool(const std::vector<int>&)>& fn) {
    image_.assign(n_, -1);
    used_.assign(n_, false);
    stop_ = false;
    extend(0, fn);
  }

 private:
  int pair(int x, int y) const { return pair_[static_cast<std::size_t>(x) * n_ + y]; }

  bool consistent(int depth, int x, int y) const {
    for (int t = 0; t < depth; ++t) {
      const int u = order_[t];
      if (pair(u, x) != pair(image_[u], y)) return false;
    }
    if (r_ == 0 || depth < r_ - 1) return true;
    bool ok = true;
    for_each_k_subset(depth, r_ - 1, [&](Mask positions) {
      if (!ok) return;
      Mask src = Mask{1} << x;
      Mask dst = Mask{1} << y;
      for (Mask m = positions; m; m &= m - 1) {
        const int u = order_[std::countr_zero(m)];
        src |= Mask{1} << u;
        dst |= Mask{1} << image_[u];
      }
      if (is_basis_(src) != is_basis_(dst)) ok = false;
    });
    return ok;
  }

  void extend(int depth, const std::function<bool(const std::vector<int>&)>& fn) {
    if (stop_) return;
    if (depth == n_) {
      if (!fn(image_)) stop_ = true;
      return;
    }
    const int x = order_[depth];
    for (int y = 0; y < n_ && !stop_; ++y) {
      if (used_[y] || degree_[x] != degree_[y]) continue;
      if (!consistent(depth, x, y)) continue;
      image_[x] = y;
      used_[y] = true;
      extend(depth + 1, fn);
      used_[y] = false;
      image_[x] = -1;
    }
  }

  int n_;
  int r_;
  BasisTable is_basis_;
  std::vector<int> degree_;
  std::vector<int> pair_;
  std::vector<int> order_;
  std::vector<int> image_;
  std::vector<bool> used_;
  bool stop_ = false;
};

inline void check_aut_size(const Matroid& q, int limit) {
  if (q.n() > limit) {
    throw SizeLimit("automorphism search supports n <= " + std::to_string(limit) +
                    ", got n = " + std::to_string(q.n()));
  }
}

inline bool is_even_permutation(const std::vector<int>& image) {
  std::vector<bool> seen(image.size(), false);
  int transpositions = 0;
  for (std::size_t s = 0; s < image.size(); ++s) {
    if (seen[s]) continue;
    int len = 0;
    for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(image[x])) {
      seen[x] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

}  // namespace detail

// Calls fn(image) for every automorphism (0-based images); stop by
// returning false.
inline void for_each_automorphism(const Matroid& q,
                                  const std::function<bool(const std::vector<int>&)>& fn) {
  detail::check_aut_size(q, kMaxAutSearchN);
  detail::AutomorphismSearch(q).run(fn);
}

inline BigInt aut_order(const Matroid& q) {
  std::uint64_t count = 0;
  for_each_automorphism(q, [&](const std::vector<int>&) {
    ++count;
    return true;
  });
  return BigInt(count);
}

// No odd permutation preserves the bases.
inline bool is_alternating(const Matroid& q) {
  detail::check_aut_size(q, 10);
  bool alternating = true;
  detail::AutomorphismSearch(q).run([&](const std::vector<int>& image) {
    if (!detail::is_even_permutation(image)) alternating = false;
    return alternating;
  });
  return alternating;
}

// --- Canonical form ------------------------------------------------------

inline constexpr int kMaxCanonicalN = 16;

namespace detail {

// Finds the relabeling whose sorted basis-mask list is lexicographically
// least. New labels are handed out in order 1, 2, ...; after placing m
// elements, the bases inside the placed prefix are exactly the masks below
// 2^m, and they head the final sorted list. So each level contributes a
// "batch" (new bases whose top element is m), and comparing batches level by
// level (elementwise, a longer batch winning a prefix tie) orders partial
// labelings consistently with the final order. Branches are cut when their
// batch loses to the best path, and sibling candidates that lie in one orbit
// of the discovered automorphisms fixing the prefix are explored once.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Matroid& q)
      : q_(q), n_(q.n()), r_(q.r()), is_basis_(q) {}

  Matroid run() {
    tuple_.clear();
    placed_ = 0;
    best_.assign(n_, {});
    best_valid_ = 0;
    best_complete_ = false;
    descend();
    std::vector<int> image(n_);
    for (int i = 0; i < n_; ++i) image[best_tuple_[i]] = i + 1;
    return q_.relabel(image);
  }

  const std::vector<std::vector<int>>& automorphisms() const { return generators_; }

 private:
  // -1 / 0 / 1 as batch a is better / equal / worse than b.
  static int compare(const std::vector<Mask>& a, const std::vector<Mask>& b) {
    const std::size_t k = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < k; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    if (a.size() == b.size()) return 0;
    return a.size() > b.size() ? -1 : 1;
  }

  std::vector<Mask> batch_for(int candidate) const {
    std::vector<Mask> out;
    const int m = static_cast<int>(tuple_.size());
    if (r_ == 0 || m < r_ - 1) return out;
    for_each_k_subset(m, r_ - 1, [&](Mask positions) {
      Mask old_mask = Mask{1} << candidate;
      for (Mask s = positions; s; s &= s - 1) old_mask |= Mask{1} << tuple_[std::countr_zero(s)];
      if (is_basis_(old_mask)) out.push_back(positions | (Mask{1} << m));
    });
    std::sort(out.begin(), out.end());
    return out;
  }

  // Union-find orbits of the generators that fix the current prefix.
  std::vector<int> prefix_orbits() const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : generators_) {
      bool fixes = true;
      for (int u : tuple_) {
        if (g[u] != u) { fixes = false; break; }
      }
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) parent[find(x)] = find(g[x]);
    }
    for (int x = 0; x < n_; ++x) parent[x] = find(x);
    return parent;
  }

  void descend() {
    const int m = static_cast<int>(tuple_.size());
    if (m == n_) {
      if (best_complete_) {
        // Same form as the best leaf: best_tuple_[i] -> tuple_[i] preserves bases.
        std::vector<int> g(n_);
        for (int i = 0; i < n_; ++i) g[best_tuple_[i]] = tuple_[i];
        generators_.push_back(std::move(g));
      } else {
        best_tuple_ = tuple_;
        best_complete_ = true;
      }
      return;
    }

    std::vector<std::pair<std::vector<Mask>, int>> candidates;
    for (int c = 0; c < n_; ++c) {
      if (!(placed_ & (Mask{1} << c))) candidates.emplace_back(batch_for(c), c);
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& a, const auto& b) { return compare(a.first, b.first) < 0; });

    std::vector<int> explored;
    std::size_t seen_generators = static_cast<std::size_t>(-1);
    std::vector<int> orbit;
    for (auto& [batch, c] : candidates) {
      if (best_valid_ > m) {
        const int cmp = compare(batch, best_[m]);
        if (cmp > 0) continue;
        if (cmp < 0) {
          best_[m] = batch;
          best_valid_ = m + 1;
          best_complete_ = false;
        }
      } else {
        best_[m] = batch;
        best_valid_ = m + 1;
        best_complete_ = false;
      }
      if (!explored.empty()) {
        if (seen_generators != generators_.size()) {
          orbit = prefix_orbits();
          seen_generators = generators_.size();
        }
        const bool redundant = std::any_of(explored.begin(), explored.end(),
                                           [&](int e) { return orbit[e] == orbit[c]; });
        if (redundant) continue;
      }
      explored.push_back(c);
      tuple_.push_back(c);
      placed_ |= Mask{1} << c;
      descend();
      placed_ &= ~(Mask{1} << c);
      tuple_.pop_back();
    }
  }

  const Matroid& q_;
  int n_;
  int r_;
  BasisTable is_basis_;
  std::vector<int> tuple_;  // new label i -> old element tuple_[i] (0-based)
  Mask placed_ = 0;
  std::vector<std::vector<Mask>> best_;
  int best_valid_ = 0;
  bool best_complete_ = false;
  std::vector<int> best_tuple_;
  std::vector<std::vector<int>> generators_;
};

}  // namespace detail

// Lexicographically least relabeling; isomorphic inputs give equal outputs.
inline Matroid canonical_form(const Matroid& q) {
  if (q.n() > kMaxCanonicalN) {
    throw SizeLimit("canonical_form supports n <= " + std::to_string(kMaxCanonicalN));
  }
  if (q.n() == 0) return q;
  return detail::CanonicalSearch(q).run();
}

inline bool are_isomorphic(const Matroid& a, const Matroid& b) {
  if (a.n() != b.n() || a.r() != b.r() || a.num_bases() != b.num_bases()) return false;
  return canonical_form(a) == canonical_form(b);
}

// --- Isomorphism classes -------------------------------------------------

struct IsoClass {
  int r = 0;
  int n = 0;
  Matroid representative;
  BigInt aut_order;
  BigInt labeled_count;  // n! / aut_order
};

// Binary projective geometry: every nonzero vector of F_2^rank as a column,
// columns ordered by their integer code (bit i = coordinate i).
inline GFMatrix pg_matrix(int rank) {
  if (rank < 1 || rank > 5) throw SizeLimit("pg_matroid supports rank 1..5");
  const int n = (1 << rank) - 1;
  GFMatrix m(PrimeField(2), rank, n);
  for (int v = 1; v <= n; ++v)
    for (int i = 0; i < rank; ++i) m.set(i, v - 1, (v >> i) & 1);
  return m;
}

inline Matroid pg_matroid(int rank) { return matroid_of_matrix(pg_matrix(rank)); }

namespace detail {

// GL_r(F_2) acting on the 2^r - 1 nonzero vectors; perms[g][v-1] = g(v) - 1.
inline std::vector<std::vector<std::uint8_t>> gl2_point_permutations(int r) {
  const int points = (1 << r) - 1;
  std::vector<std::vector<std::uint8_t>> perms;
  std::vector<int> cols(r, 0);
  std::function<void(int)> pick = [&](int i) {
    if (i == r) {
      std::vector<std::uint8_t> perm(points);
      for (int v = 1; v <= points; ++v) {
        int image = 0;
        for (int b = 0; b < r; ++b)
          if ((v >> b) & 1) image ^= cols[b];
        perm[v - 1] = static_cast<std::uint8_t>(image - 1);
      }
      perms.push_back(std::move(perm));
      return;
    }
    for (int c = 1; c <= points; ++c) {
      cols[i] = c;
      std::vector<std::uint64_t> vecs(cols.begin(), cols.begin() + i + 1);
      if (gf2_rank(vecs) == i + 1) pick(i + 1);
    }
  };
  pick(0);
  return perms;
}

inline std::uint32_t apply_point_permutation(const std::vector<std::uint8_t>& perm,
                                             std::uint32_t subset) {
  std::uint32_t out = 0;
  for (std::uint32_t s = subset; s; s &= s - 1) out |= std::uint32_t{1} << perm[std::countr_zero(s)];
  return out;
}

inline GFMatrix matrix_of_point_subset(int r, std::uint32_t subset) {
  const int n = popcount(subset);
  GFMatrix m(PrimeField(2), r, n);
  int j = 0;
  for (std::uint32_t s = subset; s; s &= s - 1, ++j) {
    const int v = std::countr_zero(s) + 1;
    for (int i = 0; i < r; ++i) m.set(i, j, (v >> i) & 1);
  }
  return m;
}

}  // namespace detail

inline constexpr int kMaxBinaryClassRank = 4;

// Orbit data for one class of spanning point subsets of PG(r-1, 2).
struct BinaryOrbit {
  std::uint32_t min_subset;  // orbit minimum, bit v-1 = nonzero vector v
  BigInt stabilizer;
  BigInt orbit_size;
};

// Orbits of GL_r(F_2) on spanning n-subsets of the nonzero vectors of F_2^r,
// in increasing order of their minimal subset.
inline std::vector<BinaryOrbit> binary_subset_orbits(int r, int n) {
  if (r < 1 || r > kMaxBinaryClassRank) {
    throw SizeLimit("binary class enumeration supports 1 <= r <= 4");
  }
  const int points = (1 << r) - 1;
  if (n < r || n > points) return {};
  const auto perms = detail::gl2_point_permutations(r);
  std::vector<bool> visited(std::size_t{1} << points, false);
  std::vector<BinaryOrbit> out;
  std::vector<std::uint64_t> vecs;
  for_each_k_subset(points, n, [&](Mask subset) {
    if (visited[subset]) return;
    vecs.clear();
    for (Mask s = subset; s; s &= s - 1) vecs.push_back(std::countr_zero(s) + 1);
    if (gf2_rank(vecs) != r) return;
    std::uint64_t stab = 0;
    std::uint64_t orbit = 0;
    for (const auto& g : perms) {
      const std::uint32_t image = detail::apply_point_permutation(g, subset);
      if (image == subset) ++stab;
      if (!visited[image]) {
        visited[image] = true;
        ++orbit;
      }
    }
    out.push_back({subset, BigInt(stab), BigInt(orbit)});
  });
  return out;
}

// Isomorphism classes of simple binary (r, n)-matroids. Each class is an
// orbit of GL_r(F_2) on spanning n-sets of nonzero vectors, and its
// automorphism group is the set stabilizer, so aut_order = |GL_r| / |orbit|.
inline std::vector<IsoClass> enumerate_binary_classes(int r, int n) {
  std::vector<IsoClass> out;
  const BigInt group = glq_order(r, 2);
  const BigInt n_fact = factorial(n);
  for (const BinaryOrbit& orbit : binary_subset_orbits(r, n)) {
    const Matroid m = matroid_of_matrix(detail::matrix_of_point_subset(r, orbit.min_subset));
    const BigInt aut = group / orbit.orbit_size;
    out.push_back({r, n, canonical_form(m), aut, n_fact / aut});
  }
  std::sort(out.begin(), out.end(), [](const IsoClass& a, const IsoClass& b) {
    return a.representative < b.representative;
  });
  return out;
}

// --- Characteristic polynomial and beta ----------------------------------

inline constexpr int kMaxCharPolyN = 20;

// Integer polynomial, coefficients by ascending degree.
struct CharPoly {
  std::vector<std::int64_t> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  BigInt evaluate(const BigInt& t) const {
    BigInt acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  CharPoly derivative() const {
    CharPoly d;
    for (std::size_t i = 1; i < coeffs.size(); ++i)
      d.coeffs.push_back(static_cast<std::int64_t>(i) * coeffs[i]);
    if (d.coeffs.empty()) d.coeffs.push_back(0);
    return d;
  }

  // prod (t - root)
  static CharPoly from_roots(const std::vector<std::int64_t>& roots) {
    CharPoly p{{1}};
    for (std::int64_t a : roots) {
      std::vector<std::int64_t> next(p.coeffs.size() + 1, 0);
      for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        next[i + 1] += p.coeffs[i];
        next[i] -= a * p.coeffs[i];
      }
      p.coeffs = std::move(next);
    }
    return p;
  }

  // e.g. "t^3 - 7t^2 + 14t - 8"
  std::string str() const {
    std::string out;
    for (int i = degree(); i >= 0; --i) {
      const std::int64_t c = coeffs[i];
      if (c == 0 && !(i == 0 && out.empty())) continue;
      const std::int64_t mag = c < 0 ? -c : c;
      if (out.empty()) {
        if (c < 0) out += "-";
      } else {
        out += c < 0 ? " - " : " + ";
      }
      if (mag != 1 || i == 0) out += std::to_string(mag);
      if (i >= 1) out += "t";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

namespace detail {

// rank[S] for every subset S of [n]: S is independent iff it extends to a
// basis; otherwise rank[S] = max over x in S of rank[S - x].
inline std::vector<std::uint8_t> rank_table(const Matroid& q) {
  const int n = q.n();
  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> indep(size, 0);
  for (Mask b : q.bases()) indep[b] = 1;
  for (std::size_t s = size; s-- > 0;) {
    if (indep[s] || popcount(static_cast<Mask>(s)) >= q.r()) continue;
    for (int x = 0; x < n; ++x) {
      const std::size_t bit = std::size_t{1} << x;
      if (!(s & bit) && indep[s | bit]) {
        indep[s] = 1;
        break;
      }
    }
  }
  std::vector<std::uint8_t> rank(size, 0);
  for (std::size_t s = 1; s < size; ++s) {
    if (indep[s]) {
      rank[s] = static_cast<std::uint8_t>(popcount(static_cast<Mask>(s)));
      continue;
    }
    std::uint8_t best = 0;
    for (Mask m = static_cast<Mask>(s); m; m &= m - 1) {
      best = std::max(best, rank[s & ~(std::size_t{1} << std::countr_zero(m))]);
    }
    rank[s] = best;
  }
  return rank;
}

}  // namespace detail

// chi_Q(t) = sum over A subset of E of (-1)^|A| t^(r(E) - r(A)).
inline CharPoly characteristic_polynomial(const Matroid& q) {
  if (q.n() > kMaxCharPolyN) throw SizeLimit("characteristic_polynomial supports n <= 20");
  const auto rank = detail::rank_table(q);
  CharPoly poly{std::vector<std::int64_t>(q.r() + 1, 0)};
  for (std::size_t s = 0; s < rank.size(); ++s) {
    const int sign = popcount(static_cast<Mask>(s)) % 2 == 0 ? 1 : -1;
    poly.coeffs[q.r() - rank[s]] += sign;
  }
  return poly;
}

// chi_Q'(1) exactly as defined, without sign normalization.
inline BigInt beta_raw(const Matroid& q) {
  return characteristic_polynomial(q).derivative().evaluate(1);
}

// (-1)^(r-1) chi_Q'(1): nonnegative, and positive for connected matroids.
inline BigInt beta_invariant(const Matroid& q) {
  const BigInt raw = beta_raw(q);
  return (q.r() - 1) % 2 == 0 ? raw : BigInt(-raw);
}

// --- Realization counts over F_p -----------------------------------------

namespace detail {

// Basis set of the point's row space, or stops early (returning false) as
// soon as it disagrees with `target`.
inline bool point_realizes(const GrassmannPoint& pt, const Matroid& target,
                           const std::vector<Mask>& subsets) {
  const int r = pt.r();
  if (pt.p() == 2) {
    const auto codes = pt.column_codes();
    std::uint64_t picked[32];
    for (Mask s : subsets) {
      int t = 0;
      for (Mask m = s; m; m &= m - 1) picked[t++] = codes[std::countr_zero(m)];
      const bool basis = gf2_rank(std::span<const std::uint64_t>(picked, r)) == r;
      if (basis != target.is_basis(s)) return false;
    }
    return true;
  }
  const GFMatrix a = pt.matrix();
  for (Mask s : subsets) {
    if ((det(a.select_columns(s)) != 0) != target.is_basis(s)) return false;
  }
  return true;
}

}  // namespace detail

// Points of Gr(r, n; F_p) whose matroid is exactly Q (same labels).
inline BigInt stratum_count(const Matroid& q, int p, const EnumerationOptions& options = {}) {
  if (q.r() < 1) throw InvalidArgument("stratum_count requires rank >= 1");
  const std::vector<Mask> subsets = k_subsets(q.n(), q.r());
  std::uint64_t count = 0;
  for_each_subspace(
      q.r(), q.n(), p,
      [&](const GrassmannPoint& pt) {
        if (detail::point_realizes(pt, q, subsets)) ++count;
      },
      options);
  return BigInt(count);
}

// Isomorphism classes of simple F_p-realizable (r, n)-matroids, found by
// enumerating Gr(r, n; F_p), keeping the distinct labeled simple matroids and
// grouping them by canonical form. aut_order comes from the generic search;
// labeled_observed is the number of distinct labelings actually met.
struct RealizableClass {
  IsoClass iso;
  BigInt labeled_observed;
};

inline std::vector<RealizableClass> enumerate_realizable_classes(
    int p, int r, int n, const EnumerationOptions& options = {}) {
  std::set<Matroid> labeled;
  for_each_subspace(
      r, n, p,
      [&](const GrassmannPoint& pt) {
        Matroid m = matroid_of_matrix(pt.matrix());
        if (is_simple(m)) labeled.insert(std::move(m));
      },
      options);
  std::map<Matroid, std::uint64_t> classes;
  for (const Matroid& m : labeled) ++classes[canonical_form(m)];
  std::vector<RealizableClass> out;
  const BigInt n_fact = factorial(n);
  for (const auto& [rep, seen] : classes) {
    const BigInt aut = aut_order(rep);
    out.push_back({{r, n, rep, aut, n_fact / aut}, BigInt(seen)});
  }
  return out;
}

}  // namespace binmat

#endif  // BINMAT_MATROID_HPP_
