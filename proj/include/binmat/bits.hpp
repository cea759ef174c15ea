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

// Subsets of a small ground set as bitmasks. Element j (1-based) is bit j-1.

#ifndef BINMAT_BITS_HPP_
#define BINMAT_BITS_HPP_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "binmat/errors.hpp"

namespace binmat {

using Mask = std::uint32_t;

inline constexpr int kMaxGroundSet = 32;

constexpr int popcount(Mask m) { return std::popcount(m); }

constexpr Mask full_mask(int n) {
  return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr Mask element_bit(int element) { return Mask{1} << (element - 1); }

// Builds a mask from 1-based element labels.
inline Mask mask_of(std::initializer_list<int> elements) {
  Mask m = 0;
  for (int e : elements) m |= element_bit(e);
  return m;
}

inline Mask mask_of(const std::vector<int>& elements) {
  Mask m = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxGroundSet) throw InvalidArgument("element out of range");
    m |= element_bit(e);
  }
  return m;
}

// Sorted 1-based labels of the set bits.
inline std::vector<int> elements_of(Mask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  while (m != 0) {
    out.push_back(std::countr_zero(m) + 1);
    m &= m - 1;
  }
  return out;
}

// Visits every k-subset of [n] in lexicographic order of the sorted element
// lists: {1,2,3}, {1,2,4}, ... The callback receives the mask.
template <typename Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    Mask m = 0;
    for (int i : idx) m |= Mask{1} << i;
    fn(m);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::vector<Mask> k_subsets(int n, int k) {
  std::vector<Mask> out;
  for_each_k_subset(n, k, [&](Mask m) { out.push_back(m); });
  return out;
}

// Visits every subset of `m` (including empty and m itself).
template <typename Fn>
void for_each_submask(Mask m, Fn&& fn) {
  Mask s = m;
  while (true) {
    fn(s);
    if (s == 0) return;
    s = (s - 1) & m;
  }
}

}  // namespace binmat

#endif  // BINMAT_BITS_HPP_
