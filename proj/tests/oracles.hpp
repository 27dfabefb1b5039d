// Copyright 2026 The penrose-quantale Authors
//
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

// Independent reference computations for the tests. Nothing here calls the
// library's kernels; everything works on plain sets, strings and vectors.
#ifndef PENROSE_TESTS_ORACLES_HPP
#define PENROSE_TESTS_ORACLES_HPP

#include <cstddef>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "penrose/relation.hpp"

namespace oracle {

using Pair = std::pair<std::size_t, std::size_t>;
using PairSet = std::set<Pair>;

inline PairSet to_set(const penrose::Relation& r) {
  PairSet out;
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = 0; j < r.size(); ++j)
      if (r.test(i, j)) out.insert({i, j});
  return out;
}

inline PairSet compose(const PairSet& r, const PairSet& s) {
  PairSet out;
  for (const auto& [x, y] : r)
    for (const auto& [y2, z] : s)
      if (y == y2) out.insert({x, z});
  return out;
}

inline PairSet converse(const PairSet& r) {
  PairSet out;
  for (const auto& [x, y] : r) out.insert({y, x});
  return out;
}

inline PairSet unite(const PairSet& a, const PairSet& b) {
  PairSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

inline PairSet diagonal(std::size_t n) {
  PairSet out;
  for (std::size_t i = 0; i < n; ++i) out.insert({i, i});
  return out;
}

// Apply reflexivity, symmetry and transitivity until nothing changes.
inline PairSet closure(const PairSet& r, std::size_t n) {
  PairSet cur = unite(r, diagonal(n));
  for (;;) {
    PairSet next = unite(cur, converse(cur));
    next = unite(next, compose(next, next));
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

inline std::vector<std::vector<std::size_t>> union_find_blocks(const PairSet& r, std::size_t n) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [x, y] : r) {
    auto a = find(x), b = find(y);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<long> slot(n, -1);
  for (std::size_t x = 0; x < n; ++x) {
    const auto root = find(x);
    if (slot[root] < 0) {
      slot[root] = static_cast<long>(blocks.size());
      blocks.emplace_back();
    }
    blocks[static_cast<std::size_t>(slot[root])].push_back(x);
  }
  return blocks;
}

inline PairSet random_pairs(std::mt19937_64& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  PairSet out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (coin(rng)) out.insert({i, j});
  return out;
}

inline penrose::Relation from_set(std::size_t n, const PairSet& s) {
  penrose::Relation r(n);
  for (const auto& [x, y] : s) r.set(x, y);
  return r;
}

// Every 0/1 string of length L with no two adjacent 1s, lexicographic.
inline std::vector<std::string> brute_force_sequences(std::size_t length) {
  std::vector<std::string> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << length); ++mask) {
    std::string s(length, '0');
    for (std::size_t i = 0; i < length; ++i)
      if (mask >> (length - 1 - i) & 1U) s[i] = '1';
    if (s.find("11") == std::string::npos) out.push_back(s);
  }
  return out;
}

// s <n X| t in the Cantor model, read straight off the strings.
inline bool cantor_step(const std::string& s, const std::string& t, std::size_t n, char bit) {
  if (t[n] != bit) return false;
  for (std::size_t m = n + 1; m < s.size(); ++m)
    if (s[m] != t[m]) return false;
  return true;
}

}  // namespace oracle

#endif  // PENROSE_TESTS_ORACLES_HPP
