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

#ifndef PENROSE_RELATION_HPP
#define PENROSE_RELATION_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace penrose {

/// A set of states 0..n-1.
using StateSet = boost::dynamic_bitset<std::uint64_t>;

using StatePair = std::pair<std::size_t, std::size_t>;

/// A binary relation on the states 0..size-1, stored as dense bit rows.
///
/// Row i holds the successors of state i, so (i, j) is in the relation iff
/// row(i)[j] is set. This is the carrier of the quantale Rel(X): union is the
/// join, diagrammatic composition the product, transposition the involution
/// and the diagonal the unit.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t size);

  static Relation identity(std::size_t size);
  static Relation full(std::size_t size);
  /// Throws RangeError if a pair addresses a state >= size.
  static Relation from_pairs(std::size_t size, std::span<const StatePair> pairs);

  std::size_t size() const noexcept { return rows_.size(); }
  bool test(std::size_t from, std::size_t to) const;
  void set(std::size_t from, std::size_t to, bool value = true);

  const StateSet& row(std::size_t from) const { return rows_.at(from); }
  StateSet& mutable_row(std::size_t from) { return rows_.at(from); }

  /// Pairs in row-major order.
  std::vector<StatePair> pairs() const;
  std::size_t count() const;
  bool none() const;

  /// The right action {x}.R extended to sets: all y with x R y for some x in `states`.
  StateSet image(const StateSet& states) const;

  bool is_subset_of(const Relation& other) const;
  /// Relation restricted to `states`, reindexed in the given order.
  Relation restrict(std::span<const std::size_t> states) const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<StateSet> rows_;
};

/// Diagrammatic composition: (x, z) in the result iff x r y and y s z for some y.
/// Rows are computed in parallel.
Relation compose(const Relation& r, const Relation& s);

/// Union of `rs`; the empty list yields the empty relation of size `size`.
Relation join(std::span<const Relation> rs, std::size_t size);
Relation join(std::span<const Relation> rs);

Relation converse(const Relation& r);

/// Smallest equivalence relation containing r.
Relation equivalence_closure(const Relation& r);

/// Blocks of equivalence_closure(r), each sorted, blocks ordered by least element.
std::vector<std::vector<std::size_t>> connected_components(const Relation& r);

/// Lexicographically least pair of `lhs` missing from `rhs`, if any.
std::optional<StatePair> first_difference(const Relation& lhs, const Relation& rhs);

/// Single-threaded reference kernels kept for cross-checking and benchmarks.
namespace serial {

/// Naive triple loop over (x, y, z).
Relation compose(const Relation& r, const Relation& s);
/// Fixed-point iteration of the reflexive, symmetric and transitive rules.
Relation equivalence_closure(const Relation& r);

}  // namespace serial

}  // namespace penrose

#endif  // PENROSE_RELATION_HPP
