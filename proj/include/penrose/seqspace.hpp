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

#ifndef PENROSE_SEQSPACE_HPP
#define PENROSE_SEQSPACE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace penrose {

using Bit = std::uint8_t;

/// True iff no 1 is immediately followed by another 1.
bool is_admissible(std::span<const Bit> bits);

/// A Penrose sequence truncated to its first L bits. Positions >= L read as 0,
/// so every admissible prefix denotes an admissible infinite sequence.
class TruncSeq {
 public:
  TruncSeq() = default;
  /// Throws RangeError on a non-binary entry or an inadmissible string.
  explicit TruncSeq(std::vector<Bit> bits);
  /// Parses a '0'/'1' string, index 0 leftmost.
  static TruncSeq parse(std::string_view text);

  std::size_t length() const noexcept { return bits_.size(); }
  Bit operator[](std::size_t i) const { return bits_.at(i); }
  /// Bit at any index, applying the tail-zero convention beyond the length.
  Bit at_or_zero(std::size_t i) const noexcept { return i < bits_.size() ? bits_[i] : 0; }
  std::span<const Bit> bits() const noexcept { return bits_; }
  std::string str() const;

  friend auto operator<=>(const TruncSeq&, const TruncSeq&) = default;
  friend bool operator==(const TruncSeq&, const TruncSeq&) = default;

 private:
  std::vector<Bit> bits_;
};

/// All admissible strings of length L in lexicographic order (the finite K_L).
std::vector<TruncSeq> enumerate_sequences(std::size_t length);

/// |K_L| via c(L) = c(L-1) + c(L-2), c(0) = 1, c(1) = 2.
std::uint64_t count_sequences(std::size_t length);

/// s_k = t_k for every k with from <= k < L. Throws DimensionError on
/// unequal lengths and RangeError if from > L.
bool tail_equal(const TruncSeq& s, const TruncSeq& t, std::size_t from);

/// U(n, b) at truncation L, in lexicographic order. Throws RangeError unless n < L.
std::vector<TruncSeq> cylinder(std::size_t length, std::size_t n, Bit b);

/// Position of each sequence of K_L in enumerate_sequences(L).
class SequenceIndex {
 public:
  explicit SequenceIndex(std::size_t length);
  std::size_t length() const noexcept { return length_; }
  const std::vector<TruncSeq>& sequences() const noexcept { return sequences_; }
  std::optional<std::size_t> find(const TruncSeq& s) const;

 private:
  std::size_t length_;
  std::vector<TruncSeq> sequences_;
  std::map<TruncSeq, std::size_t> index_;
};

}  // namespace penrose

#endif  // PENROSE_SEQSPACE_HPP
