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

#include "penrose/seqspace.hpp"

#include <algorithm>

#include "penrose/error.hpp"

namespace penrose {

bool is_admissible(std::span<const Bit> bits) {
  for (std::size_t i = 0; i + 1 < bits.size(); ++i) {
    if (bits[i] == 1 && bits[i + 1] == 1) return false;
  }
  return true;
}

TruncSeq::TruncSeq(std::vector<Bit> bits) : bits_(std::move(bits)) {
  if (std::any_of(bits_.begin(), bits_.end(), [](Bit b) { return b > 1; })) {
    throw RangeError("sequence entries must be 0 or 1");
  }
  if (!is_admissible(bits_)) throw RangeError("inadmissible sequence: " + str());
}

TruncSeq TruncSeq::parse(std::string_view text) {
  std::vector<Bit> bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw RangeError("invalid sequence character '" + std::string(1, c) + "'");
    bits.push_back(static_cast<Bit>(c - '0'));
  }
  return TruncSeq(std::move(bits));
}

std::string TruncSeq::str() const {
  std::string out;
  out.reserve(bits_.size());
  for (Bit b : bits_) out.push_back(static_cast<char>('0' + b));
  return out;
}

namespace {

void extend(std::vector<Bit>& prefix, std::size_t length, std::vector<TruncSeq>& out) {
  if (prefix.size() == length) {
    out.emplace_back(prefix);
    return;
  }
  prefix.push_back(0);
  extend(prefix, length, out);
  prefix.back() = 1;
  if (prefix.size() < 2 || prefix[prefix.size() - 2] == 0) extend(prefix, length, out);
  prefix.pop_back();
}

}  // namespace

std::vector<TruncSeq> enumerate_sequences(std::size_t length) {
  std::vector<TruncSeq> out;
  out.reserve(static_cast<std::size_t>(count_sequences(length)));
  std::vector<Bit> prefix;
  prefix.reserve(length);
  extend(prefix, length, out);
  return out;
}

std::uint64_t count_sequences(std::size_t length) {
  std::uint64_t prev = 1, cur = 2;  // c(0), c(1)
  if (length == 0) return prev;
  for (std::size_t l = 1; l < length; ++l) {
    const std::uint64_t next = cur + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

bool tail_equal(const TruncSeq& s, const TruncSeq& t, std::size_t from) {
  if (s.length() != t.length()) throw DimensionError("tail_equal: length mismatch");
  if (from > s.length()) throw RangeError("tail_equal: start index beyond truncation");
  for (std::size_t k = from; k < s.length(); ++k) {
    if (s[k] != t[k]) return false;
  }
  return true;
}

std::vector<TruncSeq> cylinder(std::size_t length, std::size_t n, Bit b) {
  if (n >= length) throw RangeError("cylinder: index " + std::to_string(n) + " not below " + std::to_string(length));
  if (b > 1) throw RangeError("cylinder: bit must be 0 or 1");
  std::vector<TruncSeq> out;
  for (auto& s : enumerate_sequences(length)) {
    if (s[n] == b) out.push_back(std::move(s));
  }
  return out;
}

SequenceIndex::SequenceIndex(std::size_t length)
    : length_(length), sequences_(enumerate_sequences(length)) {
  for (std::size_t i = 0; i < sequences_.size(); ++i) index_.emplace(sequences_[i], i);
}

std::optional<std::size_t> SequenceIndex::find(const TruncSeq& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

}  // namespace penrose
