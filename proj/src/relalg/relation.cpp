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

#include "penrose/relation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "penrose/error.hpp"

namespace penrose {

namespace {

void require_same_size(const Relation& a, const Relation& b, const char* op) {
  if (a.size() != b.size()) {
    throw DimensionError(std::string(op) + ": size mismatch (" + std::to_string(a.size()) +
                         " vs " + std::to_string(b.size()) + ")");
  }
}

}  // namespace

Relation::Relation(std::size_t size) : rows_(size, StateSet(size)) {}

Relation Relation::identity(std::size_t size) {
  Relation r(size);
  for (std::size_t i = 0; i < size; ++i) r.rows_[i].set(i);
  return r;
}

Relation Relation::full(std::size_t size) {
  Relation r(size);
  for (auto& row : r.rows_) row.set();
  return r;
}

Relation Relation::from_pairs(std::size_t size, std::span<const StatePair> pairs) {
  Relation r(size);
  for (const auto& [from, to] : pairs) {
    if (from >= size || to >= size) {
      throw RangeError("pair (" + std::to_string(from) + "," + std::to_string(to) +
                       ") out of range for " + std::to_string(size) + " states");
    }
    r.rows_[from].set(to);
  }
  return r;
}

bool Relation::test(std::size_t from, std::size_t to) const {
  if (from >= size() || to >= size()) throw RangeError("state index out of range");
  return rows_[from].test(to);
}

void Relation::set(std::size_t from, std::size_t to, bool value) {
  if (from >= size() || to >= size()) throw RangeError("state index out of range");
  rows_[from].set(to, value);
}

std::vector<StatePair> Relation::pairs() const {
  std::vector<StatePair> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (auto j = rows_[i].find_first(); j != StateSet::npos; j = rows_[i].find_next(j)) {
      out.emplace_back(i, j);
    }
  }
  return out;
}

std::size_t Relation::count() const {
  std::size_t n = 0;
  for (const auto& row : rows_) n += row.count();
  return n;
}

bool Relation::none() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const StateSet& row) { return row.none(); });
}

StateSet Relation::image(const StateSet& states) const {
  if (states.size() != size()) throw DimensionError("image: state set size mismatch");
  StateSet out(size());
  for (auto i = states.find_first(); i != StateSet::npos; i = states.find_next(i)) {
    out |= rows_[i];
  }
  return out;
}

bool Relation::is_subset_of(const Relation& other) const {
  require_same_size(*this, other, "is_subset_of");
  for (std::size_t i = 0; i < size(); ++i) {
    if (!rows_[i].is_subset_of(other.rows_[i])) return false;
  }
  return true;
}

Relation Relation::restrict(std::span<const std::size_t> states) const {
  Relation out(states.size());
  for (std::size_t a = 0; a < states.size(); ++a) {
    for (std::size_t b = 0; b < states.size(); ++b) {
      if (test(states[a], states[b])) out.rows_[a].set(b);
    }
  }
  return out;
}

Relation compose(const Relation& r, const Relation& s) {
  require_same_size(r, s, "compose");
  const auto n = static_cast<std::ptrdiff_t>(r.size());
  Relation out(r.size());
#pragma omp parallel for schedule(static) if (n > 64)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto& src = r.row(static_cast<std::size_t>(i));
    auto& dst = out.mutable_row(static_cast<std::size_t>(i));
    for (auto y = src.find_first(); y != StateSet::npos; y = src.find_next(y)) dst |= s.row(y);
  }
  return out;
}

Relation join(std::span<const Relation> rs, std::size_t size) {
  Relation out(size);
  for (const auto& r : rs) {
    require_same_size(out, r, "join");
    for (std::size_t i = 0; i < size; ++i) out.mutable_row(i) |= r.row(i);
  }
  return out;
}

Relation join(std::span<const Relation> rs) { return join(rs, rs.empty() ? 0 : rs.front().size()); }

Relation converse(const Relation& r) {
  Relation out(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto& row = r.row(i);
    for (auto j = row.find_first(); j != StateSet::npos; j = row.find_next(j)) out.set(j, i);
  }
  return out;
}

Relation equivalence_closure(const Relation& r) {
  const std::size_t size = r.size();
  Relation out = r;
  for (std::size_t i = 0; i < size; ++i) {
    out.set(i, i);
    const auto& row = r.row(i);
    for (auto j = row.find_first(); j != StateSet::npos; j = row.find_next(j)) out.set(j, i);
  }
  // Warshall over the symmetric reflexive relation.
  const auto n = static_cast<std::ptrdiff_t>(size);
  for (std::size_t k = 0; k < size; ++k) {
    const StateSet pivot = out.row(k);
#pragma omp parallel for schedule(static) if (n > 64)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
      auto& row = out.mutable_row(static_cast<std::size_t>(i));
      if (row.test(k)) row |= pivot;
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> connected_components(const Relation& r) {
  const Relation closed = equivalence_closure(r);
  std::vector<std::vector<std::size_t>> blocks;
  StateSet seen(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (seen.test(i)) continue;
    const auto& row = closed.row(i);
    auto& block = blocks.emplace_back();
    for (auto j = row.find_first(); j != StateSet::npos; j = row.find_next(j)) block.push_back(j);
    seen |= row;
  }
  return blocks;
}

std::optional<StatePair> first_difference(const Relation& lhs, const Relation& rhs) {
  require_same_size(lhs, rhs, "first_difference");
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    const StateSet extra = lhs.row(i) - rhs.row(i);
    if (auto j = extra.find_first(); j != StateSet::npos) return StatePair{i, j};
  }
  return std::nullopt;
}

namespace serial {

Relation compose(const Relation& r, const Relation& s) {
  require_same_size(r, s, "compose");
  const std::size_t n = r.size();
  Relation out(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = 0; z < n; ++z) {
      for (std::size_t y = 0; y < n; ++y) {
        if (r.test(x, y) && s.test(y, z)) {
          out.set(x, z);
          break;
        }
      }
    }
  }
  return out;
}

Relation equivalence_closure(const Relation& r) {
  const std::size_t n = r.size();
  Relation out = r;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x) {
      if (!out.test(x, x)) {
        out.set(x, x);
        changed = true;
      }
      for (std::size_t y = 0; y < n; ++y) {
        if (!out.test(x, y)) continue;
        if (!out.test(y, x)) {
          out.set(y, x);
          changed = true;
        }
        for (std::size_t z = 0; z < n; ++z) {
          if (out.test(y, z) && !out.test(x, z)) {
            out.set(x, z);
            changed = true;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace serial

}  // namespace penrose
