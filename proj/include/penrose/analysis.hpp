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

#ifndef PENROSE_ANALYSIS_HPP
#define PENROSE_ANALYSIS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "penrose/representation.hpp"

namespace penrose {

struct ClassificationReport {
  bool connected = true;
  std::vector<std::vector<std::size_t>> components;
  bool deterministic = true;
  bool algebraically_irreducible = true;
  bool seq_injective_per_component = true;
  /// Least connected pair (x, y) for which no word sends {x} to exactly {y}.
  std::optional<StatePair> nondeterministic_pair;
  /// Least pair of distinct connected states sharing their sequence.
  std::optional<StatePair> seq_collision;
  /// Longest word tried by the fallback search.
  std::size_t word_bound = 0;
  /// Number of source states for which the fallback search was needed.
  std::size_t fallback_searches = 0;
};

/// Determinism is decided per connected pair (x, y) with the word
/// <L-1 X_{L-1}; ...; 0 X_0| spelling seq(y); when that word does not isolate
/// y, every word of length <= L over the 4L generators is searched. The
/// verdict is cross-checked against per-component injectivity of seq and a
/// mismatch raises InternalConsistencyError. Throws NotAModelError unless
/// rep models the tiling theory at its truncation.
ClassificationReport classify(const RelRep& rep);

struct EquivalenceResult {
  bool equivalent = false;
  /// bijection[x] = f(x) when equivalent.
  std::vector<std::size_t> bijection;
};

/// Largest non-deterministic component handled by exhaustive bijection search.
inline constexpr std::size_t kMaxSearchComponent = 8;

/// Equivalence of representations: a bijection f with x <a| y iff
/// f(x) <a| f(y). Representations at different truncation levels are never
/// equivalent. Throws NotAModelError for non-models and UnsupportedError
/// when a non-deterministic component has more than kMaxSearchComponent states.
EquivalenceResult are_equivalent(const RelRep& a, const RelRep& b);

struct ModuleHomResult {
  bool pass = true;
  std::optional<std::size_t> failing_state;
  std::optional<Generator> failing_generator;
};

/// Checks seq({x}.a) = {seq(x)}.a against cantor_rep(L) for every state x and
/// every forward and daggered generator a.
ModuleHomResult seq_module_hom_check(const RelRep& rep);

}  // namespace penrose

#endif  // PENROSE_ANALYSIS_HPP
