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

#ifndef PENROSE_THEORY_HPP
#define PENROSE_THEORY_HPP

#include <cstddef>
#include <string_view>
#include <vector>

#include "penrose/term.hpp"

namespace penrose {

enum class TheoryKind { PenT, PenS };

std::string_view theory_name(TheoryKind kind) noexcept;

/// Strings X_0 ... X_n with n + 1 <= max_level and X_n = L, shortest first,
/// then lexicographic with L before S.
std::vector<AdmissibleString> completeness_strings(std::size_t max_level);

/// Every instance of the tiling theory whose generators have level < max_level.
///
/// Per level n: C1_n, C2_n, D1_n, D2_n, E1_n_XY .. E4_n_XY, I1_n_X, I2_n_X,
/// followed by the completeness instances Cp_t with |t| = n + 1. Schemas that
/// mention level n + 1 are only emitted for n + 1 < max_level. D2_n is emitted
/// as a single sequent whose left side joins the X = L and X = S cases.
std::vector<Sequent> instantiate_pent(std::size_t max_level);

/// The sequence theory: instantiate_pent renamed generator by generator.
std::vector<Sequent> instantiate_pens(std::size_t max_level);

std::vector<Sequent> instantiate(TheoryKind kind, std::size_t max_level);

/// <n L| -> (s_n=0), <n S| -> (s_n=1), |n X> -> (s_n=b)*.
Term rename_pent_to_pens(const Term& t);
Sequent rename_pent_to_pens(const Sequent& s);

}  // namespace penrose

#endif  // PENROSE_THEORY_HPP
