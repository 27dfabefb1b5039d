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

#ifndef PENROSE_REPRESENTATION_HPP
#define PENROSE_REPRESENTATION_HPP

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "penrose/relation.hpp"
#include "penrose/seqspace.hpp"
#include "penrose/term.hpp"

namespace penrose {

/// A relational representation truncated at level L: a labelled state set and
/// one relation per forward generator <n X| with n < L. Daggered generators
/// are never stored; they evaluate to converses.
class RelRep {
 public:
  /// The empty representation (no states, level 0).
  RelRep() = default;
  /// `generators` is ordered (0,L), (0,S), (1,L), ... and must hold 2L
  /// relations of size |states|; throws DimensionError otherwise.
  RelRep(std::vector<std::string> states, std::size_t trunc_level, std::vector<Relation> generators);

  std::size_t size() const noexcept { return states_.size(); }
  std::size_t trunc_level() const noexcept { return trunc_level_; }
  const std::vector<std::string>& states() const noexcept { return states_; }
  const std::string& label(std::size_t state) const { return states_.at(state); }
  std::optional<std::size_t> find_state(std::string_view label) const;

  /// Throws TruncationError if level >= trunc_level().
  const Relation& generator(std::size_t level, Tile tile) const;
  const std::vector<Relation>& generators() const noexcept { return generators_; }

  friend bool operator==(const RelRep&, const RelRep&) = default;

 private:
  std::vector<std::string> states_;
  std::size_t trunc_level_ = 0;
  std::vector<Relation> generators_;
};

/// Throws TruncationError if `t` mentions a level >= rep.trunc_level().
void require_within_truncation(const RelRep& rep, const Term& t);

/// r(t): generators map to their relation (or its converse when daggered),
/// true to the diagonal, false to the empty relation, ; to composition,
/// + to union, * to converse and top to connectivity(rep).
Relation eval_term(const RelRep& rep, const Term& t);

/// r(1): the equivalence relation generated by all generator transitions.
Relation connectivity(const RelRep& rep);

struct Verdict {
  bool pass = true;
  /// Least pair in r(lhs) \ r(rhs) when the sequent fails.
  std::optional<StatePair> witness;
};

/// a |- b holds iff r(a) is contained in r(b).
Verdict check_sequent(const RelRep& rep, const Sequent& s);

struct AxiomResult {
  std::string name;
  Verdict verdict;
};

struct TheoryReport {
  std::vector<AxiomResult> results;  // in axiom order

  std::size_t failures() const;
  bool all_pass() const { return failures() == 0; }
};

/// Checks every axiom; axioms are distributed over threads but the report
/// keeps the input order.
TheoryReport check_theory(const RelRep& rep, std::span<const Sequent> axioms);

/// True iff rep validates instantiate_pent(rep.trunc_level()).
bool models_pent(const RelRep& rep);
/// Throws NotAModelError naming the first failing axiom and its witness.
void require_model(const RelRep& rep);

/// seq(x)_n = 0 if x <n L| x, 1 if x <n S| x. Throws NotAModelError naming
/// the level if neither or both hold, or if the result is inadmissible.
TruncSeq seq_of_state(const RelRep& rep, std::size_t state);
std::vector<TruncSeq> seq_map(const RelRep& rep);

/// A partitioned state set with a map sigma onto truncated Penrose sequences.
/// Every block must map onto the whole of K_L.
struct SigmaSpec {
  std::vector<std::string> states;
  std::size_t trunc_level = 0;
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<TruncSeq> sigma;
};

/// x <n X| y iff x, y share a block, sigma(y)_n matches X and sigma(x)_k =
/// sigma(y)_k for n < k < L. Throws NotSaturatedError naming a sequence
/// missing from some block, RangeError if `blocks` is not a partition, and
/// DimensionError on inconsistent sizes.
RelRep induced_from_sigma(const SigmaSpec& spec);

/// `blocks` blocks, each holding `multiplicity` copies of K_L. Labels are the
/// sequence itself, prefixed "B<k>:" when blocks > 1 and suffixed with a copy
/// letter (a, b, ...) when multiplicity > 1.
SigmaSpec replicated_sigma(std::size_t trunc_level, std::size_t multiplicity, std::size_t blocks = 1);

/// A random saturated spec: 1..max_blocks blocks, each sequence of K_L
/// appearing 1..max_multiplicity times per block, states shuffled.
SigmaSpec random_sigma(std::mt19937_64& rng, std::size_t trunc_level, std::size_t max_blocks,
                       std::size_t max_multiplicity);

/// States K_L, s <n X| t iff t_n matches X and s, t agree above n.
RelRep cantor_rep(std::size_t trunc_level);

/// Block-diagonal sum on the disjoint union; labels become "<index>:<label>".
/// Throws DimensionError if the truncation levels differ. sum({}) is empty.
RelRep sum(std::span<const RelRep> reps);

struct Decomposition {
  std::vector<std::vector<std::size_t>> blocks;  // blocks of r(1), by least state
  std::vector<RelRep> components;                // restriction to each block
};

Decomposition decompose(const RelRep& rep);

namespace serial {

TheoryReport check_theory(const RelRep& rep, std::span<const Sequent> axioms);
RelRep induced_from_sigma(const SigmaSpec& spec);

}  // namespace serial

}  // namespace penrose

#endif  // PENROSE_REPRESENTATION_HPP
