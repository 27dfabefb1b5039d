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

#include "penrose/representation.hpp"

#include <algorithm>
#include <string>

#include "penrose/error.hpp"
#include "penrose/theory.hpp"

namespace penrose {

namespace {

std::size_t generator_slot(std::size_t level, Tile tile) { return 2 * level + (tile == Tile::S ? 1 : 0); }

std::string describe_pair(const RelRep& rep, const StatePair& p) {
  return "(" + rep.label(p.first) + ", " + rep.label(p.second) + ")";
}

}  // namespace

RelRep::RelRep(std::vector<std::string> states, std::size_t trunc_level, std::vector<Relation> generators)
    : states_(std::move(states)), trunc_level_(trunc_level), generators_(std::move(generators)) {
  if (generators_.size() != 2 * trunc_level_) {
    throw DimensionError("expected " + std::to_string(2 * trunc_level_) + " generator relations, got " +
                         std::to_string(generators_.size()));
  }
  for (const auto& g : generators_) {
    if (g.size() != states_.size()) throw DimensionError("generator relation size differs from state count");
  }
}

std::optional<std::size_t> RelRep::find_state(std::string_view label) const {
  auto it = std::find(states_.begin(), states_.end(), label);
  if (it == states_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - states_.begin());
}

const Relation& RelRep::generator(std::size_t level, Tile tile) const {
  if (level >= trunc_level_) {
    throw TruncationError("generator level " + std::to_string(level) + " is not below truncation level " +
                          std::to_string(trunc_level_));
  }
  return generators_[generator_slot(level, tile)];
}

void require_within_truncation(const RelRep& rep, const Term& t) {
  if (auto top = max_level(t); top && *top >= rep.trunc_level()) {
    throw TruncationError("term mentions level " + std::to_string(*top) + " but the truncation level is " +
                          std::to_string(rep.trunc_level()));
  }
}

Relation connectivity(const RelRep& rep) {
  return equivalence_closure(join(rep.generators(), rep.size()));
}

Relation eval_term(const RelRep& rep, const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Gen: {
      const auto& g = t.generator();
      const auto& r = rep.generator(g.level, g.tile);
      return g.daggered ? converse(r) : r;
    }
    case Term::Kind::Unit:
      return Relation::identity(rep.size());
    case Term::Kind::Bottom:
      return Relation(rep.size());
    case Term::Kind::Top:
      return connectivity(rep);
    case Term::Kind::Mul: {
      Relation acc = eval_term(rep, t.operands().front());
      for (std::size_t i = 1; i < t.operands().size(); ++i) acc = compose(acc, eval_term(rep, t.operands()[i]));
      return acc;
    }
    case Term::Kind::Join: {
      Relation acc(rep.size());
      for (const auto& d : t.operands()) {
        const Relation r = eval_term(rep, d);
        for (std::size_t i = 0; i < acc.size(); ++i) acc.mutable_row(i) |= r.row(i);
      }
      return acc;
    }
    case Term::Kind::Star:
      return converse(eval_term(rep, t.operands().front()));
  }
  return Relation(rep.size());
}

Verdict check_sequent(const RelRep& rep, const Sequent& s) {
  require_within_truncation(rep, s.lhs);
  require_within_truncation(rep, s.rhs);
  const Relation lhs = eval_term(rep, s.lhs);
  const Relation rhs = eval_term(rep, s.rhs);
  Verdict v;
  v.witness = first_difference(lhs, rhs);
  v.pass = !v.witness.has_value();
  return v;
}

std::size_t TheoryReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const AxiomResult& r) { return !r.verdict.pass; }));
}

TheoryReport check_theory(const RelRep& rep, std::span<const Sequent> axioms) {
  for (const auto& a : axioms) {
    require_within_truncation(rep, a.lhs);
    require_within_truncation(rep, a.rhs);
  }
  TheoryReport report;
  report.results.resize(axioms.size());
  const auto n = static_cast<std::ptrdiff_t>(axioms.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    report.results[idx] = {axioms[idx].name, check_sequent(rep, axioms[idx])};
  }
  return report;
}

bool models_pent(const RelRep& rep) { return check_theory(rep, instantiate_pent(rep.trunc_level())).all_pass(); }

void require_model(const RelRep& rep) {
  const auto report = check_theory(rep, instantiate_pent(rep.trunc_level()));
  for (const auto& r : report.results) {
    if (!r.verdict.pass) {
      throw NotAModelError("representation does not model the tiling theory at level " +
                           std::to_string(rep.trunc_level()) + ": axiom " + r.name + " fails at " +
                           describe_pair(rep, *r.verdict.witness));
    }
  }
}

TruncSeq seq_of_state(const RelRep& rep, std::size_t state) {
  if (state >= rep.size()) throw RangeError("state index out of range");
  std::vector<Bit> bits(rep.trunc_level());
  for (std::size_t n = 0; n < rep.trunc_level(); ++n) {
    const bool large = rep.generator(n, Tile::L).test(state, state);
    const bool small = rep.generator(n, Tile::S).test(state, state);
    if (large == small) {
      throw NotAModelError("state '" + rep.label(state) + "' has " + (large ? "both" : "neither") + " of <" +
                           std::to_string(n) + " L| and <" + std::to_string(n) + " S| on the diagonal");
    }
    bits[n] = small ? 1 : 0;
  }
  if (!is_admissible(bits)) throw NotAModelError("state '" + rep.label(state) + "' has an inadmissible sequence");
  return TruncSeq(std::move(bits));
}

std::vector<TruncSeq> seq_map(const RelRep& rep) {
  std::vector<TruncSeq> out;
  out.reserve(rep.size());
  for (std::size_t x = 0; x < rep.size(); ++x) out.push_back(seq_of_state(rep, x));
  return out;
}

namespace {

/// Validates the spec and returns the block index of every state.
std::vector<std::size_t> validate_sigma(const SigmaSpec& spec) {
  const std::size_t n = spec.states.size();
  if (spec.sigma.size() != n) throw DimensionError("sigma must assign a sequence to every state");
  for (const auto& s : spec.sigma) {
    if (s.length() != spec.trunc_level) {
      throw DimensionError("sequence " + s.str() + " does not have length " + std::to_string(spec.trunc_level));
    }
  }
  constexpr auto kUnassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> block_of(n, kUnassigned);
  for (std::size_t b = 0; b < spec.blocks.size(); ++b) {
    for (auto x : spec.blocks[b]) {
      if (x >= n) throw RangeError("block member " + std::to_string(x) + " out of range");
      if (block_of[x] != kUnassigned) throw RangeError("state " + spec.states[x] + " appears in two blocks");
      block_of[x] = b;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (block_of[x] == kUnassigned) throw RangeError("state " + spec.states[x] + " is in no block");
  }
  const SequenceIndex index(spec.trunc_level);
  for (std::size_t b = 0; b < spec.blocks.size(); ++b) {
    std::vector<bool> hit(index.sequences().size(), false);
    for (auto x : spec.blocks[b]) hit[*index.find(spec.sigma[x])] = true;
    for (std::size_t i = 0; i < hit.size(); ++i) {
      if (!hit[i]) {
        throw NotSaturatedError("block " + std::to_string(b) + " has no state with sequence '" +
                                index.sequences()[i].str() + "'");
      }
    }
  }
  return block_of;
}

/// One past the highest index where s and t differ, 0 if equal.
std::size_t agreement_start(const TruncSeq& s, const TruncSeq& t) {
  for (std::size_t k = s.length(); k-- > 0;) {
    if (s[k] != t[k]) return k + 1;
  }
  return 0;
}

RelRep build_induced(const SigmaSpec& spec, bool parallel) {
  const auto block_of = validate_sigma(spec);
  const std::size_t n = spec.states.size();
  const std::size_t levels = spec.trunc_level;
  std::vector<Relation> gens(2 * levels, Relation(n));
  const auto rows = static_cast<std::ptrdiff_t>(n);
  // Each iteration writes only row x of every relation.
#pragma omp parallel for schedule(static) if (parallel && rows > 32)
  for (std::ptrdiff_t xi = 0; xi < rows; ++xi) {
    const auto x = static_cast<std::size_t>(xi);
    for (std::size_t y = 0; y < n; ++y) {
      if (block_of[x] != block_of[y]) continue;
      // <n X| relates x to y exactly for n >= (highest disagreement) and X = sigma(y)_n.
      const std::size_t lowest = agreement_start(spec.sigma[x], spec.sigma[y]);
      for (std::size_t lv = lowest == 0 ? 0 : lowest - 1; lv < levels; ++lv) {
        const Tile tile = spec.sigma[y][lv] == 0 ? Tile::L : Tile::S;
        gens[generator_slot(lv, tile)].mutable_row(x).set(y);
      }
    }
  }
  return RelRep(spec.states, levels, std::move(gens));
}

}  // namespace

RelRep induced_from_sigma(const SigmaSpec& spec) { return build_induced(spec, true); }

SigmaSpec replicated_sigma(std::size_t trunc_level, std::size_t multiplicity, std::size_t blocks) {
  if (multiplicity == 0 || multiplicity > 26) throw RangeError("multiplicity must be in 1..26");
  SigmaSpec spec;
  spec.trunc_level = trunc_level;
  const auto seqs = enumerate_sequences(trunc_level);
  for (std::size_t b = 0; b < blocks; ++b) {
    auto& block = spec.blocks.emplace_back();
    for (const auto& s : seqs) {
      for (std::size_t c = 0; c < multiplicity; ++c) {
        std::string label = s.str();
        if (blocks > 1) label = "B" + std::to_string(b) + ":" + label;
        if (multiplicity > 1) label.push_back(static_cast<char>('a' + c));
        block.push_back(spec.states.size());
        spec.states.push_back(std::move(label));
        spec.sigma.push_back(s);
      }
    }
  }
  return spec;
}

SigmaSpec random_sigma(std::mt19937_64& rng, std::size_t trunc_level, std::size_t max_blocks,
                       std::size_t max_multiplicity) {
  if (max_blocks == 0 || max_multiplicity == 0) throw RangeError("random_sigma: bounds must be positive");
  const auto seqs = enumerate_sequences(trunc_level);
  const std::size_t blocks = std::uniform_int_distribution<std::size_t>(1, max_blocks)(rng);
  std::vector<std::pair<std::size_t, TruncSeq>> draws;  // (block, sequence)
  for (std::size_t b = 0; b < blocks; ++b) {
    for (const auto& s : seqs) {
      const std::size_t copies = std::uniform_int_distribution<std::size_t>(1, max_multiplicity)(rng);
      for (std::size_t c = 0; c < copies; ++c) draws.emplace_back(b, s);
    }
  }
  std::shuffle(draws.begin(), draws.end(), rng);
  SigmaSpec spec;
  spec.trunc_level = trunc_level;
  spec.blocks.resize(blocks);
  for (std::size_t i = 0; i < draws.size(); ++i) {
    spec.states.push_back("x" + std::to_string(i));
    spec.blocks[draws[i].first].push_back(i);
    spec.sigma.push_back(draws[i].second);
  }
  return spec;
}

RelRep cantor_rep(std::size_t trunc_level) { return induced_from_sigma(replicated_sigma(trunc_level, 1, 1)); }

RelRep sum(std::span<const RelRep> reps) {
  if (reps.empty()) return RelRep{};
  const std::size_t levels = reps.front().trunc_level();
  std::size_t total = 0;
  for (const auto& r : reps) {
    if (r.trunc_level() != levels) throw DimensionError("sum: truncation levels differ");
    total += r.size();
  }
  std::vector<std::string> labels;
  labels.reserve(total);
  std::vector<Relation> gens(2 * levels, Relation(total));
  std::size_t offset = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const auto& r = reps[i];
    for (const auto& l : r.states()) labels.push_back(std::to_string(i) + ":" + l);
    for (std::size_t g = 0; g < gens.size(); ++g) {
      for (const auto& [x, y] : r.generators()[g].pairs()) gens[g].set(offset + x, offset + y);
    }
    offset += r.size();
  }
  return RelRep(std::move(labels), levels, std::move(gens));
}

Decomposition decompose(const RelRep& rep) {
  Decomposition d;
  d.blocks = connected_components(connectivity(rep));
  for (const auto& block : d.blocks) {
    std::vector<std::string> labels;
    for (auto x : block) labels.push_back(rep.label(x));
    std::vector<Relation> gens;
    for (const auto& g : rep.generators()) gens.push_back(g.restrict(block));
    d.components.emplace_back(std::move(labels), rep.trunc_level(), std::move(gens));
  }
  return d;
}

namespace serial {

TheoryReport check_theory(const RelRep& rep, std::span<const Sequent> axioms) {
  TheoryReport report;
  for (const auto& a : axioms) report.results.push_back({a.name, check_sequent(rep, a)});
  return report;
}

RelRep induced_from_sigma(const SigmaSpec& spec) { return build_induced(spec, false); }

}  // namespace serial

}  // namespace penrose
