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

#include "penrose/analysis.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "penrose/error.hpp"

namespace penrose {

namespace {

StateSet singleton(std::size_t size, std::size_t x) {
  StateSet s(size);
  s.set(x);
  return s;
}

/// {x}.<L-1 X_{L-1}| ... <0 X_0| with X_k spelled by `target`.
StateSet constructive_image(const RelRep& rep, std::size_t x, const TruncSeq& target) {
  StateSet current = singleton(rep.size(), x);
  for (std::size_t k = rep.trunc_level(); k-- > 0;) {
    current = rep.generator(k, target[k] == 0 ? Tile::L : Tile::S).image(current);
  }
  return current;
}

/// States y for which some word of length <= bound sends {x} to exactly {y}.
StateSet singletons_reachable(const RelRep& rep, std::size_t x, std::size_t bound) {
  std::vector<Relation> moves;
  for (const auto& g : rep.generators()) {
    moves.push_back(g);
    moves.push_back(converse(g));
  }
  StateSet found(rep.size());
  std::set<StateSet> seen;
  std::deque<std::pair<StateSet, std::size_t>> queue;
  auto visit = [&](StateSet s, std::size_t depth) {
    if (s.count() == 1) found.set(s.find_first());
    if (seen.insert(s).second) queue.emplace_back(std::move(s), depth);
  };
  visit(singleton(rep.size(), x), 0);
  while (!queue.empty()) {
    auto [current, depth] = std::move(queue.front());
    queue.pop_front();
    if (depth == bound) continue;
    for (const auto& m : moves) {
      StateSet next = m.image(current);
      if (next.any()) visit(std::move(next), depth + 1);
    }
  }
  return found;
}

bool preserves_generators(const RelRep& a, const RelRep& b, const std::vector<std::size_t>& f) {
  for (std::size_t g = 0; g < a.generators().size(); ++g) {
    const auto& ra = a.generators()[g];
    const auto& rb = b.generators()[g];
    for (std::size_t x = 0; x < a.size(); ++x) {
      for (std::size_t y = 0; y < a.size(); ++y) {
        if (ra.test(x, y) != rb.test(f[x], f[y])) return false;
      }
    }
  }
  return true;
}

bool seq_injective(const std::vector<TruncSeq>& seqs) {
  std::set<TruncSeq> distinct(seqs.begin(), seqs.end());
  return distinct.size() == seqs.size();
}

bool extend_bijection(const RelRep& a, const RelRep& b, const std::vector<TruncSeq>& sa,
                      const std::vector<TruncSeq>& sb, std::vector<std::size_t>& f, std::vector<bool>& used) {
  const std::size_t x = f.size();
  if (x == a.size()) return true;
  for (std::size_t y = 0; y < b.size(); ++y) {
    if (used[y] || sa[x] != sb[y]) continue;
    bool consistent = true;
    for (std::size_t g = 0; g < a.generators().size() && consistent; ++g) {
      const auto& ra = a.generators()[g];
      const auto& rb = b.generators()[g];
      if (ra.test(x, x) != rb.test(y, y)) consistent = false;
      for (std::size_t p = 0; p < x && consistent; ++p) {
        if (ra.test(p, x) != rb.test(f[p], y) || ra.test(x, p) != rb.test(y, f[p])) consistent = false;
      }
    }
    if (!consistent) continue;
    f.push_back(y);
    used[y] = true;
    if (extend_bijection(a, b, sa, sb, f, used)) return true;
    f.pop_back();
    used[y] = false;
  }
  return false;
}

/// A generator-preserving bijection between two connected components.
std::optional<std::vector<std::size_t>> component_bijection(const RelRep& a, const RelRep& b) {
  if (a.size() != b.size()) return std::nullopt;
  const auto sa = seq_map(a);
  const auto sb = seq_map(b);
  const bool det_a = seq_injective(sa);
  if (det_a != seq_injective(sb)) return std::nullopt;
  if (det_a) {
    std::map<TruncSeq, std::size_t> where;
    for (std::size_t y = 0; y < b.size(); ++y) where.emplace(sb[y], y);
    std::vector<std::size_t> f(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
      auto it = where.find(sa[x]);
      if (it == where.end()) return std::nullopt;
      f[x] = it->second;
    }
    if (!preserves_generators(a, b, f)) return std::nullopt;
    return f;
  }
  if (a.size() > kMaxSearchComponent) {
    throw UnsupportedError("equivalence of non-deterministic components is limited to " +
                           std::to_string(kMaxSearchComponent) + " states (got " + std::to_string(a.size()) + ")");
  }
  std::vector<std::size_t> f;
  std::vector<bool> used(b.size(), false);
  if (extend_bijection(a, b, sa, sb, f, used)) return f;
  return std::nullopt;
}

}  // namespace

ClassificationReport classify(const RelRep& rep) {
  require_model(rep);
  ClassificationReport report;
  const std::size_t n = rep.size();
  report.word_bound = rep.trunc_level();
  report.components = connected_components(connectivity(rep));
  report.connected = report.components.size() <= 1;

  const auto seqs = seq_map(rep);
  for (const auto& block : report.components) {
    for (std::size_t i = 0; i < block.size(); ++i) {
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        if (seqs[block[i]] != seqs[block[j]]) continue;
        const StatePair p{std::min(block[i], block[j]), std::max(block[i], block[j])};
        if (!report.seq_collision || p < *report.seq_collision) report.seq_collision = p;
      }
    }
  }
  report.seq_injective_per_component = !report.seq_collision.has_value();

  std::vector<std::size_t> component_of(n);
  for (std::size_t c = 0; c < report.components.size(); ++c) {
    for (auto x : report.components[c]) component_of[x] = c;
  }
  for (std::size_t x = 0; x < n && !report.nondeterministic_pair; ++x) {
    std::optional<StateSet> fallback;
    for (auto y : report.components[component_of[x]]) {
      if (constructive_image(rep, x, seqs[y]) == singleton(n, y)) continue;
      if (!fallback) {
        fallback = singletons_reachable(rep, x, report.word_bound);
        ++report.fallback_searches;
      }
      if (!fallback->test(y)) {
        report.nondeterministic_pair = StatePair{x, y};
        break;
      }
    }
  }
  report.deterministic = !report.nondeterministic_pair.has_value();
  report.algebraically_irreducible = report.connected && report.deterministic;

  if (report.deterministic != report.seq_injective_per_component) {
    throw InternalConsistencyError(std::string("determinism (") + (report.deterministic ? "yes" : "no") +
                                   ") disagrees with per-component injectivity of seq (" +
                                   (report.seq_injective_per_component ? "yes" : "no") + ")");
  }
  return report;
}

EquivalenceResult are_equivalent(const RelRep& a, const RelRep& b) {
  EquivalenceResult result;
  if (a.trunc_level() != b.trunc_level() || a.size() != b.size()) return result;
  require_model(a);
  require_model(b);
  const auto da = decompose(a);
  const auto db = decompose(b);
  if (da.components.size() != db.components.size()) return result;

  // Equivalence of components is an equivalence relation, so greedy matching
  // finds a perfect matching whenever one exists.
  std::vector<bool> matched(db.components.size(), false);
  result.bijection.assign(a.size(), 0);
  for (std::size_t i = 0; i < da.components.size(); ++i) {
    bool found = false;
    for (std::size_t j = 0; j < db.components.size() && !found; ++j) {
      if (matched[j]) continue;
      auto f = component_bijection(da.components[i], db.components[j]);
      if (!f) continue;
      matched[j] = true;
      found = true;
      for (std::size_t k = 0; k < f->size(); ++k) result.bijection[da.blocks[i][k]] = db.blocks[j][(*f)[k]];
    }
    if (!found) {
      result.bijection.clear();
      return result;
    }
  }
  result.equivalent = true;
  return result;
}

ModuleHomResult seq_module_hom_check(const RelRep& rep) {
  require_model(rep);
  const std::size_t levels = rep.trunc_level();
  const auto seqs = seq_map(rep);
  const RelRep cantor = cantor_rep(levels);
  const SequenceIndex index(levels);
  std::vector<std::size_t> seq_index(rep.size());
  for (std::size_t x = 0; x < rep.size(); ++x) seq_index[x] = *index.find(seqs[x]);

  for (std::size_t x = 0; x < rep.size(); ++x) {
    for (std::size_t lv = 0; lv < levels; ++lv) {
      for (Tile tile : {Tile::L, Tile::S}) {
        for (bool daggered : {false, true}) {
          const Relation& r = rep.generator(lv, tile);
          const Relation& c = cantor.generator(lv, tile);
          StateSet lhs(cantor.size());
          StateSet rhs(cantor.size());
          if (daggered) {
            for (std::size_t y = 0; y < rep.size(); ++y) {
              if (r.test(y, x)) lhs.set(seq_index[y]);
            }
            for (std::size_t s = 0; s < cantor.size(); ++s) {
              if (c.test(s, seq_index[x])) rhs.set(s);
            }
          } else {
            const auto& row = r.row(x);
            for (auto y = row.find_first(); y != StateSet::npos; y = row.find_next(y)) lhs.set(seq_index[y]);
            rhs = c.row(seq_index[x]);
          }
          if (lhs != rhs) {
            return {false, x, Generator{lv, tile, daggered, Notation::Tiling}};
          }
        }
      }
    }
  }
  return {};
}

}  // namespace penrose
