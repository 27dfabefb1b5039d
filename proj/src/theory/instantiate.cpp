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

#include <string>

#include "penrose/seqspace.hpp"
#include "penrose/theory.hpp"

namespace penrose {

std::string_view theory_name(TheoryKind kind) noexcept { return kind == TheoryKind::PenT ? "pent" : "pens"; }

std::vector<AdmissibleString> completeness_strings(std::size_t max_level) {
  // A string X_0..X_n ending in L is any admissible X_0..X_{n-1} followed by L;
  // reading L as 0 and S as 1 these prefixes are exactly K_n.
  std::vector<AdmissibleString> out;
  for (std::size_t n = 0; n < max_level; ++n) {
    for (const auto& prefix : enumerate_sequences(n)) {
      std::vector<Tile> types;
      types.reserve(n + 1);
      for (Bit b : prefix.bits()) types.push_back(b == 0 ? Tile::L : Tile::S);
      types.push_back(Tile::L);
      out.emplace_back(std::move(types));
    }
  }
  return out;
}

namespace {

constexpr Tile kTiles[] = {Tile::L, Tile::S};

std::string suffix(Tile x) { return std::string(1, tile_char(x)); }

Term completeness_word(const AdmissibleString& t) {
  // <n X_n| ; ... ; <0 X_0| ; |0 X_0> ; ... ; |n X_n>
  const auto& xs = t.types();
  std::vector<Term> factors;
  factors.reserve(2 * xs.size());
  for (std::size_t k = xs.size(); k-- > 0;) factors.push_back(Term::forward(k, xs[k]));
  for (std::size_t k = 0; k < xs.size(); ++k) factors.push_back(Term::backward(k, xs[k]));
  return Term::mul(std::move(factors));
}

}  // namespace

std::vector<Sequent> instantiate_pent(std::size_t max_level) {
  using T = Term;
  std::vector<Sequent> out;
  const auto cp = completeness_strings(max_level);
  auto cp_it = cp.begin();

  for (std::size_t n = 0; n < max_level; ++n) {
    const auto ns = std::to_string(n);
    const bool next = n + 1 < max_level;

    out.push_back({"C1_" + ns, T::mul({T::forward(n, Tile::L), T::backward(n, Tile::S)}), T::bottom()});
    if (next) out.push_back({"C2_" + ns, T::forward(n, Tile::S), T::forward(n + 1, Tile::L)});
    out.push_back({"D1_" + ns, T::unit(), T::join({T::forward(n, Tile::L), T::forward(n, Tile::S)})});
    if (next) {
      std::vector<Term> lhs;
      for (Tile x : kTiles) lhs.push_back(T::mul({T::backward(n + 1, x), T::forward(n + 1, x)}));
      out.push_back({"D2_" + ns, T::join(std::move(lhs)), T::join({T::forward(n, Tile::S), T::forward(n, Tile::L)})});

      for (Tile x : kTiles) {
        for (Tile y : kTiles) {
          const auto tag = "_" + ns + "_" + suffix(x) + suffix(y);
          const auto rhs = T::forward(n + 1, x);
          out.push_back({"E1" + tag, T::mul({T::forward(n, y), T::forward(n + 1, x)}), rhs});
          out.push_back({"E2" + tag, T::mul({T::forward(n + 1, x), T::forward(n, y)}), rhs});
          out.push_back({"E3" + tag, T::mul({T::backward(n, y), T::forward(n + 1, x)}), rhs});
          out.push_back({"E4" + tag, T::mul({T::forward(n + 1, x), T::backward(n, y)}), rhs});
        }
      }
    }
    for (Tile x : kTiles) {
      const auto tag = "_" + ns + "_" + suffix(x);
      out.push_back({"I1" + tag, T::star(T::backward(n, x)), T::forward(n, x)});
      out.push_back({"I2" + tag, T::star(T::forward(n, x)), T::backward(n, x)});
    }
    for (; cp_it != cp.end() && cp_it->size() == n + 1; ++cp_it) {
      out.push_back({"Cp_" + cp_it->str(), T::unit(), completeness_word(*cp_it)});
    }
  }
  return out;
}

Term rename_pent_to_pens(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Gen: {
      const auto& g = t.generator();
      if (g.notation == Notation::Sequence) return t;
      Term s = Term::seq(g.level, g.tile);
      return g.daggered ? Term::star(std::move(s)) : s;
    }
    case Term::Kind::Mul:
    case Term::Kind::Join: {
      std::vector<Term> ops;
      ops.reserve(t.operands().size());
      for (const auto& o : t.operands()) ops.push_back(rename_pent_to_pens(o));
      return t.kind() == Term::Kind::Mul ? Term::mul(std::move(ops)) : Term::join(std::move(ops));
    }
    case Term::Kind::Star:
      return Term::star(rename_pent_to_pens(t.operands().front()));
    default:
      return t;
  }
}

Sequent rename_pent_to_pens(const Sequent& s) {
  return {s.name, rename_pent_to_pens(s.lhs), rename_pent_to_pens(s.rhs)};
}

std::vector<Sequent> instantiate_pens(std::size_t max_level) {
  auto axioms = instantiate_pent(max_level);
  for (auto& a : axioms) a = rename_pent_to_pens(a);
  return axioms;
}

std::vector<Sequent> instantiate(TheoryKind kind, std::size_t max_level) {
  return kind == TheoryKind::PenT ? instantiate_pent(max_level) : instantiate_pens(max_level);
}

}  // namespace penrose
