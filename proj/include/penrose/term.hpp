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

#ifndef PENROSE_TERM_HPP
#define PENROSE_TERM_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace penrose {

enum class Tile : std::uint8_t { L, S };

char tile_char(Tile t) noexcept;

/// How a primitive proposition is written: <n X| and |n X> for the tiling
/// theory, (s_n=b) for the sequence theory. Sequence generators are never
/// daggered; their duals are written with an explicit star.
enum class Notation : std::uint8_t { Tiling, Sequence };

struct Generator {
  std::size_t level = 0;
  Tile tile = Tile::L;
  bool daggered = false;
  Notation notation = Notation::Tiling;

  friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Abstract syntax of noncommutative propositions.
///
/// Terms are built through the factory functions, which keep them
/// normalized: products are flattened, joins are flattened, sorted and
/// deduplicated, and one-operand products or joins collapse to the operand.
class Term {
 public:
  enum class Kind : std::uint8_t { Gen, Unit, Bottom, Top, Mul, Join, Star };

  /// Defaults to `true` (the unit).
  Term() = default;

  static Term gen(Generator g);
  static Term forward(std::size_t level, Tile tile);
  static Term backward(std::size_t level, Tile tile);
  static Term seq(std::size_t level, Tile tile);
  static Term unit();
  static Term bottom();
  static Term top();
  static Term mul(std::vector<Term> factors);
  static Term join(std::vector<Term> disjuncts);
  static Term star(Term t);

  Kind kind() const noexcept { return kind_; }
  /// Throws std::logic_error unless kind() == Gen.
  const Generator& generator() const;
  /// Factors of a Mul, disjuncts of a Join, the single operand of a Star.
  const std::vector<Term>& operands() const noexcept { return operands_; }

  friend bool operator==(const Term& a, const Term& b);
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  Kind kind_ = Kind::Unit;
  Generator gen_{};
  std::vector<Term> operands_;
};

void for_each_generator(const Term& t, const std::function<void(const Generator&)>& fn);
/// Highest generator level mentioned, if any.
std::optional<std::size_t> max_level(const Term& t);

struct Sequent {
  std::string name;
  Term lhs;
  Term rhs;

  friend bool operator==(const Sequent&, const Sequent&) = default;
};

/// Word X_0 ... X_n over {L, S} in which every S is followed by an L.
class AdmissibleString {
 public:
  /// Throws RangeError if an S is followed by an S.
  explicit AdmissibleString(std::vector<Tile> types);
  static AdmissibleString parse(std::string_view text);

  const std::vector<Tile>& types() const noexcept { return types_; }
  std::size_t size() const noexcept { return types_.size(); }
  std::string str() const;

  friend bool operator==(const AdmissibleString&, const AdmissibleString&) = default;

 private:
  std::vector<Tile> types_;
};

std::string print_term(const Term& t);
std::string print_sequent(const Sequent& s);
/// One "name : lhs |- rhs" line per sequent.
std::string print_theory(const std::vector<Sequent>& axioms);

/// Throws ParseError with the line and column of the offending character.
Term parse_term(std::string_view text);
/// Parses "lhs |- rhs"; the name is left empty.
Sequent parse_sequent(std::string_view text);
/// Parses a theory file; blank lines and lines starting with '#' are skipped.
std::vector<Sequent> parse_theory(std::string_view text);

}  // namespace penrose

#endif  // PENROSE_TERM_HPP
