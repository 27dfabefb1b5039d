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

#include "penrose/term.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "penrose/error.hpp"

namespace penrose {

char tile_char(Tile t) noexcept { return t == Tile::L ? 'L' : 'S'; }

Term Term::gen(Generator g) {
  if (g.notation == Notation::Sequence && g.daggered) {
    throw RangeError("sequence generators have no daggered form; use a star");
  }
  Term t;
  t.kind_ = Kind::Gen;
  t.gen_ = g;
  return t;
}

Term Term::forward(std::size_t level, Tile tile) { return gen({level, tile, false, Notation::Tiling}); }
Term Term::backward(std::size_t level, Tile tile) { return gen({level, tile, true, Notation::Tiling}); }
Term Term::seq(std::size_t level, Tile tile) { return gen({level, tile, false, Notation::Sequence}); }

Term Term::unit() { return Term{}; }

Term Term::bottom() {
  Term t;
  t.kind_ = Kind::Bottom;
  return t;
}

Term Term::top() {
  Term t;
  t.kind_ = Kind::Top;
  return t;
}

Term Term::mul(std::vector<Term> factors) {
  std::vector<Term> flat;
  flat.reserve(factors.size());
  for (auto& f : factors) {
    if (f.kind_ == Kind::Mul) {
      for (auto& g : f.operands_) flat.push_back(std::move(g));
    } else {
      flat.push_back(std::move(f));
    }
  }
  if (flat.empty()) return unit();
  if (flat.size() == 1) return std::move(flat.front());
  Term t;
  t.kind_ = Kind::Mul;
  t.operands_ = std::move(flat);
  return t;
}

Term Term::join(std::vector<Term> disjuncts) {
  std::vector<Term> flat;
  flat.reserve(disjuncts.size());
  for (auto& d : disjuncts) {
    if (d.kind_ == Kind::Join) {
      for (auto& g : d.operands_) flat.push_back(std::move(g));
    } else {
      flat.push_back(std::move(d));
    }
  }
  std::sort(flat.begin(), flat.end());
  flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
  if (flat.empty()) return bottom();
  if (flat.size() == 1) return std::move(flat.front());
  Term t;
  t.kind_ = Kind::Join;
  t.operands_ = std::move(flat);
  return t;
}

Term Term::star(Term operand) {
  Term t;
  t.kind_ = Kind::Star;
  t.operands_.push_back(std::move(operand));
  return t;
}

const Generator& Term::generator() const {
  if (kind_ != Kind::Gen) throw std::logic_error("term is not a generator");
  return gen_;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
  if (a.kind_ == Term::Kind::Gen) return a.gen_ <=> b.gen_;
  return std::lexicographical_compare_three_way(a.operands_.begin(), a.operands_.end(),
                                                b.operands_.begin(), b.operands_.end());
}

bool operator==(const Term& a, const Term& b) { return (a <=> b) == 0; }

void for_each_generator(const Term& t, const std::function<void(const Generator&)>& fn) {
  if (t.kind() == Term::Kind::Gen) {
    fn(t.generator());
    return;
  }
  for (const auto& o : t.operands()) for_each_generator(o, fn);
}

std::optional<std::size_t> max_level(const Term& t) {
  std::optional<std::size_t> best;
  for_each_generator(t, [&](const Generator& g) {
    if (!best || g.level > *best) best = g.level;
  });
  return best;
}

AdmissibleString::AdmissibleString(std::vector<Tile> types) : types_(std::move(types)) {
  for (std::size_t i = 0; i + 1 < types_.size(); ++i) {
    if (types_[i] == Tile::S && types_[i + 1] == Tile::S) {
      throw RangeError("inadmissible string: S followed by S at index " + std::to_string(i));
    }
  }
}

AdmissibleString AdmissibleString::parse(std::string_view text) {
  std::vector<Tile> types;
  for (char c : text) {
    if (c == 'L') {
      types.push_back(Tile::L);
    } else if (c == 'S') {
      types.push_back(Tile::S);
    } else {
      throw RangeError("invalid tile character '" + std::string(1, c) + "'");
    }
  }
  return AdmissibleString(std::move(types));
}

std::string AdmissibleString::str() const {
  std::string out;
  for (Tile t : types_) out.push_back(tile_char(t));
  return out;
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Binding strength of the printed form: join < mul < star < atom.
int precedence(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Join:
      return 0;
    case Term::Kind::Mul:
      return 1;
    case Term::Kind::Star:
      return 2;
    default:
      return 3;
  }
}

void print_into(const Term& t, std::string& out);

void print_at(const Term& t, int min_precedence, std::string& out) {
  if (precedence(t) < min_precedence) {
    out += '(';
    print_into(t, out);
    out += ')';
  } else {
    print_into(t, out);
  }
}

void print_generator(const Generator& g, std::string& out) {
  const auto level = std::to_string(g.level);
  if (g.notation == Notation::Sequence) {
    out += "(s_" + level + "=" + (g.tile == Tile::L ? "0" : "1") + ")";
  } else if (g.daggered) {
    out += "|" + level + " " + tile_char(g.tile) + ">";
  } else {
    out += "<" + level + " " + tile_char(g.tile) + "|";
  }
}

void print_into(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Gen:
      print_generator(t.generator(), out);
      break;
    case Term::Kind::Unit:
      out += "true";
      break;
    case Term::Kind::Bottom:
      out += "false";
      break;
    case Term::Kind::Top:
      out += "top";
      break;
    case Term::Kind::Mul:
      for (std::size_t i = 0; i < t.operands().size(); ++i) {
        if (i > 0) out += " ; ";
        // A nested product would re-parse flattened, so it is parenthesized.
        print_at(t.operands()[i], 2, out);
      }
      break;
    case Term::Kind::Join:
      for (std::size_t i = 0; i < t.operands().size(); ++i) {
        if (i > 0) out += " + ";
        print_at(t.operands()[i], 1, out);
      }
      break;
    case Term::Kind::Star:
      print_at(t.operands().front(), 2, out);
      out += '*';
      break;
  }
}

}  // namespace

std::string print_term(const Term& t) {
  std::string out;
  print_into(t, out);
  return out;
}

std::string print_sequent(const Sequent& s) { return print_term(s.lhs) + " |- " + print_term(s.rhs); }

std::string print_theory(const std::vector<Sequent>& axioms) {
  std::string out;
  for (const auto& a : axioms) out += a.name + " : " + print_sequent(a) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

constexpr std::size_t kMaxLevel = 1'000'000;

class Parser {
 public:
  Parser(std::string_view text, std::size_t line, std::size_t column_offset)
      : text_(text), line_(line), column_offset_(column_offset) {}

  Term term() {
    std::vector<Term> disjuncts{mul()};
    while (accept('+')) disjuncts.push_back(mul());
    if (disjuncts.size() == 1) return std::move(disjuncts.front());
    return Term::join(std::move(disjuncts));
  }

  bool at_turnstile() {
    skip_ws();
    return text_.substr(pos_, 2) == "|-";
  }

  void expect_turnstile() {
    if (!at_turnstile()) fail("expected '|-'");
    pos_ += 2;
  }

  void expect_end() {
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

 private:
  Term mul() {
    std::vector<Term> factors{star()};
    while (accept(';')) factors.push_back(star());
    if (factors.size() == 1) return std::move(factors.front());
    return Term::mul(std::move(factors));
  }

  Term star() {
    Term t = atom();
    while (accept('*')) t = Term::star(std::move(t));
    return t;
  }

  Term atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '<') {
      ++pos_;
      const auto level = nat();
      const Tile tile = tile_token();
      expect('|');
      return Term::forward(level, tile);
    }
    if (c == '|') {
      if (at_turnstile()) fail("unexpected '|-'");
      ++pos_;
      const auto level = nat();
      const Tile tile = tile_token();
      expect('>');
      return Term::backward(level, tile);
    }
    if (c == '(') {
      ++pos_;
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == 's') {
        ++pos_;
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '_') ++pos_;
        const auto level = nat();
        expect('=');
        skip_ws();
        if (pos_ >= text_.size() || (text_[pos_] != '0' && text_[pos_] != '1')) fail("expected 0 or 1");
        const Tile tile = text_[pos_] == '0' ? Tile::L : Tile::S;
        ++pos_;
        expect(')');
        return Term::seq(level, tile);
      }
      Term inner = term();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const auto word = text_.substr(start, pos_ - start);
      if (word == "e" || word == "true") return Term::unit();
      if (word == "false") return Term::bottom();
      if (word == "top") return Term::top();
      pos_ = start;
      fail("unknown keyword '" + std::string(word) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::size_t nat() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '-') fail("level is not a natural number");
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a level (natural number)");
    }
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > kMaxLevel) fail("level too large");
      ++pos_;
    }
    return value;
  }

  Tile tile_token() {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == 'L') {
      ++pos_;
      return Tile::L;
    }
    if (pos_ < text_.size() && text_[pos_] == 'S') {
      ++pos_;
      return Tile::S;
    }
    fail("expected tile type L or S");
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        ++line_;
        line_start_ = pos_ + 1;
        column_offset_ = 0;
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        break;
      }
      ++pos_;
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, column_offset_ + (pos_ - line_start_) + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t line_start_ = 0;
  std::size_t column_offset_;
};

Sequent parse_sequent_at(std::string_view text, std::size_t line, std::size_t column_offset) {
  Parser p(text, line, column_offset);
  Sequent s;
  s.lhs = p.term();
  p.expect_turnstile();
  s.rhs = p.term();
  p.expect_end();
  return s;
}

}  // namespace

Term parse_term(std::string_view text) {
  Parser p(text, 1, 0);
  Term t = p.term();
  p.expect_end();
  return t;
}

Sequent parse_sequent(std::string_view text) { return parse_sequent_at(text, 1, 0); }

std::vector<Sequent> parse_theory(std::string_view text) {
  std::vector<Sequent> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    ++line_no;
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(start, end - start);
    start = end + 1;

    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') {
      if (end == text.size()) break;
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'name : sequent'", line_no, first + 1);
    auto name = line.substr(first, colon - first);
    while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back()))) name.remove_suffix(1);
    if (name.empty()) throw ParseError("missing axiom name", line_no, first + 1);
    for (std::size_t i = 0; i < name.size(); ++i) {
      const auto c = static_cast<unsigned char>(name[i]);
      if (!std::isalnum(c) && c != '_') throw ParseError("invalid character in axiom name", line_no, first + i + 1);
    }
    for (const auto& s : out) {
      if (s.name == name) throw ParseError("duplicate axiom name '" + std::string(name) + "'", line_no, first + 1);
    }
    Sequent s = parse_sequent_at(line.substr(colon + 1), line_no, colon + 1);
    s.name = std::string(name);
    out.push_back(std::move(s));
    if (end == text.size()) break;
  }
  return out;
}

}  // namespace penrose
