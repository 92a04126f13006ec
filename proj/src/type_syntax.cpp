// Copyright 2026 The gottype Authors
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
#include <string_view>
#include <vector>

#include "gottype/error.hpp"
#include "gottype/typesys.hpp"

namespace gottype {

namespace {

enum class Tok { LParen, RParen, Amp, Cross, Arrow, Tensor, Literal, End };

struct Token {
  Tok kind;
  std::string text;  // literal, normalized to ASCII
  std::size_t column;
};

constexpr std::string_view kTensor = "⊗";
constexpr std::string_view kCap = "∩";
constexpr std::string_view kTimes = "×";
constexpr std::string_view kTop = "⊤";
constexpr std::string_view kArrow = "→";

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      const std::size_t col = pos_ + 1;
      if (pos_ >= text_.size()) {
        out.push_back({Tok::End, {}, col});
        return out;
      }
      const char c = text_[pos_];
      if (c == '(') { ++pos_; out.push_back({Tok::LParen, {}, col}); continue; }
      if (c == ')') { ++pos_; out.push_back({Tok::RParen, {}, col}); continue; }
      if (c == '&' || eat(kCap)) {
        if (c == '&') ++pos_;
        out.push_back({Tok::Amp, {}, col});
        continue;
      }
      if (c == 'x' || eat(kTimes)) {
        if (c == 'x') ++pos_;
        out.push_back({Tok::Cross, {}, col});
        continue;
      }
      if (text_.substr(pos_, 2) == "->" || eat(kArrow)) {
        if (c == '-') pos_ += 2;
        out.push_back({Tok::Arrow, {}, col});
        continue;
      }
      if (eat(kTensor)) { out.push_back({Tok::Tensor, {}, col}); continue; }
      out.push_back({Tok::Literal, literal(col), col});
    }
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }

  bool eat(std::string_view s) {
    if (text_.substr(pos_, s.size()) != s) return false;
    pos_ += s.size();
    return true;
  }

  bool at_atom() const {
    if (pos_ >= text_.size()) return false;
    PauliAtom a{};
    return atom_from_char(text_[pos_], a) || text_.substr(pos_, kTop.size()) == kTop;
  }

  std::string literal(std::size_t col) {
    std::string out;
    if (text_[pos_] == '+' || text_[pos_] == '-') out.push_back(text_[pos_++]);
    if (pos_ < text_.size() && text_[pos_] == 'i') out.push_back(text_[pos_++]);
    while (at_atom()) {
      if (eat(kTop)) out.push_back('T');
      else out.push_back(text_[pos_++]);
    }
    if (out.empty() || out.back() == '+' || out.back() == '-' || out.back() == 'i') {
      throw ParseError("unexpected character in type near \"" + std::string(text_.substr(col - 1, 8)) + "\"",
                       1, pos_ + 1);
    }
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct Block {
  std::size_t width = 0;
  std::vector<PauliString> generators;
  bool top = false;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(Lexer(text).run()) {}

  Block chain() {
    Block b = intersection();
    while (peek().kind == Tok::Cross) {
      next();
      b = concat(b, intersection());
    }
    return b;
  }

  PauliString tensor_literal() {
    PauliString p = literal();
    while (peek().kind == Tok::Tensor) {
      next();
      p = tensor(p, literal());
    }
    return p;
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  void expect(Tok kind, std::string_view what) {
    if (peek().kind != kind) fail("expected " + std::string(what));
    next();
  }

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, peek().column); }

 private:
  Block intersection() {
    const std::size_t col = peek().column;
    Block b = primary();
    while (peek().kind == Tok::Amp) {
      next();
      Block c = primary();
      if (c.width != b.width) {
        throw ParseError("intersection of arity " + std::to_string(b.width) + " and " +
                             std::to_string(c.width) + " types",
                         1, col);
      }
      b.generators.insert(b.generators.end(), c.generators.begin(), c.generators.end());
      b.top = b.top || c.top;
    }
    return b;
  }

  Block primary() {
    if (peek().kind == Tok::LParen) {
      next();
      Block b = chain();
      expect(Tok::RParen, "')'");
      return b;
    }
    PauliString p = tensor_literal();
    Block b{p.arity(), {}, p.is_top()};
    if (!p.is_top()) b.generators.push_back(std::move(p));
    return b;
  }

  PauliString literal() {
    if (peek().kind != Tok::Literal) fail("expected a Pauli literal");
    const Token& t = next();
    try {
      return PauliString::parse(t.text);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), 1, t.column);
    }
  }

  static Block concat(const Block& a, const Block& b) {
    Block out{a.width + b.width, {}, a.top || b.top};
    for (const auto& g : a.generators) out.generators.push_back(tensor(g, PauliString::identity(b.width)));
    for (const auto& g : b.generators) out.generators.push_back(tensor(PauliString::identity(a.width), g));
    return out;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

QType to_qtype(const Block& b) {
  if (b.top) return QType::top(b.width);
  return factor_separable(StabType(b.width, b.generators));
}

}  // namespace

QType parse_qtype(std::string_view text) {
  Parser p(text);
  Block b = p.chain();
  if (p.peek().kind != Tok::End) p.fail("unexpected trailing input in type");
  return to_qtype(b);
}

ArrowJudgment parse_arrow(std::string_view text) {
  Parser p(text);
  Block in = p.chain();
  p.expect(Tok::Arrow, "'->'");
  Block out = p.chain();
  if (p.peek().kind != Tok::End) p.fail("unexpected trailing input in judgment");
  if (in.width != out.width) {
    throw ArityMismatch("arrow between arity " + std::to_string(in.width) + " and " +
                        std::to_string(out.width) + " types");
  }
  return {to_qtype(in), to_qtype(out)};
}

PauliString parse_pauli(std::string_view text) {
  Parser p(text);
  PauliString s = p.tensor_literal();
  if (p.peek().kind != Tok::End) p.fail("unexpected trailing input in Pauli string");
  return s;
}

}  // namespace gottype
