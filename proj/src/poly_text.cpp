// Copyright 2026 The nilgraph Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text form of skew polynomials.
//
//   poly    := ['-'] term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := var ['^' int] | coef
//   var     := 'x' int | 'x'            (bare 'x' only with one variable)
//   coef    := int                      (element index)
//            | '(' ... ')' | '[' ... ']' (element label, brackets balanced)
//            | ident                    (element label such as t or 2t)
//
// A term is the product of its factors in the extension, so "x*t" means x t
// and is rewritten to normal form.

#include <cctype>

#include "nilgraph/spbw.hpp"

namespace nilgraph::spbw {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

class Parser {
 public:
  Parser(const Extension& ext, std::string_view text) : ext_(ext), s_(text) {}

  SkewPoly parse() {
    skip_ws();
    if (at_end()) fail("a term");
    SkewPoly acc;
    bool negate = false;
    if (peek() == '-') {
      ++pos_;
      negate = true;
    }
    for (;;) {
      SkewPoly t = term();
      acc = negate ? ext_.sub(acc, t) : ext_.add(acc, t);
      skip_ws();
      if (at_end()) break;
      if (peek() == '+') negate = false;
      else if (peek() == '-') negate = true;
      else fail("'+', '-', '*' or end of input");
      ++pos_;
    }
    return acc;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) const {
    std::string found = at_end() ? "end of input" : "'" + std::string(1, s_[pos_]) + "'";
    throw Error(ErrorCode::ParseError, "at position " + std::to_string(pos_) + ": expected " +
                                           expected + ", found " + found);
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  SkewPoly term() {
    SkewPoly acc = factor();
    for (;;) {
      skip_ws();
      if (at_end() || peek() != '*') return acc;
      ++pos_;
      acc = ext_.multiply(acc, factor());
    }
  }

  std::size_t integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("an integer");
    const std::string_view digits = s_.substr(start, pos_ - start);
    if (digits.size() > 6) {
      pos_ = start;
      fail("an integer below 1000000");
    }
    return std::stoul(std::string(digits));
  }

  SkewPoly factor() {
    skip_ws();
    if (at_end()) fail("a coefficient or variable");
    const char c = peek();
    if (c == '(' || c == '[') return bracketed();
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') return word();
    fail("a coefficient or variable");
  }

  SkewPoly bracketed() {
    const std::size_t start = pos_;
    const char open = peek();
    const char close = open == '(' ? ')' : ']';
    int depth = 0;
    for (; !at_end(); ++pos_) {
      if (peek() == open) ++depth;
      else if (peek() == close && --depth == 0) break;
    }
    if (at_end()) fail(std::string("'") + close + "'");
    ++pos_;
    const std::string_view whole = s_.substr(start, pos_ - start);
    const std::string_view inner = whole.substr(1, whole.size() - 2);
    if (auto e = ext_.base().find(whole)) return ext_.constant(*e);
    if (auto e = ext_.base().find(inner)) return ext_.constant(*e);
    if (all_digits(inner)) return index_constant(start + 1, inner);
    pos_ = start;
    fail("an element label of " + ext_.base().label());
  }

  SkewPoly index_constant(std::size_t at, std::string_view digits) {
    const std::size_t v = std::stoul(std::string(digits.substr(0, 9)));
    if (digits.size() > 9 || v >= ext_.base().order()) {
      pos_ = at;
      fail("an element index below " + std::to_string(ext_.base().order()));
    }
    return ext_.constant(static_cast<Element>(v));
  }

  SkewPoly word() {
    const std::size_t start = pos_;
    // Variable: 'x' followed by digits, or a lone 'x' with one variable.
    if (peek() == 'x') {
      std::size_t p = pos_ + 1;
      while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p;
      const bool ends = p >= s_.size() || !(std::isalnum(static_cast<unsigned char>(s_[p])) || s_[p] == '_');
      if (ends && (p > pos_ + 1 || ext_.num_vars() == 1)) {
        std::size_t index = 1;
        if (p > pos_ + 1) {
          ++pos_;
          index = integer();
        } else {
          ++pos_;
        }
        if (index < 1 || index > ext_.num_vars()) {
          pos_ = start;
          fail("a variable x1..x" + std::to_string(ext_.num_vars()));
        }
        std::size_t e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          const std::size_t at = pos_;
          e = integer();
          if (e > 255) {
            pos_ = at;
            fail("an exponent below 256");
          }
        }
        return ext_.term(FiniteRing::one(), Monomial::var(index - 1, static_cast<std::uint8_t>(e)));
      }
    }
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    const std::string_view w = s_.substr(start, pos_ - start);
    if (all_digits(w)) {
      if (auto e = ext_.base().find(w); e && *e == std::stoul(std::string(w.substr(0, 9))))
        return ext_.constant(*e);
      return index_constant(start, w);
    }
    if (auto e = ext_.base().find(w)) return ext_.constant(*e);
    pos_ = start;
    fail("an element label of " + ext_.base().label());
  }

  const Extension& ext_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string Extension::format_coefficient(Element a) const {
  const std::string& l = base().element_label(a);
  if ((all_digits(l) && l == std::to_string(a)) || l.front() == '(' || l.front() == '[') return l;
  return "(" + l + ")";
}

std::string Extension::format_monomial(Monomial m) const {
  if (m.is_one()) return "1";
  std::string s;
  for (std::size_t i = 0; i < num_vars(); ++i) {
    const std::size_t e = m.exponent(i);
    if (!e) continue;
    if (!s.empty()) s += '*';
    s += num_vars() == 1 ? "x" : "x" + std::to_string(i + 1);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

std::string Extension::format(const SkewPoly& f) const {
  if (f.is_zero()) return "0";
  std::string s;
  for (const Term& t : f.terms()) {
    if (!s.empty()) s += " + ";
    if (t.mono.is_one()) {
      s += format_coefficient(t.coef);
    } else if (t.coef == FiniteRing::one()) {
      s += format_monomial(t.mono);
    } else {
      s += format_coefficient(t.coef) + "*" + format_monomial(t.mono);
    }
  }
  return s;
}

SkewPoly Extension::parse(std::string_view text) const { return Parser(*this, text).parse(); }

}  // namespace nilgraph::spbw
