/*
   Copyright 2026 The utri Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef UTRI_SRC_EXPR_PARSER_HPP
#define UTRI_SRC_EXPR_PARSER_HPP

// Recursive-descent parser shared by the free-algebra and commutative
// polynomial grammars. The ring-specific parts (constants, variable tokens,
// products) come from an Ops policy:
//
//   using Value = ...;
//   Value constant(const mpz_class& num, const mpz_class& den);
//   bool starts_variable(char c);
//   Value variable(Cursor& cur);            // consumes the token
//   Value add(Value, Value), sub, mul, neg;
//   bool has_commutator;                    // enables '[a,b]'

#include <cctype>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "utri/errors.hpp"

namespace utri::detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool at_end() { return peek() == '\0'; }
  bool consume(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, const char* what) {
    if (!consume(c)) throw SyntaxError(pos_, what);
  }
  std::size_t position() const { return pos_; }

  /// Reads a run of decimal digits; no whitespace skipping inside.
  mpz_class natural(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, what);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::uint32_t small_natural(const char* what) {
    const std::size_t start = pos_;
    mpz_class v = natural(what);
    if (!v.fits_uint_p()) throw SyntaxError(start, "a smaller integer");
    return static_cast<std::uint32_t>(v.get_ui());
  }

  void advance() { ++pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

template <class Ops>
class ExpressionParser {
 public:
  using Value = typename Ops::Value;

  ExpressionParser(std::string_view text, Ops& ops) : cur_(text), ops_(ops) {}

  Value parse() {
    Value v = expr();
    if (!cur_.at_end()) throw SyntaxError(cur_.position(), "'+', '-', '*' or end of input");
    return v;
  }

 private:
  Value expr() {
    bool negate = false;
    if (cur_.consume('-')) {
      negate = true;
    } else {
      cur_.consume('+');
    }
    Value acc = term();
    if (negate) acc = ops_.neg(std::move(acc));
    for (;;) {
      if (cur_.consume('+')) {
        acc = ops_.add(std::move(acc), term());
      } else if (cur_.consume('-')) {
        acc = ops_.sub(std::move(acc), term());
      } else {
        return acc;
      }
    }
  }

  Value term() {
    Value acc = factor();
    while (cur_.consume('*')) acc = ops_.mul(std::move(acc), factor());
    return acc;
  }

  Value factor() {
    Value base = atom();
    if (!cur_.consume('^')) return base;
    const std::uint32_t k = cur_.small_natural("exponent");
    if (k == 0) throw SyntaxError(cur_.position(), "positive exponent");
    Value acc = base;
    for (std::uint32_t i = 1; i < k; ++i) acc = ops_.mul(std::move(acc), base);
    return acc;
  }

  Value atom() {
    const char c = cur_.peek();
    if (c == '(') {
      cur_.advance();
      Value v = expr();
      cur_.expect(')', "')'");
      return v;
    }
    if (c == '[' && ops_.has_commutator) {
      cur_.advance();
      Value a = expr();
      cur_.expect(',', "','");
      Value b = expr();
      cur_.expect(']', "']'");
      Value ab = ops_.mul(a, b);
      Value ba = ops_.mul(std::move(b), std::move(a));
      return ops_.sub(std::move(ab), std::move(ba));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num = cur_.natural("integer");
      mpz_class den = 1;
      if (cur_.consume('/')) {
        const std::size_t at = cur_.position();
        den = cur_.natural("denominator");
        if (den == 0) throw SyntaxError(at, "nonzero denominator");
      }
      return ops_.constant(num, den);
    }
    if (c != '\0' && ops_.starts_variable(c)) return ops_.variable(cur_);
    throw SyntaxError(cur_.position(), ops_.atom_description());
  }

  Cursor cur_;
  Ops& ops_;
};

}  // namespace utri::detail

#endif  // UTRI_SRC_EXPR_PARSER_HPP
