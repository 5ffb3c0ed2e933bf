#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "galring/arith/ratfunc.hpp"

namespace galring {

struct Token {
  enum class Kind { Number, Identifier, Symbol, End };
  Kind kind;
  std::string text;
  std::size_t offset;
};

// Splits expression text into integers, identifiers ([A-Za-z_][A-Za-z0-9_]*)
// and single-character symbols. Whitespace is skipped; the middle-dot and
// tensor glyphs used by the canonical skew form are returned as symbols.
std::vector<Token> tokenize(std::string_view text);

// Cursor over a token list with error reporting.
class TokenStream {
 public:
  TokenStream(std::string_view source, std::vector<Token> tokens)
      : source_(source), tokens_(std::move(tokens)) {}

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }
  bool accept(std::string_view symbol);
  void expect(std::string_view symbol);
  bool at_end() const { return tokens_[pos_].kind == Token::Kind::End; }
  [[noreturn]] void error(const std::string& message) const;

 private:
  std::string source_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// Parses a rational function in the variables of `table`: integers, variable
// names, + - * / ^ (integer exponents, negative allowed) and parentheses.
RatFunc parse_ratfunc(std::string_view text, const TablePtr& table);
// As parse_ratfunc, but the result must be a polynomial.
Polynomial parse_polynomial(std::string_view text, const TablePtr& table);

}  // namespace galring
