#include "galring/arith/parse.hpp"

#include <cctype>

#include "galring/error.hpp"

namespace galring {

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (std::isdigit(c)) {
      std::size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      out.push_back({Token::Kind::Number, std::string(text.substr(i, j - i)), i});
      i = j;
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      out.push_back({Token::Kind::Identifier, std::string(text.substr(i, j - i)), i});
      i = j;
      continue;
    }
    // UTF-8 "⊗" (E2 8A 97) and "·" (C2 B7).
    if (text.substr(i, 3) == "\xE2\x8A\x97") {
      out.push_back({Token::Kind::Symbol, "@", i});
      i += 3;
      continue;
    }
    if (text.substr(i, 2) == "\xC2\xB7") {
      out.push_back({Token::Kind::Symbol, "*", i});
      i += 2;
      continue;
    }
    if (std::string_view("+-*/^()[],<>@").find(static_cast<char>(c)) == std::string_view::npos) {
      fail(ErrorKind::Parse, "unexpected character '" + std::string(1, static_cast<char>(c)) + "' at offset " +
                                 std::to_string(i) + " in '" + std::string(text) + "'");
    }
    out.push_back({Token::Kind::Symbol, std::string(1, static_cast<char>(c)), i});
    ++i;
  }
  out.push_back({Token::Kind::End, "", text.size()});
  return out;
}

bool TokenStream::accept(std::string_view symbol) {
  if (peek().kind == Token::Kind::Symbol && peek().text == symbol) {
    next();
    return true;
  }
  return false;
}

void TokenStream::expect(std::string_view symbol) {
  if (!accept(symbol)) error("expected '" + std::string(symbol) + "'");
}

void TokenStream::error(const std::string& message) const {
  fail(ErrorKind::Parse, message + " at offset " + std::to_string(peek().offset) + " in '" + source_ + "'");
}

namespace {

class RatFuncParser {
 public:
  RatFuncParser(std::string_view text, TablePtr table) : ts_(text, tokenize(text)), table_(std::move(table)) {}

  RatFunc parse() {
    RatFunc r = expr();
    if (!ts_.at_end()) ts_.error("trailing input");
    return r;
  }

 private:
  RatFunc expr() {
    RatFunc acc(BigRational(0), table_);
    bool negate = false;
    if (ts_.accept("-")) negate = true;
    else ts_.accept("+");
    RatFunc t = term();
    acc = negate ? -t : t;
    while (true) {
      if (ts_.accept("+")) acc += term();
      else if (ts_.accept("-")) acc -= term();
      else break;
    }
    return acc;
  }

  RatFunc term() {
    RatFunc acc = power();
    while (true) {
      if (ts_.accept("*")) acc *= power();
      else if (ts_.accept("/")) acc /= power();
      else break;
    }
    return acc;
  }

  RatFunc power() {
    RatFunc base = atom();
    if (ts_.accept("^")) {
      bool neg = ts_.accept("-");
      const Token& t = ts_.next();
      if (t.kind != Token::Kind::Number) ts_.error("expected integer exponent");
      long e = std::stol(t.text);
      base = base.pow(neg ? -e : e);
    }
    return base;
  }

  RatFunc atom() {
    const Token t = ts_.next();
    switch (t.kind) {
      case Token::Kind::Number:
        return RatFunc(BigRational(BigInt(t.text, 10)), table_);
      case Token::Kind::Identifier: {
        auto idx = table_->index_of(t.text);
        if (!idx) ts_.error("unknown variable '" + t.text + "'");
        return RatFunc::variable(*idx, table_);
      }
      case Token::Kind::Symbol:
        if (t.text == "(") {
          RatFunc r = expr();
          ts_.expect(")");
          return r;
        }
        if (t.text == "-") return -power();
        break;
      case Token::Kind::End:
        break;
    }
    ts_.error("unexpected token '" + t.text + "'");
  }

  TokenStream ts_;
  TablePtr table_;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text, const TablePtr& table) {
  return RatFuncParser(text, table).parse();
}

Polynomial parse_polynomial(std::string_view text, const TablePtr& table) {
  RatFunc r = parse_ratfunc(text, table);
  if (!r.den().is_constant()) fail(ErrorKind::Parse, "expected a polynomial: '" + std::string(text) + "'");
  return r.num().scaled(BigRational(1) / r.den().constant_value());
}

}  // namespace galring
