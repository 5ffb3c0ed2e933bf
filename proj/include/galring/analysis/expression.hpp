#pragma once

#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "galring/constructors/algebras.hpp"

namespace galring {

// Noncommutative expression over the named generators of an AlgebraSpec and
// the variables of its table. Syntax: integers, names, <k1,...,km> for a
// bare monoid key, + - * / ^ (nonnegative integer exponents on elements,
// any integer on scalars), parentheses and commutators [a, b].
class Expression {
 public:
  enum class Op { Number, Name, Key, Add, Sub, Mul, Div, Neg, Pow, Commutator };

  // Throws Error{Parse} with the offending offset.
  static Expression parse(std::string_view text);

  Op op() const { return node_->op; }
  const std::string& source() const { return source_; }
  // Every generator or variable name referenced.
  std::set<std::string> names() const;

  // Names resolve first to generators, then to variables; unresolved names
  // throw Error{Definition}. Division requires a scalar divisor.
  SkewElement evaluate(const AlgebraSpec& spec) const;

 private:
  struct Node {
    Op op;
    BigRational value;
    std::string name;
    std::vector<std::int64_t> key;
    long exponent = 0;
    std::shared_ptr<const Node> lhs, rhs;
  };
  using NodePtr = std::shared_ptr<const Node>;

  class Parser;
  static void collect(const Node& n, std::set<std::string>& out);
  static SkewElement eval(const Node& n, const AlgebraSpec& spec);

  std::string source_;
  NodePtr node_;
};

}  // namespace galring
