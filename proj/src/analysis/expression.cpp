#include "galring/analysis/expression.hpp"

#include "galring/arith/parse.hpp"
#include "galring/error.hpp"

namespace galring {

class Expression::Parser {
 public:
  explicit Parser(std::string_view text) : ts_(text, tokenize(text)) {}

  NodePtr parse() {
    NodePtr n = sum();
    if (!ts_.at_end()) ts_.error("unexpected '" + ts_.peek().text + "'");
    return n;
  }

 private:
  static NodePtr make(Op op, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
  }

  NodePtr sum() {
    NodePtr n = product();
    while (true) {
      if (ts_.accept("+")) {
        n = make(Op::Add, n, product());
      } else if (ts_.accept("-")) {
        n = make(Op::Sub, n, product());
      } else {
        return n;
      }
    }
  }

  NodePtr product() {
    NodePtr n = unary();
    while (true) {
      if (ts_.accept("*")) {
        n = make(Op::Mul, n, unary());
      } else if (ts_.accept("/")) {
        n = make(Op::Div, n, unary());
      } else {
        return n;
      }
    }
  }

  NodePtr unary() {
    if (ts_.accept("-")) return make(Op::Neg, unary());
    if (ts_.accept("+")) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = atom();
    if (!ts_.accept("^")) return base;
    bool negative = ts_.accept("-");
    const Token& t = ts_.peek();
    if (t.kind != Token::Kind::Number) ts_.error("expected an integer exponent");
    ts_.next();
    auto n = std::make_shared<Node>();
    n->op = Op::Pow;
    n->lhs = std::move(base);
    try {
      n->exponent = std::stol(t.text);
    } catch (const std::exception&) {
      ts_.error("exponent out of range");
    }
    if (negative) n->exponent = -n->exponent;
    return n;
  }

  std::int64_t signed_integer() {
    const bool negative = ts_.accept("-");
    const Token& t = ts_.peek();
    if (t.kind != Token::Kind::Number) ts_.error("expected an integer");
    ts_.next();
    std::int64_t v = 0;
    try {
      v = std::stoll(t.text);
    } catch (const std::exception&) {
      ts_.error("integer out of range");
    }
    return negative ? -v : v;
  }

  NodePtr atom() {
    const Token t = ts_.peek();
    if (t.kind == Token::Kind::Number) {
      ts_.next();
      auto n = std::make_shared<Node>();
      n->op = Op::Number;
      n->value = BigRational(BigInt(t.text));
      return n;
    }
    if (t.kind == Token::Kind::Identifier) {
      ts_.next();
      auto n = std::make_shared<Node>();
      n->op = Op::Name;
      n->name = t.text;
      return n;
    }
    if (ts_.accept("(")) {
      NodePtr n = sum();
      ts_.expect(")");
      return n;
    }
    if (ts_.accept("[")) {
      NodePtr a = sum();
      ts_.expect(",");
      NodePtr b = sum();
      ts_.expect("]");
      return make(Op::Commutator, a, b);
    }
    if (ts_.accept("<")) {
      auto n = std::make_shared<Node>();
      n->op = Op::Key;
      if (!ts_.accept(">")) {
        do {
          n->key.push_back(signed_integer());
        } while (ts_.accept(","));
        ts_.expect(">");
      }
      return n;
    }
    ts_.error(t.kind == Token::Kind::End ? "unexpected end of expression" : "unexpected '" + t.text + "'");
  }

  TokenStream ts_;
};

Expression Expression::parse(std::string_view text) {
  Expression e;
  e.source_ = std::string(text);
  e.node_ = Parser(text).parse();
  return e;
}

void Expression::collect(const Node& n, std::set<std::string>& out) {
  if (n.op == Op::Name) out.insert(n.name);
  if (n.lhs) collect(*n.lhs, out);
  if (n.rhs) collect(*n.rhs, out);
}

std::set<std::string> Expression::names() const {
  std::set<std::string> out;
  collect(*node_, out);
  return out;
}

namespace {

bool is_scalar(const SkewElement& u) {
  return u.is_zero() || (u.size() == 1 && u.terms().begin()->first == u.context()->identity());
}

}  // namespace

SkewElement Expression::eval(const Node& n, const AlgebraSpec& spec) {
  const ContextPtr& ctx = spec.context;
  switch (n.op) {
    case Op::Number:
      return SkewElement::scalar(ctx, ctx->constant(n.value));
    case Op::Name: {
      if (spec.has_generator(n.name)) return spec.generator(n.name);
      if (auto v = ctx->table()->index_of(n.name)) return SkewElement::scalar(ctx, ctx->variable(*v));
      fail(ErrorKind::Definition, "unresolved name '" + n.name + "'");
    }
    case Op::Key:
      return SkewElement::key(ctx, MonoidElement{n.key});
    case Op::Add:
      return eval(*n.lhs, spec) + eval(*n.rhs, spec);
    case Op::Sub:
      return eval(*n.lhs, spec) - eval(*n.rhs, spec);
    case Op::Mul:
      return eval(*n.lhs, spec) * eval(*n.rhs, spec);
    case Op::Div: {
      const SkewElement d = eval(*n.rhs, spec);
      if (!is_scalar(d)) fail(ErrorKind::Precondition, "division by a non-scalar element");
      if (d.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero in expression");
      return eval(*n.lhs, spec) * d.kpart().inverse();
    }
    case Op::Neg:
      return -eval(*n.lhs, spec);
    case Op::Pow: {
      const SkewElement b = eval(*n.lhs, spec);
      if (n.exponent >= 0) return b.pow(static_cast<unsigned>(n.exponent));
      if (!is_scalar(b) || b.is_zero()) fail(ErrorKind::Precondition, "negative power of a non-invertible element");
      return SkewElement::scalar(ctx, b.kpart().pow(n.exponent));
    }
    case Op::Commutator:
      return commutator(eval(*n.lhs, spec), eval(*n.rhs, spec));
  }
  fail(ErrorKind::Definition, "malformed expression");
}

SkewElement Expression::evaluate(const AlgebraSpec& spec) const {
  for (const auto& name : names()) {
    if (!spec.has_generator(name) && !spec.context->table()->index_of(name)) {
      fail(ErrorKind::Definition, "unresolved name '" + name + "'");
    }
  }
  return eval(*node_, spec);
}

}  // namespace galring
