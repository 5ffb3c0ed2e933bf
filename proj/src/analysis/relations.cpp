#include "galring/analysis/relations.hpp"

#include <map>

#include "galring/error.hpp"

namespace galring {

Relation make_relation(std::string name, std::string_view expression) {
  return Relation{std::move(name), Expression::parse(expression)};
}

RelationSet gl_relations(std::size_t n) {
  auto E = [](std::size_t a, std::size_t b) { return "E" + std::to_string(a) + std::to_string(b); };
  auto term = [](long c, const std::string& x) {
    if (c == 0) return std::string();
    return std::string(c > 0 ? " - " : " + ") + (std::labs(c) == 1 ? "" : std::to_string(std::labs(c)) + "*") + x;
  };
  RelationSet out;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t l = k + 1; l <= n; ++l) {
      out.push_back(make_relation("[" + E(k, k) + "," + E(l, l) + "] = 0", "[" + E(k, k) + "," + E(l, l) + "]"));
    }
  }
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t l = 1; l < n; ++l) {
      const long up = (k == l ? 1 : 0) - (k == l + 1 ? 1 : 0);
      const std::string e = E(l, l + 1), f = E(l + 1, l);
      out.push_back(make_relation("[" + E(k, k) + "," + e + "]", "[" + E(k, k) + "," + e + "]" + term(up, e)));
      out.push_back(make_relation("[" + E(k, k) + "," + f + "]", "[" + E(k, k) + "," + f + "]" + term(-up, f)));
    }
  }
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t l = 1; l < n; ++l) {
      std::string expr = "[" + E(k, k + 1) + "," + E(l + 1, l) + "]";
      if (k == l) expr += " - (" + E(k, k) + " - " + E(k + 1, k + 1) + ")";
      out.push_back(make_relation("[" + E(k, k + 1) + "," + E(l + 1, l) + "]", expr));
    }
  }
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t l : {k - 1, k + 1}) {
      if (l < 1 || l >= n) continue;
      const std::string ek = E(k, k + 1), el = E(l, l + 1), fk = E(k + 1, k), fl = E(l + 1, l);
      out.push_back(make_relation("serre [" + ek + ",[" + ek + "," + el + "]]", "[" + ek + ",[" + ek + "," + el + "]]"));
      out.push_back(make_relation("serre [" + fk + ",[" + fk + "," + fl + "]]", "[" + fk + ",[" + fk + "," + fl + "]]"));
    }
  }
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t l = k + 2; l < n; ++l) {
      out.push_back(make_relation("[" + E(k, k + 1) + "," + E(l, l + 1) + "] = 0", "[" + E(k, k + 1) + "," + E(l, l + 1) + "]"));
      out.push_back(make_relation("[" + E(k + 1, k) + "," + E(l + 1, l) + "] = 0", "[" + E(k + 1, k) + "," + E(l + 1, l) + "]"));
    }
  }
  return out;
}

Report verify_relations(const AlgebraSpec& spec, const RelationSet& relations) {
  for (const auto& r : relations) {
    for (const auto& name : r.expression.names()) {
      if (!spec.has_generator(name) && !spec.context->table()->index_of(name)) {
        fail(ErrorKind::Definition, "relation '" + r.name + "' uses unresolved name '" + name + "'");
      }
    }
  }
  Report report;
  for (const auto& r : relations) {
    Stopwatch clock;
    const SkewElement value = r.expression.evaluate(spec);
    Check c;
    c.name = r.name;
    c.passed = value.is_zero();
    if (!c.passed) c.residual = value.to_string();
    c.timing_ms = clock.elapsed_ms();
    report.checks.push_back(std::move(c));
  }
  return report;
}

std::vector<SkewElement> commutant_filter(const AlgebraSpec& spec, const std::vector<SkewElement>& candidates) {
  std::vector<SkewElement> out;
  for (const auto& c : candidates) {
    bool central = true;
    for (const auto& [name, g] : spec.generators) {
      if (!commutator(c, g).is_zero()) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(c);
  }
  return out;
}

SkewElement standard_identity(const std::vector<SkewElement>& elements, std::size_t cap) {
  const std::size_t n = elements.size();
  if (n > cap) fail(ErrorKind::Resource, "standard identity of degree " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
  if (n == 0) fail(ErrorKind::Precondition, "standard identity needs at least one argument");
  const ContextPtr& ctx = elements.front().context();
  // value[S] = alternating sum over orderings of the subset S, where putting
  // the element of rank r within S first contributes the sign (-1)^r.
  const std::size_t full = (std::size_t{1} << n) - 1;
  std::vector<SkewElement> value(full + 1, SkewElement::zero(ctx));
  value[0] = SkewElement::one(ctx);
  for (std::size_t mask = 1; mask <= full; ++mask) {
    SkewElement acc(ctx);
    int rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask & (std::size_t{1} << i))) continue;
      const SkewElement part = elements[i] * value[mask & ~(std::size_t{1} << i)];
      if (rank % 2 == 0) {
        acc += part;
      } else {
        acc -= part;
      }
      ++rank;
    }
    value[mask] = std::move(acc);
  }
  return value[full];
}

}  // namespace galring
