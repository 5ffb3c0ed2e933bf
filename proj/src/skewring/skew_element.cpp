#include "galring/skewring/skew_element.hpp"

#include <map>

#include "galring/error.hpp"

namespace galring {

SkewElement SkewElement::one(const ContextPtr& ctx) { return key(ctx, ctx->identity()); }

SkewElement SkewElement::scalar(const ContextPtr& ctx, const RatFunc& a) { return monomial(ctx, a, ctx->identity()); }

SkewElement SkewElement::monomial(const ContextPtr& ctx, const RatFunc& a, const MonoidElement& mu) {
  ctx->validate(mu);
  if (a.table() && !same_table(a.table(), ctx->table())) fail(ErrorKind::Context, "coefficient over a different table");
  SkewElement out(ctx);
  if (!a.is_zero()) out.terms_.emplace(mu, a);
  return out;
}

SkewElement SkewElement::key(const ContextPtr& ctx, const MonoidElement& mu) {
  return monomial(ctx, ctx->constant(1), mu);
}

RatFunc SkewElement::coefficient(const MonoidElement& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? ctx_->constant(0) : it->second;
}

RatFunc SkewElement::kpart() const { return coefficient(ctx_->identity()); }

std::set<MonoidElement> SkewElement::support() const {
  std::set<MonoidElement> out;
  for (const auto& [mu, a] : terms_) out.insert(mu);
  return out;
}

void SkewElement::check_context(const SkewElement& o) const {
  if (ctx_ != o.ctx_) fail(ErrorKind::Context, "skew elements from different contexts");
}

void SkewElement::add_term(const MonoidElement& mu, const RatFunc& a) {
  if (a.is_zero()) return;
  auto [it, inserted] = terms_.emplace(mu, a);
  if (inserted) return;
  it->second = it->second + a;
  if (it->second.is_zero()) terms_.erase(it);
}

SkewElement SkewElement::operator-() const {
  SkewElement out(ctx_);
  for (const auto& [mu, a] : terms_) out.terms_.emplace(mu, -a);
  return out;
}

SkewElement& SkewElement::operator+=(const SkewElement& o) {
  check_context(o);
  for (const auto& [mu, a] : o.terms_) add_term(mu, a);
  return *this;
}

SkewElement& SkewElement::operator-=(const SkewElement& o) {
  check_context(o);
  for (const auto& [mu, a] : o.terms_) add_term(mu, -a);
  return *this;
}

SkewElement operator*(const SkewElement& u, const SkewElement& v) {
  u.check_context(v);
  const Context& ctx = *u.ctx_;
  // Collect the summands per key first so each key is summed once.
  std::map<MonoidElement, std::vector<RatFunc>> parts;
  for (const auto& [mu, a] : u.terms_) {
    for (const auto& [nu, b] : v.terms_) parts[ctx.compose(mu, nu)].push_back(a * ctx.act(mu, b));
  }
  SkewElement out(u.ctx_);
  for (auto& [key, summands] : parts) {
    RatFunc total = summands.front();
    for (std::size_t i = 1; i < summands.size(); ++i) total = total + summands[i];
    if (!total.is_zero()) out.terms_.emplace(key, std::move(total));
  }
  return out;
}

SkewElement operator*(const RatFunc& a, const SkewElement& u) {
  SkewElement out(u.ctx_);
  if (a.is_zero()) return out;
  for (const auto& [mu, b] : u.terms_) out.terms_.emplace(mu, a * b);
  return out;
}

SkewElement operator*(const SkewElement& u, const RatFunc& a) {
  SkewElement out(u.ctx_);
  if (a.is_zero()) return out;
  for (const auto& [mu, b] : u.terms_) out.terms_.emplace(mu, b * u.ctx_->act(mu, a));
  return out;
}

SkewElement SkewElement::pow(unsigned k) const {
  SkewElement out = one(ctx_);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

bool operator==(const SkewElement& a, const SkewElement& b) {
  return a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
}

std::string SkewElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [mu, a] : terms_) {
    if (!out.empty()) out += " + ";
    std::string c = a.to_string();
    if (c.find(' ') != std::string::npos && c.front() != '(') c = "(" + c + ")";
    out += c + " ⊗ " + galring::to_string(mu);
  }
  return out;
}

SkewElement commutator(const SkewElement& a, const SkewElement& b) { return a * b - b * a; }

RatFunc apply_operator(const SkewElement& u, const RatFunc& f) {
  RatFunc out = u.context()->constant(0);
  for (const auto& [mu, a] : u.terms()) out = out + a * u.context()->act(mu, f);
  return out;
}

SkewElement g_action(GroupElement g, const SkewElement& u) {
  const Context& ctx = *u.context();
  if (g == 0) return u;
  SkewElement out(u.context());
  for (const auto& [mu, a] : u.terms()) {
    out += SkewElement::monomial(u.context(), ctx.act_group(g, a), ctx.conjugate(g, mu));
  }
  return out;
}

bool is_invariant(const SkewElement& u) {
  for (GroupElement g : u.context()->group().generators()) {
    if (!(g_action(g, u) == u)) return false;
  }
  return true;
}

SkewElement orbit_sum(const ContextPtr& ctx, const RatFunc& a, const MonoidElement& mu) {
  if (a.is_zero()) fail(ErrorKind::Precondition, "orbit sum of a zero coefficient");
  ctx->validate(mu);
  for (GroupElement h : ctx->stabilizer_elements(mu)) {
    if (!(ctx->act_group(h, a) == a)) {
      fail(ErrorKind::StabilizerInvariance, "coefficient " + a.to_string() + " is not invariant under the stabilizer of " +
                                                galring::to_string(mu));
    }
  }
  std::map<MonoidElement, GroupElement> reps;
  for (GroupElement g = 0; g < ctx->group().size(); ++g) reps.emplace(ctx->conjugate(g, mu), g);
  SkewElement out(ctx);
  for (const auto& [key, g] : reps) out += SkewElement::monomial(ctx, ctx->act_group(g, a), key);
  return out;
}

std::vector<OrbitComponent> decompose_orbits(const SkewElement& u) {
  if (!is_invariant(u)) fail(ErrorKind::Invariance, "element is not G-invariant");
  const Context& ctx = *u.context();
  std::map<MonoidElement, SkewElement> parts;
  for (const auto& [mu, a] : u.terms()) {
    const MonoidElement rep = *ctx.orbit(mu).begin();
    auto it = parts.try_emplace(rep, u.context()).first;
    it->second += SkewElement::monomial(u.context(), a, mu);
  }
  std::vector<OrbitComponent> out;
  for (auto& [rep, part] : parts) out.push_back({rep, std::move(part)});
  return out;
}

}  // namespace galring
