#pragma once

// Seeded sampling of rationals and polynomials for randomized checks. Draws
// avoid std distributions so the sampled values are identical across
// standard libraries.

#include <cstdint>
#include <random>
#include <vector>

#include "galring/arith/ratfunc.hpp"

namespace galring {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  long range(long lo, long hi) {  // inclusive
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(rng_() % span);
  }
  bool coin() { return (rng_() & 1u) != 0; }

  BigRational small_rational(long bound = 4, long den_bound = 3) {
    BigRational r(range(-bound, bound), range(1, den_bound));
    r.canonicalize();
    return r;
  }

  // Random polynomial in the given variables: up to `terms` terms of total
  // degree <= max_degree.
  Polynomial polynomial(const TablePtr& table, const std::vector<std::size_t>& vars, int terms, int max_degree) {
    std::vector<Polynomial::Term> out;
    const int n = static_cast<int>(range(1, terms));
    for (int i = 0; i < n; ++i) {
      Monomial m;
      int budget = static_cast<int>(range(0, max_degree));
      for (std::size_t v : vars) {
        if (budget == 0) break;
        const int e = static_cast<int>(range(0, budget));
        if (e > 0) m.set(v, static_cast<unsigned>(e));
        budget -= e;
      }
      out.push_back({m, small_rational()});
    }
    return Polynomial::from_terms(std::move(out), table);
  }

  Polynomial nonzero_polynomial(const TablePtr& table, const std::vector<std::size_t>& vars, int terms, int max_degree) {
    while (true) {
      Polynomial p = polynomial(table, vars, terms, max_degree);
      if (!p.is_zero()) return p;
    }
  }

  RatFunc ratfunc(const TablePtr& table, const std::vector<std::size_t>& vars, int terms = 3, int max_degree = 2) {
    return RatFunc::make(polynomial(table, vars, terms, max_degree), nonzero_polynomial(table, vars, terms, max_degree));
  }

  RatFunc nonzero_ratfunc(const TablePtr& table, const std::vector<std::size_t>& vars, int terms = 3, int max_degree = 2) {
    while (true) {
      RatFunc r = ratfunc(table, vars, terms, max_degree);
      if (!r.is_zero()) return r;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace galring
