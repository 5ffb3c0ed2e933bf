#include "galring/analysis/growth.hpp"

#include <cmath>
#include <map>

namespace galring {

SlopeFit fit_growth_slope(const std::vector<std::size_t>& sizes, const BigRational& tolerance) {
  const std::size_t k_max = sizes.size();
  if (k_max < 2) fail(ErrorKind::Precondition, "slope fit needs at least two values");
  SlopeFit fit;
  fit.window_start = (k_max + 1) / 2;
  long double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t count = 0;
  for (std::size_t k = fit.window_start; k <= k_max; ++k) {
    const long double x = std::log(static_cast<long double>(k + 1));
    const long double y = std::log(static_cast<long double>(sizes[k - 1]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  const long double n = static_cast<long double>(count);
  const long double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  fit.slope = BigRational(static_cast<long>(std::llround(slope * 1000000.0L)), 1000000);
  fit.slope.canonicalize();
  fit.low = fit.slope - tolerance;
  fit.high = fit.slope + tolerance;
  return fit;
}

namespace {

using Column = std::pair<MonoidElement, Monomial>;
using Row = std::map<std::size_t, BigInt>;

void remove_content(Row& row) {
  BigInt g = 0;
  for (const auto& [c, v] : row) g = gcd(g, v);
  if (g > 1) {
    for (auto& [c, v] : row) v /= g;
  }
}

// Fraction-free row echelon basis over Q. Rows are kept with their leading
// column as pivot.
class Echelon {
 public:
  // Returns true if the row was independent of the stored rows.
  bool insert(Row row) {
    while (!row.empty()) {
      auto it = pivots_.find(row.begin()->first);
      if (it == pivots_.end()) {
        pivots_.emplace(row.begin()->first, std::move(row));
        return true;
      }
      const Row& p = it->second;
      const BigInt a = p.begin()->second;
      const BigInt b = row.begin()->second;
      for (auto& [c, v] : row) v *= a;
      for (const auto& [c, v] : p) {
        BigInt& x = row[c];
        x -= b * v;
        if (x == 0) row.erase(c);
      }
      remove_content(row);
    }
    return false;
  }

 private:
  std::map<std::size_t, Row> pivots_;
};

}  // namespace

GrowthProfile growth_profile(const std::vector<SkewElement>& frame, std::size_t k_max, std::size_t dimension_cap) {
  if (frame.empty()) fail(ErrorKind::Precondition, "empty frame");
  if (k_max < 2) fail(ErrorKind::Precondition, "growth profile needs k_max >= 2");
  const ContextPtr& ctx = frame.front().context();
  const SkewElement one = SkewElement::one(ctx);
  bool has_one = false;
  for (const auto& f : frame) {
    if (f.context() != ctx) fail(ErrorKind::Context, "frame elements from different contexts");
    if (f == one) has_one = true;
  }
  if (!has_one) fail(ErrorKind::Precondition, "frame must contain 1");

  GrowthProfile profile;
  std::vector<SkewElement> basis;
  std::vector<SkewElement> candidates = frame;
  for (std::size_t k = 1; k <= k_max; ++k) {
    if (k > 1) {
      candidates = basis;
      for (const auto& b : basis) {
        for (const auto& f : frame) {
          if (!(f == one)) candidates.push_back(b * f);
        }
      }
    }
    // Common denominator per key turns coefficients into polynomials whose
    // rational coefficients are the Q-coordinates.
    std::map<MonoidElement, Polynomial> denominators;
    for (const auto& u : candidates) {
      for (const auto& [mu, a] : u.terms()) {
        auto [it, inserted] = denominators.try_emplace(mu, a.den());
        if (!inserted) it->second = lcm(it->second, a.den());
      }
    }
    std::map<Column, std::size_t> columns;
    Echelon echelon;
    std::vector<SkewElement> next;
    for (const auto& u : candidates) {
      std::vector<std::pair<std::size_t, BigRational>> entries;
      for (const auto& [mu, a] : u.terms()) {
        const Polynomial scaled = a.num() * *divide_exact(denominators.at(mu), a.den());
        for (const auto& t : scaled.terms()) {
          auto it = columns.try_emplace(Column{mu, t.mono}, columns.size()).first;
          entries.emplace_back(it->second, t.coeff);
        }
      }
      BigInt den_lcm = 1;
      for (const auto& [c, v] : entries) den_lcm = lcm(den_lcm, BigInt(v.get_den()));
      Row row;
      for (const auto& [c, v] : entries) row[c] = BigInt(v * den_lcm);
      remove_content(row);
      if (echelon.insert(std::move(row))) {
        next.push_back(u);
        if (next.size() > dimension_cap) {
          throw GrowthCapExceeded("span dimension exceeds the cap " + std::to_string(dimension_cap) + " at k = " +
                                      std::to_string(k),
                                  profile.dims);
        }
      }
    }
    basis = std::move(next);
    profile.dims.push_back(basis.size());
  }
  profile.fit = fit_growth_slope(profile.dims);
  return profile;
}

}  // namespace galring
