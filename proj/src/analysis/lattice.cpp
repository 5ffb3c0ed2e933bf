#include "galring/analysis/lattice.hpp"

#include <set>

#include "galring/error.hpp"

namespace galring {

bool LatticeRank::generates() const {
  if (rank != ambient) return false;
  for (const auto& d : divisors) {
    if (d != 1) return false;
  }
  return true;
}

LatticeRank smith_normal_form(IntMatrix a, std::size_t columns) {
  const std::size_t rows = a.size();
  for (const auto& r : a) {
    if (r.size() != columns) fail(ErrorKind::Precondition, "ragged integer matrix");
  }
  LatticeRank out;
  out.ambient = columns;
  std::size_t t = 0;
  while (t < rows && t < columns) {
    // Pivot: smallest nonzero entry of the remaining block.
    std::size_t pr = rows, pc = columns;
    for (std::size_t i = t; i < rows; ++i) {
      for (std::size_t j = t; j < columns; ++j) {
        if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == rows) break;
    std::swap(a[t], a[pr]);
    for (auto& r : a) std::swap(r[t], r[pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < columns; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) {
          std::swap(a[t], a[i]);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < columns; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) {
          for (auto& r : a) std::swap(r[t], r[j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // The pivot must divide the whole remaining block.
      for (std::size_t i = t + 1; i < rows && clean; ++i) {
        for (std::size_t j = t + 1; j < columns; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < columns; ++k) a[t][k] += a[i][k];
            clean = false;
            break;
          }
        }
      }
    }
    out.divisors.push_back(abs(a[t][t]));
    ++t;
  }
  out.rank = out.divisors.size();
  return out;
}

LatticeRank support_lattice_rank(const ContextPtr& ctx, const std::vector<SkewElement>& elements) {
  if (ctx->mode() != KeyMode::Lattice) fail(ErrorKind::UnsupportedMode, "support lattices need lattice keys");
  IntMatrix rows;
  for (const auto& u : elements) {
    if (u.context() != ctx) fail(ErrorKind::Context, "element from a different context");
    for (const auto& mu : u.support()) {
      std::vector<BigInt> row;
      for (auto c : mu.coords) row.emplace_back(static_cast<long>(c));
      rows.push_back(std::move(row));
    }
  }
  return smith_normal_form(std::move(rows), ctx->lattice_rank());
}

std::vector<std::size_t> monoid_growth(const std::vector<MonoidElement>& generators, std::size_t k_max) {
  if (generators.empty()) return std::vector<std::size_t>(k_max, 1);
  const std::size_t m = generators.front().coords.size();
  for (const auto& g : generators) {
    if (g.coords.size() != m) fail(ErrorKind::Context, "generators of different lengths");
  }
  std::set<MonoidElement> ball{MonoidElement{std::vector<std::int64_t>(m, 0)}};
  std::set<MonoidElement> frontier = ball;
  std::vector<std::size_t> out;
  for (std::size_t k = 1; k <= k_max; ++k) {
    std::set<MonoidElement> next;
    for (const auto& v : frontier) {
      for (const auto& g : generators) {
        MonoidElement w = v;
        for (std::size_t i = 0; i < m; ++i) w.coords[i] += g.coords[i];
        if (!ball.count(w)) next.insert(std::move(w));
      }
    }
    ball.insert(next.begin(), next.end());
    frontier = std::move(next);
    out.push_back(ball.size());
  }
  return out;
}

}  // namespace galring
