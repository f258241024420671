#pragma once

// Test-side reference computations. Everything here is written directly from
// the defining formulas with plain loops, without going through the library's
// jet, span or region code, so that agreement is meaningful.

#include "swdon/catalog.hpp"
#include "swdon/relations.hpp"

#include <functional>
#include <random>
#include <set>
#include <utility>
#include <vector>

namespace swdon::oracle {

inline Integer dot(const IntMatrix& g, const CohClass& a, const CohClass& b) {
  Integer s = 0;
  for (Index i = 0; i < g.rows(); ++i)
    for (Index j = 0; j < g.cols(); ++j)
      if (g(i, j) != 0) s += a[i] * g(i, j) * b[j];
  return s;
}

inline long lmod(long a, long n) { return ((a % n) + n) % n; }

/// c(X) as chi_h - c1^2.
inline Rational c_value(long chi, long sigma) {
  return Rational(chi + sigma, 4) - Rational(2 * chi + 3 * sigma);
}

/// Coordinates of the functional G k over the functionals G v_j, by Gaussian
/// elimination on the augmented system; empty if k is outside their span.
inline std::optional<std::vector<Rational>> solve_functional(const IntMatrix& g, const std::vector<CohClass>& vars,
                                                             const CohClass& k) {
  const Index n = g.rows();
  const std::size_t m = vars.size();
  std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n), std::vector<Rational>(m + 1));
  for (Index r = 0; r < n; ++r) {
    for (std::size_t j = 0; j < m; ++j) {
      Integer s = 0;
      for (Index c = 0; c < n; ++c) s += g(r, c) * vars[j][c];
      a[r][j] = Rational(s);
    }
    Integer s = 0;
    for (Index c = 0; c < n; ++c) s += g(r, c) * k[c];
    a[r][m] = Rational(s);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m && row < a.size(); ++col) {
    std::size_t p = row;
    while (p < a.size() && a[p][col] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const Rational inv = Rational(1) / a[row][col];
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c <= m; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < a.size(); ++r)
    if (a[r][m] != 0) return std::nullopt;
  std::vector<Rational> out(m, Rational(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) out[pivot_col[r]] = a[r][m];
  return out;
}

/// Coefficient of prod_j y_j^alpha_j in the Taylor expansion of the sum, where
/// y_j = <vars[j], h>: sum_i a_i prod_j c_ij^alpha_j / alpha_j!.
inline Rational multinomial_coefficient(const ExpSum& sum, const std::vector<CohClass>& vars,
                                        const std::vector<unsigned>& alpha) {
  const IntMatrix& g = sum.ambient().gram();
  Rational total = 0;
  for (const auto& [k, a] : sum.terms()) {
    const auto c = solve_functional(g, vars, k);
    if (!c) throw std::logic_error("oracle: class outside the variable span");
    Rational term = a;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      Rational p = 1;
      Integer fact = 1;
      for (unsigned e = 1; e <= alpha[j]; ++e) {
        p *= (*c)[j];
        fact *= e;
      }
      term *= p / Rational(fact);
    }
    total += term;
  }
  return total;
}

/// All exponent vectors of n variables with total degree d.
inline std::vector<std::vector<unsigned>> monomials(std::size_t n, unsigned d) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> cur(n, 0);
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur[i] = e;
      self(self, i + 1, left - e);
    }
  };
  if (n == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(rec, 0, d);
  return out;
}

/// Points of the window satisfying both congruences, by a double loop.
inline std::set<std::pair<long, long>> marked_points(long chi, long sigma, long w_sq, const Window& win) {
  std::set<std::pair<long, long>> out;
  for (long x = win.x_min; x <= win.x_max; ++x)
    for (long d = win.delta_min; d <= win.delta_max; ++d) {
      const bool degree_ok = lmod(2 * d + 2 * w_sq + 3 * (chi + sigma) / 2, 8) == 0;
      const bool square_ok = lmod(x - w_sq + sigma, 4) == 0;
      if (degree_ok && square_ok) out.insert({x, d});
    }
  return out;
}

/// A random characteristic class: a fixed one plus twice a random small class.
inline CohClass random_characteristic(const IntegralLattice& lattice, std::mt19937& rng, int spread = 2) {
  std::uniform_int_distribution<int> coord(-spread, spread);
  IntVector u(lattice.rank());
  for (Index i = 0; i < u.size(); ++i) u(i) = coord(rng);
  return characteristic_vector(lattice) + Integer(2) * CohClass(u);
}

inline CohClass random_class(Index rank, std::mt19937& rng, int spread = 3, double density = 0.3) {
  std::uniform_int_distribution<int> coord(-spread, spread);
  std::bernoulli_distribution on(density);
  IntVector u = IntVector::Zero(rank);
  for (Index i = 0; i < rank; ++i)
    if (on(rng)) u(i) = coord(rng);
  return CohClass(u);
}

}  // namespace swdon::oracle
