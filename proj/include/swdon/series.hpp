#pragma once

#include "swdon/lattice.hpp"
#include "swdon/manifold.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace swdon {

/// A real homology direction h, stored as its Poincare dual in H^2 (x) Q so that
/// <K, h> and h.h are both Gram pairings.
struct Direction {
  RatVector coords;

  static Direction from_class(const CohClass& c) { return {c.coords().cast<Rational>()}; }
};

/// <K, h> = K^T G h.
Rational pairing(const IntegralLattice& lattice, const CohClass& k, const Direction& h);
Rational square(const IntegralLattice& lattice, const Direction& h);

/// Finite formal sum  sum_i a_i exp(<K_i, h>)  with exact rational coefficients.
/// Terms sharing a class are merged and zero coefficients are dropped.
class ExpSum {
 public:
  explicit ExpSum(IntegralLattice ambient) : ambient_(std::move(ambient)) {}

  void add(const Rational& coeff, const CohClass& k);

  const std::map<CohClass, Rational>& terms() const { return terms_; }
  const IntegralLattice& ambient() const { return ambient_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of exp(<k, h>), zero if absent.
  Rational coefficient(const CohClass& k) const;

  ExpSum scaled(const Rational& factor) const;

  friend bool operator==(const ExpSum& a, const ExpSum& b) { return a.terms_ == b.terms_; }

 private:
  IntegralLattice ambient_;
  std::map<CohClass, Rational> terms_;
};

using Monomial = std::vector<unsigned>;

/// Truncated polynomial in span-reduced coordinates y_j = <variables[j], h>.
struct Jet {
  IntegralLattice ambient;
  std::vector<CohClass> variables;
  std::map<Monomial, Rational> coefficients;
  unsigned order = 0;

  bool is_zero() const { return coefficients.empty(); }
  Rational coefficient(const Monomial& exponents) const;
  Jet homogeneous_part(unsigned degree) const;
  /// Smallest total degree carrying a nonzero coefficient.
  std::optional<unsigned> lowest_degree() const;
  Rational evaluate(const Direction& h) const;

  friend bool operator==(const Jet& a, const Jet& b) {
    return a.variables == b.variables && a.coefficients == b.coefficients && a.order == b.order;
  }
};

unsigned total_degree(const Monomial& m);

/// Sum of two jets over the same variables, truncated to the smaller order.
Jet operator+(const Jet& a, const Jet& b);
/// Product of two jets over the same variables, truncated to the smaller order.
Jet operator*(const Jet& a, const Jet& b);

/// Span reduction: classes whose functionals x -> Q(k, x) are independent are
/// picked greedily in input order; every input class gets its coordinates over them.
struct SpanCoordinates {
  std::vector<CohClass> basis;
  std::vector<RatVector> coords;
};

SpanCoordinates span_reduce(const IntegralLattice& lattice, std::span<const CohClass> classes);
/// Coordinates over a caller-chosen basis. Throws DimensionMismatch if the basis
/// functionals are dependent or a class lies outside their span.
SpanCoordinates span_coordinates(const IntegralLattice& lattice, std::span<const CohClass> basis,
                                 std::span<const CohClass> classes);

/// Taylor jet of the sum at h = 0 through total degree `order`.
Jet jet_expand(const ExpSum& sum, unsigned order);
Jet jet_expand(const ExpSum& sum, unsigned order, std::span<const CohClass> basis);

/// Homogeneous polynomial  sum_i a_i <K_i, h>^degree  (no factorial).
Jet power_sum(const ExpSum& sum, unsigned degree);

struct VanishingOrder {
  enum class Kind { Exact, AtLeast, ZeroSeries };
  Kind kind = Kind::ZeroSeries;
  unsigned value = 0;  // Exact: the order; AtLeast: cap + 1

  /// True if every Taylor coefficient of degree < n is zero.
  bool at_least(unsigned n) const { return kind != Kind::Exact || value >= n; }

  friend bool operator==(const VanishingOrder&, const VanishingOrder&) = default;
};

/// Lowest degree with a nonzero Taylor coefficient, searched up to `cap`.
VanishingOrder vanishing_order(const ExpSum& sum, unsigned cap);

enum class Parity { Even, Odd, Neither, Zero };

std::string_view parity_name(Parity p);

/// Compares S(h) with S(-h) term by term.
Parity parity(const ExpSum& sum);
/// Parity predicted for the series of (m, w) by the degree rule.
Parity expected_parity(const FourManifold& m, const CohClass& w);

/// sum over basic classes of (-1)^((w^2 + k.w)/2) SW(k) exp(<k, h>).
/// Throws OddExponent if some w^2 + k.w is odd.
ExpSum sw_series(const FourManifold& m, const CohClass& w);

/// Multiplies by exp(sign * <lambda, h>), i.e. shifts every class by sign * lambda.
ExpSum twist(const ExpSum& sum, const CohClass& lambda, int sign);

/// prefactor * exp(quad_coeff * h.h) * core
struct GaussianSeries {
  Rational prefactor;
  Rational quad_coeff;
  ExpSum core;
};

/// 2^(2 - c) exp(h.h / 2) times the SW series. Throws NonIntegralC if c is not an integer.
GaussianSeries witten_series(const FourManifold& m, const CohClass& w);

/// Power series in t, coefficients[j] multiplying t^j.
struct UnivariateSeries {
  std::vector<Rational> coefficients;
};

/// Substitutes h = t * h0 and expands through t^order.
UnivariateSeries evaluate_along(const GaussianSeries& series, const Direction& h0, unsigned order);

}  // namespace swdon
