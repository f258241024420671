#include "swdon/series.hpp"

#include "swdon/normal_form.hpp"

#include <algorithm>

namespace swdon {

namespace {

using PolyMap = std::map<Monomial, Rational>;

void accumulate(PolyMap& poly, const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = poly.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) poly.erase(it);
}

PolyMap times_linear(const PolyMap& poly, const RatVector& linear) {
  PolyMap out;
  for (const auto& [m, c] : poly)
    for (Index j = 0; j < linear.size(); ++j) {
      if (linear(j) == 0) continue;
      Monomial next = m;
      ++next[static_cast<std::size_t>(j)];
      accumulate(out, next, c * linear(j));
    }
  return out;
}

void require_same_variables(const Jet& a, const Jet& b) {
  if (a.variables != b.variables)
    throw Error(ErrorCode::DimensionMismatch, "jets are expressed over different variables");
}

RatVector functional(const IntegralLattice& lattice, const CohClass& k) {
  if (k.size() != lattice.rank())
    throw Error(ErrorCode::DimensionMismatch,
                "class length does not match lattice rank " + std::to_string(lattice.rank()));
  return (lattice.gram() * k.coords()).cast<Rational>();
}

std::vector<CohClass> term_classes(const ExpSum& sum) {
  std::vector<CohClass> out;
  out.reserve(sum.size());
  for (const auto& [k, a] : sum.terms()) out.push_back(k);
  return out;
}

Monomial constant_monomial(std::size_t variables) { return Monomial(variables, 0u); }

}  // namespace

// ---------------------------------------------------------------------------

Rational pairing(const IntegralLattice& lattice, const CohClass& k, const Direction& h) {
  if (k.size() != lattice.rank() || h.coords.size() != lattice.rank())
    throw Error(ErrorCode::DimensionMismatch,
                "length does not match lattice rank " + std::to_string(lattice.rank()));
  return functional(lattice, k).dot(h.coords);
}

Rational square(const IntegralLattice& lattice, const Direction& h) {
  if (h.coords.size() != lattice.rank())
    throw Error(ErrorCode::DimensionMismatch,
                "direction length does not match lattice rank " + std::to_string(lattice.rank()));
  return h.coords.dot(lattice.gram().cast<Rational>() * h.coords);
}

void ExpSum::add(const Rational& coeff, const CohClass& k) {
  if (k.size() != ambient_.rank())
    throw Error(ErrorCode::DimensionMismatch,
                "class length does not match lattice rank " + std::to_string(ambient_.rank()));
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, coeff);
  if (inserted) return;
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Rational ExpSum::coefficient(const CohClass& k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

ExpSum ExpSum::scaled(const Rational& factor) const {
  ExpSum out(ambient_);
  for (const auto& [k, a] : terms_) out.add(a * factor, k);
  return out;
}

// ---------------------------------------------------------------------------
// Jets

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (unsigned e : m) d += e;
  return d;
}

Rational Jet::coefficient(const Monomial& exponents) const {
  const auto it = coefficients.find(exponents);
  return it == coefficients.end() ? Rational(0) : it->second;
}

Jet Jet::homogeneous_part(unsigned degree) const {
  Jet out{ambient, variables, {}, order};
  for (const auto& [m, c] : coefficients)
    if (total_degree(m) == degree) out.coefficients.emplace(m, c);
  return out;
}

std::optional<unsigned> Jet::lowest_degree() const {
  std::optional<unsigned> best;
  for (const auto& [m, c] : coefficients) {
    const unsigned d = total_degree(m);
    if (!best || d < *best) best = d;
  }
  return best;
}

Rational Jet::evaluate(const Direction& h) const {
  std::vector<Rational> y;
  y.reserve(variables.size());
  for (const auto& v : variables) y.push_back(pairing(ambient, v, h));
  Rational total = 0;
  for (const auto& [m, c] : coefficients) {
    Rational term = c;
    for (std::size_t j = 0; j < m.size(); ++j)
      for (unsigned e = 0; e < m[j]; ++e) term *= y[j];
    total += term;
  }
  return total;
}

Jet operator+(const Jet& a, const Jet& b) {
  require_same_variables(a, b);
  Jet out{a.ambient, a.variables, {}, std::min(a.order, b.order)};
  for (const auto* src : {&a, &b})
    for (const auto& [m, c] : src->coefficients)
      if (total_degree(m) <= out.order) accumulate(out.coefficients, m, c);
  return out;
}

Jet operator*(const Jet& a, const Jet& b) {
  require_same_variables(a, b);
  Jet out{a.ambient, a.variables, {}, std::min(a.order, b.order)};
  for (const auto& [ma, ca] : a.coefficients) {
    const unsigned da = total_degree(ma);
    for (const auto& [mb, cb] : b.coefficients) {
      if (da + total_degree(mb) > out.order) continue;
      Monomial m = ma;
      for (std::size_t j = 0; j < m.size(); ++j) m[j] += mb[j];
      accumulate(out.coefficients, m, ca * cb);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Span reduction

SpanCoordinates span_reduce(const IntegralLattice& lattice, std::span<const CohClass> classes) {
  SpanReducer<Rational> reducer(lattice.rank());
  SpanCoordinates out;
  for (const auto& k : classes)
    if (reducer.try_add(functional(lattice, k))) out.basis.push_back(k);
  for (const auto& k : classes) out.coords.push_back(*reducer.coordinates(functional(lattice, k)));
  return out;
}

SpanCoordinates span_coordinates(const IntegralLattice& lattice, std::span<const CohClass> basis,
                                 std::span<const CohClass> classes) {
  SpanReducer<Rational> reducer(lattice.rank());
  SpanCoordinates out;
  for (const auto& b : basis) {
    if (!reducer.try_add(functional(lattice, b)))
      throw Error(ErrorCode::DimensionMismatch, "basis class " + to_string(b) + " is dependent on the others");
    out.basis.push_back(b);
  }
  for (const auto& k : classes) {
    auto c = reducer.coordinates(functional(lattice, k));
    if (!c) throw Error(ErrorCode::DimensionMismatch, "class " + to_string(k) + " is outside the basis span");
    out.coords.push_back(std::move(*c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Expansion

namespace {

Jet expand_over(const ExpSum& sum, unsigned order, const SpanCoordinates& span) {
  const std::size_t nvars = span.basis.size();
  Jet out{sum.ambient(), span.basis, {}, order};
  std::size_t t = 0;
  for (const auto& [k, a] : sum.terms()) {
    const RatVector& linear = span.coords[t++];
    PolyMap power{{constant_monomial(nvars), Rational(1)}};
    Integer fact = 1;
    for (unsigned j = 0; j <= order; ++j) {
      if (j > 0) {
        power = times_linear(power, linear);
        fact *= j;
      }
      const Rational scale = a / Rational(fact);
      for (const auto& [m, c] : power) accumulate(out.coefficients, m, c * scale);
    }
  }
  return out;
}

}  // namespace

Jet jet_expand(const ExpSum& sum, unsigned order) {
  const auto classes = term_classes(sum);
  return expand_over(sum, order, span_reduce(sum.ambient(), classes));
}

Jet jet_expand(const ExpSum& sum, unsigned order, std::span<const CohClass> basis) {
  const auto classes = term_classes(sum);
  return expand_over(sum, order, span_coordinates(sum.ambient(), basis, classes));
}

Jet power_sum(const ExpSum& sum, unsigned degree) {
  const auto classes = term_classes(sum);
  const auto span = span_reduce(sum.ambient(), classes);
  const std::size_t nvars = span.basis.size();
  Jet out{sum.ambient(), span.basis, {}, degree};
  std::size_t t = 0;
  for (const auto& [k, a] : sum.terms()) {
    PolyMap power{{constant_monomial(nvars), Rational(1)}};
    for (unsigned j = 0; j < degree; ++j) power = times_linear(power, span.coords[t]);
    ++t;
    for (const auto& [m, c] : power) accumulate(out.coefficients, m, c * a);
  }
  return out;
}

VanishingOrder vanishing_order(const ExpSum& sum, unsigned cap) {
  if (sum.empty()) return {VanishingOrder::Kind::ZeroSeries, 0};
  const auto classes = term_classes(sum);
  const auto span = span_reduce(sum.ambient(), classes);
  const std::size_t nvars = span.basis.size();
  std::vector<PolyMap> powers(sum.size(), PolyMap{{constant_monomial(nvars), Rational(1)}});
  std::vector<Rational> coeffs;
  for (const auto& [k, a] : sum.terms()) coeffs.push_back(a);

  for (unsigned degree = 0; degree <= cap; ++degree) {
    if (degree > 0)
      for (std::size_t t = 0; t < powers.size(); ++t) powers[t] = times_linear(powers[t], span.coords[t]);
    PolyMap part;
    for (std::size_t t = 0; t < powers.size(); ++t)
      for (const auto& [m, c] : powers[t]) accumulate(part, m, c * coeffs[t]);
    if (!part.empty()) return {VanishingOrder::Kind::Exact, degree};
  }
  return {VanishingOrder::Kind::AtLeast, cap + 1};
}

// ---------------------------------------------------------------------------
// Parity

std::string_view parity_name(Parity p) {
  switch (p) {
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::Neither: return "neither";
    case Parity::Zero: return "zero";
  }
  return "unknown";
}

Parity parity(const ExpSum& sum) {
  if (sum.empty()) return Parity::Zero;
  bool even = true;
  bool odd = true;
  for (const auto& [k, a] : sum.terms()) {
    const Rational mirrored = sum.coefficient(-k);
    if (mirrored != a) even = false;
    if (mirrored != -a) odd = false;
  }
  if (even) return Parity::Even;
  if (odd) return Parity::Odd;
  return Parity::Neither;
}

Parity expected_parity(const FourManifold& m, const CohClass& w) {
  // -w^2 + 3 (chi + sigma) / 4 mod 2
  const Integer value = -square(m.form, w) + 3 * ((m.chi + m.sigma) / 4);
  return is_even(value) ? Parity::Even : Parity::Odd;
}

// ---------------------------------------------------------------------------
// Series constructors

ExpSum sw_series(const FourManifold& m, const CohClass& w) {
  const Integer w_sq = square(m.form, w);
  ExpSum out(m.form);
  for (const auto& entry : m.basic_classes) {
    const Integer exponent = w_sq + pairing(m.form, entry.k, w);
    if (!is_even(exponent))
      throw Error(ErrorCode::OddExponent, "w^2 + k.w = " + to_string(exponent) + " is odd for k = " +
                                              to_string(entry.k));
    out.add(Rational(sign_power(exponent / 2) * entry.sw), entry.k);
  }
  return out;
}

ExpSum twist(const ExpSum& sum, const CohClass& lambda, int sign) {
  if (sign != 1 && sign != -1) throw Error(ErrorCode::Usage, "twist sign must be +1 or -1");
  ExpSum out(sum.ambient());
  const CohClass shift = Integer(sign) * lambda;
  for (const auto& [k, a] : sum.terms()) out.add(a, k + shift);
  return out;
}

GaussianSeries witten_series(const FourManifold& m, const CohClass& w) {
  const Rational c = c_of_x(m);
  if (!is_integral(c)) throw Error(ErrorCode::NonIntegralC, "c(X) = " + to_string(c) + " is not an integer");
  return {power_of_two(2 - to_integer(c).convert_to<long>()), Rational(1, 2), sw_series(m, w)};
}

UnivariateSeries evaluate_along(const GaussianSeries& series, const Direction& h0, unsigned order) {
  const auto& lattice = series.core.ambient();
  std::vector<Rational> core(order + 1, Rational(0));
  for (const auto& [k, a] : series.core.terms()) {
    const Rational q = pairing(lattice, k, h0);
    Rational term = a;  // a q^j / j!
    for (unsigned j = 0; j <= order; ++j) {
      if (j > 0) term = term * q / Rational(j);
      core[j] += term;
    }
  }
  std::vector<Rational> gauss(order + 1, Rational(0));
  const Rational s = series.quad_coeff * square(lattice, h0);
  Rational term = 1;  // s^i / i!
  for (unsigned i = 0; 2 * i <= order; ++i) {
    if (i > 0) term = term * s / Rational(i);
    gauss[2 * i] = term;
  }
  UnivariateSeries out{std::vector<Rational>(order + 1, Rational(0))};
  for (unsigned i = 0; i <= order; ++i)
    for (unsigned j = 0; i + j <= order; ++j) out.coefficients[i + j] += gauss[i] * core[j];
  for (auto& c : out.coefficients) c *= series.prefactor;
  return out;
}

}  // namespace swdon
