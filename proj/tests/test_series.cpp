#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace swdon;

namespace {

const IntegralLattice& k3_form() {
  static const IntegralLattice l = elliptic_surface(2).form;
  return l;
}

ExpSum random_sum(std::mt19937& rng, const IntegralLattice& l, int terms) {
  std::uniform_int_distribution<int> num(-6, 6), den(1, 5);
  ExpSum s(l);
  for (int t = 0; t < terms; ++t) s.add(Rational(num(rng), den(rng)), oracle::random_class(l.rank(), rng, 2, 0.2));
  return s;
}

Direction random_direction(std::mt19937& rng, Index rank) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  RatVector v(rank);
  for (Index i = 0; i < rank; ++i) v(i) = Rational(num(rng), den(rng));
  return {v};
}

}  // namespace

TEST(ExpSum, MergesAndDropsZeros) {
  ExpSum s(k3_form());
  const CohClass k = CohClass::unit(22, 3);
  s.add(Rational(1, 2), k);
  s.add(Rational(1, 2), k);
  EXPECT_EQ(s.size(), 1u);
  EXPECT_EQ(s.coefficient(k), 1);
  s.add(-1, k);
  EXPECT_TRUE(s.empty());
  s.add(0, k);
  EXPECT_TRUE(s.empty());
  EXPECT_EQ(s.coefficient(-k), 0);
}

TEST(Jet, MatchesMultinomialOracle) {
  std::mt19937 rng(31);
  for (int s = 0; s < 40; ++s) {
    const ExpSum sum = random_sum(rng, k3_form(), 1 + s % 5);
    const unsigned order = 1 + s % 4;
    const Jet jet = jet_expand(sum, order);
    for (unsigned d = 0; d <= order; ++d)
      for (const auto& alpha : oracle::monomials(jet.variables.size(), d))
        EXPECT_EQ(jet.coefficient(alpha), oracle::multinomial_coefficient(sum, jet.variables, alpha));
  }
}

TEST(Jet, EvaluationMatchesDirectTruncatedExponential) {
  std::mt19937 rng(32);
  for (int s = 0; s < 40; ++s) {
    const ExpSum sum = random_sum(rng, k3_form(), 1 + s % 4);
    const unsigned order = s % 5;
    const Jet jet = jet_expand(sum, order);
    const Direction h = random_direction(rng, 22);
    Rational direct = 0;
    for (const auto& [k, a] : sum.terms()) {
      const Rational q = pairing(k3_form(), k, h);
      Rational p = 1, fact = 1;
      for (unsigned j = 0; j <= order; ++j) {
        if (j > 0) {
          p *= q;
          fact *= j;
        }
        direct += a * p / fact;
      }
    }
    EXPECT_EQ(jet.evaluate(h), direct);
  }
}

TEST(Jet, PowerSumIsScaledHomogeneousPart) {
  std::mt19937 rng(33);
  for (int s = 0; s < 30; ++s) {
    const ExpSum sum = random_sum(rng, k3_form(), 1 + s % 5);
    const unsigned d = s % 5;
    const Jet ps = power_sum(sum, d);
    const Jet part = jet_expand(sum, d).homogeneous_part(d);
    ASSERT_EQ(ps.variables, part.variables);
    for (const auto& alpha : oracle::monomials(ps.variables.size(), d))
      EXPECT_EQ(ps.coefficient(alpha), part.coefficient(alpha) * Rational(factorial(d)));
  }
}

TEST(Jet, TwistIsMultiplicationByExponential) {
  std::mt19937 rng(34);
  const auto& l = k3_form();
  for (int s = 0; s < 25; ++s) {
    const ExpSum sum = random_sum(rng, l, 1 + s % 4);
    const CohClass lambda = oracle::random_class(22, rng, 2, 0.3);
    const ExpSum twisted = twist(sum, lambda, 1);
    ExpSum e(l);
    e.add(1, lambda);
    std::vector<CohClass> all;
    for (const auto& [k, a] : sum.terms()) all.push_back(k);
    for (const auto& [k, a] : twisted.terms()) all.push_back(k);
    all.push_back(lambda);
    const auto basis = span_reduce(l, all).basis;
    const unsigned order = 3;
    EXPECT_EQ(jet_expand(twisted, order, basis), jet_expand(sum, order, basis) * jet_expand(e, order, basis));
    EXPECT_EQ(twist(twisted, lambda, -1), sum);
  }
}

TEST(Jet, SpanCoordinatesRejectsOutsideClasses) {
  const auto& l = k3_form();
  const std::vector<CohClass> basis{CohClass::unit(22, 0)};
  const std::vector<CohClass> classes{CohClass::unit(22, 2)};
  EXPECT_THROW(span_coordinates(l, basis, classes), Error);
  const std::vector<CohClass> dependent{CohClass::unit(22, 0), Integer(3) * CohClass::unit(22, 0)};
  EXPECT_THROW(span_coordinates(l, dependent, classes), Error);
}

TEST(VanishingOrder, Examples) {
  const auto& l = k3_form();
  const CohClass a = CohClass::unit(22, 2);
  ExpSum odd(l);
  odd.add(1, a);
  odd.add(-1, -a);
  EXPECT_EQ(vanishing_order(odd, 5), (VanishingOrder{VanishingOrder::Kind::Exact, 1}));

  ExpSum second(l);  // e^a - 2 + e^-a = <a,h>^2 + ...
  second.add(1, a);
  second.add(-2, CohClass::zero(22));
  second.add(1, -a);
  EXPECT_EQ(vanishing_order(second, 5), (VanishingOrder{VanishingOrder::Kind::Exact, 2}));
  EXPECT_EQ(vanishing_order(second, 1), (VanishingOrder{VanishingOrder::Kind::AtLeast, 2}));
  EXPECT_TRUE(vanishing_order(second, 1).at_least(2));
  EXPECT_FALSE(vanishing_order(second, 5).at_least(3));

  EXPECT_EQ(vanishing_order(ExpSum(l), 5).kind, VanishingOrder::Kind::ZeroSeries);
}

TEST(VanishingOrder, EllipticSurfacesAreSharp) {
  for (int n = 2; n <= 8; ++n) {
    const FourManifold m = elliptic_surface(n);
    const auto order = vanishing_order(sw_series(m, characteristic_vector(m.form)), n + 2);
    EXPECT_EQ(order, (VanishingOrder{VanishingOrder::Kind::Exact, static_cast<unsigned>(n - 2)})) << n;
  }
}

TEST(Parity, Classification) {
  const auto& l = k3_form();
  const CohClass a = CohClass::unit(22, 2);
  ExpSum s(l);
  s.add(2, a);
  s.add(2, -a);
  EXPECT_EQ(parity(s), Parity::Even);
  s.add(-4, -a);
  EXPECT_EQ(parity(s), Parity::Odd);
  s.add(1, CohClass::zero(22));
  EXPECT_EQ(parity(s), Parity::Neither);
  EXPECT_EQ(parity(ExpSum(l)), Parity::Zero);
}

TEST(SwSeries, ChangingWByTwiceAClassFlipsByPairing) {
  std::mt19937 rng(35);
  for (int n : {3, 4, 5}) {
    const FourManifold m = elliptic_surface(n);
    for (int s = 0; s < 10; ++s) {
      const CohClass w = oracle::random_characteristic(m.form, rng);
      const CohClass u = oracle::random_class(m.form.rank(), rng, 2, 0.3);
      const ExpSum a = sw_series(m, w), b = sw_series(m, w + Integer(2) * u);
      for (const auto& e : m.basic_classes)
        EXPECT_EQ(b.coefficient(e.k), a.coefficient(e.k) * sign_power(pairing(m.form, e.k, u)));
    }
  }
}

TEST(SwSeries, OddExponentIsRejected) {
  // k is not characteristic here, so w^2 + k.w = 1.
  FourManifold m = elliptic_surface(2);
  m.basic_classes[0].k = CohClass::unit(22, 0);
  const CohClass w = CohClass::unit(22, 1);
  try {
    sw_series(m, w);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OddExponent);
  }
}

TEST(Witten, AlongDirectionMatchesDirectExpansion) {
  std::mt19937 rng(36);
  for (int n : {3, 4, 6}) {
    const FourManifold m = elliptic_surface(n);
    const CohClass w = characteristic_vector(m.form);
    const GaussianSeries g = witten_series(m, w);
    EXPECT_EQ(g.prefactor, power_of_two(2 - n));
    EXPECT_EQ(g.quad_coeff, Rational(1, 2));
    const Direction h = random_direction(rng, m.form.rank());
    const unsigned order = 8;
    const auto series = evaluate_along(g, h, order);
    const Rational hh = square(m.form, h);
    for (unsigned j = 0; j <= order; ++j) {
      // t^j coefficient of 2^(2-c) exp(t^2 hh / 2) sum a exp(t q).
      Rational expected = 0;
      for (unsigned i = 0; 2 * i <= j; ++i) {
        Rational gauss = 1;
        for (unsigned s = 1; s <= i; ++s) gauss *= hh / 2 / s;
        for (const auto& [k, a] : g.core.terms()) {
          Rational p = 1;
          const Rational q = pairing(m.form, k, h);
          for (unsigned s = 1; s <= j - 2 * i; ++s) p *= q / s;
          expected += gauss * a * p;
        }
      }
      EXPECT_EQ(series.coefficients[j], g.prefactor * expected) << "n=" << n << " j=" << j;
    }
    // The series vanishes to order c - 2 along every direction.
    for (unsigned j = 0; j + 2 < static_cast<unsigned>(n); ++j) EXPECT_EQ(series.coefficients[j], 0);
  }
}

TEST(Witten, NonIntegralCIsRejected) {
  FourManifold m = elliptic_surface(2);
  m.chi = 25;  // c = -(175 - 176)/4 = 1/4
  try {
    witten_series(m, CohClass::zero(22));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonIntegralC);
  }
}
