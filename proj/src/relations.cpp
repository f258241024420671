#include "swdon/relations.hpp"

#include <algorithm>
#include <sstream>

namespace swdon {

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::PassVacuous: return "pass-vacuous";
    case Verdict::Fail: return "fail";
    case Verdict::Undetermined: return "undetermined";
  }
  return "unknown";
}

std::string_view mechanism_name(DvanishReport::Mechanism m) {
  switch (m) {
    case DvanishReport::Mechanism::DegreeRule: return "degree-rule";
    case DvanishReport::Mechanism::VanishingBranch: return "vanishing-branch";
    case DvanishReport::Mechanism::FormulaBranch: return "formula-branch";
    case DvanishReport::Mechanism::Uncovered: return "uncovered";
  }
  return "unknown";
}

namespace {

std::string show(const Rational& v) { return is_integral(v) ? mp::numerator(v).str() : to_string(v); }
std::string show(const Integer& v) { return v.str(); }

std::string show(const VanishingOrder& v) {
  switch (v.kind) {
    case VanishingOrder::Kind::Exact: return std::to_string(v.value);
    case VanishingOrder::Kind::AtLeast: return ">= " + std::to_string(v.value);
    case VanishingOrder::Kind::ZeroSeries: return "infinite (zero series)";
  }
  return "?";
}

void require_conjecture(const FourManifold& m) {
  if (!m.conjecture_assumed)
    throw Error(ErrorCode::ConjectureNotAssumed,
                "the multiplicity hypothesis is not assumed for " + m.name + " (assume_conjecture = false)");
}

void require_rank(const FourManifold& m, const CohClass& c, const char* what) {
  if (c.size() != m.form.rank())
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has length " + std::to_string(c.size()) +
                                                  ", rank is " + std::to_string(m.form.rank()));
}

/// w = w2 mod 2 with w^2 = sigma mod 8.
void require_characteristic_lift(const FourManifold& m, const CohClass& w) {
  require_rank(m, w, "w");
  if (!is_characteristic(m.form, w))
    throw Error(ErrorCode::NotCharacteristic, "w = " + to_string(w) + " is not characteristic");
  if (mod(square(m.form, w) - m.sigma, 8) != 0)
    throw Error(ErrorCode::NotCharacteristic, "w^2 = " + show(square(m.form, w)) + " is not sigma mod 8");
}

bool in_b_perp(const FourManifold& m, const CohClass& lambda) {
  return std::all_of(m.basic_classes.begin(), m.basic_classes.end(),
                     [&](const BasicClassEntry& e) { return pairing(m.form, e.k, lambda) == 0; });
}

Integer c_integer(const FourManifold& m) {
  const Rational c = c_of_x(m);
  if (!is_integral(c)) throw Error(ErrorCode::NonIntegralC, "c(X) = " + to_string(c) + " is not an integer");
  return mp::numerator(c);
}

struct AbundanceLookup {
  std::optional<HyperbolicPair> pair;
  std::optional<AbundanceClasses> classes;
  std::string note;
};

AbundanceLookup find_abundance(const FourManifold& m, const PipelineOptions& options) {
  AbundanceLookup out;
  const Integer target = -(m.chi + m.sigma);
  if (options.lambdas) {
    const auto& [l0, l1] = *options.lambdas;
    require_rank(m, l0, "lambda0");
    require_rank(m, l1, "lambda1");
    auto violated = [](const std::string& what) {
      throw Error(ErrorCode::HypothesisViolation, "supplied lambda classes: " + what);
    };
    if (!in_b_perp(m, l0) || !in_b_perp(m, l1)) violated("lambda0, lambda1 must lie in B-perp");
    if (square(m.form, l0) != target) violated("lambda0^2 must equal -(chi + sigma)");
    if (square(m.form, l1) != target + 4) violated("lambda1^2 must equal -(chi + sigma) + 4");
    if (!(l0 - l1).is_even()) violated("lambda0 = lambda1 mod 2 required");
    AbundanceClasses classes;
    classes.h = (m.chi + m.sigma) / 4;
    classes.lambda0 = l0;
    classes.lambda1 = l1;
    classes.lambda = is_even(classes.h) ? l0 : l1;
    out.classes = classes;
    out.note = "lambda classes supplied by caller";
    return out;
  }
  const auto classes = m.basic_class_list();
  const auto perp = orthogonal_complement(m.form, classes);
  const auto search = find_hyperbolic_pair(perp, options.search);
  if (!search.pair) {
    out.note = "no hyperbolic pair in B-perp within radius " + std::to_string(options.search.radius) +
               (search.exhaustive ? "" : " (candidate budget exhausted)") + "; abundance undetermined";
    return out;
  }
  out.pair = search.pair;
  out.classes = construct_abundance_classes(*search.pair, m.chi, m.sigma);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

Rational r_param(const Integer& chi, const Integer& sigma, const Integer& lambda_sq) {
  return Rational(-lambda_sq) - Rational(Integer(11 * chi + 15 * sigma), Integer(4));
}

Rational i_param(const Integer& chi, const Integer& sigma, const Integer& lambda_sq) {
  return Rational(lambda_sq) - Rational(Integer(3 * chi + 7 * sigma), Integer(4));
}

Rational r_lambda(const FourManifold& m, const CohClass& lambda) {
  return r_param(m.chi, m.sigma, square(m.form, lambda));
}

Rational i_lambda(const FourManifold& m, const CohClass& lambda) {
  return i_param(m.chi, m.sigma, square(m.form, lambda));
}

LevelData level_and_index(const FourManifold& m, const CohClass& lambda, long delta) {
  require_rank(m, lambda, "lambda");
  for (const auto& e : m.basic_classes)
    if (pairing(m.form, e.k, lambda) != 0)
      throw Error(ErrorCode::LambdaNotOrthogonal,
                  "lambda . k = " + show(pairing(m.form, e.k, lambda)) + " for basic class " + to_string(e.k));
  if (mod(m.chi + m.sigma, 4) != 0)
    throw Error(ErrorCode::ParityError, "chi + sigma is not divisible by 4");

  const Integer lambda_sq = square(m.form, lambda);
  LevelData out;
  out.p1 = -Integer(delta) - 3 * ((m.chi + m.sigma) / 4);
  out.p1_prime = c1_squared(m) + lambda_sq;
  for (const auto& e : m.basic_classes) {
    const CohClass diff = e.k - lambda;
    if (square(m.form, diff) != out.p1_prime)
      throw Error(ErrorCode::NonSimpleType, "(k - lambda)^2 differs from 2 chi + 3 sigma + lambda^2 for k = " +
                                                to_string(e.k));
  }
  const Rational r = r_param(m.chi, m.sigma, lambda_sq);
  const Rational i = i_param(m.chi, m.sigma, lambda_sq);
  out.level = (Rational(delta) - r) / 4;
  out.dirac_index = (i - Rational(delta)) / 4;
  out.level_integral = is_integral(out.level);

  // Cross-checks: p1' = p1 + 4 level, and the index from p1, lambda^2 and sigma.
  if (Rational(out.p1_prime) != Rational(out.p1) + 4 * out.level ||
      out.dirac_index != Rational(Integer(out.p1 + lambda_sq - m.sigma), Integer(4)))
    throw Error(ErrorCode::HypothesisViolation, "level bookkeeping is inconsistent");
  return out;
}

bool degree_admissible(const FourManifold& m, const CohClass& w, long delta) {
  require_rank(m, w, "w");
  if (mod(m.chi + m.sigma, 4) != 0) throw Error(ErrorCode::ParityError, "chi + sigma is not divisible by 4");
  const Integer rhs = -2 * square(m.form, w) - 3 * ((m.chi + m.sigma) / 2);
  return mod(Integer(2 * delta) - rhs, 8) == 0;
}

bool dvanish_applies(const FourManifold& m, const CohClass& lambda, long delta) {
  require_conjecture(m);
  require_rank(m, lambda, "lambda");
  const Rational d(delta);
  return d < r_lambda(m, lambda) && d < i_lambda(m, lambda);
}

DswrelValue dswrel_value(const FourManifold& m, const RelationQuery& q) {
  require_conjecture(m);
  require_rank(m, q.w, "w");
  require_rank(m, q.lambda, "lambda");
  auto violated = [](const std::string& what) { throw Error(ErrorCode::HypothesisViolation, what); };

  if (q.m < 0 || q.delta < 2 * q.m) violated("delta >= 2m and m >= 0 required (delta = " + std::to_string(q.delta) +
                                             ", m = " + std::to_string(q.m) + ")");
  if (!in_b_perp(m, q.lambda)) violated("lambda must lie in B-perp");
  if (!is_characteristic(m.form, q.w - q.lambda)) violated("w - lambda must be characteristic (w2 mod 2)");
  const Rational r = r_lambda(m, q.lambda);
  const Rational i = i_lambda(m, q.lambda);
  const Rational delta(q.delta);
  if (delta != r) violated("delta = r(lambda) required (delta = " + show(delta) + ", r = " + show(r) + ")");
  if (!(delta < i)) violated("delta < i(lambda) required (delta = " + show(delta) + ", i = " + show(i) + ")");

  const Integer c = c_integer(m);
  const Integer lambda_sq = square(m.form, q.lambda);
  const Integer w_sq = square(m.form, q.w);
  const Integer lambda_w = pairing(m.form, q.lambda, q.w);
  if (!is_even(c + q.delta))
    throw Error(ErrorCode::InadmissibleParity, "c(X) + delta = " + show(Integer(c + q.delta)) + " is odd");
  if (!is_even(lambda_sq))
    throw Error(ErrorCode::InadmissibleParity, "lambda^2 = " + show(lambda_sq) + " is odd");
  if (mod(lambda_sq - 2 * lambda_w - (m.sigma - w_sq), 8) != 0)
    violated("lambda^2 - 2 lambda.w = sigma - w^2 mod 8 fails");

  DswrelValue out;
  out.prefactor = power_of_two(1 - ((c + q.delta) / 2).convert_to<long>());
  out.sign = sign_power(Integer(q.m - 1) + lambda_sq / 2 - lambda_w);
  const int alternative = sign_power(Integer(q.m - 1) + (m.sigma - w_sq) / 2);
  if (out.sign != alternative) violated("the two sign conventions disagree");

  const ExpSum shifted = twist(sw_series(m, q.w), q.lambda, -1);
  out.polynomial = power_sum(shifted, static_cast<unsigned>(q.degree()));
  const Rational factor = out.prefactor * out.sign;
  for (auto& [mono, coeff] : out.polynomial.coefficients) coeff *= factor;
  return out;
}

// ---------------------------------------------------------------------------
// Superconformal simple type

SstReport sst_check(const FourManifold& m, const CohClass& w, const PipelineOptions& options) {
  require_valid(m);
  require_conjecture(m);
  require_characteristic_lift(m, w);

  SstReport report;
  const Integer c = c_integer(m);
  report.c = Rational(c);
  report.w = w;
  report.cap = options.cap.value_or(static_cast<unsigned>(std::max<long>(c.convert_to<long>() + 4, 0)));
  const ExpSum series = sw_series(m, w);
  report.order = vanishing_order(series, report.cap);
  report.parity = parity(series);
  report.expected_parity = expected_parity(m, w);

  auto& trace = report.trace;
  trace.push_back("manifold: " + m.name);
  trace.push_back("chi = " + show(m.chi) + ", sigma = " + show(m.sigma) + ", c(X) = " + show(c));
  trace.push_back("w = " + to_string(w) + ", w^2 = " + show(square(m.form, w)));
  trace.push_back("SW series: " + std::to_string(series.size()) + " terms, vanishing order " + show(report.order) +
                  " (cap " + std::to_string(report.cap) + ")");
  trace.push_back("parity: " + std::string(parity_name(report.parity)) + " (degree rule: " +
                  std::string(parity_name(report.expected_parity)) + ")");

  const bool meets_bound = c - 2 <= 0 || report.order.at_least(static_cast<unsigned>((c - 2).convert_to<long>()));
  if (c - 3 < 0) {
    report.verdict = Verdict::PassVacuous;
    trace.push_back("c - 3 = " + show(Integer(c - 3)) + " < 0: conclusion holds vacuously");
    return report;
  }

  const auto abundance = find_abundance(m, options);
  if (!abundance.classes) {
    report.verdict = Verdict::Undetermined;
    trace.push_back(abundance.note);
    return report;
  }
  if (abundance.pair) {
    report.pair = abundance.pair;
    trace.push_back("hyperbolic pair in B-perp: e1 = " + to_string(abundance.pair->e1) +
                    ", e2 = " + to_string(abundance.pair->e2));
  } else {
    trace.push_back(abundance.note);
  }
  const auto& l0 = abundance.classes->lambda0;
  const auto& l1 = abundance.classes->lambda1;
  report.lambda0 = l0;
  report.lambda1 = l1;
  const Rational r0 = r_lambda(m, l0), i0 = i_lambda(m, l0);
  const Rational r1 = r_lambda(m, l1), i1 = i_lambda(m, l1);
  trace.push_back("lambda0 = " + to_string(l0) + ", lambda0^2 = " + show(square(m.form, l0)) + ", r = " + show(r0) +
                  ", i = " + show(i0));
  trace.push_back("lambda1 = " + to_string(l1) + ", lambda1^2 = " + show(square(m.form, l1)) + ", r = " + show(r1) +
                  ", i = " + show(i1));
  if (r0 != report.c || i0 != report.c || r1 != report.c - 4 || i1 != report.c + 4)
    throw Error(ErrorCode::HypothesisViolation, "lambda classes do not meet the depth/index identities");

  const long delta = (c - 4).convert_to<long>();
  bool all_zero = true;
  for (long mm = 0; delta - 2 * mm >= 0; ++mm) {
    SstReport::DegreeCheck check;
    check.m = mm;
    check.d = delta - 2 * mm;
    check.vanishing_branch = dvanish_applies(m, l0, delta);
    check.formula = dswrel_value(m, {w + l1, l1, delta, mm}).polynomial;
    const bool zero = check.formula.is_zero();
    all_zero = all_zero && zero && check.vanishing_branch;
    trace.push_back("m = " + std::to_string(mm) + ", d = " + std::to_string(check.d) + ": D^(w+lambda0)(h^" +
                    std::to_string(check.d) + " x^" + std::to_string(mm) + ") = 0 by the vanishing branch" +
                    (check.vanishing_branch ? "" : " [NOT APPLICABLE]") + "; formula branch for D^(w+lambda1): " +
                    (zero ? "zero" : "NONZERO"));
    report.checks.push_back(std::move(check));
  }
  if (report.checks.empty()) trace.push_back("d = c - 4 - 2m < 0 for all m: only the parity argument is needed");

  const bool parity_ok = report.parity == report.expected_parity || report.parity == Parity::Zero;
  report.trace_consistent = !parity_ok || (all_zero == meets_bound);
  report.verdict = meets_bound ? Verdict::Pass : Verdict::Fail;
  trace.push_back("conclusion: vanishing order " + show(report.order) + (meets_bound ? " >= " : " < ") +
                  "c - 2 = " + show(Integer(c - 2)) + ": " + std::string(verdict_name(report.verdict)));
  if (report.verdict == Verdict::Fail)
    trace.push_back("input inconsistent with the assumed hypotheses (they imply the bound)");
  return report;
}

// ---------------------------------------------------------------------------
// Donaldson vanishing

DvanishReport dvanish_theorem_check(const FourManifold& m, const CohClass& w, const PipelineOptions& options) {
  require_valid(m);
  require_conjecture(m);
  require_characteristic_lift(m, w);

  DvanishReport report;
  const Integer c = c_integer(m);
  report.c = Rational(c);
  report.w = w;
  report.residue = mod(-(m.chi + m.sigma), 8);
  auto& trace = report.trace;
  trace.push_back("manifold: " + m.name);
  trace.push_back("chi = " + show(m.chi) + ", sigma = " + show(m.sigma) + ", c(X) = " + show(c));
  trace.push_back("w = " + to_string(w) + ", w^2 = " + show(square(m.form, w)));
  trace.push_back("-(chi + sigma) = " + show(Integer(-(m.chi + m.sigma))) + " = " + show(report.residue) + " mod 8");

  const long top = (c - 1).convert_to<long>();
  if (top < 0) {
    report.verdict = Verdict::PassVacuous;
    trace.push_back("c - 1 < 0: no degrees to check");
    return report;
  }

  const auto abundance = find_abundance(m, options);
  if (!abundance.classes) {
    report.verdict = Verdict::Undetermined;
    trace.push_back(abundance.note);
    return report;
  }
  if (abundance.pair)
    trace.push_back("hyperbolic pair in B-perp: e1 = " + to_string(abundance.pair->e1) +
                    ", e2 = " + to_string(abundance.pair->e2));
  else
    trace.push_back(abundance.note);

  const CohClass& lambda = abundance.classes->lambda;
  if (!lambda.is_even() || !in_b_perp(m, lambda))
    throw Error(ErrorCode::HypothesisViolation, "lambda must lie in 2 B-perp");
  report.lambda = lambda;
  const Integer lambda_sq = square(m.form, lambda);
  report.r = r_lambda(m, lambda);
  report.i = i_lambda(m, lambda);
  trace.push_back("lambda = " + to_string(lambda) + " in 2 B-perp, lambda^2 = " + show(lambda_sq) +
                  ", r(lambda) = " + show(report.r) + ", i(lambda) = " + show(report.i));
  // lambda is even, so w + lambda = w mod 2 and D^(w+lambda) = (-1)^(lambda^2/4) D^w.
  trace.push_back("D^(w+lambda) = " + std::string(sign_power(lambda_sq / 4) > 0 ? "+1" : "-1") + " * D^w");

  const ExpSum twisted = twist(sw_series(m, w), lambda, -1);
  const Integer w_sq = square(m.form, w);
  const Integer required = mod(-2 * w_sq - 3 * ((m.chi + m.sigma) / 2), 8);

  bool any_nonzero = false;
  bool any_uncovered = false;
  for (long d = 0; d <= top; ++d) {
    DvanishReport::Step step;
    step.d = d;
    const std::string head = "d = " + std::to_string(d) + ": ";
    const Rational dd(d);
    if (!degree_admissible(m, w, d)) {
      step.mechanism = DvanishReport::Mechanism::DegreeRule;
      trace.push_back(head + "not admissible (2d = " + show(mod(Integer(2 * d), 8)) + " mod 8, required " +
                      show(required) + " mod 8): zero by degree rule");
    } else if (dd < report.r && dd < report.i) {
      step.mechanism = DvanishReport::Mechanism::VanishingBranch;
      trace.push_back(head + "admissible; vanishing branch (d < r, d < i): D^w(h^(d-2m) x^m) = 0 for m = 0.." +
                      std::to_string(d / 2));
    } else if (dd == report.r && dd < report.i) {
      step.mechanism = DvanishReport::Mechanism::FormulaBranch;
      bool zero = true;
      for (long mm = 0; d - 2 * mm >= 0; ++mm) {
        auto value = dswrel_value(m, {w, lambda, d, mm}).polynomial;
        // Same quantity up to a constant: a Taylor coefficient of exp(-<lambda,h>) SW^w.
        const Jet taylor = jet_expand(twisted, static_cast<unsigned>(d - 2 * mm))
                               .homogeneous_part(static_cast<unsigned>(d - 2 * mm));
        if (value.is_zero() != taylor.is_zero())
          throw Error(ErrorCode::HypothesisViolation, "formula value and Taylor coefficient disagree on vanishing");
        zero = zero && value.is_zero();
        step.formula_values.push_back(std::move(value));
      }
      step.zero = zero;
      trace.push_back(head + "admissible; formula branch (d = r < i): D^w(h^(d-2m) x^m) for m = 0.." +
                      std::to_string(d / 2) + " is a multiple of a Taylor coefficient of exp(-<lambda,h>) SW^w: " +
                      (zero ? "zero" : "NONZERO"));
    } else {
      step.mechanism = DvanishReport::Mechanism::Uncovered;
      step.zero = false;
      any_uncovered = true;
      trace.push_back(head + "admissible but neither branch applies");
    }
    any_nonzero = any_nonzero || (step.mechanism == DvanishReport::Mechanism::FormulaBranch && !step.zero);
    report.steps.push_back(std::move(step));
  }
  report.verdict = any_nonzero ? Verdict::Fail : any_uncovered ? Verdict::Undetermined : Verdict::Pass;
  trace.push_back("verdict: " + std::string(verdict_name(report.verdict)));
  return report;
}

// ---------------------------------------------------------------------------
// Basic class count bound

BoundReport basic_class_bound(const FourManifold& m, bool strict) {
  require_valid(m);
  BoundReport out;
  out.strict = strict;
  out.b = b_count(m);
  out.c = c_of_x(m);
  out.half_c = out.c / 2;
  out.c1_sq = c1_squared(m);
  out.chi_h = chi_h(m);
  const Rational b(out.b);
  out.strict_holds = b > out.half_c;
  out.non_strict_holds = b >= out.half_c;
  out.printed_line_holds = Rational(out.c1_sq) >= out.chi_h - 2 * b - 1;
  out.rearranged_line_holds = Rational(out.c1_sq) > out.chi_h - 2 * b;

  if (out.b == 0) {
    out.reason = "b(X) = 0: hypothesis b(X) > 0 fails";
    out.verdict = Verdict::PassVacuous;
    return out;
  }
  if (out.c - 3 >= 0 && !m.basic_classes.empty()) {
    const CohClass w = characteristic_vector(m.form);
    const auto order = vanishing_order(sw_series(m, w), static_cast<unsigned>(to_integer(out.c).convert_to<long>() + 4));
    if (!order.at_least(static_cast<unsigned>(to_integer(out.c - 2).convert_to<long>()))) {
      out.reason = "SW series does not vanish to order c - 2: hypothesis fails";
      out.verdict = Verdict::PassVacuous;
      return out;
    }
  }
  out.applicable = true;
  out.verdict = (strict ? out.strict_holds : out.non_strict_holds) ? Verdict::Pass : Verdict::Fail;
  return out;
}

// ---------------------------------------------------------------------------
// Region

bool RegionDescription::inside(long x, long delta) const {
  const Rational d(delta);
  return d < -Rational(x) + r_intercept && d < Rational(x) + i_intercept;
}

Window default_window(const FourManifold& m) {
  const long x0 = (-(m.chi + m.sigma)).convert_to<long>();
  const Rational c = c_of_x(m);
  const long top = std::max<long>(2 * mp::numerator(c).convert_to<long>() / mp::denominator(c).convert_to<long>() + 8, 8);
  return {x0 - 24, x0 + 24, 0, top};
}

bool is_marked_point(const FourManifold& m, const Integer& w_sq, long x, long delta) {
  const Integer rhs = -2 * w_sq - 3 * ((m.chi + m.sigma) / 2);
  return mod(Integer(2 * delta) - rhs, 8) == 0 && mod(Integer(x) - (w_sq - m.sigma), 4) == 0;
}

RegionDescription region_data(const FourManifold& m, const CohClass& w, const Window& window) {
  require_rank(m, w, "w");
  if (mod(m.chi + m.sigma, 4) != 0) throw Error(ErrorCode::ParityError, "chi + sigma is not divisible by 4");
  if (window.x_min > window.x_max || window.delta_min > window.delta_max)
    throw Error(ErrorCode::Usage, "window bounds are inverted");
  RegionDescription out;
  out.window = window;
  out.w_sq = square(m.form, w);
  out.w_characteristic = is_characteristic(m.form, w);
  out.r_intercept = -Rational(Integer(11 * m.chi + 15 * m.sigma), Integer(4));
  out.i_intercept = -Rational(Integer(3 * m.chi + 7 * m.sigma), Integer(4));
  out.intersection_x = Rational(Integer(-(m.chi + m.sigma)));
  out.intersection_delta = c_of_x(m);
  for (long delta = window.delta_max; delta >= window.delta_min; --delta)
    for (long x = window.x_min; x <= window.x_max; ++x) {
      if (!is_marked_point(m, out.w_sq, x, delta)) continue;
      RegionPoint p;
      p.x = x;
      p.delta = delta;
      p.hollow = out.w_characteristic && x % 8 == 0;
      p.inside = out.inside(x, delta);
      const Rational d(delta);
      p.on_r_edge = d == -Rational(x) + out.r_intercept && d < Rational(x) + out.i_intercept;
      out.marked.push_back(p);
    }
  return out;
}

}  // namespace swdon
