#pragma once

#include "swdon/lattice.hpp"
#include "swdon/manifold.hpp"
#include "swdon/series.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace swdon {

enum class Verdict { Pass, PassVacuous, Fail, Undetermined };

std::string_view verdict_name(Verdict v);

// ---------------------------------------------------------------------------
// Depth and index parameters

/// r = -lambda^2 - (11 chi + 15 sigma) / 4
Rational r_param(const Integer& chi, const Integer& sigma, const Integer& lambda_sq);
/// i = lambda^2 - (3 chi + 7 sigma) / 4
Rational i_param(const Integer& chi, const Integer& sigma, const Integer& lambda_sq);

Rational r_lambda(const FourManifold& m, const CohClass& lambda);
Rational i_lambda(const FourManifold& m, const CohClass& lambda);

/// A Donaldson invariant evaluated on h^(delta - 2m) x^m.
struct RelationQuery {
  CohClass w;
  CohClass lambda;
  long delta = 0;
  long m = 0;

  long degree() const { return delta - 2 * m; }
};

struct LevelData {
  Integer p1;        // from delta = -p1 - 3 (chi + sigma) / 4
  Integer p1_prime;  // (k - lambda)^2 for every basic class k
  Rational level;    // (delta - r) / 4
  Rational dirac_index;  // (i - delta) / 4
  bool level_integral = true;
};

/// Throws LambdaNotOrthogonal if lambda.k != 0 for some basic class. A
/// non-integral level is flagged in the result, not thrown.
LevelData level_and_index(const FourManifold& m, const CohClass& lambda, long delta);

/// 2 delta = -2 w^2 - 3 (chi + sigma) / 2  (mod 8)
bool degree_admissible(const FourManifold& m, const CohClass& w, long delta);

/// delta < r(lambda) and delta < i(lambda). Throws ConjectureNotAssumed without the hypothesis flag.
bool dvanish_applies(const FourManifold& m, const CohClass& lambda, long delta);

/// Value of the invariant on h^d x^m when delta = r(lambda) < i(lambda):
///   2^(1 - (c + delta)/2) (-1)^(m - 1 + lambda^2/2 - lambda.w)
///     * sum_s (-1)^((w^2 + k.w)/2) SW(k) <k - lambda, h>^d.
struct DswrelValue {
  Rational prefactor;
  int sign = 1;
  Jet polynomial;  // the full value, prefactor and sign included
};

DswrelValue dswrel_value(const FourManifold& m, const RelationQuery& q);

// ---------------------------------------------------------------------------
// Pipelines

struct PipelineOptions {
  /// Caller-chosen (lambda0, lambda1); re-verified before use.
  std::optional<std::pair<CohClass, CohClass>> lambdas;
  HyperbolicSearchOptions search;
  /// Vanishing-order search cap; defaults to c + 4.
  std::optional<unsigned> cap;
};

struct SstReport {
  Verdict verdict = Verdict::Undetermined;
  Rational c;
  CohClass w;
  unsigned cap = 0;
  VanishingOrder order;
  Parity parity = Parity::Zero;
  Parity expected_parity = Parity::Zero;
  std::optional<HyperbolicPair> pair;
  std::optional<CohClass> lambda0;
  std::optional<CohClass> lambda1;

  struct DegreeCheck {
    long m = 0;
    long d = 0;
    bool vanishing_branch = false;  // the lambda0 route kills D^(w + lambda0)
    Jet formula;                    // D^(w + lambda1)(h^d x^m) from the formula branch
  };
  std::vector<DegreeCheck> checks;
  /// The formula values vanish exactly when the vanishing order meets the bound.
  bool trace_consistent = true;
  std::vector<std::string> trace;
};

/// Reproduces the superconformal-simple-type argument for (m, w).
SstReport sst_check(const FourManifold& m, const CohClass& w, const PipelineOptions& options = {});

struct DvanishReport {
  enum class Mechanism { DegreeRule, VanishingBranch, FormulaBranch, Uncovered };

  struct Step {
    long d = 0;
    Mechanism mechanism = Mechanism::DegreeRule;
    bool zero = true;
    std::vector<Jet> formula_values;  // FormulaBranch only, one per m
  };

  Verdict verdict = Verdict::Undetermined;
  Rational c;
  CohClass w;
  Integer residue;  // -(chi + sigma) mod 8
  std::optional<CohClass> lambda;
  Rational r;
  Rational i;
  std::vector<Step> steps;
  std::vector<std::string> trace;
};

std::string_view mechanism_name(DvanishReport::Mechanism m);

/// Reproduces the Donaldson vanishing argument for 0 <= d <= c - 1.
DvanishReport dvanish_theorem_check(const FourManifold& m, const CohClass& w,
                                    const PipelineOptions& options = {});

struct BoundReport {
  bool applicable = false;
  std::string reason;
  std::size_t b = 0;
  Rational c;
  Rational half_c;
  Integer c1_sq;
  Rational chi_h;
  bool strict = true;
  bool strict_holds = false;      // b > c/2
  bool non_strict_holds = false;  // b >= c/2
  bool printed_line_holds = false;     // c1^2 >= chi_h - 2b - 1
  bool rearranged_line_holds = false;  // c1^2 > chi_h - 2b
  Verdict verdict = Verdict::PassVacuous;
};

BoundReport basic_class_bound(const FourManifold& m, bool strict = true);

// ---------------------------------------------------------------------------
// The (lambda^2, delta) plane

struct Window {
  long x_min = 0;  // lambda^2
  long x_max = 0;
  long delta_min = 0;
  long delta_max = 0;
};

struct RegionPoint {
  long x = 0;
  long delta = 0;
  bool hollow = false;     // lambda^2 = 0 mod 8 with w characteristic
  bool inside = false;     // strictly inside both lines
  bool on_r_edge = false;  // delta = r, delta < i
};

struct RegionDescription {
  Rational r_intercept;  // r line: delta = -x + r_intercept
  Rational i_intercept;  // i line: delta =  x + i_intercept
  Rational intersection_x;
  Rational intersection_delta;
  bool w_characteristic = false;
  Integer w_sq;
  Window window;
  std::vector<RegionPoint> marked;

  bool inside(long x, long delta) const;
};

Window default_window(const FourManifold& m);
/// Both congruences: 2 delta = -2 w^2 - 3(chi+sigma)/2 mod 8 and x = w^2 - sigma mod 4.
bool is_marked_point(const FourManifold& m, const Integer& w_sq, long x, long delta);
RegionDescription region_data(const FourManifold& m, const CohClass& w, const Window& window);

}  // namespace swdon
