#pragma once

#include "swdon/error.hpp"
#include "swdon/lattice.hpp"

#include <string>
#include <vector>

namespace swdon {

/// A basic class together with its Seiberg-Witten value (never zero).
struct BasicClassEntry {
  CohClass k;
  Integer sw;
};

/// Closed oriented smooth four-manifold with b1 = 0, described by its numerical
/// data. Torsion in H^2 is not modelled.
struct FourManifold {
  std::string name;
  Integer chi;
  Integer sigma;
  Integer b_plus;
  IntegralLattice form;
  std::vector<BasicClassEntry> basic_classes;
  /// The link-pairing multiplicity hypothesis; theorem pipelines refuse to run without it.
  bool conjecture_assumed = true;

  std::vector<CohClass> basic_class_list() const;
};

struct ValidationFailure {
  std::string check;
  std::string detail;
  ErrorCode code = ErrorCode::ValidationError;
};

struct ValidationReport {
  std::vector<ValidationFailure> failures;

  bool ok() const { return failures.empty(); }
  bool failed(std::string_view check) const;
};

/// Runs every consistency check and collects the failures; never throws on bad data.
/// Non-simple-type classes are tagged with ErrorCode::NonSimpleType.
ValidationReport validate(const FourManifold& m);

/// Throws Error{ValidationError or NonSimpleType} naming the first failed check.
void require_valid(const FourManifold& m);

/// c(X) = -(7 chi + 11 sigma) / 4.
Rational c_of_x(const FourManifold& m);
Rational c_of_x(const Integer& chi, const Integer& sigma);
/// (chi + sigma) / 4.
Rational chi_h(const FourManifold& m);
Rational chi_h(const Integer& chi, const Integer& sigma);
/// 2 chi + 3 sigma.
Integer c1_squared(const FourManifold& m);
Integer c1_squared(const Integer& chi, const Integer& sigma);

/// Number of orbits of the basic classes under k -> -k.
std::size_t b_count(const FourManifold& m);

}  // namespace swdon
