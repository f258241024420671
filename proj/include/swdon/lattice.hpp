#pragma once

#include "swdon/scalar.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace swdon {

/// One orthogonal summand of an intersection form.
struct Block {
  enum class Kind { Hyperbolic, E8, Diagonal };

  Kind kind = Kind::Hyperbolic;
  int sign = 1;                  // E8 only
  std::vector<Integer> entries;  // Diagonal only

  static Block hyperbolic() { return {Kind::Hyperbolic, 1, {}}; }
  static Block e8(int sign) { return {Kind::E8, sign, {}}; }
  static Block diagonal(std::vector<Integer> entries) {
    return {Kind::Diagonal, 1, std::move(entries)};
  }

  Index rank() const;
  IntMatrix gram() const;
  /// Number of positive eigenvalues of the block's form.
  Index positive_index() const;
  /// Number of negative eigenvalues of the block's form.
  Index negative_index() const;

  bool operator==(const Block&) const = default;
};

/// The standard positive-definite E8 Gram matrix (Cartan matrix of the E8 root system).
IntMatrix e8_gram();

/// Integer symmetric bilinear form assembled block-diagonally from summands.
/// Immutable; copies share storage.
class IntegralLattice {
 public:
  IntegralLattice() : IntegralLattice(std::vector<Block>{}) {}
  explicit IntegralLattice(std::vector<Block> blocks);

  const IntMatrix& gram() const { return data_->gram; }
  const std::vector<Block>& blocks() const { return data_->blocks; }
  Index rank() const { return data_->gram.rows(); }
  /// First coordinate owned by block i.
  Index block_offset(std::size_t i) const { return data_->offsets.at(i); }
  Index positive_index() const;
  Index negative_index() const;

  bool operator==(const IntegralLattice& other) const { return blocks() == other.blocks(); }

 private:
  struct Data {
    std::vector<Block> blocks;
    std::vector<Index> offsets;
    IntMatrix gram;
  };
  std::shared_ptr<const Data> data_;
};

/// An integral class, as coefficients over the lattice's fixed basis.
class CohClass {
 public:
  CohClass() = default;
  explicit CohClass(IntVector coords) : coords_(std::move(coords)) {}
  CohClass(std::initializer_list<long> coords);

  static CohClass zero(Index rank) { return CohClass(IntVector::Zero(rank)); }
  static CohClass unit(Index rank, Index i);

  const IntVector& coords() const { return coords_; }
  Index size() const { return coords_.size(); }
  const Integer& operator[](Index i) const { return coords_(i); }
  bool is_zero() const;
  /// True when every coordinate is even.
  bool is_even() const;

  friend CohClass operator+(const CohClass& a, const CohClass& b);
  friend CohClass operator-(const CohClass& a, const CohClass& b);
  friend CohClass operator-(const CohClass& a);
  friend CohClass operator*(const Integer& s, const CohClass& a);

  friend bool operator==(const CohClass& a, const CohClass& b);
  /// Lexicographic on coordinates; shorter vectors first.
  friend std::strong_ordering operator<=>(const CohClass& a, const CohClass& b);

 private:
  IntVector coords_;
};

/// Sparse "(i:v, j:w)" rendering; the zero class prints as "0".
std::string to_string(const CohClass& c);

/// Q(a, b). Throws DimensionMismatch when lengths disagree with the lattice rank.
Integer pairing(const IntegralLattice& lattice, const CohClass& a, const CohClass& b);
inline Integer square(const IntegralLattice& lattice, const CohClass& a) {
  return pairing(lattice, a, a);
}

/// Solves G c = diag(G) over GF(2); free variables are set to zero.
/// Throws NoCharacteristicVector if the system is inconsistent.
CohClass characteristic_vector(const IntegralLattice& lattice);
bool is_characteristic(const IntegralLattice& lattice, const CohClass& c);

/// A saturated sublattice with its restricted form.
struct Sublattice {
  IntegralLattice ambient;
  std::vector<CohClass> basis;
  IntMatrix restricted_gram;

  Index rank() const { return static_cast<Index>(basis.size()); }
  /// Ambient class for coordinates over the basis.
  CohClass embed(const IntVector& coords) const;
};

/// Sublattice spanned by given ambient classes (assumed independent and saturated).
Sublattice make_sublattice(const IntegralLattice& ambient, std::vector<CohClass> basis);

/// Saturated basis of { x : x.s = 0 for all s } in Hermite normal form.
Sublattice orthogonal_complement(const IntegralLattice& lattice, std::span<const CohClass> classes);

struct HyperbolicPair {
  CohClass e1;
  CohClass e2;
};

struct HyperbolicSearchOptions {
  int radius = 3;
  /// Upper bound on enumerated coordinate vectors; beyond it the search gives up.
  std::uint64_t max_candidates = 4'000'000;
  /// Try a literal hyperbolic block among the basis vectors first.
  bool use_shortcut = true;
};

struct HyperbolicSearchResult {
  std::optional<HyperbolicPair> pair;
  bool from_shortcut = false;
  /// False when the candidate budget ran out before the radius was covered.
  bool exhaustive = true;
  std::uint64_t candidates = 0;
};

/// Search for e, f in the sublattice with e.e = f.f = 0 and e.f = 1. Coordinates
/// run over [-radius, radius] in the order 0, 1, -1, 2, -2, ...; the first pair in
/// that lexicographic order is returned. Not finding one proves nothing.
HyperbolicSearchResult find_hyperbolic_pair(const Sublattice& sublattice,
                                            const HyperbolicSearchOptions& options = {});

/// Classes built from a hyperbolic pair (e1, e2) with h = (chi + sigma) / 4.
///   lambda  = 2 e1 - h e2 if h is even, else 2 e1 + (1 - h) e2 (always in 2 * span(e1, e2)),
///   lambda0 = e1 - 2h e2,  lambda1 = e1 + (2 - 2h) e2,
/// so lambda0^2 = -(chi + sigma), lambda1^2 = -(chi + sigma) + 4 and lambda1 - lambda0 = 2 e2.
/// AbundanceFormula::Printed instead takes lambda0 = 2 e1 - h e2 and
/// lambda1 = 2 e1 + (1 - h) e2: right squares, but lambda0 - lambda1 = -e2.
enum class AbundanceFormula { Congruent, Printed };

struct AbundanceClasses {
  Integer h;
  CohClass lambda0;
  CohClass lambda1;
  CohClass lambda;
};

AbundanceClasses construct_abundance_classes(const HyperbolicPair& pair, const Integer& chi,
                                             const Integer& sigma,
                                             AbundanceFormula formula = AbundanceFormula::Congruent);

}  // namespace swdon
