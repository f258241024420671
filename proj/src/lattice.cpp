#include "swdon/lattice.hpp"

#include "swdon/error.hpp"
#include "swdon/normal_form.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <limits>
#include <sstream>

namespace swdon {

// ---------------------------------------------------------------------------
// Blocks

IntMatrix e8_gram() {
  IntMatrix g = IntMatrix::Zero(8, 8);
  for (Index i = 0; i < 8; ++i) g(i, i) = 2;
  // Dynkin diagram: chain 0-2-3-4-5-6-7 with node 1 attached to node 3.
  constexpr int edges[][2] = {{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}};
  for (const auto& e : edges) {
    g(e[0], e[1]) = -1;
    g(e[1], e[0]) = -1;
  }
  return g;
}

Index Block::rank() const {
  switch (kind) {
    case Kind::Hyperbolic: return 2;
    case Kind::E8: return 8;
    case Kind::Diagonal: return static_cast<Index>(entries.size());
  }
  return 0;
}

IntMatrix Block::gram() const {
  switch (kind) {
    case Kind::Hyperbolic: {
      IntMatrix g(2, 2);
      g << 0, 1, 1, 0;
      return g;
    }
    case Kind::E8: {
      IntMatrix g = e8_gram();
      if (sign < 0) g = -g;
      return g;
    }
    case Kind::Diagonal: {
      IntMatrix g = IntMatrix::Zero(rank(), rank());
      for (Index i = 0; i < rank(); ++i) g(i, i) = entries[static_cast<std::size_t>(i)];
      return g;
    }
  }
  return {};
}

Index Block::positive_index() const {
  switch (kind) {
    case Kind::Hyperbolic: return 1;
    case Kind::E8: return sign > 0 ? 8 : 0;
    case Kind::Diagonal: {
      Index n = 0;
      for (const auto& e : entries) n += e > 0 ? 1 : 0;
      return n;
    }
  }
  return 0;
}

Index Block::negative_index() const {
  switch (kind) {
    case Kind::Hyperbolic: return 1;
    case Kind::E8: return sign < 0 ? 8 : 0;
    case Kind::Diagonal: {
      Index n = 0;
      for (const auto& e : entries) n += e < 0 ? 1 : 0;
      return n;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// IntegralLattice

IntegralLattice::IntegralLattice(std::vector<Block> blocks) {
  auto data = std::make_shared<Data>();
  Index rank = 0;
  for (const auto& b : blocks) {
    if (b.kind == Block::Kind::E8 && b.sign != 1 && b.sign != -1)
      throw Error(ErrorCode::ValidationError, "E8 block sign must be +1 or -1");
    data->offsets.push_back(rank);
    rank += b.rank();
  }
  data->gram = IntMatrix::Zero(rank, rank);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    const Index n = blocks[i].rank();
    data->gram.block(data->offsets[i], data->offsets[i], n, n) = blocks[i].gram();
  }
  data->blocks = std::move(blocks);
  data_ = std::move(data);
}

Index IntegralLattice::positive_index() const {
  Index n = 0;
  for (const auto& b : blocks()) n += b.positive_index();
  return n;
}

Index IntegralLattice::negative_index() const {
  Index n = 0;
  for (const auto& b : blocks()) n += b.negative_index();
  return n;
}

// ---------------------------------------------------------------------------
// CohClass

CohClass::CohClass(std::initializer_list<long> coords) : coords_(static_cast<Index>(coords.size())) {
  Index i = 0;
  for (long c : coords) coords_(i++) = c;
}

CohClass CohClass::unit(Index rank, Index i) {
  IntVector v = IntVector::Zero(rank);
  v(i) = 1;
  return CohClass(std::move(v));
}

bool CohClass::is_zero() const {
  for (Index i = 0; i < coords_.size(); ++i)
    if (coords_(i) != 0) return false;
  return true;
}

bool CohClass::is_even() const {
  for (Index i = 0; i < coords_.size(); ++i)
    if (!swdon::is_even(coords_(i))) return false;
  return true;
}

namespace {

void require_same_size(const CohClass& a, const CohClass& b) {
  if (a.size() != b.size())
    throw Error(ErrorCode::DimensionMismatch, "class lengths differ: " + std::to_string(a.size()) +
                                                  " vs " + std::to_string(b.size()));
}

}  // namespace

CohClass operator+(const CohClass& a, const CohClass& b) {
  require_same_size(a, b);
  return CohClass(IntVector(a.coords_ + b.coords_));
}

CohClass operator-(const CohClass& a, const CohClass& b) {
  require_same_size(a, b);
  return CohClass(IntVector(a.coords_ - b.coords_));
}

CohClass operator-(const CohClass& a) { return CohClass(IntVector(-a.coords_)); }

CohClass operator*(const Integer& s, const CohClass& a) { return CohClass(IntVector(s * a.coords_)); }

bool operator==(const CohClass& a, const CohClass& b) {
  return a.size() == b.size() && a.coords_ == b.coords_;
}

std::strong_ordering operator<=>(const CohClass& a, const CohClass& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  for (Index i = 0; i < a.size(); ++i) {
    if (a.coords_(i) < b.coords_(i)) return std::strong_ordering::less;
    if (b.coords_(i) < a.coords_(i)) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string to_string(const CohClass& c) {
  std::ostringstream out;
  bool first = true;
  for (Index i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    out << (first ? "(" : ", ") << i << ":" << c[i];
    first = false;
  }
  if (first) return "0";
  out << ")";
  return out.str();
}

// ---------------------------------------------------------------------------
// Pairing and characteristic vectors

Integer pairing(const IntegralLattice& lattice, const CohClass& a, const CohClass& b) {
  if (a.size() != lattice.rank() || b.size() != lattice.rank())
    throw Error(ErrorCode::DimensionMismatch,
                "class length does not match lattice rank " + std::to_string(lattice.rank()));
  return a.coords().dot(lattice.gram() * b.coords());
}

CohClass characteristic_vector(const IntegralLattice& lattice) {
  const Index n = lattice.rank();
  const auto& g = lattice.gram();
  // Augmented rows [G mod 2 | diag(G) mod 2]; G is symmetric so rows = columns.
  std::vector<boost::dynamic_bitset<>> rows(static_cast<std::size_t>(n),
                                            boost::dynamic_bitset<>(static_cast<std::size_t>(n + 1)));
  for (Index i = 0; i < n; ++i) {
    auto& row = rows[static_cast<std::size_t>(i)];
    for (Index j = 0; j < n; ++j) row[static_cast<std::size_t>(j)] = !is_even(g(i, j));
    row[static_cast<std::size_t>(n)] = !is_even(g(i, i));
  }
  std::vector<Index> pivot_of_row;
  std::size_t r = 0;
  for (Index col = 0; col < n && r < rows.size(); ++col) {
    const auto c = static_cast<std::size_t>(col);
    std::size_t p = r;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i][c]) rows[i] ^= rows[r];
    pivot_of_row.push_back(col);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i)
    if (rows[i][static_cast<std::size_t>(n)])
      throw Error(ErrorCode::NoCharacteristicVector,
                  "mod-2 system c.x = x.x has no solution for this form");
  IntVector c = IntVector::Zero(n);
  for (std::size_t i = 0; i < r; ++i)
    if (rows[i][static_cast<std::size_t>(n)]) c(pivot_of_row[i]) = 1;
  return CohClass(std::move(c));
}

bool is_characteristic(const IntegralLattice& lattice, const CohClass& c) {
  if (c.size() != lattice.rank())
    throw Error(ErrorCode::DimensionMismatch,
                "class length does not match lattice rank " + std::to_string(lattice.rank()));
  const IntVector gc = lattice.gram() * c.coords();
  for (Index i = 0; i < lattice.rank(); ++i)
    if (!is_even(gc(i) - lattice.gram()(i, i))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Sublattices

CohClass Sublattice::embed(const IntVector& coords) const {
  IntVector v = IntVector::Zero(ambient.rank());
  for (Index i = 0; i < coords.size(); ++i) v += coords(i) * basis[static_cast<std::size_t>(i)].coords();
  return CohClass(std::move(v));
}

Sublattice make_sublattice(const IntegralLattice& ambient, std::vector<CohClass> basis) {
  const Index r = static_cast<Index>(basis.size());
  IntMatrix restricted(r, r);
  for (Index i = 0; i < r; ++i)
    for (Index j = i; j < r; ++j) {
      restricted(i, j) = pairing(ambient, basis[static_cast<std::size_t>(i)], basis[static_cast<std::size_t>(j)]);
      restricted(j, i) = restricted(i, j);
    }
  return Sublattice{ambient, std::move(basis), std::move(restricted)};
}

Sublattice orthogonal_complement(const IntegralLattice& lattice, std::span<const CohClass> classes) {
  const Index n = lattice.rank();
  IntMatrix constraints(static_cast<Index>(classes.size()), n);
  for (Index i = 0; i < constraints.rows(); ++i) {
    const auto& s = classes[static_cast<std::size_t>(i)];
    if (s.size() != n)
      throw Error(ErrorCode::DimensionMismatch,
                  "class length does not match lattice rank " + std::to_string(n));
    constraints.row(i) = (lattice.gram() * s.coords()).transpose();
  }
  const IntMatrix kernel = integer_kernel(constraints);
  std::vector<CohClass> basis;
  basis.reserve(static_cast<std::size_t>(kernel.rows()));
  for (Index i = 0; i < kernel.rows(); ++i) basis.emplace_back(IntVector(kernel.row(i).transpose()));
  return make_sublattice(lattice, std::move(basis));
}

// ---------------------------------------------------------------------------
// Hyperbolic pair search

namespace {

/// Walks [-radius, radius]^n in lexicographic order (last coordinate fastest),
/// each coordinate taking 0, 1, -1, 2, -2, ... . Keeps G x current.
template <typename Scalar>
class CoordinateOdometer {
 public:
  CoordinateOdometer(const Matrix<Scalar>& gram, int radius)
      : gram_(gram),
        radius_(radius),
        digits_(static_cast<std::size_t>(gram.rows()), 0),
        x_(Vector<Scalar>::Zero(gram.rows())),
        gx_(Vector<Scalar>::Zero(gram.rows())) {}

  const Vector<Scalar>& x() const { return x_; }
  const Vector<Scalar>& gx() const { return gx_; }

  bool advance() {
    for (Index i = x_.size() - 1; i >= 0; --i) {
      auto& d = digits_[static_cast<std::size_t>(i)];
      const Scalar old_value = x_(i);
      if (d < 2 * radius_) {
        ++d;
        set(i, old_value, value_of(d));
        return true;
      }
      d = 0;
      set(i, old_value, Scalar(0));
    }
    return false;
  }

 private:
  static Scalar value_of(int digit) {
    const Scalar magnitude((digit + 1) / 2);
    return digit % 2 == 1 ? magnitude : Scalar(-magnitude);
  }

  void set(Index i, const Scalar& old_value, const Scalar& new_value) {
    x_(i) = new_value;
    gx_ += gram_.col(i) * Scalar(new_value - old_value);
  }

  const Matrix<Scalar>& gram_;
  int radius_;
  std::vector<int> digits_;
  Vector<Scalar> x_;
  Vector<Scalar> gx_;
};

template <typename Scalar>
bool is_primitive(const Vector<Scalar>& v) {
  Scalar g(0);
  for (Index i = 0; i < v.size(); ++i) g = detail::gcd_value(g, v(i));
  return g == Scalar(1);
}

template <typename Scalar>
std::optional<std::pair<Vector<Scalar>, Vector<Scalar>>> enumerate_pair(
    const Matrix<Scalar>& gram, int radius, std::uint64_t budget, std::uint64_t& visited,
    bool& exhausted_budget) {
  CoordinateOdometer<Scalar> outer(gram, radius);
  while (outer.advance()) {
    if (++visited > budget) {
      exhausted_budget = true;
      return std::nullopt;
    }
    if (outer.x().dot(outer.gx()) != Scalar(0) || !is_primitive(outer.x())) continue;
    const Vector<Scalar> e = outer.x();
    const Vector<Scalar> ge = outer.gx();
    CoordinateOdometer<Scalar> inner(gram, radius);
    while (inner.advance()) {
      if (++visited > budget) {
        exhausted_budget = true;
        return std::nullopt;
      }
      if (ge.dot(inner.x()) != Scalar(1)) continue;
      if (inner.x().dot(inner.gx()) != Scalar(0)) continue;
      return std::make_pair(e, inner.x());
    }
  }
  return std::nullopt;
}

template <typename Scalar>
IntVector to_int_vector(const Vector<Scalar>& v) {
  IntVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) {
    if constexpr (std::is_same_v<Scalar, Integer>) {
      out(i) = v(i);
    } else {
      out(i) = Integer(static_cast<long long>(v(i)));
    }
  }
  return out;
}

bool fits_machine_words(const IntMatrix& gram, int radius) {
  Integer max_entry = 0;
  for (Index i = 0; i < gram.rows(); ++i)
    for (Index j = 0; j < gram.cols(); ++j) max_entry = std::max(max_entry, Integer(abs(gram(i, j))));
  const Integer n = gram.rows();
  const Integer bound = n * n * max_entry * radius * radius;
  return bound < (Integer(1) << 60);
}

}  // namespace

HyperbolicSearchResult find_hyperbolic_pair(const Sublattice& sublattice,
                                            const HyperbolicSearchOptions& options) {
  if (options.radius < 1)
    throw Error(ErrorCode::Usage, "hyperbolic search radius must be at least 1");
  HyperbolicSearchResult result;
  const auto& g = sublattice.restricted_gram;
  const Index r = sublattice.rank();

  if (options.use_shortcut) {
    for (Index i = 0; i < r; ++i) {
      if (g(i, i) != 0) continue;
      for (Index j = i + 1; j < r; ++j) {
        if (g(j, j) != 0 || abs(g(i, j)) != 1) continue;
        const auto& bi = sublattice.basis[static_cast<std::size_t>(i)];
        const auto& bj = sublattice.basis[static_cast<std::size_t>(j)];
        result.pair = HyperbolicPair{bi, g(i, j) == 1 ? bj : -bj};
        result.from_shortcut = true;
        return result;
      }
    }
  }

  bool exhausted_budget = false;
  std::optional<std::pair<IntVector, IntVector>> found;
  if (fits_machine_words(g, options.radius)) {
    const Matrix<std::int64_t> small = g.unaryExpr([](const Integer& v) {
      return static_cast<std::int64_t>(v.convert_to<long long>());
    });
    auto hit = enumerate_pair<std::int64_t>(small, options.radius, options.max_candidates,
                                            result.candidates, exhausted_budget);
    if (hit) found.emplace(to_int_vector(hit->first), to_int_vector(hit->second));
  } else {
    found = enumerate_pair<Integer>(g, options.radius, options.max_candidates, result.candidates,
                                    exhausted_budget);
  }
  result.exhaustive = !exhausted_budget;
  if (found) result.pair = HyperbolicPair{sublattice.embed(found->first), sublattice.embed(found->second)};
  return result;
}

AbundanceClasses construct_abundance_classes(const HyperbolicPair& pair, const Integer& chi,
                                             const Integer& sigma, AbundanceFormula formula) {
  if (mod(chi + sigma, 4) != 0)
    throw Error(ErrorCode::ParityError, "chi + sigma = " + to_string(Integer(chi + sigma)) +
                                            " is not divisible by 4");
  AbundanceClasses out;
  out.h = (chi + sigma) / 4;
  const CohClass even0 = Integer(2) * pair.e1 - out.h * pair.e2;
  const CohClass even1 = Integer(2) * pair.e1 + Integer(1 - out.h) * pair.e2;
  out.lambda = is_even(out.h) ? even0 : even1;
  if (formula == AbundanceFormula::Printed) {
    out.lambda0 = even0;
    out.lambda1 = even1;
  } else {
    // even0 - even1 = -e2, so those two are never congruent mod 2; these are.
    out.lambda0 = pair.e1 - Integer(2 * out.h) * pair.e2;
    out.lambda1 = pair.e1 + Integer(2 - 2 * out.h) * pair.e2;
  }
  return out;
}

}  // namespace swdon
