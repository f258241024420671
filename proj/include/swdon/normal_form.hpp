#pragma once

// Exact normal forms and span bookkeeping, templated on the scalar type.
// Integer routines require a Euclidean scalar (Integer, std::int64_t); the span
// reducer requires a field (Rational).

#include "swdon/scalar.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace swdon {

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& value) {
  return value < Scalar(0) ? Scalar(-value) : value;
}

template <typename Scalar>
Scalar floor_quotient(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if (q * b != a && ((a < Scalar(0)) != (b < Scalar(0)))) q -= Scalar(1);
  return q;
}

template <typename Scalar>
Scalar gcd_value(Scalar a, Scalar b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != Scalar(0)) {
    Scalar t = a % b;
    a = std::move(b);
    b = std::move(t);
  }
  return a;
}

}  // namespace detail

template <typename Scalar>
struct HermiteDecomposition {
  Matrix<Scalar> form;       // H = transform * input
  Matrix<Scalar> transform;  // unimodular
  Index rank = 0;
  std::vector<Index> pivot_columns;
};

/// Row-style Hermite normal form: rows [0, rank) carry positive pivots at strictly
/// increasing columns, entries above each pivot are reduced into [0, pivot), and
/// rows [rank, rows) are zero. Rows of the transform past the rank span the
/// integer left kernel of the input.
template <typename Derived>
HermiteDecomposition<typename Derived::Scalar> hermite_decompose(
    const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  HermiteDecomposition<Scalar> out;
  out.form = input;
  const Index rows = out.form.rows();
  const Index cols = out.form.cols();
  out.transform = Matrix<Scalar>::Identity(rows, rows);
  auto& h = out.form;
  auto& u = out.transform;

  Index r = 0;
  for (Index j = 0; j < cols && r < rows; ++j) {
    bool have_pivot = false;
    for (;;) {
      Index best = -1;
      for (Index i = r; i < rows; ++i) {
        if (h(i, j) == Scalar(0)) continue;
        if (best < 0 || detail::abs_value(h(i, j)) < detail::abs_value(h(best, j))) best = i;
      }
      if (best < 0) break;
      have_pivot = true;
      if (best != r) {
        h.row(best).swap(h.row(r));
        u.row(best).swap(u.row(r));
      }
      bool cleared = true;
      for (Index i = r + 1; i < rows; ++i) {
        if (h(i, j) == Scalar(0)) continue;
        const Scalar q = detail::floor_quotient(h(i, j), h(r, j));
        h.row(i) -= q * h.row(r);
        u.row(i) -= q * u.row(r);
        if (h(i, j) != Scalar(0)) cleared = false;
      }
      if (cleared) break;
    }
    if (!have_pivot) continue;
    if (h(r, j) < Scalar(0)) {
      h.row(r) = -h.row(r);
      u.row(r) = -u.row(r);
    }
    for (Index i = 0; i < r; ++i) {
      const Scalar q = detail::floor_quotient(h(i, j), h(r, j));
      if (q == Scalar(0)) continue;
      h.row(i) -= q * h.row(r);
      u.row(i) -= q * u.row(r);
    }
    out.pivot_columns.push_back(j);
    ++r;
  }
  out.rank = r;
  return out;
}

/// Saturated basis (as rows, in Hermite normal form) of { x in Z^n : A x = 0 }.
template <typename Derived>
Matrix<typename Derived::Scalar> integer_kernel(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Index n = a.cols();
  if (a.rows() == 0) return Matrix<Scalar>::Identity(n, n);
  const auto dec = hermite_decompose(a.transpose());
  const Index dim = n - dec.rank;
  Matrix<Scalar> kernel = dec.transform.bottomRows(dim);
  if (dim == 0) return kernel;
  auto normal = hermite_decompose(kernel);
  return normal.form.topRows(normal.rank);
}

/// Invariant factors of an integer matrix, in divisibility order, without the
/// trailing zeros.
template <typename Derived>
std::vector<typename Derived::Scalar> elementary_divisors(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = a;
  for (;;) {
    auto rows_pass = hermite_decompose(m);
    auto cols_pass = hermite_decompose(rows_pass.form.topRows(rows_pass.rank).transpose());
    m = cols_pass.form.topRows(cols_pass.rank);
    bool diagonal = true;
    for (Index i = 0; i < m.rows() && diagonal; ++i)
      for (Index j = 0; j < m.cols(); ++j)
        if (i != j && m(i, j) != Scalar(0)) {
          diagonal = false;
          break;
        }
    if (diagonal) break;
  }
  std::vector<Scalar> diag;
  for (Index i = 0; i < std::min(m.rows(), m.cols()); ++i)
    if (m(i, i) != Scalar(0)) diag.push_back(detail::abs_value(m(i, i)));
  // gcd/lcm sweep turns any diagonal into the divisibility chain.
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      const Scalar g = detail::gcd_value(diag[i], diag[j]);
      const Scalar l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

/// Incrementally maintained basis of a subspace over a field. Tracks how each
/// echelon row decomposes over the vectors that were accepted, so membership
/// queries return coordinates relative to the accepted vectors.
template <typename Scalar>
class SpanReducer {
 public:
  explicit SpanReducer(Index dimension) : dimension_(dimension) {}

  Index dimension() const { return dimension_; }
  Index rank() const { return static_cast<Index>(rows_.size()); }

  /// Adds the vector if it is independent of those already accepted.
  bool try_add(const Vector<Scalar>& v) {
    auto [residual, coords] = reduce(v);
    Index pivot = -1;
    for (Index k = 0; k < residual.size(); ++k)
      if (residual(k) != Scalar(0)) {
        pivot = k;
        break;
      }
    if (pivot < 0) return false;
    const Index r = rank();
    Vector<Scalar> combo = Vector<Scalar>::Zero(r + 1);
    combo.head(r) = -coords;
    combo(r) = Scalar(1);
    for (auto& row : rows_) {
      row.combination.conservativeResize(r + 1);
      row.combination(r) = Scalar(0);
    }
    rows_.push_back({std::move(residual), std::move(combo), pivot});
    return true;
  }

  /// Coordinates of v over the accepted vectors, or nullopt if v is outside the span.
  std::optional<Vector<Scalar>> coordinates(const Vector<Scalar>& v) const {
    auto [residual, coords] = reduce(v);
    for (Index k = 0; k < residual.size(); ++k)
      if (residual(k) != Scalar(0)) return std::nullopt;
    return coords;
  }

 private:
  struct Row {
    Vector<Scalar> echelon;
    Vector<Scalar> combination;  // echelon = sum_j combination(j) * accepted_j
    Index pivot;
  };

  std::pair<Vector<Scalar>, Vector<Scalar>> reduce(Vector<Scalar> v) const {
    const Index r = rank();
    Vector<Scalar> coords = Vector<Scalar>::Zero(r);
    for (const auto& row : rows_) {
      if (v(row.pivot) == Scalar(0)) continue;
      const Scalar f = v(row.pivot) / row.echelon(row.pivot);
      v -= f * row.echelon;
      coords += f * row.combination;
    }
    return {std::move(v), std::move(coords)};
  }

  Index dimension_;
  std::vector<Row> rows_;
};

}  // namespace swdon
