#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>

namespace swdon {

namespace mp = boost::multiprecision;

// Expression templates are disabled so that the scalars compose cleanly with
// Eigen's own expression machinery.
using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

using Index = Eigen::Index;

/// Lowest-terms "p/q" form; the denominator is always written, even when it is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Accepts "p/q", "p", or "-p/q". Throws Error{ParseError} on malformed text.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

inline bool is_integral(const Rational& value) { return mp::denominator(value) == 1; }

/// Integer part of an integral rational; throws if the value is not integral.
Integer to_integer(const Rational& value);

/// Mathematical (non-negative) remainder.
Integer mod(const Integer& value, long modulus);
Integer floor_div(const Integer& a, const Integer& b);

inline bool is_even(const Integer& value) { return mod(value, 2) == 0; }

/// (-1)^exponent for an integer exponent.
inline int sign_power(const Integer& exponent) { return is_even(exponent) ? 1 : -1; }

/// 2^exponent as an exact rational; exponent may be negative.
Rational power_of_two(long exponent);

Integer factorial(unsigned n);

}  // namespace swdon
