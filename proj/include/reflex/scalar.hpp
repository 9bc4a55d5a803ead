#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace reflex {

// Exact arithmetic substrate. GMP keeps rationals in lowest terms with a
// positive denominator after every operation.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalVector = VectorX<Rational>;
using IntegerVector = VectorX<Integer>;
using RationalMatrix = MatrixX<Rational>;

using Index = Eigen::Index;

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Rational as "p/q", or "p" when q = 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Parses "p", "-p", "p/q". Throws Error{InvalidInput} on malformed text or q = 0.
Rational parse_rational(std::string_view text);

/// Strict lexicographic order on vectors of equal length.
template <typename Scalar>
bool lex_less(const VectorX<Scalar>& a, const VectorX<Scalar>& b) {
  for (Index i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

template <typename Scalar>
bool equal(const VectorX<Scalar>& a, const VectorX<Scalar>& b) {
  return a.size() == b.size() && (a.size() == 0 || a == b);
}

/// ⟨a, b⟩ for an integer vector against a rational vector.
Rational dot(const IntegerVector& a, const RationalVector& b);
Rational dot(const RationalVector& a, const RationalVector& b);

RationalVector to_rational(const IntegerVector& v);

/// Smallest positive multiple of a nonzero rational vector that is an integer
/// vector with coprime entries. The returned factor is that positive multiplier.
IntegerVector primitive_integer(const RationalVector& v, Rational* factor = nullptr);

/// gcd of the absolute values of the entries (0 for the zero vector).
Integer content(const IntegerVector& v);

/// lcm of all denominators in the vector.
Integer denominator_lcm(const RationalVector& v);

std::string to_string(const RationalVector& v);
std::string to_string(const IntegerVector& v);

}  // namespace reflex
