#pragma once

#include <span>
#include <string>
#include <vector>

#include "reflex/scalar.hpp"

namespace reflex {

/// Univariate polynomial with exact rational coefficients; coefficient i
/// multiplies n^i. Trailing zero coefficients are never stored.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial constant(const Rational& c);
  /// a·n + b
  static Polynomial linear(const Rational& a, const Rational& b);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t power) const;
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  Rational operator()(const Rational& x) const;

  /// p(a·x + b)
  Polynomial compose_affine(const Rational& a, const Rational& b) const;

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial& p, const Polynomial& q) { return p.coeffs_ == q.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// The unique polynomial of degree < samples through (xs[i], ys[i]); xs distinct.
Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

/// Descending powers in the variable n, e.g. "3n^2 + 3n + 1".
std::string to_string(const Polynomial& p);

/// Quasi-polynomial given by one constituent per residue class: evaluation at
/// an integer n uses constituent (n mod period), taken in 0..period-1.
class QuasiPolynomial {
 public:
  QuasiPolynomial() = default;
  explicit QuasiPolynomial(std::vector<Polynomial> constituents);

  std::size_t period() const noexcept { return constituents_.size(); }
  const std::vector<Polynomial>& constituents() const noexcept { return constituents_; }
  const Polynomial& constituent(std::size_t residue) const { return constituents_.at(residue); }
  /// Largest constituent degree.
  int degree() const noexcept;

  Rational operator()(const Integer& n) const;
  Rational operator()(long long n) const { return (*this)(Integer(n)); }

  /// Same integer evaluations with the smallest possible period.
  QuasiPolynomial reduced() const;

  friend bool operator==(const QuasiPolynomial&, const QuasiPolynomial&) = default;

 private:
  std::vector<Polynomial> constituents_;
};

std::string to_string(const QuasiPolynomial& q);

}  // namespace reflex
