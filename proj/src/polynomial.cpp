#include "reflex/polynomial.hpp"

#include "reflex/errors.hpp"

namespace reflex {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::linear(const Rational& a, const Rational& b) { return Polynomial({b, a}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::compose_affine(const Rational& a, const Rational& b) const {
  const Polynomial inner = linear(a, b);
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<Rational> c(std::max(p.coeffs_.size(), q.coeffs_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = p.coefficient(i) + q.coefficient(i);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + Rational(-1) * q; }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  std::vector<Rational> c(p.coeffs_.size() + q.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j) c[i + j] += p.coeffs_[i] * q.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> c = p.coeffs_;
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size() || xs.empty())
    throw Error(ErrorCode::InvalidInput, "ehrhart", "interpolation needs matching, nonempty samples");
  // Newton divided differences, then expansion into the monomial basis.
  const std::size_t n = xs.size();
  std::vector<Rational> table(ys.begin(), ys.end());
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational dx = xs[i] - xs[i - level];
      if (dx == 0) throw Error(ErrorCode::InvalidInput, "ehrhart", "interpolation nodes must be distinct");
      table[i] = (table[i] - table[i - 1]) / dx;
    }
  Polynomial result = Polynomial::constant(table[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;)
    result = result * Polynomial::linear(1, -xs[k]) + Polynomial::constant(table[k]);
  return result;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int power = p.degree(); power >= 0; --power) {
    const Rational c = p.coefficient(static_cast<std::size_t>(power));
    if (c == 0) continue;
    const Rational magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    const bool unit = magnitude == 1 && power > 0;
    if (!unit) out += to_string(magnitude);
    if (power >= 1) out += "n";
    if (power >= 2) out += "^" + std::to_string(power);
  }
  return out;
}

QuasiPolynomial::QuasiPolynomial(std::vector<Polynomial> constituents) : constituents_(std::move(constituents)) {
  if (constituents_.empty()) throw Error(ErrorCode::InvalidInput, "ehrhart", "quasi-polynomial needs a constituent");
}

int QuasiPolynomial::degree() const noexcept {
  int d = -1;
  for (const auto& c : constituents_) d = std::max(d, c.degree());
  return d;
}

Rational QuasiPolynomial::operator()(const Integer& n) const {
  const Integer period(static_cast<unsigned long long>(constituents_.size()));
  Integer residue = n % period;
  if (residue < 0) residue += period;
  return constituents_[residue.convert_to<std::size_t>()](Rational(n));
}

QuasiPolynomial QuasiPolynomial::reduced() const {
  // Constituents agreeing on infinitely many integers are equal polynomials,
  // so comparing them structurally decides equality of integer evaluations.
  const std::size_t t = period();
  for (std::size_t candidate = 1; candidate < t; ++candidate) {
    if (t % candidate != 0) continue;
    bool matches = true;
    for (std::size_t r = candidate; r < t && matches; ++r) matches = constituents_[r] == constituents_[r % candidate];
    if (matches)
      return QuasiPolynomial(std::vector<Polynomial>(constituents_.begin(),
                                                     constituents_.begin() + static_cast<std::ptrdiff_t>(candidate)));
  }
  return *this;
}

std::string to_string(const QuasiPolynomial& q) {
  if (q.period() == 1) return to_string(q.constituent(0));
  std::string out;
  for (std::size_t r = 0; r < q.period(); ++r) {
    if (r) out += "; ";
    out += "n ≡ " + std::to_string(r) + " (mod " + std::to_string(q.period()) + "): " + to_string(q.constituent(r));
  }
  return out;
}

}  // namespace reflex
