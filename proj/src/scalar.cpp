#include "reflex/scalar.hpp"

#include <charconv>
#include <sstream>

#include "reflex/errors.hpp"

namespace reflex {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnboundedInput: return "UnboundedInput";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::LowerDimensional: return "LowerDimensional";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::NonPositiveFactor: return "NonPositiveFactor";
    case ErrorCode::CollapsedPolytope: return "CollapsedPolytope";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ScaleExceeded: return "ScaleExceeded";
    case ErrorCode::ValidationFailed: return "ValidationFailed";
    case ErrorCode::PeriodNotOne: return "PeriodNotOne";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::NotQuasiLattice: return "NotQuasiLattice";
    case ErrorCode::EmptyOrUnbounded: return "EmptyOrUnbounded";
    case ErrorCode::UnsupportedType: return "UnsupportedType";
    case ErrorCode::NotPRegular: return "NotPRegular";
    case ErrorCode::GenerationExhausted: return "GenerationExhausted";
  }
  return "Unknown";
}

Integer floor(const Rational& q) {
  const Integer n = numerator(q);
  const Integer d = denominator(q);
  Integer t = n / d;  // truncates toward zero
  if (n < 0 && t * d != n) t -= 1;
  return t;
}

Integer ceil(const Rational& q) { return -floor(-q); }

Integer gcd(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return Integer(0);
  return abs(a / gcd(a, b) * b);
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw Error(ErrorCode::InvalidInput, "kernel", "empty integer literal");
  for (char c : digits)
    if (c < '0' || c > '9')
      throw Error(ErrorCode::InvalidInput, "kernel", "malformed integer literal '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return Integer(std::string(text));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::InvalidInput, "kernel", "zero denominator in '" + std::string(text) + "'");
  return den < 0 ? Rational(Integer(-num), Integer(-den)) : Rational(num, den);
}

Rational dot(const IntegerVector& a, const RationalVector& b) {
  Rational sum = 0;
  for (Index i = 0; i < a.size(); ++i) sum += Rational(a[i]) * b[i];
  return sum;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  Rational sum = 0;
  for (Index i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

RationalVector to_rational(const IntegerVector& v) {
  RationalVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) out[i] = Rational(v[i]);
  return out;
}

Integer content(const IntegerVector& v) {
  Integer g = 0;
  for (Index i = 0; i < v.size(); ++i) g = gcd(g, abs(v[i]));
  return g;
}

Integer denominator_lcm(const RationalVector& v) {
  Integer l = 1;
  for (Index i = 0; i < v.size(); ++i) l = lcm(l, denominator(v[i]));
  return l;
}

IntegerVector primitive_integer(const RationalVector& v, Rational* factor) {
  const Integer l = denominator_lcm(v);
  IntegerVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) out[i] = numerator(v[i] * Rational(l));
  const Integer g = content(out);
  if (g == 0) throw Error(ErrorCode::InvalidInput, "kernel", "zero vector has no primitive multiple");
  for (Index i = 0; i < v.size(); ++i) out[i] /= g;
  if (factor) *factor = Rational(l, g);
  return out;
}

std::string to_string(const RationalVector& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

std::string to_string(const IntegerVector& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

}  // namespace reflex
