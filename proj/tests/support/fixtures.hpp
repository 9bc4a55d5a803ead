#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "reflex/polytope.hpp"

namespace reflex::fixtures {

inline RationalVector vec(std::initializer_list<Rational> xs) {
  RationalVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (const auto& x : xs) v[i++] = x;
  return v;
}

inline IntegerVector ivec(std::initializer_list<long> xs) {
  IntegerVector v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long x : xs) v[i++] = Integer(x);
  return v;
}

inline Polytope hrep(std::initializer_list<Constraint> cs, Index dim) {
  std::vector<Constraint> v(cs);
  return from_hrep(std::span<const Constraint>(v), dim);
}

inline Polytope vrep(std::initializer_list<RationalVector> pts) {
  std::vector<RationalVector> v(pts);
  return from_vrep(v);
}

// The three triangles {x ≥ -1, y ≥ -1, a x + b y ≤ 1} for (a,b) = (2,3), (1,3), (3,3).
inline Polytope triangle(long a, long b) {
  return hrep({{vec({-1, 0}), 1}, {vec({0, -1}), 1}, {vec({a, b}), 1}}, 2);
}
inline Polytope polytope1() { return triangle(2, 3); }
inline Polytope polytope2() { return triangle(1, 3); }
inline Polytope polytope3() { return triangle(3, 3); }

inline Polytope unit_square() { return vrep({vec({0, 0}), vec({1, 0}), vec({0, 1}), vec({1, 1})}); }
inline Polytope centered_square() { return vrep({vec({-1, -1}), vec({1, -1}), vec({-1, 1}), vec({1, 1})}); }
inline Polytope half_segment() { return vrep({vec({0}), vec({Rational(1, 2)})}); }

inline std::vector<RationalVector> sorted_vertices(std::initializer_list<RationalVector> pts) {
  std::vector<RationalVector> v(pts);
  std::sort(v.begin(), v.end(), [](const RationalVector& a, const RationalVector& b) { return lex_less(a, b); });
  return v;
}

inline bool same_points(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!equal(a[i], b[i])) return false;
  return true;
}

// The error code thrown by f, or nullopt if it returns normally.
template <class F>
std::optional<ErrorCode> code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace reflex::fixtures
