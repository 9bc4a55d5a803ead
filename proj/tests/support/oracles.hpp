#pragma once

// Independent oracles for the test suites. Nothing here calls the kernel's
// lattice enumeration or its vertex/facet conversion.

#include <algorithm>
#include <random>
#include <vector>

#include "reflex/polytope.hpp"

namespace reflex::oracle {

inline Integer floor_of(const Rational& q) {
  Integer n = numerator(q), d = denominator(q);
  Integer t = n / d;
  if (n < 0 && t * d != n) t -= 1;
  return t;
}

/// Points x ∈ Z^d with ⟨x,u⟩ ≤ scale·b (strict: <) for every facet, by a full
/// scan of the box spanned by the scaled vertices. Lexicographic order.
inline std::vector<IntegerVector> brute_lattice_points(const Polytope& p, const Rational& scale, bool strict) {
  const Index d = p.dim();
  IntegerVector lo(d), hi(d);
  for (Index k = 0; k < d; ++k) {
    Rational mn = p.vertices().front()[k] * scale, mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[k] * scale);
      mx = std::max(mx, v[k] * scale);
    }
    lo[k] = -floor_of(-mn);
    hi[k] = floor_of(mx);
  }
  std::vector<IntegerVector> out;
  for (Index k = 0; k < d; ++k)
    if (hi[k] < lo[k]) return out;
  IntegerVector x = lo;
  while (true) {
    bool inside = true;
    for (const auto& f : p.facets()) {
      Rational lhs = 0;
      for (Index k = 0; k < d; ++k) lhs += Rational(f.normal[k] * x[k]);
      const Rational rhs = f.offset * scale;
      if (strict ? !(lhs < rhs) : !(lhs <= rhs)) {
        inside = false;
        break;
      }
    }
    if (inside) out.push_back(x);
    Index k = d - 1;
    for (; k >= 0; --k) {
      if (x[k] < hi[k]) {
        ++x[k];
        break;
      }
      x[k] = lo[k];
    }
    if (k < 0) break;
  }
  return out;
}

inline Integer brute_count(const Polytope& p, long long n, bool strict = false) {
  if (n == 0) return 1;
  return Integer(brute_lattice_points(p, Rational(n), strict).size());
}

inline Rational det3(const RationalVector& a, const RationalVector& b, const RationalVector& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

/// Euclidean volume for d ≤ 3: length, shoelace over an angularly sorted
/// polygon, or a cone from the centroid over fan-triangulated facets.
inline Rational volume(const Polytope& p) {
  const auto& vs = p.vertices();
  if (p.dim() == 1) return abs(vs.back()[0] - vs.front()[0]);

  auto ordered_polygon = [](std::vector<RationalVector> pts, auto cross) {
    // Sort around the first point by orientation; valid for convex polygons.
    std::sort(pts.begin(), pts.end(), [](const RationalVector& a, const RationalVector& b) {
      for (Index i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
      return false;
    });
    const RationalVector pivot = pts.front();
    std::sort(pts.begin() + 1, pts.end(), [&](const RationalVector& a, const RationalVector& b) {
      return cross(pivot, a, b) > 0;
    });
    return pts;
  };

  if (p.dim() == 2) {
    auto cross = [](const RationalVector& o, const RationalVector& a, const RationalVector& b) {
      return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
    };
    const auto poly = ordered_polygon(vs, cross);
    Rational area = 0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const auto& a = poly[i];
      const auto& b = poly[(i + 1) % poly.size()];
      area += a[0] * b[1] - a[1] * b[0];
    }
    return abs(area) / 2;
  }

  RationalVector centroid = RationalVector::Zero(3);
  for (const auto& v : vs) centroid += v;
  centroid /= Rational(static_cast<long>(vs.size()));
  Rational total = 0;
  for (const auto& f : p.facets()) {
    std::vector<RationalVector> face;
    for (const auto& v : vs) {
      Rational lhs = 0;
      for (Index k = 0; k < 3; ++k) lhs += Rational(f.normal[k]) * v[k];
      if (lhs == f.offset) face.push_back(v);
    }
    const IntegerVector n = f.normal;
    auto cross = [&n](const RationalVector& o, const RationalVector& a, const RationalVector& b) {
      RationalVector u = a - o, w = b - o;
      RationalVector c(3);
      c << u[1] * w[2] - u[2] * w[1], u[2] * w[0] - u[0] * w[2], u[0] * w[1] - u[1] * w[0];
      return Rational(n[0]) * c[0] + Rational(n[1]) * c[1] + Rational(n[2]) * c[2];
    };
    const auto poly = ordered_polygon(face, cross);
    for (std::size_t i = 1; i + 1 < poly.size(); ++i)
      total += abs(det3(poly[0] - centroid, poly[i] - centroid, poly[i + 1] - centroid)) / 6;
  }
  return total;
}

/// Number of Gelfand-Tsetlin patterns for sl_3 with top row (a+b, b, 0).
inline long long gt_pattern_count(long long a, long long b) {
  const long long l1 = a + b, l2 = b, l3 = 0;
  long long total = 0;
  for (long long x21 = l2; x21 <= l1; ++x21)
    for (long long x22 = l3; x22 <= l2; ++x22)
      for (long long x11 = x22; x11 <= x21; ++x11) ++total;
  return total;
}

/// Weyl dimension formula for sl_3 in fundamental coordinates (a, b).
inline long long weyl_dim_a2(long long a, long long b) { return (a + 1) * (b + 1) * (a + b + 2) / 2; }

/// Random full-dimensional polytope from a hull of small rational points.
inline Polytope random_hull(std::mt19937_64& rng, int dim, int reach, int max_den) {
  std::uniform_int_distribution<int> den_dist(1, max_den);
  std::uniform_int_distribution<int> count_dist(dim + 1, 2 * dim + 2);
  while (true) {
    std::vector<RationalVector> pts;
    const int n = count_dist(rng);
    for (int i = 0; i < n; ++i) {
      RationalVector v(dim);
      for (int k = 0; k < dim; ++k) {
        const int den = den_dist(rng);
        std::uniform_int_distribution<int> num_dist(-reach * den, reach * den);
        v[k] = Rational(num_dist(rng), den);
      }
      pts.push_back(v);
    }
    try {
      return from_vrep(pts);
    } catch (const Error&) {
    }
  }
}

}  // namespace reflex::oracle
