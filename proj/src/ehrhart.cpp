#include "reflex/ehrhart.hpp"

#include <algorithm>
#include <string>

namespace reflex {

namespace {

void require_positive(long long n, const char* what) {
  if (n < 1) throw Error(ErrorCode::InvalidInput, "ehrhart", std::string(what) + " must be positive");
}

int sign_power(Index d) { return d % 2 == 0 ? 1 : -1; }

}  // namespace

Integer count(const Polytope& p, long long n, const Budget& budget) {
  if (n < 0) throw Error(ErrorCode::InvalidInput, "ehrhart", "dilation index must be nonnegative");
  if (n == 0) return 1;
  return count_lattice_points(dilate(p, Rational(n)), false, budget);
}

Integer count_interior(const Polytope& p, long long n, const Budget& budget) {
  require_positive(n, "dilation index");
  return count_lattice_points(dilate(p, Rational(n)), true, budget);
}

Integer count_rounded_down(const Polytope& p, long long n, const Budget& budget) {
  if (n == 0) return 1;
  const Polytope scaled = dilate(p, Rational(n));
  try {
    return count_lattice_points(round_down(scaled), false, budget);
  } catch (const CollapsedPolytope& collapsed) {
    if (collapsed.empty()) return 0;
    return count_lattice_points(std::span<const HalfSpace>(collapsed.halfspaces()), bounding_box(scaled), false,
                                budget);
  }
}

Integer count_interior_rounded_up(const Polytope& p, long long n, const Budget& budget) {
  require_positive(n, "dilation index");
  return count_lattice_points(round_up(dilate(p, Rational(n))), true, budget);
}

Integer period_bound(const Polytope& p) {
  Integer t = 1;
  for (const auto& v : p.vertices()) t = lcm(t, denominator_lcm(v));
  return t;
}

namespace {

// Work of all counts n = 0..last together: each count costs at least one unit
// and in general the number of slabs of the bounding box of nP.
Integer reconstruction_work(const Polytope& p, long long last) {
  const Index d = p.dim();
  std::vector<Rational> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
  for (Index k = 0; k < d; ++k) {
    lo[static_cast<std::size_t>(k)] = hi[static_cast<std::size_t>(k)] = p.vertices().front()[k];
    for (const auto& v : p.vertices()) {
      lo[static_cast<std::size_t>(k)] = std::min(lo[static_cast<std::size_t>(k)], v[k]);
      hi[static_cast<std::size_t>(k)] = std::max(hi[static_cast<std::size_t>(k)], v[k]);
    }
  }
  Integer total = 0;
  std::vector<Integer> extent(static_cast<std::size_t>(d));
  for (long long n = 0; n <= last; ++n) {
    for (std::size_t k = 0; k < extent.size(); ++k)
      extent[k] = floor(Rational(n) * hi[k]) - ceil(Rational(n) * lo[k]) + 1;
    std::sort(extent.begin(), extent.end());
    Integer slabs = 1;
    for (std::size_t k = 0; k + 2 < extent.size(); ++k) slabs *= extent[k];
    total += slabs;
  }
  return total;
}

}  // namespace

QuasiPolynomial ehrhart_quasi_polynomial(const Polytope& p, const Budget& budget) {
  const Index d = p.dim();
  const Integer bound = period_bound(p);
  const Integer samples = bound * (2 * d + 1);
  const auto too_big = [&](const std::string& detail) {
    return Error(ErrorCode::ScaleExceeded, "ehrhart",
                 "reconstruction with period bound " + bound.str() + " " + detail + ", budget is " +
                     std::to_string(budget.work));
  };
  if (samples > Integer(budget.work)) throw too_big("needs " + samples.str() + " counts");
  const Integer work = reconstruction_work(p, samples.convert_to<long long>() - 1);
  if (work > Integer(budget.work)) throw too_big("needs " + work.str() + " work units");

  const auto period = bound.convert_to<long long>();
  std::vector<Polynomial> constituents;
  constituents.reserve(static_cast<std::size_t>(period));
  for (long long r = 0; r < period; ++r) {
    std::vector<Rational> xs, ys;
    for (Index j = 0; j <= d; ++j) {
      const long long n = r + j * period;
      xs.emplace_back(n);
      ys.emplace_back(count(p, n, budget));
    }
    Polynomial f = interpolate(xs, ys);
    for (Index j = d + 1; j <= 2 * d; ++j) {
      const long long n = r + j * period;
      const Integer held_out = count(p, n, budget);
      if (f(Rational(n)) != Rational(held_out))
        throw Error(ErrorCode::ValidationFailed, "ehrhart",
                    "interpolant for residue " + std::to_string(r) + " predicts " + to_string(f(Rational(n))) +
                        " at n = " + std::to_string(n) + " but the count is " + held_out.str());
    }
    constituents.push_back(std::move(f));
  }
  QuasiPolynomial q = QuasiPolynomial(std::move(constituents)).reduced();
  bool full_degree = false;
  for (const auto& c : q.constituents()) full_degree = full_degree || c.degree() == d;
  if (!full_degree) throw Error(ErrorCode::ValidationFailed, "ehrhart", "no constituent reaches degree dim P");
  return q;
}

bool is_quasi_lattice(const QuasiPolynomial& q) { return q.period() == 1; }

bool is_quasi_lattice(const Polytope& p, const Budget& budget) {
  return is_quasi_lattice(ehrhart_quasi_polynomial(p, budget));
}

bool reciprocity_check(const Polytope& p, const QuasiPolynomial& q, long long n_max, const Budget& budget) {
  require_positive(n_max, "n_max");
  const int sign = sign_power(p.dim());
  for (long long n = 1; n <= n_max; ++n)
    if (q(-n) != Rational(sign * count_interior(p, n, budget))) return false;
  return true;
}

bool reciprocity_check(const Polytope& p, long long n_max, const Budget& budget) {
  return reciprocity_check(p, ehrhart_quasi_polynomial(p, budget), n_max, budget);
}

bool hibi_symmetry_check(const Polytope& p, const QuasiPolynomial& q, long long n_max, const Budget& budget) {
  require_positive(n_max, "n_max");
  const int sign = sign_power(p.dim());
  bool by_counts = true;
  bool by_polynomial = true;
  for (long long n = 0; n <= n_max; ++n) {
    by_counts = by_counts && count(p, n, budget) == count_interior(p, n + 1, budget);
    by_polynomial = by_polynomial && q(n) == Rational(sign) * q(-n - 1);
  }
  if (by_counts != by_polynomial)
    throw Error(ErrorCode::InternalInconsistency, "ehrhart",
                "lattice-count and quasi-polynomial forms of the Hibi condition disagree");
  return by_counts;
}

bool hibi_symmetry_check(const Polytope& p, long long n_max, const Budget& budget) {
  return hibi_symmetry_check(p, ehrhart_quasi_polynomial(p, budget), n_max, budget);
}

bool hilbert_symmetry_check(const QuasiPolynomial& q, int d, long long n_max) {
  if (q.period() != 1) throw Error(ErrorCode::PeriodNotOne, "ehrhart", "symmetry test needs a polynomial");
  require_positive(n_max, "n_max");
  const Rational sign = d % 2 == 0 ? 1 : -1;
  const Polynomial& f = q.constituent(0);
  bool on_range = true;
  for (long long n = 0; n <= n_max; ++n) on_range = on_range && f(Rational(n)) == sign * f(Rational(-n - 1));
  const bool identity = (f - sign * f.compose_affine(-1, -1)).is_zero();
  return on_range && identity;
}

}  // namespace reflex
