#include "reflex/polytope.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>

#include "lattice_count.hpp"
#include "reflex/linalg.hpp"

namespace reflex {

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("REFLEX_BUDGET"); env && *env) {
    try {
      std::size_t used = 0;
      const unsigned long long value = std::stoull(env, &used);
      if (used != std::string(env).size() || value == 0) throw std::invalid_argument(env);
      b.work = value;
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidInput, "kernel", std::string("REFLEX_BUDGET is not a positive integer: ") + env);
    }
  }
  return b;
}

namespace {

struct VectorLess {
  template <typename Scalar>
  bool operator()(const VectorX<Scalar>& a, const VectorX<Scalar>& b) const {
    return lex_less(a, b);
  }
};

// Calls f(indices) for every k-subset of {0, ..., n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

RationalMatrix rows_of(const std::vector<HalfSpace>& hs, Index dim) {
  RationalMatrix u(static_cast<Index>(hs.size()), dim);
  for (std::size_t i = 0; i < hs.size(); ++i)
    for (Index j = 0; j < dim; ++j) u(static_cast<Index>(i), j) = Rational(hs[i].normal[j]);
  return u;
}

RationalVector offsets_of(const std::vector<HalfSpace>& hs) {
  RationalVector b(static_cast<Index>(hs.size()));
  for (std::size_t i = 0; i < hs.size(); ++i) b[static_cast<Index>(i)] = hs[i].offset;
  return b;
}

bool satisfies(const RationalMatrix& u, const RationalVector& b, const RationalVector& x) {
  const RationalVector lhs = u * x;
  for (Index i = 0; i < lhs.size(); ++i)
    if (lhs[i] > b[i]) return false;
  return true;
}

// Feasible basic solutions of {x : u x ≤ b} for u of full column rank.
std::vector<RationalVector> basic_solutions(const RationalMatrix& u, const RationalVector& b) {
  const auto m = static_cast<std::size_t>(u.rows());
  const auto d = static_cast<std::size_t>(u.cols());
  std::vector<RationalVector> found;
  for_each_subset(m, d, [&](const std::vector<std::size_t>& rows) {
    RationalMatrix a(static_cast<Index>(d), static_cast<Index>(d));
    RationalVector rhs(static_cast<Index>(d));
    for (std::size_t i = 0; i < d; ++i) {
      a.row(static_cast<Index>(i)) = u.row(static_cast<Index>(rows[i]));
      rhs[static_cast<Index>(i)] = b[static_cast<Index>(rows[i])];
    }
    auto x = linalg::solve(a, rhs);
    if (x && satisfies(u, b, *x)) found.push_back(std::move(*x));
  });
  std::sort(found.begin(), found.end(), VectorLess{});
  found.erase(std::unique(found.begin(), found.end(),
                          [](const RationalVector& a, const RationalVector& c) { return equal(a, c); }),
              found.end());
  return found;
}

// Nonempty check for a rank-deficient system: the feasible set is invariant
// along the nullspace, so pin enough coordinates to zero to make it pointed.
bool feasible_rank_deficient(const RationalMatrix& u, const RationalVector& b) {
  const RationalMatrix null = linalg::nullspace(u);
  const auto pinned = linalg::rref(RationalMatrix(null.transpose())).pivots;
  std::vector<Index> kept;
  for (Index c = 0; c < u.cols(); ++c)
    if (std::find(pinned.begin(), pinned.end(), c) == pinned.end()) kept.push_back(c);
  if (kept.empty()) {
    for (Index i = 0; i < b.size(); ++i)
      if (b[i] < 0) return false;
    return true;
  }
  RationalMatrix reduced(u.rows(), static_cast<Index>(kept.size()));
  for (std::size_t k = 0; k < kept.size(); ++k) reduced.col(static_cast<Index>(k)) = u.col(kept[k]);
  return !basic_solutions(reduced, b).empty();
}

// For u of full column rank: does {y : u y ≤ 0} contain a nonzero ray?
bool has_recession_ray(const RationalMatrix& u) {
  const Index d = u.cols();
  bool found = false;
  for_each_subset(static_cast<std::size_t>(u.rows()), static_cast<std::size_t>(d - 1),
                  [&](const std::vector<std::size_t>& rows) {
                    if (found) return;
                    RationalMatrix a(static_cast<Index>(rows.size()), d);
                    for (std::size_t i = 0; i < rows.size(); ++i)
                      a.row(static_cast<Index>(i)) = u.row(static_cast<Index>(rows[i]));
                    const RationalMatrix null = linalg::nullspace(a);
                    if (null.cols() != 1) return;
                    const RationalVector z = null.col(0);
                    const RationalVector image = u * z;
                    bool nonpositive = true;
                    bool nonnegative = true;
                    for (Index i = 0; i < image.size(); ++i) {
                      if (image[i] > 0) nonpositive = false;
                      if (image[i] < 0) nonnegative = false;
                    }
                    found = nonpositive || nonnegative;
                  });
  return found;
}

// Primitive normals, duplicates merged to the tightest offset, sorted by normal.
std::vector<HalfSpace> canonicalize(std::span<const Constraint> input, Index dim) {
  std::map<IntegerVector, Rational, VectorLess> tightest;
  for (const auto& c : input) {
    if (c.normal.size() != dim)
      throw Error(ErrorCode::DimensionMismatch, "kernel",
                  "halfspace normal has length " + std::to_string(c.normal.size()) + ", expected " +
                      std::to_string(dim));
    bool zero = true;
    for (Index i = 0; i < dim; ++i) zero = zero && c.normal[i] == 0;
    if (zero) throw Error(ErrorCode::InvalidInput, "kernel", "halfspace normal is zero");
    Rational factor;
    IntegerVector normal = primitive_integer(c.normal, &factor);
    const Rational offset = c.offset * factor;
    auto [it, inserted] = tightest.emplace(std::move(normal), offset);
    if (!inserted && offset < it->second) it->second = offset;
  }
  std::vector<HalfSpace> out;
  out.reserve(tightest.size());
  for (auto& [normal, offset] : tightest) out.push_back({normal, offset});
  return out;
}


}  // namespace

bool operator==(const Polytope& a, const Polytope& b) {
  if (a.dim_ != b.dim_ || a.facets_ != b.facets_ || a.vertices_.size() != b.vertices_.size()) return false;
  for (std::size_t i = 0; i < a.vertices_.size(); ++i)
    if (!equal(a.vertices_[i], b.vertices_[i])) return false;
  return true;
}

Polytope from_hrep(std::span<const Constraint> input, Index dim) {
  if (dim < 1) throw Error(ErrorCode::InvalidInput, "kernel", "dimension must be positive");
  if (input.empty()) throw Error(ErrorCode::UnboundedInput, "kernel", "no halfspaces given");

  std::vector<HalfSpace> hs = canonicalize(input, dim);
  const RationalMatrix u = rows_of(hs, dim);
  const RationalVector b = offsets_of(hs);

  if (linalg::rank(u) < dim) {
    if (!feasible_rank_deficient(u, b)) throw Error(ErrorCode::EmptyInput, "kernel", "halfspaces are infeasible");
    throw Error(ErrorCode::UnboundedInput, "kernel", "halfspace normals do not span; intersection contains a line");
  }
  std::vector<RationalVector> vertices = basic_solutions(u, b);
  if (vertices.empty()) throw Error(ErrorCode::EmptyInput, "kernel", "halfspaces are infeasible");
  if (has_recession_ray(u)) throw Error(ErrorCode::UnboundedInput, "kernel", "intersection is unbounded");
  if (linalg::affine_rank(vertices) < dim)
    throw Error(ErrorCode::LowerDimensional, "kernel", "intersection is not full-dimensional");

  std::vector<HalfSpace> facets;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    std::vector<RationalVector> tight;
    for (const auto& v : vertices)
      if (dot(hs[i].normal, v) == hs[i].offset) tight.push_back(v);
    if (linalg::affine_rank(tight) == dim - 1) facets.push_back(hs[i]);
  }
  return Polytope(dim, std::move(facets), std::move(vertices));
}

Polytope from_hrep(std::span<const HalfSpace> halfspaces, Index dim) {
  std::vector<Constraint> cs;
  cs.reserve(halfspaces.size());
  for (const auto& h : halfspaces) cs.push_back({to_rational(h.normal), h.offset});
  return from_hrep(std::span<const Constraint>(cs), dim);
}

Polytope from_vrep(std::span<const RationalVector> input) {
  if (input.empty()) throw Error(ErrorCode::EmptyInput, "kernel", "no points given");
  const Index dim = input.front().size();
  if (dim < 1) throw Error(ErrorCode::InvalidInput, "kernel", "dimension must be positive");
  for (const auto& p : input)
    if (p.size() != dim) throw Error(ErrorCode::DimensionMismatch, "kernel", "points have differing lengths");

  std::vector<RationalVector> points(input.begin(), input.end());
  std::sort(points.begin(), points.end(), VectorLess{});
  points.erase(std::unique(points.begin(), points.end(),
                           [](const RationalVector& a, const RationalVector& c) { return equal(a, c); }),
               points.end());
  if (linalg::affine_rank(points) < dim)
    throw Error(ErrorCode::LowerDimensional, "kernel", "convex hull is not full-dimensional");

  std::map<IntegerVector, Rational, VectorLess> supporting;
  for_each_subset(points.size(), static_cast<std::size_t>(dim), [&](const std::vector<std::size_t>& idx) {
    RationalMatrix diffs(dim - 1, dim);
    for (std::size_t i = 1; i < idx.size(); ++i)
      diffs.row(static_cast<Index>(i) - 1) = (points[idx[i]] - points[idx[0]]).transpose();
    const RationalMatrix null = linalg::nullspace(diffs);
    if (null.cols() != 1) return;
    IntegerVector normal = primitive_integer(RationalVector(null.col(0)));
    const Rational level = dot(normal, points[idx[0]]);
    bool below = true;
    bool above = true;
    for (const auto& p : points) {
      const Rational v = dot(normal, p);
      if (v > level) below = false;
      if (v < level) above = false;
    }
    if (below) supporting.emplace(normal, level);
    if (above) supporting.emplace(IntegerVector(-normal), -level);
  });

  std::vector<HalfSpace> hs;
  for (auto& [normal, offset] : supporting) hs.push_back({normal, offset});
  return from_hrep(std::span<const HalfSpace>(hs), dim);
}

bool contains_origin_in_interior(const Polytope& p) {
  return std::all_of(p.facets().begin(), p.facets().end(), [](const HalfSpace& h) { return h.offset > 0; });
}

Polytope polar_dual(const Polytope& p) {
  if (!contains_origin_in_interior(p))
    throw Error(ErrorCode::OriginNotInterior, "kernel", "polar dual requires the origin in the interior");
  std::vector<Constraint> cs;
  cs.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) cs.push_back({v, Rational(1)});
  return from_hrep(std::span<const Constraint>(cs), p.dim());
}

Polytope translate(const Polytope& p, const RationalVector& shift) {
  if (shift.size() != p.dim())
    throw Error(ErrorCode::DimensionMismatch, "kernel", "translation vector has wrong length");
  std::vector<HalfSpace> facets = p.facets_;
  for (auto& f : facets) f.offset += dot(f.normal, shift);
  std::vector<RationalVector> vertices = p.vertices_;
  for (auto& v : vertices) v += shift;
  return Polytope(p.dim_, std::move(facets), std::move(vertices));
}

Polytope dilate(const Polytope& p, const Rational& factor) {
  if (factor <= 0) throw Error(ErrorCode::NonPositiveFactor, "kernel", "dilation factor must be positive");
  std::vector<HalfSpace> facets = p.facets_;
  for (auto& f : facets) f.offset *= factor;
  std::vector<RationalVector> vertices = p.vertices_;
  for (auto& v : vertices) v *= factor;
  return Polytope(p.dim_, std::move(facets), std::move(vertices));
}

namespace {

template <typename RoundFn>
Polytope round_offsets(const Polytope& p, RoundFn round) {
  std::vector<HalfSpace> hs = p.facets();
  for (auto& h : hs) h.offset = Rational(round(h.offset));
  try {
    return from_hrep(std::span<const HalfSpace>(hs), p.dim());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::EmptyInput) throw CollapsedPolytope(std::move(hs), true);
    if (e.code() == ErrorCode::LowerDimensional) throw CollapsedPolytope(std::move(hs), false);
    throw;
  }
}

}  // namespace

Polytope round_down(const Polytope& p) {
  return round_offsets(p, [](const Rational& q) { return floor(q); });
}

Polytope round_up(const Polytope& p) {
  return round_offsets(p, [](const Rational& q) { return ceil(q); });
}

std::vector<HalfSpace> normal_fan_rays(const Polytope& p) { return p.facets(); }

LatticeBox bounding_box(const Polytope& p) {
  const Index d = p.dim();
  LatticeBox box{IntegerVector(d), IntegerVector(d)};
  for (Index k = 0; k < d; ++k) {
    Rational lo = p.vertices().front()[k];
    Rational hi = lo;
    for (const auto& v : p.vertices()) {
      lo = std::min(lo, v[k]);
      hi = std::max(hi, v[k]);
    }
    box.lower[k] = ceil(lo);
    box.upper[k] = floor(hi);
  }
  return box;
}

namespace {

using Wide = __int128;

// Scans an integer box row by row along its longest axis. Each row is the
// exact interval of the inner coordinate allowed by all inequalities.
class RowScanner {
 public:
  RowScanner(std::span<const HalfSpace> hs, const LatticeBox& box, bool strict, const Budget& budget) {
    dim_ = box.lower.size();
    for (Index k = 0; k < dim_; ++k) {
      if (box.upper[k] < box.lower[k]) {
        empty_ = true;
        return;
      }
    }
    inner_ = 0;
    for (Index k = 1; k < dim_; ++k)
      if (box.upper[k] - box.lower[k] > box.upper[inner_] - box.lower[inner_]) inner_ = k;

    Integer rows = 1;
    for (Index k = 0; k < dim_; ++k)
      if (k != inner_) rows *= box.upper[k] - box.lower[k] + 1;
    if (rows > Integer(budget.work))
      throw Error(ErrorCode::ScaleExceeded, "kernel",
                  "lattice enumeration needs " + rows.str() + " rows, budget is " + std::to_string(budget.work));

    const Integer limit = Integer(1) << 60;
    Integer reach = 0;
    for (Index k = 0; k < dim_; ++k) reach = std::max(reach, std::max(abs(box.lower[k]), abs(box.upper[k])));
    if (reach > limit) throw Error(ErrorCode::ScaleExceeded, "kernel", "coordinates exceed 64-bit range");
    for (Index k = 0; k < dim_; ++k) {
      lower_.push_back(box.lower[k].convert_to<std::int64_t>());
      upper_.push_back(box.upper[k].convert_to<std::int64_t>());
    }
    for (const auto& h : hs) {
      if (h.normal.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "kernel", "halfspace length mismatch");
      // ⟨x,u⟩ is an integer on lattice points, so the bound can be rounded.
      const Integer bound = strict ? ceil(h.offset) - 1 : floor(h.offset);
      Integer total = abs(bound);
      for (Index k = 0; k < dim_; ++k) total += abs(h.normal[k]) * reach;
      if (total > limit) throw Error(ErrorCode::ScaleExceeded, "kernel", "inequality data exceed 64-bit range");
      std::vector<std::int64_t> row;
      for (Index k = 0; k < dim_; ++k) row.push_back(h.normal[k].convert_to<std::int64_t>());
      normals_.push_back(std::move(row));
      bounds_.push_back(bound.convert_to<std::int64_t>());
    }
  }

  // f(outer coordinates with the inner slot unset, inner lo, inner hi) for each nonempty row.
  template <typename F>
  void scan(F&& f) const {
    if (empty_) return;
    std::vector<std::int64_t> x(lower_.begin(), lower_.end());
    while (true) {
      std::int64_t lo = lower_[static_cast<std::size_t>(inner_)];
      std::int64_t hi = upper_[static_cast<std::size_t>(inner_)];
      for (std::size_t i = 0; i < normals_.size() && lo <= hi; ++i) {
        std::int64_t s = 0;
        for (Index k = 0; k < dim_; ++k)
          if (k != inner_) s += normals_[i][static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(k)];
        const std::int64_t a = normals_[i][static_cast<std::size_t>(inner_)];
        const std::int64_t rhs = bounds_[i] - s;
        if (a > 0) {
          hi = std::min(hi, floor_div(rhs, a));
        } else if (a < 0) {
          lo = std::max(lo, ceil_div(rhs, a));
        } else if (rhs < 0) {
          hi = lo - 1;
        }
      }
      if (lo <= hi) f(x, lo, hi);
      if (!advance(x)) return;
    }
  }

  Index inner() const { return inner_; }

 private:
  static std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
  }
  static std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

  bool advance(std::vector<std::int64_t>& x) const {
    for (Index k = dim_ - 1; k >= 0; --k) {
      if (k == inner_) continue;
      auto uk = static_cast<std::size_t>(k);
      if (x[uk] < upper_[uk]) {
        ++x[uk];
        return true;
      }
      x[uk] = lower_[uk];
    }
    return false;
  }

  Index dim_ = 0;
  Index inner_ = 0;
  bool empty_ = false;
  std::vector<std::int64_t> lower_, upper_;
  std::vector<std::vector<std::int64_t>> normals_;
  std::vector<std::int64_t> bounds_;
};

}  // namespace

namespace {

// Axes ordered by increasing extent: all but the last two index the slabs.
std::vector<Index> axes_by_extent(const LatticeBox& box) {
  std::vector<Index> axes(static_cast<std::size_t>(box.lower.size()));
  for (std::size_t k = 0; k < axes.size(); ++k) axes[k] = static_cast<Index>(k);
  std::stable_sort(axes.begin(), axes.end(), [&](Index a, Index b) {
    return box.upper[a] - box.lower[a] < box.upper[b] - box.lower[b];
  });
  return axes;
}

std::int64_t floor_div64(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer slab_count(const LatticeBox& box) {
  const auto axes = axes_by_extent(box);
  Integer slabs = 1;
  for (std::size_t k = 0; k + 2 < axes.size(); ++k) slabs *= box.upper[axes[k]] - box.lower[axes[k]] + 1;
  return slabs;
}

Integer from_i128(detail::i128 v) {
  const bool negative = v < 0;
  const auto u = static_cast<unsigned __int128>(negative ? -v : v);
  const Integer out = (Integer(static_cast<std::uint64_t>(u >> 64)) << 64) + Integer(static_cast<std::uint64_t>(u));
  return negative ? Integer(-out) : out;
}

// Counts slab by slab: every choice of the short coordinates leaves a polygon
// in the two longest ones, which is counted in closed form. Returns nullopt if
// the data are too large for the 128-bit arithmetic of the polygon counter.
std::optional<Integer> count_by_slabs(std::span<const HalfSpace> hs, const LatticeBox& box, bool strict,
                                      const Budget& budget) {
  const Index dim = box.lower.size();
  for (Index k = 0; k < dim; ++k)
    if (box.upper[k] < box.lower[k]) return Integer(0);
  const Integer slabs = slab_count(box);
  if (slabs > Integer(budget.work))
    throw Error(ErrorCode::ScaleExceeded, "kernel",
                "lattice count needs " + slabs.str() + " slabs, budget is " + std::to_string(budget.work));

  const Integer coefficient_limit = Integer(1) << 16, reach_limit = Integer(1) << 40, bound_limit = Integer(1) << 58;
  Integer reach = 0;
  for (Index k = 0; k < dim; ++k) reach = std::max(reach, std::max(abs(box.lower[k]), abs(box.upper[k])));
  if (reach > reach_limit) return std::nullopt;
  std::vector<std::vector<std::int64_t>> normals;
  std::vector<std::int64_t> bounds;
  for (const auto& h : hs) {
    if (h.normal.size() != dim) throw Error(ErrorCode::DimensionMismatch, "kernel", "halfspace length mismatch");
    const Integer bound = strict ? ceil(h.offset) - 1 : floor(h.offset);
    if (abs(bound) > bound_limit) return std::nullopt;
    std::vector<std::int64_t> row;
    for (Index k = 0; k < dim; ++k) {
      if (abs(h.normal[k]) > coefficient_limit) return std::nullopt;
      row.push_back(h.normal[k].convert_to<std::int64_t>());
    }
    normals.push_back(std::move(row));
    bounds.push_back(bound.convert_to<std::int64_t>());
  }
  std::vector<std::int64_t> lo(static_cast<std::size_t>(dim)), hi(static_cast<std::size_t>(dim));
  for (Index k = 0; k < dim; ++k) {
    lo[static_cast<std::size_t>(k)] = box.lower[k].convert_to<std::int64_t>();
    hi[static_cast<std::size_t>(k)] = box.upper[k].convert_to<std::int64_t>();
  }

  if (dim == 1) {
    std::int64_t a = lo[0], b = hi[0];
    for (std::size_t i = 0; i < normals.size(); ++i) {
      const std::int64_t u = normals[i][0], c = bounds[i];
      if (u > 0) b = std::min(b, floor_div64(c, u));
      if (u < 0) a = std::max(a, -floor_div64(-c, u));
    }
    return Integer(std::max<std::int64_t>(0, b - a + 1));
  }

  const auto axes = axes_by_extent(box);
  const auto y = static_cast<std::size_t>(axes[axes.size() - 2]);
  const auto z = static_cast<std::size_t>(axes[axes.size() - 1]);
  std::vector<std::size_t> outer;
  for (std::size_t k = 0; k + 2 < axes.size(); ++k) outer.push_back(static_cast<std::size_t>(axes[k]));

  std::vector<std::int64_t> x(lo);
  std::vector<detail::Line> lines(normals.size());
  detail::i128 total = 0;
  while (true) {
    for (std::size_t i = 0; i < normals.size(); ++i) {
      std::int64_t c = bounds[i];
      for (std::size_t k : outer) c -= normals[i][k] * x[k];
      lines[i] = {normals[i][y], normals[i][z], c};
    }
    total += detail::count_polygon(lines, lo[y], hi[y], lo[z], hi[z]);
    std::size_t k = 0;
    for (; k < outer.size(); ++k) {
      if (x[outer[k]] < hi[outer[k]]) {
        ++x[outer[k]];
        break;
      }
      x[outer[k]] = lo[outer[k]];
    }
    if (k == outer.size()) break;
  }
  return from_i128(total);
}

}  // namespace

Integer enumeration_work(const Polytope& p) {
  const LatticeBox box = bounding_box(p);
  for (Index k = 0; k < p.dim(); ++k)
    if (box.upper[k] < box.lower[k]) return 0;
  return slab_count(box);
}

Integer count_lattice_points(std::span<const HalfSpace> halfspaces, const LatticeBox& box, bool strict,
                             const Budget& budget) {
  if (auto fast = count_by_slabs(halfspaces, box, strict, budget)) return *fast;
  const RowScanner scanner(halfspaces, box, strict, budget);
  unsigned __int128 total = 0;
  scanner.scan([&](const std::vector<std::int64_t>&, std::int64_t lo, std::int64_t hi) {
    total += static_cast<unsigned __int128>(hi - lo + 1);
  });
  return from_i128(static_cast<detail::i128>(total));
}

Integer count_lattice_points(const Polytope& p, bool strict, const Budget& budget) {
  return count_lattice_points(std::span<const HalfSpace>(p.facets()), bounding_box(p), strict, budget);
}

LatticePointSet lattice_points(const Polytope& p, bool strict, const Budget& budget) {
  const RowScanner scanner(std::span<const HalfSpace>(p.facets()), bounding_box(p), strict, budget);
  const Index inner = scanner.inner();
  std::uint64_t work = 0;
  LatticePointSet out;
  scanner.scan([&](const std::vector<std::int64_t>& x, std::int64_t lo, std::int64_t hi) {
    work += static_cast<std::uint64_t>(hi - lo + 1);
    if (work > budget.work)
      throw Error(ErrorCode::ScaleExceeded, "kernel", "too many lattice points to materialize");
    for (std::int64_t t = lo; t <= hi; ++t) {
      IntegerVector point(p.dim());
      for (Index k = 0; k < p.dim(); ++k) point[k] = k == inner ? Integer(t) : Integer(x[static_cast<std::size_t>(k)]);
      out.points.push_back(std::move(point));
    }
  });
  std::sort(out.points.begin(), out.points.end(), VectorLess{});
  out.count = out.points.size();
  return out;
}

}  // namespace reflex
