#pragma once

#include <span>
#include <vector>

#include "reflex/budget.hpp"
#include "reflex/errors.hpp"
#include "reflex/scalar.hpp"

namespace reflex {

/// {x : ⟨x, normal⟩ ≤ offset} with a primitive integer normal.
struct HalfSpace {
  IntegerVector normal;
  Rational offset;

  friend bool operator==(const HalfSpace& a, const HalfSpace& b) {
    return equal(a.normal, b.normal) && a.offset == b.offset;
  }
};

/// Raw inequality ⟨x, normal⟩ ≤ offset with an arbitrary nonzero rational normal.
struct Constraint {
  RationalVector normal;
  Rational offset;
};

/// Full-dimensional rational convex polytope in canonical form: facets sorted
/// lexicographically by primitive normal, vertices sorted lexicographically.
/// Two polytopes are equal iff their canonical forms coincide.
class Polytope {
 public:
  Index dim() const noexcept { return dim_; }
  const std::vector<HalfSpace>& facets() const noexcept { return facets_; }
  const std::vector<RationalVector>& vertices() const noexcept { return vertices_; }

  friend bool operator==(const Polytope& a, const Polytope& b);

  friend Polytope from_hrep(std::span<const Constraint>, Index);
  friend Polytope translate(const Polytope&, const RationalVector&);
  friend Polytope dilate(const Polytope&, const Rational&);

 private:
  Polytope(Index dim, std::vector<HalfSpace> facets, std::vector<RationalVector> vertices)
      : dim_(dim), facets_(std::move(facets)), vertices_(std::move(vertices)) {}

  Index dim_ = 0;
  std::vector<HalfSpace> facets_;
  std::vector<RationalVector> vertices_;
};

/// Thrown by round_down when the rounded system is empty or lower-dimensional.
/// Carries the rounded inequalities so callers can still count their lattice points.
class CollapsedPolytope : public Error {
 public:
  CollapsedPolytope(std::vector<HalfSpace> halfspaces, bool empty)
      : Error(ErrorCode::CollapsedPolytope, "kernel",
              empty ? "rounded polytope is empty" : "rounded polytope is lower-dimensional"),
        halfspaces_(std::move(halfspaces)),
        empty_(empty) {}

  const std::vector<HalfSpace>& halfspaces() const noexcept { return halfspaces_; }
  bool empty() const noexcept { return empty_; }

 private:
  std::vector<HalfSpace> halfspaces_;
  bool empty_;
};

struct LatticePointSet {
  std::vector<IntegerVector> points;  // lexicographic order
  std::size_t count = 0;
};

/// Integer box [lower, upper] (inclusive, per coordinate).
struct LatticeBox {
  IntegerVector lower;
  IntegerVector upper;
};

Polytope from_hrep(std::span<const Constraint> halfspaces, Index dim);
Polytope from_hrep(std::span<const HalfSpace> halfspaces, Index dim);
Polytope from_vrep(std::span<const RationalVector> points);

/// Requires the origin strictly inside p (all canonical offsets positive).
Polytope polar_dual(const Polytope& p);
Polytope translate(const Polytope& p, const RationalVector& shift);
Polytope dilate(const Polytope& p, const Rational& factor);

/// Replace every canonical offset by its floor / ceiling and re-canonicalize.
Polytope round_down(const Polytope& p);
Polytope round_up(const Polytope& p);

/// The canonical facet pairs (u_ρ, b_ρ): rays of the normal fan with support values.
std::vector<HalfSpace> normal_fan_rays(const Polytope& p);

bool contains_origin_in_interior(const Polytope& p);

LatticeBox bounding_box(const Polytope& p);

/// Work units a lattice count of p would need (see Budget).
Integer enumeration_work(const Polytope& p);

/// Integer points of p (strict: of its interior), lexicographically ordered.
LatticePointSet lattice_points(const Polytope& p, bool strict, const Budget& budget = {});
Integer count_lattice_points(const Polytope& p, bool strict, const Budget& budget = {});

/// Lattice count of an arbitrary inequality system restricted to a box. Used for
/// rounded systems that are lower-dimensional and therefore not a Polytope.
Integer count_lattice_points(std::span<const HalfSpace> halfspaces, const LatticeBox& box, bool strict,
                             const Budget& budget = {});

}  // namespace reflex
