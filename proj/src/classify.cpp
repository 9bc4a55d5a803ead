#include "reflex/classify.hpp"

#include "reflex/ehrhart.hpp"

namespace reflex {

namespace {

[[noreturn]] void inconsistent(const std::string& what) {
  throw Error(ErrorCode::InternalInconsistency, "classify", what);
}

bool is_lattice_vector(const RationalVector& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!is_integral(v[i])) return false;
  return true;
}

}  // namespace

bool is_lattice_polytope(const Polytope& p) {
  for (const auto& v : p.vertices())
    if (!is_lattice_vector(v)) return false;
  return true;
}

bool is_fano(const Polytope& p) {
  if (!contains_origin_in_interior(p)) return false;
  for (const auto& v : p.vertices()) {
    if (!is_lattice_vector(v)) return false;
    IntegerVector z(v.size());
    for (Index i = 0; i < v.size(); ++i) z[i] = numerator(v[i]);
    if (content(z) != 1) return false;
  }
  return true;
}

bool is_reflexive(const Polytope& p) {
  return is_lattice_polytope(p) && contains_origin_in_interior(p) && is_lattice_polytope(polar_dual(p));
}

DualIntegrality is_dual_integral(const Polytope& p, const Budget& budget) {
  const LatticePointSet candidates = lattice_points(p, true, budget);
  for (const auto& anchor : candidates.points) {
    std::vector<Integer> ks;
    bool ok = true;
    for (const auto& f : p.facets()) {
      const Rational shifted = f.offset - Rational(f.normal.dot(anchor));
      if (shifted <= 0 || numerator(shifted) != 1) {
        ok = false;
        break;
      }
      ks.push_back(denominator(shifted));
    }
    if (ok) return {true, anchor, std::move(ks)};
  }
  return {};
}

bool is_dual_fano(const Polytope& p, const Budget& budget) {
  const DualIntegrality di = is_dual_integral(p, budget);
  bool by_offsets = di.holds;
  if (di.holds)
    for (const auto& k : *di.facet_integers) by_offsets = by_offsets && k == 1;

  bool by_dual = false;
  for (const auto& anchor : lattice_points(p, true, budget).points) {
    if (is_fano(polar_dual(translate(p, -to_rational(anchor))))) {
      by_dual = true;
      break;
    }
  }
  if (by_offsets != by_dual) inconsistent("dual-Fano offset form and dual-polytope form disagree");
  return by_offsets;
}

bool is_quasi_reflexive(const Polytope& p, const Budget& budget) {
  const bool by_theorem = is_lattice_polytope(p) && is_dual_integral(p, budget).holds;
  bool by_definition = false;
  for (const auto& anchor : lattice_points(p, true, budget).points) {
    if (is_reflexive(translate(p, -to_rational(anchor)))) {
      by_definition = true;
      break;
    }
  }
  if (by_theorem != by_definition) inconsistent("quasi-reflexive characterizations disagree");
  return by_theorem;
}

ClassificationReport classify(const Polytope& p, const Budget& budget) {
  ClassificationReport r;
  r.is_lattice = is_lattice_polytope(p);
  r.is_fano = is_fano(p);
  r.is_reflexive = is_reflexive(p);
  r.is_quasi_reflexive = is_quasi_reflexive(p, budget);
  r.is_dual_fano = is_dual_fano(p, budget);
  const DualIntegrality di = is_dual_integral(p, budget);
  r.is_dual_integral = di.holds;
  r.anchor = di.anchor;
  r.facet_integers = di.facet_integers;
  r.is_quasi_lattice = is_quasi_lattice(p, budget);
  r.interior_lattice_points = lattice_points(p, true, budget);

  if (r.is_reflexive && !r.is_quasi_reflexive) inconsistent("reflexive but not quasi-reflexive");
  if (r.is_quasi_reflexive && !r.is_dual_fano) inconsistent("quasi-reflexive but not dual-Fano");
  if (r.is_dual_fano && !r.is_dual_integral) inconsistent("dual-Fano but not dual-integral");
  if (r.is_quasi_reflexive != (r.is_dual_integral && r.is_lattice))
    inconsistent("quasi-reflexive differs from dual-integral lattice");
  if (r.is_dual_integral) {
    if (r.interior_lattice_points.count != 1) inconsistent("dual-integral polytope without a unique interior point");
    if (!equal(*r.anchor, r.interior_lattice_points.points.front())) inconsistent("anchor is not the interior point");
    bool all_one = true;
    for (const auto& k : *r.facet_integers) all_one = all_one && k == 1;
    if (r.is_dual_fano != all_one) inconsistent("dual-Fano differs from all facet integers equal to one");
  }
  return r;
}

bool two_dim_criterion(const Polytope& p, const Budget& budget) {
  if (p.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "classify", "criterion applies to polygons only");
  if (!is_quasi_lattice(p, budget))
    throw Error(ErrorCode::NotQuasiLattice, "classify", "Ehrhart quasi-polynomial has period > 1");
  return is_dual_integral(p, budget).holds;
}

}  // namespace reflex
