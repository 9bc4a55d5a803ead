#pragma once

#include <optional>
#include <vector>

#include "reflex/polytope.hpp"

namespace reflex {

/// Outcome of the dual-integrality search. When it holds, the polytope equals
/// anchor + {x : ⟨x, u_ρ⟩ ≤ 1/k_ρ} over its canonical facets.
struct DualIntegrality {
  bool holds = false;
  std::optional<IntegerVector> anchor;
  std::optional<std::vector<Integer>> facet_integers;
};

struct ClassificationReport {
  bool is_lattice = false;
  bool is_fano = false;
  bool is_reflexive = false;
  bool is_quasi_reflexive = false;
  bool is_dual_fano = false;
  bool is_dual_integral = false;
  bool is_quasi_lattice = false;
  LatticePointSet interior_lattice_points;
  std::optional<IntegerVector> anchor;
  std::optional<std::vector<Integer>> facet_integers;
};

bool is_lattice_polytope(const Polytope& p);

/// Origin interior and every vertex a primitive lattice vector.
bool is_fano(const Polytope& p);

/// p and its polar dual are both lattice polytopes (no translation search).
bool is_reflexive(const Polytope& p);

/// Tries the interior lattice points in lexicographic order as anchors.
DualIntegrality is_dual_integral(const Polytope& p, const Budget& budget = {});

/// All k_ρ = 1, cross-checked against "the dual of some lattice translate is Fano".
bool is_dual_fano(const Polytope& p, const Budget& budget = {});

/// Lattice and dual-integral, cross-checked against "some lattice translate is reflexive".
bool is_quasi_reflexive(const Polytope& p, const Budget& budget = {});

ClassificationReport classify(const Polytope& p, const Budget& budget = {});

/// For a two-dimensional quasi-lattice polygon: is it dual-integral? (Holds
/// exactly when it has one interior lattice point.)
bool two_dim_criterion(const Polytope& p, const Budget& budget = {});

}  // namespace reflex
