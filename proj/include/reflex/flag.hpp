#pragma once

#include <vector>

#include <Eigen/Core>

#include "reflex/polynomial.hpp"
#include "reflex/polytope.hpp"
#include "reflex/root_system.hpp"

namespace reflex {

/// Simple roots (1-based, Bourbaki numbering) that are not in the Levi factor.
struct ParabolicChoice {
  std::vector<int> excluded_simples;
};

/// Dominant weight in fundamental-weight coordinates.
using WeightVector = Eigen::VectorXi;

/// Φ_P^+: positive roots whose simple-root support meets the excluded simples.
std::vector<Eigen::VectorXi> parabolic_positive_roots(const RootSystem& rs, const ParabolicChoice& pc);

/// λ is P-regular dominant iff λ_i > 0 exactly for the excluded simples i.
bool is_p_regular(const RootSystem& rs, const ParabolicChoice& pc, const WeightVector& lambda);

/// n ↦ Π_{β∈Φ_P^+} ⟨nλ+ρ, β∨⟩ / ⟨ρ, β∨⟩, the Hilbert polynomial of (G/P, L_λ).
QuasiPolynomial hilbert_polynomial(const RootSystem& rs, const ParabolicChoice& pc, const WeightVector& lambda);

/// Σ_{β∈Φ_P^+} β in fundamental-weight coordinates, accepted only after
/// detect_anticanonical confirms it.
WeightVector anticanonical_weight(const RootSystem& rs, const ParabolicChoice& pc);

/// q(-1) = (-1)^d with d = |Φ_P^+|, cross-checked against the full
/// symmetry q(n) = (-1)^d q(-n-1).
bool detect_anticanonical(const RootSystem& rs, const ParabolicChoice& pc, const WeightVector& lambda);

/// Does the Ehrhart quasi-polynomial of p equal the Hilbert polynomial?
bool string_polytope_cross_check(const Polytope& p, const RootSystem& rs, const ParabolicChoice& pc,
                                 const WeightVector& lambda, const Budget& budget = {});

}  // namespace reflex
