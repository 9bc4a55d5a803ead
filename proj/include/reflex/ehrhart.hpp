#pragma once

#include "reflex/polynomial.hpp"
#include "reflex/polytope.hpp"

namespace reflex {

/// L_P(n) = #(nP ∩ Z^d), with L_P(0) = 1.
Integer count(const Polytope& p, long long n, const Budget& budget = {});

/// #(int(nP) ∩ Z^d) for n ≥ 1.
Integer count_interior(const Polytope& p, long long n, const Budget& budget = {});

/// L_P(n) through the rounded-down dilation: #(⌊nP⌋ ∩ Z^d). A rounding that
/// collapses counts the lattice points of the collapsed system (zero when empty).
Integer count_rounded_down(const Polytope& p, long long n, const Budget& budget = {});

/// #(int⌈nP⌉ ∩ Z^d) for n ≥ 1.
Integer count_interior_rounded_up(const Polytope& p, long long n, const Budget& budget = {});

/// Least common multiple of all vertex-coordinate denominators: a period of L_P.
Integer period_bound(const Polytope& p);

/// Reconstructs L_P from exact counts: for every residue r modulo the period
/// bound, interpolate the dim+1 samples n = r, r + T, ..., validate on dim
/// further samples, then shrink to the minimal period. The budget bounds the
/// work of all these counts together.
QuasiPolynomial ehrhart_quasi_polynomial(const Polytope& p, const Budget& budget = {});

inline Rational evaluate(const QuasiPolynomial& q, long long n) { return q(n); }

bool is_quasi_lattice(const Polytope& p, const Budget& budget = {});
bool is_quasi_lattice(const QuasiPolynomial& q);

/// l_P(-n) = (-1)^d L_{int P}(n) for 1 ≤ n ≤ n_max.
bool reciprocity_check(const Polytope& p, long long n_max, const Budget& budget = {});
bool reciprocity_check(const Polytope& p, const QuasiPolynomial& q, long long n_max, const Budget& budget = {});

/// L_P(n) = L_{int P}(n+1) for 0 ≤ n ≤ n_max, cross-checked against the
/// quasi-polynomial form L_P(n) = (-1)^d L_P(-n-1) on the same range.
bool hibi_symmetry_check(const Polytope& p, long long n_max, const Budget& budget = {});
bool hibi_symmetry_check(const Polytope& p, const QuasiPolynomial& q, long long n_max, const Budget& budget = {});

/// q(n) = (-1)^d q(-n-1) on 0 ≤ n ≤ n_max and as a coefficient identity.
/// Requires period 1.
bool hilbert_symmetry_check(const QuasiPolynomial& q, int d, long long n_max);

}  // namespace reflex
