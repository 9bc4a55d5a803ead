#pragma once

#include <vector>

#include "reflex/polytope.hpp"

namespace reflex {

/// Primitive ray generators u_ρ of a fan. Only rays are stored; every
/// operation here needs nothing beyond Σ(1).
struct FanRays {
  std::vector<IntegerVector> rays;
  friend bool operator==(const FanRays& a, const FanRays& b);
};

/// Torus-invariant Q-divisor D = Σ a_ρ D_ρ, one coefficient per ray.
struct ToricDivisor {
  FanRays fan;
  std::vector<Rational> coefficients;
  friend bool operator==(const ToricDivisor& a, const ToricDivisor& b) {
    return a.fan == b.fan && a.coefficients == b.coefficients;
  }
};

/// D_P = Σ b_ρ D_ρ over the normal fan of p.
ToricDivisor divisor_from_polytope(const Polytope& p);

/// P_D = {x : ⟨x, u_ρ⟩ ≤ a_ρ}.
Polytope polytope_from_divisor(const ToricDivisor& d);

ToricDivisor scale(const ToricDivisor& d, const Rational& k);
ToricDivisor round_down_divisor(const ToricDivisor& d);
ToricDivisor round_up_divisor(const ToricDivisor& d);

bool is_weil(const ToricDivisor& d);

/// -K = Σ D_ρ: every coefficient 1.
ToricDivisor anticanonical_divisor(const FanRays& fan);

/// χ(X_P, O(⌊nD_P⌋)), realized as the lattice count L_P(n).
Integer euler_char_global(const Polytope& p, long long n, const Budget& budget = {});

/// χ(X_P, O(⌈nD_P⌉ + K)), realized as #(int nP ∩ Z^d) and recomputed from
/// the polytope {⟨x,u_ρ⟩ ≤ ⌈n b_ρ⌉ - 1} of the twisted divisor.
Integer euler_char_canonical_twist(const Polytope& p, long long n, const Budget& budget = {});

}  // namespace reflex
