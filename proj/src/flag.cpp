#include "reflex/flag.hpp"

#include <algorithm>

#include "reflex/ehrhart.hpp"

namespace reflex {

namespace {

void validate(const RootSystem& rs, const ParabolicChoice& pc) {
  std::vector<int> seen;
  for (int i : pc.excluded_simples) {
    if (i < 1 || i > rs.rank())
      throw Error(ErrorCode::InvalidInput, "flag", "excluded simple root index " + std::to_string(i) + " out of range");
    if (std::find(seen.begin(), seen.end(), i) != seen.end())
      throw Error(ErrorCode::InvalidInput, "flag", "excluded simple root listed twice");
    seen.push_back(i);
  }
}

bool excluded(const ParabolicChoice& pc, int index) {
  return std::find(pc.excluded_simples.begin(), pc.excluded_simples.end(), index + 1) != pc.excluded_simples.end();
}

}  // namespace

std::vector<Eigen::VectorXi> parabolic_positive_roots(const RootSystem& rs, const ParabolicChoice& pc) {
  validate(rs, pc);
  std::vector<Eigen::VectorXi> out;
  for (const auto& beta : rs.positive_roots()) {
    bool moved = false;
    for (int i = 0; i < rs.rank(); ++i) moved = moved || (beta[i] != 0 && excluded(pc, i));
    if (moved) out.push_back(beta);
  }
  return out;
}

bool is_p_regular(const RootSystem& rs, const ParabolicChoice& pc, const WeightVector& lambda) {
  validate(rs, pc);
  if (lambda.size() != rs.rank()) return false;
  for (int i = 0; i < rs.rank(); ++i) {
    if (lambda[i] < 0) return false;
    if ((lambda[i] > 0) != excluded(pc, i)) return false;
  }
  return true;
}

QuasiPolynomial hilbert_polynomial(const RootSystem& rs, const ParabolicChoice& pc, const WeightVector& lambda) {
  if (!is_p_regular(rs, pc, lambda))
    throw Error(ErrorCode::NotPRegular, "flag", "weight is not P-regular dominant for this parabolic");
  RationalVector weight(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) weight[i] = Rational(lambda[i]);
  Polynomial product = Polynomial::constant(1);
  for (const auto& beta : parabolic_positive_roots(rs, pc)) {
    const Rational base = rs.pairing(rs.rho(), beta);
    const Rational slope = rs.pairing(weight, beta);
    product = product * Polynomial::linear(slope / base, 1);
  }
  return QuasiPolynomial({product});
}

WeightVector anticanonical_weight(const RootSystem& rs, const ParabolicChoice& pc) {
  if (pc.excluded_simples.empty())
    throw Error(ErrorCode::InvalidInput, "flag", "anticanonical weight needs a proper parabolic");
  Eigen::VectorXi sum = Eigen::VectorXi::Zero(rs.rank());
  for (const auto& beta : parabolic_positive_roots(rs, pc)) sum += beta;
  const WeightVector lambda = rs.to_fundamental(sum);
  if (!is_p_regular(rs, pc, lambda) || !detect_anticanonical(rs, pc, lambda))
    throw Error(ErrorCode::ValidationFailed, "flag", "sum of moved roots fails the anticanonical test");
  return lambda;
}

bool detect_anticanonical(const RootSystem& rs, const ParabolicChoice& pc, const WeightVector& lambda) {
  const QuasiPolynomial q = hilbert_polynomial(rs, pc, lambda);
  const int d = static_cast<int>(parabolic_positive_roots(rs, pc).size());
  const Rational expected = d % 2 == 0 ? 1 : -1;
  const bool at_minus_one = q(-1) == expected;
  const bool symmetric = hilbert_symmetry_check(q, d, 5);
  if (at_minus_one != symmetric)
    throw Error(ErrorCode::InternalInconsistency, "flag", "value at -1 and symmetry criterion disagree");
  return at_minus_one;
}

bool string_polytope_cross_check(const Polytope& p, const RootSystem& rs, const ParabolicChoice& pc,
                                 const WeightVector& lambda, const Budget& budget) {
  const QuasiPolynomial hilbert = hilbert_polynomial(rs, pc, lambda);
  if (p.dim() != hilbert.degree()) return false;
  return ehrhart_quasi_polynomial(p, budget) == hilbert;
}

}  // namespace reflex
