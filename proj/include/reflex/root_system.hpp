#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "reflex/scalar.hpp"

namespace reflex {

enum class RootType { A, B, C, D, G2 };

std::string_view to_string(RootType t);
/// "A", "B", "C", "D", "G2"; E and F types raise UnsupportedType.
RootType parse_root_type(std::string_view label);

/// Cartan data of a simple root system. Roots are integer vectors of
/// coefficients in the simple-root basis; weights are rational vectors of
/// coefficients in the fundamental-weight basis.
class RootSystem {
 public:
  RootSystem(RootType type, int rank);

  RootType type() const noexcept { return type_; }
  int rank() const noexcept { return rank_; }

  const std::vector<Eigen::VectorXi>& positive_roots() const noexcept { return positive_; }
  std::vector<Eigen::VectorXi> simple_roots() const;
  /// Half the sum of the positive roots.
  const RationalVector& rho() const noexcept { return rho_; }

  /// Invariant form (α_i, α_j) on simple roots.
  const Eigen::MatrixXi& gram() const noexcept { return gram_; }
  int inner(const Eigen::VectorXi& a, const Eigen::VectorXi& b) const;

  /// ⟨λ, β∨⟩ for a weight λ and a root β.
  Rational pairing(const RationalVector& weight, const Eigen::VectorXi& root) const;
  /// Fundamental-weight coordinates of an element of the root lattice.
  Eigen::VectorXi to_fundamental(const Eigen::VectorXi& root) const;

 private:
  void generate_positive_roots();

  RootType type_;
  int rank_;
  Eigen::MatrixXi gram_;
  std::vector<Eigen::VectorXi> positive_;
  RationalVector rho_;
};

RootSystem build_root_system(RootType type, int rank);

}  // namespace reflex
