#pragma once

#include <optional>
#include <vector>

#include "reflex/scalar.hpp"

// Exact Gauss-Jordan elimination over any field Scalar. There is no pivot
// tolerance: a pivot is any entry that compares unequal to zero.
namespace reflex::linalg {

template <typename Scalar>
struct Echelon {
  MatrixX<Scalar> reduced;   // reduced row echelon form
  std::vector<Index> pivots;  // pivot column per nonzero row
};

template <typename Derived>
Echelon<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  MatrixX<Scalar> m = input;
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    m.row(row) *= inv;
    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == Scalar(0)) continue;
      const Scalar factor = m(r, col);
      m.row(r) -= factor * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Index>(rref(m).pivots.size());
}

/// Unique solution of a square system, or nullopt when singular.
template <typename DerivedA, typename DerivedB>
std::optional<VectorX<typename DerivedA::Scalar>> solve(const Eigen::MatrixBase<DerivedA>& a,
                                                        const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const Index n = a.rows();
  MatrixX<Scalar> augmented(n, n + 1);
  augmented.leftCols(n) = a;
  augmented.col(n) = b;
  auto e = rref(augmented);
  if (static_cast<Index>(e.pivots.size()) != n || e.pivots.back() != n - 1) return std::nullopt;
  return VectorX<Scalar>(e.reduced.col(n));
}

/// Basis of {x : m x = 0}, one column per free variable.
template <typename Derived>
MatrixX<typename Derived::Scalar> nullspace(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  auto e = rref(m);
  const Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> free;
  for (Index c = 0; c < cols; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);

  MatrixX<Scalar> basis = MatrixX<Scalar>::Zero(cols, static_cast<Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    const Index f = free[k];
    basis(f, static_cast<Index>(k)) = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis(e.pivots[r], static_cast<Index>(k)) = -e.reduced(static_cast<Index>(r), f);
  }
  return basis;
}

/// Dimension of the affine hull of a point set (-1 when empty).
template <typename Scalar>
Index affine_rank(const std::vector<VectorX<Scalar>>& points) {
  if (points.empty()) return -1;
  const Index d = points.front().size();
  MatrixX<Scalar> diffs(static_cast<Index>(points.size()) - 1, d);
  for (std::size_t i = 1; i < points.size(); ++i)
    diffs.row(static_cast<Index>(i) - 1) = (points[i] - points.front()).transpose();
  return diffs.rows() == 0 ? 0 : rank(diffs);
}

}  // namespace reflex::linalg
