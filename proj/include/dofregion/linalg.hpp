#ifndef DOFREGION_LINALG_HPP
#define DOFREGION_LINALG_HPP

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "dofregion/rational.hpp"

/**
 * Exact elimination kernels for field scalars (Rational in practice).
 *
 * Eigen's decompositions decide rank with a floating threshold, which is
 * meaningless over an exact field, so these routines pivot on the first
 * nonzero entry instead and never compare against an epsilon.
 */
namespace dofregion::linalg {

/**
 * Brings `m` to reduced row echelon form in place and returns the pivot
 * column of each nonzero row, in row order.
 */
template <typename Scalar>
std::vector<Eigen::Index> reduce_row_echelon(MatrixX<Scalar>& m) {
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index r = row; r < m.rows(); ++r) {
      if (m(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    m.row(row) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == 0) continue;
      const Scalar factor = m(r, col);
      m.row(r) -= factor * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  MatrixX<typename Derived::Scalar> work = m;
  return static_cast<Eigen::Index>(reduce_row_echelon(work).size());
}

/// Solution of the square system a x = b when a is nonsingular.
template <typename DerivedA, typename DerivedB>
std::optional<VectorX<typename DerivedA::Scalar>> solve_unique(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.size() != n) return std::nullopt;
  MatrixX<Scalar> augmented(n, n + 1);
  augmented.leftCols(n) = a;
  augmented.col(n) = b;
  const auto pivots = reduce_row_echelon(augmented);
  if (static_cast<Eigen::Index>(pivots.size()) != n || (n > 0 && pivots.back() != n - 1)) {
    return std::nullopt;
  }
  return VectorX<Scalar>(augmented.col(n));
}

/// Dimension of the linear span of the given vectors.
Eigen::Index span_rank(const std::vector<VectorXr>& vectors, Eigen::Index dimension);

/// Dimension of the affine hull of the given points, -1 when there are none.
Eigen::Index affine_rank(const std::vector<VectorXr>& points, Eigen::Index dimension);

/**
 * Positive multiple of `v` whose entries are coprime integers; the zero
 * vector is returned unchanged.
 */
VectorXr primitive_integer(const VectorXr& v);

}  // namespace dofregion::linalg

#endif  // DOFREGION_LINALG_HPP
