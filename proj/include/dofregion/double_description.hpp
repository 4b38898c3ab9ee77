#ifndef DOFREGION_DOUBLE_DESCRIPTION_HPP
#define DOFREGION_DOUBLE_DESCRIPTION_HPP

#include <vector>

#include "dofregion/rational.hpp"

namespace dofregion {

/// Minimal generators of a polyhedral cone: extreme rays modulo a lineality basis.
struct ConeGenerators {
  std::vector<VectorXr> rays;
  std::vector<VectorXr> lines;
};

/**
 * Generators of the cone { x : constraints * x <= 0 } by the double
 * description method over exact rationals.
 *
 * Constraints are inserted one row at a time. The lineality space is
 * tracked explicitly, so neither pointedness nor full dimension is
 * assumed. Adjacency of a ray pair is the combinatorial test on zero sets
 * preceded by the cardinality bound. Every ray and line is scaled to a
 * primitive integer vector to keep coefficient growth in check.
 */
ConeGenerators cone_generators(const MatrixXr& constraints);

/**
 * Minkowski-Weyl generators of { x : a x <= b }: points (vertices when the
 * set is pointed), recession rays, and a lineality basis. `points` is
 * empty exactly when the set is empty.
 */
struct PolyhedronGenerators {
  std::vector<VectorXr> points;
  std::vector<VectorXr> rays;
  std::vector<VectorXr> lines;

  bool empty() const { return points.empty(); }
  bool bounded() const { return rays.empty() && lines.empty(); }
};

PolyhedronGenerators polyhedron_generators(const MatrixXr& a, const VectorXr& b);

}  // namespace dofregion

#endif  // DOFREGION_DOUBLE_DESCRIPTION_HPP
