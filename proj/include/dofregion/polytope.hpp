#ifndef DOFREGION_POLYTOPE_HPP
#define DOFREGION_POLYTOPE_HPP

#include <vector>

#include "dofregion/rational.hpp"

namespace dofregion {

/// coefficients . x <= bound
struct LinearInequality {
  VectorXr coefficients;
  Rational bound;

  Eigen::Index dimension() const { return coefficients.size(); }
  Rational evaluate(const VectorXr& x) const;
  bool satisfied_by(const VectorXr& x) const;

  friend bool operator==(const LinearInequality& lhs, const LinearInequality& rhs);
};

/// Lexicographic on (coefficients, bound).
bool operator<(const LinearInequality& lhs, const LinearInequality& rhs);

/**
 * Rescales by a positive factor so the coefficients are coprime integers.
 * All-zero rows are returned unchanged.
 */
LinearInequality canonical(const LinearInequality& inequality);

/// Convenience constructor from a coefficient list.
LinearInequality make_inequality(std::initializer_list<Rational> coefficients, Rational bound);

/// { x : a_i . x <= b_i for every inequality }
class HPolytope {
 public:
  explicit HPolytope(Eigen::Index dimension, std::vector<LinearInequality> inequalities = {});

  Eigen::Index dimension() const { return dimension_; }
  const std::vector<LinearInequality>& inequalities() const { return inequalities_; }
  std::size_t size() const { return inequalities_.size(); }

  void add(LinearInequality inequality);

  MatrixXr matrix() const;
  VectorXr bounds() const;

  /// [lower, upper]^dimension
  static HPolytope box(Eigen::Index dimension, const Rational& lower, const Rational& upper);

 private:
  Eigen::Index dimension_;
  std::vector<LinearInequality> inequalities_;
};

struct VPolytope {
  Eigen::Index dimension = 0;
  std::vector<VectorXr> vertices;
};

/// Extreme points of `p` in lexicographic ascending order.
/// Throws EmptyPolytope or Unbounded.
VPolytope enumerate_vertices(const HPolytope& p);

/**
 * Equivalent minimal description: an inequality survives only when the
 * polytope without it reaches beyond its bound. Output is canonical
 * (coprime integer normals) and sorted. Throws EmptyPolytope.
 */
HPolytope remove_redundant(const HPolytope& p);

/**
 * Same criterion as remove_redundant for an arbitrary (possibly
 * unbounded) nonempty polyhedron given as a raw inequality list.
 * All-zero rows with a nonnegative bound are dropped; an all-zero row with
 * a negative bound, or an empty polyhedron, throws EmptyPolytope.
 */
std::vector<LinearInequality> irredundant_inequalities(Eigen::Index dimension,
                                                       std::vector<LinearInequality> inequalities);

/// Minimal H-representation of the convex hull of `points`.
HPolytope convex_hull(Eigen::Index dimension, const std::vector<VectorXr>& points);
HPolytope convex_hull(const VPolytope& v);

/// { x + y : x in p, y in q } from pairwise vertex sums and a hull.
HPolytope minkowski_sum(const HPolytope& p, const HPolytope& q);

/// c * p for c > 0: same normals, bounds multiplied by c.
HPolytope scale_polytope(const HPolytope& p, const Rational& c);

bool contains_point(const HPolytope& p, const VectorXr& x);

/// Every vertex of p satisfies every inequality of q.
bool is_subset(const HPolytope& p, const HPolytope& q);

bool polytopes_equal(const HPolytope& p, const HPolytope& q);

/// Largest value of objective . x over the vertices of p.
Rational maximize(const HPolytope& p, const VectorXr& objective);

/// First inequality of p violated by x, if any.
const LinearInequality* first_violated(const HPolytope& p, const VectorXr& x);

}  // namespace dofregion

#endif  // DOFREGION_POLYTOPE_HPP
