#ifndef DOFREGION_LINEAR_SYSTEM_HPP
#define DOFREGION_LINEAR_SYSTEM_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dofregion/polytope.hpp"

namespace dofregion {

/// A system of linear inequalities over named variables.
class LinearSystem {
 public:
  using Term = std::pair<std::string, Rational>;

  explicit LinearSystem(std::vector<std::string> variables,
                        std::vector<LinearInequality> inequalities = {});

  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<LinearInequality>& inequalities() const { return inequalities_; }
  Eigen::Index dimension() const { return static_cast<Eigen::Index>(variables_.size()); }

  /// Throws UnknownVariable.
  Eigen::Index index_of(std::string_view variable) const;

  void add(LinearInequality inequality);
  /// sum of coefficient * variable over `terms` <= bound
  void add(const std::vector<Term>& terms, const Rational& bound);

  /// The feasible set as a polytope in declared variable order.
  HPolytope feasible_set() const;

  /// "d1 + d2 - 2 c1 <= 3/2" rendering of one row.
  std::string format(const LinearInequality& inequality) const;

 private:
  std::vector<std::string> variables_;
  std::vector<LinearInequality> inequalities_;
};

/**
 * Fourier-Motzkin elimination of one variable.
 *
 * Rows are partitioned by the sign of the variable's coefficient. Each
 * (negative, positive) pair is combined after scaling both coefficients to
 * magnitude one; zero-coefficient rows carry over. All-zero rows are then
 * dropped when their bound is nonnegative and raise InfeasibleProjection
 * otherwise. The result is pruned with irredundant_inequalities when the
 * projection is nonempty; an empty projection is returned unpruned.
 */
LinearSystem fm_eliminate(const LinearSystem& system, std::string_view variable);

/// Eliminates the listed variables left to right.
LinearSystem fm_eliminate(const LinearSystem& system, const std::vector<std::string>& variables);

}  // namespace dofregion

#endif  // DOFREGION_LINEAR_SYSTEM_HPP
