#ifndef DOFREGION_REGIONS_HPP
#define DOFREGION_REGIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "dofregion/csit.hpp"
#include "dofregion/linear_system.hpp"
#include "dofregion/polytope.hpp"

namespace dofregion {

/// Largest user count for which subset enumeration is attempted by default.
inline constexpr int kDefaultMaxUsers = 6;

/// Per-user DoF values, all nonnegative.
using DofTuple = VectorXr;

/// Zero-based, strictly increasing user indices.
using UserSet = std::vector<int>;

// ---------------------------------------------------------------------------
// Region constructions

/// f(S) = 1 + beta(S) - max_{j in S} beta_j for nonempty S, and f({}) = 0.
Rational region_set_function(const VectorXr& beta, const UserSet& users);

/**
 * { d >= 0 : d(S) <= f(S) for every nonempty S }, redundancy-pruned.
 * Throws ParameterOutOfRange when an entry leaves [0, 1] or the user count
 * exceeds `max_users`.
 */
HPolytope canonical_region(const VectorXr& beta, int max_users = kDefaultMaxUsers);

/// The unpruned inequality list behind canonical_region, nonnegativity first.
HPolytope canonical_region_unpruned(const VectorXr& beta, int max_users = kDefaultMaxUsers);

/// Single-subchannel region of column `subchannel`. Throws IndexOutOfRange.
HPolytope subchannel_region(const CsitPattern& pattern, int subchannel);

/// Outer bound: the canonical region of the average state, in input user order.
HPolytope outer_bound_region(const CsitPattern& pattern);

/// (1/M) times the Minkowski sum of every subchannel region.
HPolytope separate_coding_region(const CsitPattern& pattern);

/// 1 + abar(S) - max_{i in S} abar_i. Throws EmptySubset.
Rational subset_sum_dof_bound(const CsitPattern& pattern, const UserSet& users);

// ---------------------------------------------------------------------------
// Rate-splitting representations

/// Single power exponent `a` and a common-message split `lambda` (a distribution).
struct RsParameters {
  Rational a;
  VectorXr lambda;
};

/// Per-user power exponents and an explicit common-DoF assignment.
struct RsStarParameters {
  VectorXr a;
  VectorXr common;
};

/// d_k = min{a, alpha_k} + (1 - a) lambda_k. Throws UnsortedAlpha, ParameterOutOfRange.
DofTuple rs_tuple(const VectorXr& alpha, const RsParameters& params);

/**
 * d_i = (a_i - (max_{j != i} a_j - alpha_i)^+)^+ + common_i.
 * Throws CommonBudgetExceeded when sum(common) > 1 - max(a).
 */
DofTuple rs_star_tuple(const VectorXr& alpha, const RsStarParameters& params);

/// Variable names of the rate-splitting system: d1..dK, then dc1..dcK, then a.
std::vector<std::string> rate_splitting_variables(int users);

/**
 * The single-power rate-splitting system over (d, d^c, a) with private DoF
 * substituted by d - d^c and the common budget imposed with equality:
 *   d^c_i - d_i <= 0,  -d^c_i <= 0,  d_i - d^c_i <= alpha_i,
 *   d_i - d^c_i - a <= 0,  sum d^c + a = 1,  0 <= a <= 1.
 */
LinearSystem rate_splitting_system(const VectorXr& alpha);

/// Projects rate_splitting_system onto d by eliminating a, then dc1..dcK.
HPolytope rs_region_via_fm(const VectorXr& alpha, int max_users = kDefaultMaxUsers);

// ---------------------------------------------------------------------------
// Separability

/**
 * Splits a point of the outer bound into one member of each subchannel
 * region whose average is exactly `d`.
 * Throws NotTotallyOrdered or TupleOutsideOuterBound.
 */
std::vector<DofTuple> separate_tuple(const CsitPattern& pattern, const DofTuple& d);

/// Largest d_k + d_j under separate coding: 1 + (1/M) sum_m min{alpha_k^m, alpha_j^m}.
Rational pair_sep_sum_cap(const CsitPattern& pattern, int k, int j);

struct PairSumCaps {
  Rational separate;  // best d_k + d_j with separate coding
  Rational joint;     // 1 + min{abar_k, abar_j}
};

struct SeparabilityVerdict {
  bool separable = false;
  std::optional<OrderViolationWitness> order_witness;
  std::optional<DofTuple> dof_witness;
  std::optional<PairSumCaps> caps;
};

/**
 * Totally ordered patterns are confirmed by recomputing D_sep == D_out;
 * a mismatch throws std::logic_error. Otherwise the first order witness is
 * reported with k relabelled as the user of larger average, together with
 * the tuple d_k = 1, d_j = min{abar_k, abar_j} that separate coding misses.
 */
SeparabilityVerdict separability_verdict(const CsitPattern& pattern, int max_users = kDefaultMaxUsers);

// ---------------------------------------------------------------------------
// Polymatroid check

struct PolymatroidViolation {
  enum class Kind { Decreasing, NotSubmodular };
  Kind kind = Kind::NotSubmodular;
  UserSet s;
  UserSet t;
  /// NotSubmodular: f(S u T) + f(S n T) - 2 against f(S) + f(T) - 2.
  /// Decreasing: f(S) against f(T) for S inside T.
  Rational lhs;
  Rational rhs;
};

struct PolymatroidCheck {
  bool polymatroid = true;
  std::optional<PolymatroidViolation> violation;
};

/// Exhaustive check of f over nonempty subset pairs in lexicographic order.
PolymatroidCheck is_polymatroid(const VectorXr& beta, int max_users = kDefaultMaxUsers);

/// 1-based "{1,2}" rendering.
std::string format_user_set(const UserSet& users);

}  // namespace dofregion

#endif  // DOFREGION_REGIONS_HPP
