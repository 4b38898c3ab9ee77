#ifndef DOFREGION_CSIT_HPP
#define DOFREGION_CSIT_HPP

#include <optional>
#include <vector>

#include "dofregion/rational.hpp"

namespace dofregion {

/**
 * K x M matrix of CSIT quality exponents: entry (k, m) is the quality of
 * user k's channel on subchannel m, in [0, 1]. Users are rows and
 * subchannels are columns. Indices are zero-based throughout the library.
 */
class CsitPattern {
 public:
  /// Throws ParameterOutOfRange unless K >= 2, M >= 1 and all entries lie in [0, 1].
  explicit CsitPattern(MatrixXr entries);

  int users() const { return static_cast<int>(entries_.rows()); }
  int subchannels() const { return static_cast<int>(entries_.cols()); }
  const MatrixXr& entries() const { return entries_; }
  const Rational& operator()(int user, int subchannel) const { return entries_(user, subchannel); }

  /// Column m: the CSIT state of subchannel m.
  VectorXr state(int subchannel) const;
  /// Row k across all subchannels.
  VectorXr user_row(int user) const;

  /// Same pattern with rows reordered: row i of the result is row order[i] here.
  CsitPattern permuted(const std::vector<int>& order) const;

 private:
  MatrixXr entries_;
};

/// Builds a pattern from rows of rationals.
CsitPattern make_pattern(const std::vector<std::vector<Rational>>& rows);

/// Per-user mean CSIT quality over subchannels.
struct AverageState {
  VectorXr values;
};

AverageState average_state(const CsitPattern& pattern);

/**
 * Rows stably sorted by nonincreasing average quality. `order[i]` is the
 * original index of sorted row i.
 */
struct UserOrdering {
  CsitPattern pattern;
  std::vector<int> order;
};

UserOrdering normalize_user_order(const CsitPattern& pattern);

/// Stable order of user indices by nonincreasing value.
std::vector<int> descending_order(const VectorXr& values);

/// Some row permutation makes every row dominate the next one entrywise.
bool is_totally_ordered(const CsitPattern& pattern);

/// alpha(k, l) > alpha(j, l) and alpha(k, q) < alpha(j, q).
struct OrderViolationWitness {
  int k = 0;
  int j = 0;
  int l = 0;
  int q = 0;

  friend bool operator==(const OrderViolationWitness&, const OrderViolationWitness&) = default;
};

/// First witness in lexicographic (k, j, l, q) order, none iff totally ordered.
std::optional<OrderViolationWitness> order_violation_witness(const CsitPattern& pattern);

/**
 * Average state written as a convex combination of PN states.
 *
 * PN state p_l is perfect CSIT for the first l users in sorted order and
 * none for the rest. Weight w_l = abar_l - abar_{l+1} with abar_0 = 1 and
 * abar_{K+1} = 0. With M' the lcm of the weight denominators, state p_l is
 * replicated w_l * M' times.
 */
struct PnDecomposition {
  std::vector<int> order;   // sorted position -> original user index
  VectorXr sorted_average;  // abar in sorted order
  VectorXr weights;         // w_0 .. w_K
  int replication = 1;      // M'
  std::vector<int> counts;  // copies of p_l, sums to M'

  /// PN state p_l in sorted user order.
  VectorXr state(int level) const;

  /// The K x M' PN pattern, rows in the original user order.
  CsitPattern pattern() const;
};

PnDecomposition pn_decompose(const CsitPattern& pattern);

}  // namespace dofregion

#endif  // DOFREGION_CSIT_HPP
