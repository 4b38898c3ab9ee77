#include <algorithm>
#include <stdexcept>
#include <utility>

#include "dofregion/errors.hpp"
#include "dofregion/regions.hpp"

namespace dofregion {

Rational pair_sep_sum_cap(const CsitPattern& pattern, int k, int j) {
  if (k < 0 || k >= pattern.users() || j < 0 || j >= pattern.users()) {
    throw IndexOutOfRange("user pair (" + std::to_string(k + 1) + ", " + std::to_string(j + 1) + ") is out of range");
  }
  if (k == j) throw SameUser();
  Rational sum = 0;
  for (int m = 0; m < pattern.subchannels(); ++m) sum += std::min(pattern(k, m), pattern(j, m));
  return 1 + sum / pattern.subchannels();
}

SeparabilityVerdict separability_verdict(const CsitPattern& pattern, int max_users) {
  if (pattern.users() > max_users) {
    throw ParameterOutOfRange(std::to_string(pattern.users()) + " users exceed the cap of " +
                              std::to_string(max_users));
  }
  const HPolytope separate = separate_coding_region(pattern);

  SeparabilityVerdict verdict;
  if (is_totally_ordered(pattern)) {
    if (!polytopes_equal(separate, outer_bound_region(pattern))) {
      throw std::logic_error("totally ordered pattern with D_sep != D_out");
    }
    verdict.separable = true;
    return verdict;
  }

  OrderViolationWitness witness = *order_violation_witness(pattern);
  const VectorXr average = average_state(pattern).values;
  if (average(witness.k) < average(witness.j)) {
    std::swap(witness.k, witness.j);
    std::swap(witness.l, witness.q);
  }
  const Rational weaker = std::min(average(witness.k), average(witness.j));

  DofTuple d = DofTuple::Zero(pattern.users());
  d(witness.k) = 1;
  d(witness.j) = weaker;
  if (contains_point(separate, d)) {
    throw std::logic_error("order witness tuple is reachable by separate coding");
  }

  verdict.separable = false;
  verdict.order_witness = witness;
  verdict.dof_witness = std::move(d);
  verdict.caps = PairSumCaps{pair_sep_sum_cap(pattern, witness.k, witness.j), 1 + weaker};
  return verdict;
}

}  // namespace dofregion
