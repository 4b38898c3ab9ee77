#include <algorithm>
#include <stdexcept>

#include "dofregion/errors.hpp"
#include "dofregion/regions.hpp"

namespace dofregion {

namespace {

// Private-plus-common slack at power level a:
// sum_i (d_i - min{a, alpha_i})^+ - (1 - a); a representation exists where <= 0.
Rational budget_excess(const VectorXr& alpha, const DofTuple& d, const Rational& a) {
  Rational residual = 0;
  for (Eigen::Index i = 0; i < d.size(); ++i) residual += positive_part(d(i) - std::min(a, alpha(i)));
  return residual - (1 - a);
}

// Smallest breakpoint a in [0, 1] admitting a single-power representation of
// a tuple dominating d. The slack is piecewise linear with kinks only at
// alpha_i and d_i, so checking breakpoints is exhaustive.
Rational find_power_level(const VectorXr& alpha, const DofTuple& d) {
  std::vector<Rational> breakpoints{Rational(0), Rational(1)};
  for (Eigen::Index i = 0; i < d.size(); ++i) {
    breakpoints.push_back(alpha(i));
    if (d(i) >= 0 && d(i) <= 1) breakpoints.push_back(d(i));
  }
  std::sort(breakpoints.begin(), breakpoints.end());
  for (const auto& a : breakpoints) {
    if (budget_excess(alpha, d, a) <= 0) return a;
  }
  throw std::logic_error("no power level represents a tuple of the outer bound");
}

}  // namespace

std::vector<DofTuple> separate_tuple(const CsitPattern& pattern, const DofTuple& d) {
  const int users = pattern.users();
  const int subchannels = pattern.subchannels();
  if (d.size() != users) throw DimensionMismatch("DoF tuple length differs from the user count");
  if (!is_totally_ordered(pattern)) throw NotTotallyOrdered();
  for (int k = 0; k < users; ++k) {
    if (d(k) < 0) throw TupleOutsideOuterBound("d_" + std::to_string(k + 1) + " is negative");
  }
  const HPolytope outer = outer_bound_region(pattern);
  if (const LinearInequality* violated = first_violated(outer, d)) {
    throw TupleOutsideOuterBound("tuple " + to_string(d) + " violates a facet of the outer bound with bound " +
                                 to_string(violated->bound));
  }

  // Work in sorted user order, where every column is nonincreasing.
  const UserOrdering ordering = normalize_user_order(pattern);
  const CsitPattern& sorted = ordering.pattern;
  const VectorXr average = average_state(sorted).values;
  DofTuple target(users);
  for (int i = 0; i < users; ++i) target(i) = d(ordering.order[static_cast<std::size_t>(i)]);

  // (i) power level and common split of a dominating tuple.
  const Rational a = find_power_level(average, target);
  VectorXr lambda = VectorXr::Zero(users);
  if (a < 1) {
    Rational assigned = 0;
    for (int i = 0; i < users; ++i) {
      lambda(i) = positive_part(target(i) - std::min(a, average(i))) / (1 - a);
      assigned += lambda(i);
    }
    lambda(0) += 1 - assigned;
  } else {
    lambda(0) = 1;
  }

  // (ii) bracket a between consecutive averages, with abar_0 = 1, abar_{K+1} = 0.
  const auto padded = [&](const VectorXr& column, int index) -> Rational {
    if (index == 0) return 1;
    if (index == users + 1) return 0;
    return column(index - 1);
  };
  int bracket = 1;
  while (!(padded(average, bracket - 1) >= a && a >= padded(average, bracket))) ++bracket;
  const Rational upper = padded(average, bracket - 1);
  const Rational lower = padded(average, bracket);
  const Rational t = upper == lower ? Rational(0) : (a - lower) / (upper - lower);

  // (iii) interpolate the same fraction inside every subchannel's bracket.
  std::vector<DofTuple> parts;
  DofTuple total = DofTuple::Zero(users);
  for (int m = 0; m < subchannels; ++m) {
    const VectorXr column = sorted.state(m);
    const Rational lo = padded(column, bracket);
    const Rational level = lo + t * (padded(column, bracket - 1) - lo);
    DofTuple part(users);
    for (int i = 0; i < users; ++i) part(i) = std::min(level, column(i)) + (1 - level) * lambda(i);
    total += part;
    parts.push_back(std::move(part));
  }

  // (iv) remove the surplus over M * d, earliest subchannels first.
  for (int i = 0; i < users; ++i) {
    Rational surplus = total(i) - subchannels * target(i);
    if (surplus < 0) throw std::logic_error("interpolated tuples fall short of the target");
    for (auto& part : parts) {
      if (surplus == 0) break;
      const Rational cut = std::min(surplus, part(i));
      part(i) -= cut;
      surplus -= cut;
    }
  }

  // Back to input user order, then confirm the postconditions.
  std::vector<DofTuple> out;
  DofTuple check = DofTuple::Zero(users);
  for (int m = 0; m < subchannels; ++m) {
    DofTuple part(users);
    for (int i = 0; i < users; ++i) part(ordering.order[static_cast<std::size_t>(i)]) = parts[static_cast<std::size_t>(m)](i);
    if (!contains_point(subchannel_region(pattern, m), part)) {
      throw std::logic_error("decomposed tuple leaves subchannel region " + std::to_string(m + 1));
    }
    check += part;
    out.push_back(std::move(part));
  }
  if (!equal(VectorXr(check / Rational(subchannels)), d)) {
    throw std::logic_error("decomposed tuples do not average to the input");
  }
  return out;
}

}  // namespace dofregion
