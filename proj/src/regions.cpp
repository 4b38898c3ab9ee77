#include "dofregion/regions.hpp"

#include <algorithm>

#include "dofregion/errors.hpp"

namespace dofregion {

namespace {

void check_beta(const VectorXr& beta, int max_users) {
  if (beta.size() < 1) throw ParameterOutOfRange("parameter vector is empty");
  if (beta.size() > max_users) {
    throw ParameterOutOfRange(std::to_string(beta.size()) + " users exceed the cap of " +
                              std::to_string(max_users));
  }
  for (Eigen::Index i = 0; i < beta.size(); ++i) {
    if (beta(i) < 0 || beta(i) > 1) {
      throw ParameterOutOfRange("parameter " + std::to_string(i + 1) + " = " + to_string(beta(i)) +
                                " is outside [0, 1]");
    }
  }
}

UserSet members(unsigned mask, int users) {
  UserSet s;
  for (int i = 0; i < users; ++i) {
    if (mask & (1u << i)) s.push_back(i);
  }
  return s;
}

}  // namespace

std::string format_user_set(const UserSet& users) {
  std::string out = "{";
  for (std::size_t i = 0; i < users.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(users[i] + 1);
  }
  return out + "}";
}

Rational region_set_function(const VectorXr& beta, const UserSet& users) {
  if (users.empty()) return 0;
  for (int i : users) {
    if (i < 0 || i >= beta.size()) throw IndexOutOfRange("user " + std::to_string(i + 1) + " is out of range");
  }
  Rational sum = 0;
  Rational largest = beta(users.front());
  for (int i : users) {
    sum += beta(i);
    largest = std::max(largest, beta(i));
  }
  return 1 + sum - largest;
}

HPolytope canonical_region_unpruned(const VectorXr& beta, int max_users) {
  check_beta(beta, max_users);
  const auto users = static_cast<int>(beta.size());
  HPolytope p(users);
  for (int i = 0; i < users; ++i) p.add({-VectorXr::Unit(users, i), Rational(0)});
  for (unsigned mask = 1; mask < (1u << users); ++mask) {
    const UserSet s = members(mask, users);
    VectorXr normal = VectorXr::Zero(users);
    for (int i : s) normal(i) = 1;
    p.add({normal, region_set_function(beta, s)});
  }
  return p;
}

HPolytope canonical_region(const VectorXr& beta, int max_users) {
  return remove_redundant(canonical_region_unpruned(beta, max_users));
}

HPolytope subchannel_region(const CsitPattern& pattern, int subchannel) {
  return canonical_region(pattern.state(subchannel));
}

HPolytope outer_bound_region(const CsitPattern& pattern) {
  const VectorXr average = average_state(pattern).values;
  const std::vector<int> order = descending_order(average);
  VectorXr sorted(average.size());
  for (std::size_t i = 0; i < order.size(); ++i) sorted(static_cast<Eigen::Index>(i)) = average(order[i]);

  // Axis i of the sorted region is user order[i].
  const HPolytope sorted_region = canonical_region(sorted);
  std::vector<LinearInequality> rows;
  for (const auto& row : sorted_region.inequalities()) {
    VectorXr normal(row.dimension());
    for (std::size_t i = 0; i < order.size(); ++i) normal(order[i]) = row.coefficients(static_cast<Eigen::Index>(i));
    rows.push_back({normal, row.bound});
  }
  std::sort(rows.begin(), rows.end());
  return HPolytope(sorted_region.dimension(), std::move(rows));
}

HPolytope separate_coding_region(const CsitPattern& pattern) {
  HPolytope sum = subchannel_region(pattern, 0);
  for (int m = 1; m < pattern.subchannels(); ++m) sum = minkowski_sum(sum, subchannel_region(pattern, m));
  return scale_polytope(sum, Rational(1, pattern.subchannels()));
}

Rational subset_sum_dof_bound(const CsitPattern& pattern, const UserSet& users) {
  if (users.empty()) throw EmptySubset();
  return region_set_function(average_state(pattern).values, users);
}

}  // namespace dofregion
