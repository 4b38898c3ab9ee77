#include <algorithm>

#include "dofregion/errors.hpp"
#include "dofregion/regions.hpp"

namespace dofregion {

namespace {

void check_sorted(const VectorXr& alpha) {
  for (Eigen::Index i = 0; i + 1 < alpha.size(); ++i) {
    if (alpha(i) < alpha(i + 1)) {
      throw UnsortedAlpha("alpha_" + std::to_string(i + 1) + " = " + to_string(alpha(i)) + " < alpha_" +
                          std::to_string(i + 2) + " = " + to_string(alpha(i + 1)));
    }
  }
}

void check_unit_interval(const Rational& x, const std::string& name) {
  if (x < 0 || x > 1) throw ParameterOutOfRange(name + " = " + to_string(x) + " is outside [0, 1]");
}

void check_size(const VectorXr& v, Eigen::Index expected, const std::string& name) {
  if (v.size() != expected) {
    throw DimensionMismatch(name + " has " + std::to_string(v.size()) + " entries, expected " +
                            std::to_string(expected));
  }
}

}  // namespace

DofTuple rs_tuple(const VectorXr& alpha, const RsParameters& params) {
  check_sorted(alpha);
  check_size(params.lambda, alpha.size(), "lambda");
  check_unit_interval(params.a, "a");
  Rational total = 0;
  for (Eigen::Index i = 0; i < alpha.size(); ++i) {
    check_unit_interval(alpha(i), "alpha_" + std::to_string(i + 1));
    if (params.lambda(i) < 0) throw ParameterOutOfRange("lambda has a negative entry");
    total += params.lambda(i);
  }
  if (total != 1) throw ParameterOutOfRange("lambda sums to " + to_string(total) + ", not 1");

  DofTuple d(alpha.size());
  for (Eigen::Index i = 0; i < alpha.size(); ++i) {
    d(i) = std::min(params.a, alpha(i)) + (1 - params.a) * params.lambda(i);
  }
  return d;
}

DofTuple rs_star_tuple(const VectorXr& alpha, const RsStarParameters& params) {
  const Eigen::Index users = alpha.size();
  check_size(params.a, users, "power vector");
  check_size(params.common, users, "common split");
  Rational budget = 0;
  for (Eigen::Index i = 0; i < users; ++i) {
    check_unit_interval(alpha(i), "alpha_" + std::to_string(i + 1));
    check_unit_interval(params.a(i), "a_" + std::to_string(i + 1));
    if (params.common(i) < 0) throw ParameterOutOfRange("common split has a negative entry");
    budget += params.common(i);
  }
  const Rational largest = params.a.maxCoeff();
  if (budget > 1 - largest) {
    throw CommonBudgetExceeded("common DoF " + to_string(budget) + " exceeds 1 - max a = " +
                               to_string(Rational(1 - largest)));
  }

  DofTuple d(users);
  for (Eigen::Index i = 0; i < users; ++i) {
    Rational strongest_other = 0;
    for (Eigen::Index j = 0; j < users; ++j) {
      if (j != i) strongest_other = std::max(strongest_other, params.a(j));
    }
    d(i) = positive_part(params.a(i) - positive_part(strongest_other - alpha(i))) + params.common(i);
  }
  return d;
}

std::vector<std::string> rate_splitting_variables(int users) {
  std::vector<std::string> names;
  for (int i = 1; i <= users; ++i) names.push_back("d" + std::to_string(i));
  for (int i = 1; i <= users; ++i) names.push_back("dc" + std::to_string(i));
  names.emplace_back("a");
  return names;
}

LinearSystem rate_splitting_system(const VectorXr& alpha) {
  const auto users = static_cast<int>(alpha.size());
  LinearSystem system(rate_splitting_variables(users));
  std::vector<LinearSystem::Term> budget;
  for (int i = 1; i <= users; ++i) {
    const std::string d = "d" + std::to_string(i);
    const std::string c = "dc" + std::to_string(i);
    system.add({{c, 1}, {d, -1}}, 0);
    system.add({{c, -1}}, 0);
    system.add({{d, 1}, {c, -1}}, alpha(i - 1));
    system.add({{d, 1}, {c, -1}, {"a", -1}}, 0);
    budget.emplace_back(c, 1);
  }
  budget.emplace_back("a", 1);
  system.add(budget, 1);
  for (auto& term : budget) term.second = -1;
  system.add(budget, -1);
  system.add({{"a", -1}}, 0);
  system.add({{"a", 1}}, 1);
  return system;
}

HPolytope rs_region_via_fm(const VectorXr& alpha, int max_users) {
  if (alpha.size() > max_users) {
    throw ParameterOutOfRange(std::to_string(alpha.size()) + " users exceed the cap of " +
                              std::to_string(max_users));
  }
  check_sorted(alpha);
  for (Eigen::Index i = 0; i < alpha.size(); ++i) check_unit_interval(alpha(i), "alpha_" + std::to_string(i + 1));

  const auto users = static_cast<int>(alpha.size());
  std::vector<std::string> auxiliaries{"a"};
  for (int i = 1; i <= users; ++i) auxiliaries.push_back("dc" + std::to_string(i));
  const LinearSystem projected = fm_eliminate(rate_splitting_system(alpha), auxiliaries);
  return remove_redundant(projected.feasible_set());
}

}  // namespace dofregion
