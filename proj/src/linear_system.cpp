#include "dofregion/linear_system.hpp"

#include <algorithm>

#include "dofregion/errors.hpp"

namespace dofregion {

LinearSystem::LinearSystem(std::vector<std::string> variables,
                           std::vector<LinearInequality> inequalities)
    : variables_(std::move(variables)) {
  for (auto& inequality : inequalities) add(std::move(inequality));
}

Eigen::Index LinearSystem::index_of(std::string_view variable) const {
  const auto it = std::find(variables_.begin(), variables_.end(), variable);
  if (it == variables_.end()) throw UnknownVariable("unknown variable '" + std::string(variable) + "'");
  return static_cast<Eigen::Index>(it - variables_.begin());
}

void LinearSystem::add(LinearInequality inequality) {
  if (inequality.dimension() != dimension()) {
    throw DimensionMismatch("inequality has " + std::to_string(inequality.dimension()) +
                            " coefficients for " + std::to_string(dimension()) + " variables");
  }
  inequalities_.push_back(std::move(inequality));
}

void LinearSystem::add(const std::vector<Term>& terms, const Rational& bound) {
  VectorXr coefficients = VectorXr::Zero(dimension());
  for (const auto& [name, value] : terms) coefficients(index_of(name)) += value;
  add({coefficients, bound});
}

HPolytope LinearSystem::feasible_set() const { return HPolytope(dimension(), inequalities_); }

std::string LinearSystem::format(const LinearInequality& inequality) const {
  std::string out;
  for (Eigen::Index i = 0; i < inequality.dimension(); ++i) {
    const Rational& c = inequality.coefficients(i);
    if (c == 0) continue;
    const Rational magnitude = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (magnitude != 1) out += to_string(magnitude) + " ";
    out += variables_[static_cast<std::size_t>(i)];
  }
  if (out.empty()) out = "0";
  return out + " <= " + to_string(inequality.bound);
}

LinearSystem fm_eliminate(const LinearSystem& system, std::string_view variable) {
  const Eigen::Index column = system.index_of(variable);
  const Eigen::Index n = system.dimension();

  const auto drop_column = [&](const VectorXr& v) {
    VectorXr out(n - 1);
    out << v.head(column), v.tail(n - column - 1);
    return out;
  };

  std::vector<LinearInequality> negative, positive, projected;
  for (const auto& row : system.inequalities()) {
    const Rational& c = row.coefficients(column);
    if (c < 0) {
      negative.push_back({row.coefficients / -c, row.bound / -c});
    } else if (c > 0) {
      positive.push_back({row.coefficients / c, row.bound / c});
    } else {
      projected.push_back({drop_column(row.coefficients), row.bound});
    }
  }
  for (const auto& lower : negative) {
    for (const auto& upper : positive) {
      projected.push_back({drop_column(lower.coefficients + upper.coefficients), lower.bound + upper.bound});
    }
  }

  std::vector<LinearInequality> kept;
  for (auto& row : projected) {
    const bool all_zero = std::all_of(row.coefficients.begin(), row.coefficients.end(),
                                      [](const Rational& c) { return c == 0; });
    if (all_zero) {
      if (row.bound < 0) {
        throw InfeasibleProjection("eliminating '" + std::string(variable) + "' yields 0 <= " +
                                   to_string(row.bound));
      }
      continue;
    }
    kept.push_back(canonical(row));
  }

  std::vector<std::string> names = system.variables();
  names.erase(names.begin() + column);

  if (names.empty()) return LinearSystem(std::move(names));
  try {
    kept = irredundant_inequalities(n - 1, kept);
  } catch (const EmptyPolytope&) {
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  }
  return LinearSystem(std::move(names), std::move(kept));
}

LinearSystem fm_eliminate(const LinearSystem& system, const std::vector<std::string>& variables) {
  LinearSystem current = system;
  for (const auto& v : variables) current = fm_eliminate(current, v);
  return current;
}

}  // namespace dofregion
