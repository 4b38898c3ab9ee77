#include "dofregion/csit.hpp"

#include <algorithm>
#include <numeric>

#include <boost/multiprecision/integer.hpp>

#include "dofregion/errors.hpp"

namespace dofregion {

namespace {

// Largest PN replication we are willing to materialize as a pattern.
constexpr int kMaxReplication = 1 << 20;

bool dominates(const VectorXr& upper, const VectorXr& lower) {
  for (Eigen::Index m = 0; m < upper.size(); ++m) {
    if (upper(m) < lower(m)) return false;
  }
  return true;
}

}  // namespace

CsitPattern::CsitPattern(MatrixXr entries) : entries_(std::move(entries)) {
  if (entries_.rows() < 2) throw ParameterOutOfRange("a CSIT pattern needs at least two users");
  if (entries_.cols() < 1) throw ParameterOutOfRange("a CSIT pattern needs at least one subchannel");
  for (Eigen::Index k = 0; k < entries_.rows(); ++k) {
    for (Eigen::Index m = 0; m < entries_.cols(); ++m) {
      if (entries_(k, m) < 0 || entries_(k, m) > 1) {
        throw ParameterOutOfRange("CSIT entry (" + std::to_string(k + 1) + ", " + std::to_string(m + 1) +
                                  ") = " + to_string(entries_(k, m)) + " is outside [0, 1]");
      }
    }
  }
}

VectorXr CsitPattern::state(int subchannel) const {
  if (subchannel < 0 || subchannel >= subchannels()) {
    throw IndexOutOfRange("subchannel " + std::to_string(subchannel + 1) + " is out of range");
  }
  return entries_.col(subchannel);
}

VectorXr CsitPattern::user_row(int user) const {
  if (user < 0 || user >= users()) throw IndexOutOfRange("user " + std::to_string(user + 1) + " is out of range");
  return entries_.row(user).transpose();
}

CsitPattern CsitPattern::permuted(const std::vector<int>& order) const {
  MatrixXr rows(entries_.rows(), entries_.cols());
  for (std::size_t i = 0; i < order.size(); ++i) rows.row(static_cast<Eigen::Index>(i)) = entries_.row(order[i]);
  return CsitPattern(std::move(rows));
}

CsitPattern make_pattern(const std::vector<std::vector<Rational>>& rows) {
  const auto k = static_cast<Eigen::Index>(rows.size());
  const auto m = rows.empty() ? Eigen::Index(0) : static_cast<Eigen::Index>(rows.front().size());
  MatrixXr entries(k, m);
  for (Eigen::Index i = 0; i < k; ++i) {
    if (static_cast<Eigen::Index>(rows[static_cast<std::size_t>(i)].size()) != m) {
      throw DimensionMismatch("pattern rows have different lengths");
    }
    for (Eigen::Index j = 0; j < m; ++j) entries(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return CsitPattern(std::move(entries));
}

AverageState average_state(const CsitPattern& pattern) {
  VectorXr means(pattern.users());
  const Rational m = pattern.subchannels();
  for (int k = 0; k < pattern.users(); ++k) {
    Rational sum = 0;
    for (int s = 0; s < pattern.subchannels(); ++s) sum += pattern(k, s);
    means(k) = sum / m;
  }
  return {means};
}

std::vector<int> descending_order(const VectorXr& values) {
  std::vector<int> order(static_cast<std::size_t>(values.size()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return values(a) > values(b); });
  return order;
}

UserOrdering normalize_user_order(const CsitPattern& pattern) {
  std::vector<int> order = descending_order(average_state(pattern).values);
  return {pattern.permuted(order), std::move(order)};
}

bool is_totally_ordered(const CsitPattern& pattern) {
  // Entrywise dominance implies average order, and rows with equal
  // averages are comparable only when identical. Checking consecutive rows
  // of the stable average sort is therefore exact.
  const CsitPattern sorted = normalize_user_order(pattern).pattern;
  for (int k = 0; k + 1 < sorted.users(); ++k) {
    if (!dominates(sorted.user_row(k), sorted.user_row(k + 1))) return false;
  }
  return true;
}

std::optional<OrderViolationWitness> order_violation_witness(const CsitPattern& pattern) {
  const int users = pattern.users();
  const int subchannels = pattern.subchannels();
  for (int k = 0; k < users; ++k) {
    for (int j = 0; j < users; ++j) {
      if (j == k) continue;
      for (int l = 0; l < subchannels; ++l) {
        if (!(pattern(k, l) > pattern(j, l))) continue;
        for (int q = 0; q < subchannels; ++q) {
          if (pattern(k, q) < pattern(j, q)) return OrderViolationWitness{k, j, l, q};
        }
      }
    }
  }
  return std::nullopt;
}

VectorXr PnDecomposition::state(int level) const {
  const auto users = sorted_average.size();
  VectorXr p = VectorXr::Zero(users);
  for (int i = 0; i < level; ++i) p(i) = 1;
  return p;
}

CsitPattern PnDecomposition::pattern() const {
  const auto users = sorted_average.size();
  MatrixXr entries = MatrixXr::Zero(users, replication);
  int column = 0;
  for (std::size_t level = 0; level < counts.size(); ++level) {
    const VectorXr p = state(static_cast<int>(level));
    for (int copy = 0; copy < counts[level]; ++copy, ++column) {
      for (Eigen::Index sorted_user = 0; sorted_user < users; ++sorted_user) {
        entries(order[static_cast<std::size_t>(sorted_user)], column) = p(sorted_user);
      }
    }
  }
  return CsitPattern(std::move(entries));
}

PnDecomposition pn_decompose(const CsitPattern& pattern) {
  PnDecomposition out;
  const VectorXr average = average_state(pattern).values;
  out.order = descending_order(average);
  const int users = pattern.users();
  out.sorted_average.resize(users);
  for (int i = 0; i < users; ++i) out.sorted_average(i) = average(out.order[static_cast<std::size_t>(i)]);

  out.weights.resize(users + 1);
  Integer lcm = 1;
  for (int level = 0; level <= users; ++level) {
    const Rational upper = level == 0 ? Rational(1) : out.sorted_average(level - 1);
    const Rational lower = level == users ? Rational(0) : out.sorted_average(level);
    out.weights(level) = upper - lower;
    lcm = boost::multiprecision::lcm(lcm, Integer(denominator(out.weights(level))));
  }
  if (lcm > kMaxReplication) {
    throw ParameterOutOfRange("PN replication " + lcm.str() + " exceeds " + std::to_string(kMaxReplication));
  }
  out.replication = lcm.convert_to<int>();
  for (int level = 0; level <= users; ++level) {
    const Rational copies = out.weights(level) * out.replication;
    out.counts.push_back(numerator(copies).convert_to<int>());
  }
  return out;
}

}  // namespace dofregion
