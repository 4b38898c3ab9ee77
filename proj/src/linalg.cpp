#include "dofregion/linalg.hpp"

#include <boost/multiprecision/integer.hpp>

namespace dofregion::linalg {

Eigen::Index span_rank(const std::vector<VectorXr>& vectors, Eigen::Index dimension) {
  if (vectors.empty()) return 0;
  MatrixXr m(static_cast<Eigen::Index>(vectors.size()), dimension);
  for (std::size_t i = 0; i < vectors.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  return exact_rank(m);
}

Eigen::Index affine_rank(const std::vector<VectorXr>& points, Eigen::Index dimension) {
  if (points.empty()) return -1;
  std::vector<VectorXr> differences;
  differences.reserve(points.size() - 1);
  for (std::size_t i = 1; i < points.size(); ++i) differences.emplace_back(points[i] - points[0]);
  return span_rank(differences, dimension);
}

VectorXr primitive_integer(const VectorXr& v) {
  Integer lcm_den = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) lcm_den = boost::multiprecision::lcm(lcm_den, Integer(denominator(v(i))));
  }
  Integer gcd_num = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) {
      const Integer scaled = Integer(numerator(v(i))) * (lcm_den / Integer(denominator(v(i))));
      gcd_num = boost::multiprecision::gcd(gcd_num, abs(scaled));
    }
  }
  if (gcd_num == 0) return v;
  const Rational factor(lcm_den, gcd_num);
  return v * factor;
}

}  // namespace dofregion::linalg
