#ifndef DOFREGION_RATIONAL_HPP
#define DOFREGION_RATIONAL_HPP

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

namespace dofregion {

// Expression templates are disabled so that `auto` and Eigen coefficient
// access always see plain values.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VectorXr = VectorX<Rational>;
using MatrixXr = MatrixX<Rational>;

/// Parses "p/q", an integer, or a plain decimal such as "0.625" or "-.5"
/// into an exact fraction. Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& value);

/// "(a, b, c)" with every entry rendered by to_string.
std::string to_string(const VectorXr& values);

VectorXr make_vector(std::initializer_list<Rational> values);
VectorXr make_vector(const std::vector<Rational>& values);

/// Strict lexicographic order on equal-length vectors.
bool lex_less(const VectorXr& lhs, const VectorXr& rhs);

/// Exact equality of two vectors (size and every entry).
bool equal(const VectorXr& lhs, const VectorXr& rhs);

Rational positive_part(const Rational& value);

}  // namespace dofregion

#endif  // DOFREGION_RATIONAL_HPP
