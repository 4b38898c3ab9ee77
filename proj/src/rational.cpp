#include "dofregion/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace dofregion {

namespace {

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Base 10 regardless of leading zeros (the string constructor reads "0..." as octal).
Integer decimal(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return digits.empty() ? Integer(0) : Integer(std::string(digits));
}

[[noreturn]] void malformed(std::string_view text) {
  throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  text = trim(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) malformed(original);

  Rational value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (num.empty() || den.empty() || !all_digits(num) || !all_digits(den)) malformed(original);
    const Integer d = decimal(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(original) + "'");
    value = Rational(decimal(num), d);
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if ((whole.empty() && frac.empty()) || !all_digits(whole) || !all_digits(frac)) {
      malformed(original);
    }
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const Integer w = decimal(whole);
    const Integer f = decimal(frac);
    value = Rational(w * scale + f, scale);
  } else {
    if (!all_digits(text)) malformed(original);
    value = Rational(decimal(text));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) { return value.str(); }

std::string to_string(const VectorXr& values) {
  std::string out = "(";
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(values(i));
  }
  return out + ")";
}

VectorXr make_vector(std::initializer_list<Rational> values) {
  VectorXr v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (const auto& x : values) v(i++) = x;
  return v;
}

VectorXr make_vector(const std::vector<Rational>& values) {
  VectorXr v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) v(static_cast<Eigen::Index>(i)) = values[i];
  return v;
}

bool lex_less(const VectorXr& lhs, const VectorXr& rhs) {
  const Eigen::Index n = std::min(lhs.size(), rhs.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (lhs(i) < rhs(i)) return true;
    if (rhs(i) < lhs(i)) return false;
  }
  return lhs.size() < rhs.size();
}

bool equal(const VectorXr& lhs, const VectorXr& rhs) {
  if (lhs.size() != rhs.size()) return false;
  for (Eigen::Index i = 0; i < lhs.size(); ++i) {
    if (lhs(i) != rhs(i)) return false;
  }
  return true;
}

Rational positive_part(const Rational& value) { return value > 0 ? value : Rational(0); }

}  // namespace dofregion
