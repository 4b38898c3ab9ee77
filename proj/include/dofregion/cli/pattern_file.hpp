#ifndef DOFREGION_CLI_PATTERN_FILE_HPP
#define DOFREGION_CLI_PATTERN_FILE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "dofregion/csit.hpp"

namespace dofregion::cli {

/// Malformed input. Line and column are 1-based; zero when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line = 0, int column = 0);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/**
 * Pattern file text (YAML; JSON is accepted as a subset):
 *
 *   K: 2
 *   M: 2
 *   alpha:
 *     - ["1", "0"]
 *     - ["0", "1"]
 *
 * Entries are fractions "p/q" or decimals, quoted or bare.
 */
CsitPattern parse_pattern(const std::string& text);
CsitPattern load_pattern(const std::string& path);

/// FNV-1a 64-bit hash of "K;M;" followed by the entries row-major, as hex.
std::string pattern_digest(const CsitPattern& pattern);

/// Comma- or whitespace-separated rationals. Throws ParseError.
std::vector<Rational> parse_rational_list(const std::vector<std::string>& items);

/// "1,2,3" as 1-based user labels, returned zero-based and sorted. Throws ParseError.
std::vector<int> parse_user_list(const std::string& text);

}  // namespace dofregion::cli

#endif  // DOFREGION_CLI_PATTERN_FILE_HPP
