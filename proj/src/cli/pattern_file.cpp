#include "dofregion/cli/pattern_file.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "dofregion/errors.hpp"

namespace dofregion::cli {

namespace {

std::string located(const std::string& message, int line, int column) {
  if (line <= 0) return message;
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
}

[[noreturn]] void fail_at(const YAML::Node& node, const std::string& message) {
  const YAML::Mark mark = node.Mark();
  if (mark.is_null()) throw ParseError(message);
  throw ParseError(message, mark.line + 1, mark.column + 1);
}

int read_count(const YAML::Node& root, const char* key) {
  const YAML::Node node = root[key];
  if (!node) fail_at(root, std::string("missing field '") + key + "'");
  if (!node.IsScalar()) fail_at(node, std::string("field '") + key + "' must be an integer");
  int value = 0;
  try {
    std::size_t used = 0;
    value = std::stoi(node.Scalar(), &used);
    if (used != node.Scalar().size()) throw std::invalid_argument("trailing text");
  } catch (const std::exception&) {
    fail_at(node, std::string("field '") + key + "' must be an integer, got '" + node.Scalar() + "'");
  }
  if (value < 1) fail_at(node, std::string("field '") + key + "' must be positive");
  return value;
}

}  // namespace

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(located(message, line, column)), line_(line), column_(column) {}

CsitPattern parse_pattern(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::ParserException& e) {
    throw ParseError(e.msg, e.mark.line + 1, e.mark.column + 1);
  }
  if (!root.IsMap()) {
    if (root.IsNull()) throw ParseError("pattern file is empty", 1, 1);
    fail_at(root, "pattern file must be a mapping with fields K, M, alpha");
  }

  const int users = read_count(root, "K");
  const int subchannels = read_count(root, "M");
  const YAML::Node alpha = root["alpha"];
  if (!alpha) fail_at(root, "missing field 'alpha'");
  if (!alpha.IsSequence()) fail_at(alpha, "field 'alpha' must be a list of rows");
  if (static_cast<int>(alpha.size()) != users) {
    fail_at(alpha, "alpha has " + std::to_string(alpha.size()) + " rows, K = " + std::to_string(users));
  }

  MatrixXr entries(users, subchannels);
  for (int k = 0; k < users; ++k) {
    const YAML::Node row = alpha[static_cast<std::size_t>(k)];
    if (!row.IsSequence()) fail_at(row, "row " + std::to_string(k + 1) + " must be a list");
    if (static_cast<int>(row.size()) != subchannels) {
      fail_at(row, "row " + std::to_string(k + 1) + " has " + std::to_string(row.size()) + " entries, M = " +
                       std::to_string(subchannels));
    }
    for (int m = 0; m < subchannels; ++m) {
      const YAML::Node cell = row[static_cast<std::size_t>(m)];
      if (!cell.IsScalar()) fail_at(cell, "entry must be a fraction or decimal");
      Rational value;
      try {
        value = parse_rational(cell.Scalar());
      } catch (const std::invalid_argument& e) {
        fail_at(cell, e.what());
      }
      if (value < 0 || value > 1) fail_at(cell, "entry " + cell.Scalar() + " is outside [0, 1]");
      entries(k, m) = value;
    }
  }
  try {
    return CsitPattern(std::move(entries));
  } catch (const DofRegionError& e) {
    fail_at(root, e.what());
  }
}

CsitPattern load_pattern(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open pattern file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_pattern(buffer.str());
}

std::string pattern_digest(const CsitPattern& pattern) {
  std::string text = std::to_string(pattern.users()) + ";" + std::to_string(pattern.subchannels()) + ";";
  for (int k = 0; k < pattern.users(); ++k) {
    for (int m = 0; m < pattern.subchannels(); ++m) text += to_string(pattern(k, m)) + ",";
  }
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << hash;
  return out.str();
}

std::vector<Rational> parse_rational_list(const std::vector<std::string>& items) {
  std::vector<Rational> out;
  for (const auto& item : items) {
    std::string text = item;
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream tokens(text);
    std::string token;
    while (tokens >> token) {
      try {
        out.push_back(parse_rational(token));
      } catch (const std::invalid_argument& e) {
        throw ParseError("'" + token + "': " + e.what());
      }
    }
  }
  return out;
}

std::vector<int> parse_user_list(const std::string& text) {
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream tokens(spaced);
  std::vector<int> out;
  std::string token;
  while (tokens >> token) {
    std::size_t used = 0;
    int label = 0;
    try {
      label = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw ParseError("user label '" + token + "' is not an integer");
    out.push_back(label - 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace dofregion::cli
