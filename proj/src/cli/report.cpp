#include "dofregion/cli/report.hpp"

#include <algorithm>

#include "dofregion/linalg.hpp"

namespace dofregion::cli {

namespace {

std::vector<std::string> user_variables(Eigen::Index users) {
  std::vector<std::string> names;
  for (Eigen::Index i = 1; i <= users; ++i) names.push_back("d" + std::to_string(i));
  return names;
}

// Indices of the facets tight at each vertex.
std::vector<std::vector<std::size_t>> tight_sets(const HPolytope& facets, const VPolytope& vertices) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& v : vertices.vertices) {
    std::vector<std::size_t> tight;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (facets.inequalities()[f].evaluate(v) == facets.inequalities()[f].bound) tight.push_back(f);
    }
    out.push_back(std::move(tight));
  }
  return out;
}

}  // namespace

std::string format_inequality(const LinearInequality& inequality) {
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
    out += "d" + std::to_string(i + 1);
  }
  if (out.empty()) out = "0";
  return out + " <= " + to_string(inequality.bound);
}

Json rational_array(const VectorXr& values) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < values.size(); ++i) out.push_back(to_string(values(i)));
  return out;
}

Json inequality_json(const LinearInequality& inequality) {
  Json out;
  out["coefficients"] = rational_array(inequality.coefficients);
  out["bound"] = to_string(inequality.bound);
  out["text"] = format_inequality(inequality);
  return out;
}

Json region_json(const HPolytope& facets, const VPolytope& vertices) {
  Json out;
  out["variables"] = user_variables(facets.dimension());
  out["facets"] = Json::array();
  for (const auto& row : facets.inequalities()) out["facets"].push_back(inequality_json(row));
  out["vertices"] = Json::array();
  for (const auto& v : vertices.vertices) out["vertices"].push_back(rational_array(v));
  return out;
}

Json plot_json(const HPolytope& facets, const VPolytope& vertices) {
  const auto tight = tight_sets(facets, vertices);
  const std::size_t count = vertices.vertices.size();

  Json out;
  out["dimension"] = facets.dimension();
  out["vertices"] = Json::array();
  for (const auto& v : vertices.vertices) out["vertices"].push_back(rational_array(v));

  out["facets"] = Json::array();
  for (std::size_t f = 0; f < facets.size(); ++f) {
    Json entry = inequality_json(facets.inequalities()[f]);
    entry["vertices"] = Json::array();
    for (std::size_t v = 0; v < count; ++v) {
      if (std::binary_search(tight[v].begin(), tight[v].end(), f)) entry["vertices"].push_back(v);
    }
    out["facets"].push_back(std::move(entry));
  }

  // u, v adjacent: their common tight normals have rank dim - 1 and no third
  // vertex is tight on all of them.
  out["edges"] = Json::array();
  for (std::size_t u = 0; u < count; ++u) {
    for (std::size_t v = u + 1; v < count; ++v) {
      std::vector<std::size_t> common;
      std::set_intersection(tight[u].begin(), tight[u].end(), tight[v].begin(), tight[v].end(),
                            std::back_inserter(common));
      if (common.empty()) continue;
      MatrixXr normals(static_cast<Eigen::Index>(common.size()), facets.dimension());
      for (std::size_t r = 0; r < common.size(); ++r) {
        normals.row(static_cast<Eigen::Index>(r)) = facets.inequalities()[common[r]].coefficients.transpose();
      }
      if (linalg::exact_rank(normals) != facets.dimension() - 1) continue;
      bool shared = false;
      for (std::size_t w = 0; w < count && !shared; ++w) {
        if (w == u || w == v) continue;
        shared = std::includes(tight[w].begin(), tight[w].end(), common.begin(), common.end());
      }
      if (!shared) out["edges"].push_back(Json::array({u, v}));
    }
  }
  return out;
}

void write_facets(std::ostream& out, const HPolytope& facets) {
  out << "facets (" << facets.size() << "):\n";
  for (const auto& row : facets.inequalities()) out << "  " << format_inequality(row) << "\n";
}

void write_vertices(std::ostream& out, const VPolytope& vertices) {
  out << "vertices (" << vertices.vertices.size() << "):\n";
  for (const auto& v : vertices.vertices) out << "  " << to_string(v) << "\n";
}

std::string format_labels(const std::vector<int>& zero_based) {
  std::string out;
  for (std::size_t i = 0; i < zero_based.size(); ++i) {
    if (i > 0) out += " ";
    out += std::to_string(zero_based[i] + 1);
  }
  return out;
}

}  // namespace dofregion::cli
