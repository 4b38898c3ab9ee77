#include "dofregion/double_description.hpp"

#include <boost/dynamic_bitset.hpp>

#include "dofregion/linalg.hpp"

namespace dofregion {

namespace {

struct Ray {
  VectorXr direction;
  boost::dynamic_bitset<> zeros;  // processed constraints tight at this ray
};

Rational dot(const VectorXr& row, const VectorXr& v) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (row(i) != 0 && v(i) != 0) s += row(i) * v(i);
  }
  return s;
}

// Inserts constraint `index` when some lineality vector crosses it: that
// vector becomes a ray and the rest of the generators are projected onto
// the constraint hyperplane along it.
void absorb_line(std::vector<VectorXr>& lines, std::vector<Ray>& rays, std::size_t line_index,
                 const VectorXr& row, std::size_t index, std::size_t constraint_count) {
  VectorXr pivot = lines[line_index];
  Rational pivot_value = dot(row, pivot);
  if (pivot_value > 0) {
    pivot = -pivot;
    pivot_value = -pivot_value;
  }
  lines.erase(lines.begin() + static_cast<std::ptrdiff_t>(line_index));
  for (auto& line : lines) {
    const Rational value = dot(row, line);
    if (value != 0) line = linalg::primitive_integer(VectorXr(line - (value / pivot_value) * pivot));
  }
  for (auto& ray : rays) {
    const Rational value = dot(row, ray.direction);
    if (value != 0) {
      ray.direction =
          linalg::primitive_integer(VectorXr(ray.direction - (value / pivot_value) * pivot));
    }
    ray.zeros.set(index);
  }
  Ray created{linalg::primitive_integer(pivot), boost::dynamic_bitset<>(constraint_count)};
  for (std::size_t j = 0; j < index; ++j) created.zeros.set(j);
  rays.push_back(std::move(created));
}

void split_rays(std::vector<Ray>& rays, const VectorXr& row, std::size_t index,
                std::size_t ambient, std::size_t line_count) {
  std::vector<Rational> values;
  values.reserve(rays.size());
  std::vector<std::size_t> positive, negative;
  for (std::size_t r = 0; r < rays.size(); ++r) {
    values.push_back(dot(row, rays[r].direction));
    if (values.back() > 0) positive.push_back(r);
    if (values.back() < 0) negative.push_back(r);
  }
  if (positive.empty()) {
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (values[r] == 0) rays[r].zeros.set(index);
    }
    return;
  }

  // A 2-face of the current cone modulo lineality needs at least
  // ambient - lines - 2 tight constraints.
  const std::size_t needed = ambient >= line_count + 2 ? ambient - line_count - 2 : 0;

  std::vector<Ray> created;
  for (std::size_t p : positive) {
    for (std::size_t n : negative) {
      boost::dynamic_bitset<> common = rays[p].zeros & rays[n].zeros;
      if (common.count() < needed) continue;
      bool adjacent = true;
      for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
        if (t == p || t == n) continue;
        if (common.is_subset_of(rays[t].zeros)) adjacent = false;
      }
      if (!adjacent) continue;
      VectorXr direction = values[p] * rays[n].direction - values[n] * rays[p].direction;
      common.set(index);
      created.push_back({linalg::primitive_integer(direction), std::move(common)});
    }
  }

  std::vector<Ray> kept;
  kept.reserve(rays.size() - positive.size() + created.size());
  for (std::size_t r = 0; r < rays.size(); ++r) {
    if (values[r] > 0) continue;
    if (values[r] == 0) rays[r].zeros.set(index);
    kept.push_back(std::move(rays[r]));
  }
  for (auto& ray : created) kept.push_back(std::move(ray));
  rays = std::move(kept);
}

}  // namespace

ConeGenerators cone_generators(const MatrixXr& constraints) {
  const auto ambient = static_cast<std::size_t>(constraints.cols());
  const auto count = static_cast<std::size_t>(constraints.rows());

  std::vector<VectorXr> lines;
  for (std::size_t i = 0; i < ambient; ++i) {
    lines.push_back(VectorXr::Unit(static_cast<Eigen::Index>(ambient), static_cast<Eigen::Index>(i)));
  }
  std::vector<Ray> rays;

  for (std::size_t index = 0; index < count; ++index) {
    const VectorXr row =
        linalg::primitive_integer(VectorXr(constraints.row(static_cast<Eigen::Index>(index)).transpose()));
    std::size_t crossing = lines.size();
    for (std::size_t l = 0; l < lines.size(); ++l) {
      if (dot(row, lines[l]) != 0) {
        crossing = l;
        break;
      }
    }
    if (crossing < lines.size()) {
      absorb_line(lines, rays, crossing, row, index, count);
    } else {
      split_rays(rays, row, index, ambient, lines.size());
    }
  }

  ConeGenerators out;
  out.lines = std::move(lines);
  out.rays.reserve(rays.size());
  for (auto& ray : rays) out.rays.push_back(std::move(ray.direction));
  return out;
}

PolyhedronGenerators polyhedron_generators(const MatrixXr& a, const VectorXr& b) {
  const Eigen::Index n = a.cols();
  // Homogenize: (x, t) with a x - b t <= 0 and -t <= 0; t > 0 rays are points.
  MatrixXr cone(a.rows() + 1, n + 1);
  cone.setZero();
  cone(0, n) = -1;
  cone.bottomLeftCorner(a.rows(), n) = a;
  cone.bottomRightCorner(a.rows(), 1) = -b;

  const ConeGenerators gens = cone_generators(cone);
  PolyhedronGenerators out;
  for (const auto& ray : gens.rays) {
    const Rational t = ray(n);
    if (t > 0) {
      out.points.emplace_back(ray.head(n) / t);
    } else {
      out.rays.emplace_back(ray.head(n));
    }
  }
  for (const auto& line : gens.lines) out.lines.emplace_back(line.head(n));
  return out;
}

}  // namespace dofregion
