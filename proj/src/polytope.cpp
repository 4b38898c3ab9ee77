#include "dofregion/polytope.hpp"

#include <algorithm>

#include "dofregion/double_description.hpp"
#include "dofregion/errors.hpp"
#include "dofregion/linalg.hpp"

namespace dofregion {

namespace {

void require_dimension(Eigen::Index expected, Eigen::Index actual, const char* what) {
  if (expected != actual) {
    throw DimensionMismatch(std::string(what) + ": expected dimension " + std::to_string(expected) +
                            ", got " + std::to_string(actual));
  }
}

void sort_unique(std::vector<VectorXr>& points) {
  std::sort(points.begin(), points.end(), lex_less);
  points.erase(std::unique(points.begin(), points.end(), equal), points.end());
}

PolyhedronGenerators generators_of(Eigen::Index dimension,
                                   const std::vector<LinearInequality>& inequalities) {
  MatrixXr a(static_cast<Eigen::Index>(inequalities.size()), dimension);
  VectorXr b(static_cast<Eigen::Index>(inequalities.size()));
  for (std::size_t i = 0; i < inequalities.size(); ++i) {
    a.row(static_cast<Eigen::Index>(i)) = inequalities[i].coefficients.transpose();
    b(static_cast<Eigen::Index>(i)) = inequalities[i].bound;
  }
  return polyhedron_generators(a, b);
}

bool is_zero(const VectorXr& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) return false;
  }
  return true;
}

// Dimension of the face of `gens` on which `inequality` is tight, or of the
// whole polyhedron when `inequality` is null.
Eigen::Index face_dimension(const PolyhedronGenerators& gens, Eigen::Index dimension,
                            const LinearInequality* inequality) {
  std::vector<VectorXr> tight_points;
  std::vector<VectorXr> directions;
  for (const auto& p : gens.points) {
    if (!inequality || inequality->evaluate(p) == inequality->bound) tight_points.push_back(p);
  }
  if (tight_points.empty()) return -1;
  for (std::size_t i = 1; i < tight_points.size(); ++i) directions.emplace_back(tight_points[i] - tight_points[0]);
  for (const auto& r : gens.rays) {
    if (!inequality || inequality->coefficients.dot(r) == 0) directions.push_back(r);
  }
  for (const auto& l : gens.lines) directions.push_back(l);
  return linalg::span_rank(directions, dimension);
}

// Whether sup of the inequality's left side over the polyhedron exceeds its bound.
bool exceeds_bound(const PolyhedronGenerators& gens, const LinearInequality& inequality) {
  for (const auto& l : gens.lines) {
    if (inequality.coefficients.dot(l) != 0) return true;
  }
  for (const auto& r : gens.rays) {
    if (inequality.coefficients.dot(r) > 0) return true;
  }
  for (const auto& p : gens.points) {
    if (inequality.evaluate(p) > inequality.bound) return true;
  }
  return false;
}

}  // namespace

Rational LinearInequality::evaluate(const VectorXr& x) const { return coefficients.dot(x); }

bool LinearInequality::satisfied_by(const VectorXr& x) const { return evaluate(x) <= bound; }

bool operator==(const LinearInequality& lhs, const LinearInequality& rhs) {
  return lhs.bound == rhs.bound && equal(lhs.coefficients, rhs.coefficients);
}

bool operator<(const LinearInequality& lhs, const LinearInequality& rhs) {
  if (lex_less(lhs.coefficients, rhs.coefficients)) return true;
  if (lex_less(rhs.coefficients, lhs.coefficients)) return false;
  return lhs.bound < rhs.bound;
}

LinearInequality canonical(const LinearInequality& inequality) {
  const VectorXr scaled = linalg::primitive_integer(inequality.coefficients);
  for (Eigen::Index i = 0; i < scaled.size(); ++i) {
    if (inequality.coefficients(i) != 0) {
      const Rational factor = scaled(i) / inequality.coefficients(i);
      return {scaled, inequality.bound * factor};
    }
  }
  return inequality;
}

LinearInequality make_inequality(std::initializer_list<Rational> coefficients, Rational bound) {
  return {make_vector(coefficients), std::move(bound)};
}

HPolytope::HPolytope(Eigen::Index dimension, std::vector<LinearInequality> inequalities)
    : dimension_(dimension) {
  if (dimension <= 0) throw DimensionMismatch("polytope dimension must be positive");
  for (auto& inequality : inequalities) add(std::move(inequality));
}

void HPolytope::add(LinearInequality inequality) {
  require_dimension(dimension_, inequality.dimension(), "inequality");
  inequalities_.push_back(std::move(inequality));
}

MatrixXr HPolytope::matrix() const {
  MatrixXr a(static_cast<Eigen::Index>(inequalities_.size()), dimension_);
  for (std::size_t i = 0; i < inequalities_.size(); ++i) {
    a.row(static_cast<Eigen::Index>(i)) = inequalities_[i].coefficients.transpose();
  }
  return a;
}

VectorXr HPolytope::bounds() const {
  VectorXr b(static_cast<Eigen::Index>(inequalities_.size()));
  for (std::size_t i = 0; i < inequalities_.size(); ++i) b(static_cast<Eigen::Index>(i)) = inequalities_[i].bound;
  return b;
}

HPolytope HPolytope::box(Eigen::Index dimension, const Rational& lower, const Rational& upper) {
  HPolytope p(dimension);
  for (Eigen::Index i = 0; i < dimension; ++i) {
    VectorXr e = VectorXr::Unit(dimension, i);
    p.add({-e, -lower});
    p.add({e, upper});
  }
  return p;
}

VPolytope enumerate_vertices(const HPolytope& p) {
  const PolyhedronGenerators gens = polyhedron_generators(p.matrix(), p.bounds());
  if (gens.empty()) throw EmptyPolytope();
  if (!gens.bounded()) throw Unbounded();
  VPolytope v{p.dimension(), gens.points};
  sort_unique(v.vertices);
  return v;
}

std::vector<LinearInequality> irredundant_inequalities(Eigen::Index dimension,
                                                       std::vector<LinearInequality> inequalities) {
  std::vector<LinearInequality> rows;
  for (auto& inequality : inequalities) {
    require_dimension(dimension, inequality.dimension(), "inequality");
    if (is_zero(inequality.coefficients)) {
      if (inequality.bound < 0) throw EmptyPolytope("contradictory inequality 0 <= " + to_string(inequality.bound));
      continue;
    }
    rows.push_back(canonical(inequality));
  }
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  const PolyhedronGenerators gens = generators_of(dimension, rows);
  if (gens.empty()) throw EmptyPolytope();

  // Never tight on the polyhedron: removing it cannot enlarge the set.
  std::vector<LinearInequality> tight;
  for (auto& row : rows) {
    const bool touches = std::any_of(gens.points.begin(), gens.points.end(),
                                     [&](const VectorXr& x) { return row.evaluate(x) == row.bound; });
    if (touches) tight.push_back(std::move(row));
  }

  if (face_dimension(gens, dimension, nullptr) == dimension) {
    // Full dimension: irredundant rows are exactly the (distinct) facets.
    std::vector<LinearInequality> facets;
    for (auto& row : tight) {
      if (face_dimension(gens, dimension, &row) == dimension - 1) facets.push_back(std::move(row));
    }
    return facets;
  }

  // Lower-dimensional: test each row against the current remainder.
  std::vector<bool> removed(tight.size(), false);
  for (std::size_t i = 0; i < tight.size(); ++i) {
    std::vector<LinearInequality> others;
    for (std::size_t j = 0; j < tight.size(); ++j) {
      if (j != i && !removed[j]) others.push_back(tight[j]);
    }
    if (!exceeds_bound(generators_of(dimension, others), tight[i])) removed[i] = true;
  }
  std::vector<LinearInequality> kept;
  for (std::size_t i = 0; i < tight.size(); ++i) {
    if (!removed[i]) kept.push_back(std::move(tight[i]));
  }
  return kept;
}

HPolytope remove_redundant(const HPolytope& p) {
  return HPolytope(p.dimension(), irredundant_inequalities(p.dimension(), p.inequalities()));
}

HPolytope convex_hull(Eigen::Index dimension, const std::vector<VectorXr>& points) {
  if (points.empty()) throw EmptyPolytope("convex hull of no points");
  std::vector<VectorXr> unique = points;
  for (const auto& x : unique) require_dimension(dimension, x.size(), "point");
  sort_unique(unique);

  // Valid inequalities (a, beta) form the cone a . v - beta <= 0 over all v.
  MatrixXr constraints(static_cast<Eigen::Index>(unique.size()), dimension + 1);
  for (std::size_t i = 0; i < unique.size(); ++i) {
    constraints.row(static_cast<Eigen::Index>(i)).head(dimension) = unique[i].transpose();
    constraints(static_cast<Eigen::Index>(i), dimension) = -1;
  }
  const ConeGenerators gens = cone_generators(constraints);

  std::vector<LinearInequality> rows;
  for (const auto& ray : gens.rays) {
    VectorXr normal = ray.head(dimension);
    if (!is_zero(normal)) rows.push_back({normal, ray(dimension)});
  }
  for (const auto& line : gens.lines) {
    VectorXr normal = line.head(dimension);
    if (is_zero(normal)) continue;
    rows.push_back({normal, line(dimension)});
    rows.push_back({VectorXr(-normal), Rational(-line(dimension))});
  }
  return HPolytope(dimension, irredundant_inequalities(dimension, std::move(rows)));
}

HPolytope convex_hull(const VPolytope& v) { return convex_hull(v.dimension, v.vertices); }

HPolytope minkowski_sum(const HPolytope& p, const HPolytope& q) {
  require_dimension(p.dimension(), q.dimension(), "minkowski_sum");
  const VPolytope vp = enumerate_vertices(p);
  const VPolytope vq = enumerate_vertices(q);
  std::vector<VectorXr> sums;
  sums.reserve(vp.vertices.size() * vq.vertices.size());
  for (const auto& x : vp.vertices) {
    for (const auto& y : vq.vertices) sums.emplace_back(x + y);
  }
  return convex_hull(p.dimension(), sums);
}

HPolytope scale_polytope(const HPolytope& p, const Rational& c) {
  if (c <= 0) throw NonpositiveScale("scale factor " + to_string(c) + " is not positive");
  HPolytope scaled(p.dimension());
  for (const auto& inequality : p.inequalities()) scaled.add({inequality.coefficients, inequality.bound * c});
  return scaled;
}

bool contains_point(const HPolytope& p, const VectorXr& x) {
  require_dimension(p.dimension(), x.size(), "contains_point");
  return first_violated(p, x) == nullptr;
}

const LinearInequality* first_violated(const HPolytope& p, const VectorXr& x) {
  require_dimension(p.dimension(), x.size(), "first_violated");
  for (const auto& inequality : p.inequalities()) {
    if (!inequality.satisfied_by(x)) return &inequality;
  }
  return nullptr;
}

bool is_subset(const HPolytope& p, const HPolytope& q) {
  require_dimension(p.dimension(), q.dimension(), "is_subset");
  const VPolytope v = enumerate_vertices(p);
  for (const auto& x : v.vertices) {
    if (first_violated(q, x)) return false;
  }
  return true;
}

bool polytopes_equal(const HPolytope& p, const HPolytope& q) {
  require_dimension(p.dimension(), q.dimension(), "polytopes_equal");
  const PolyhedronGenerators gp = polyhedron_generators(p.matrix(), p.bounds());
  const PolyhedronGenerators gq = polyhedron_generators(q.matrix(), q.bounds());
  if (gp.empty() || gq.empty()) return gp.empty() == gq.empty();
  if (!gp.bounded() || !gq.bounded()) throw Unbounded();
  const auto all_inside = [](const std::vector<VectorXr>& points, const HPolytope& region) {
    return std::all_of(points.begin(), points.end(),
                       [&](const VectorXr& x) { return first_violated(region, x) == nullptr; });
  };
  return all_inside(gp.points, q) && all_inside(gq.points, p);
}

Rational maximize(const HPolytope& p, const VectorXr& objective) {
  require_dimension(p.dimension(), objective.size(), "maximize");
  const VPolytope v = enumerate_vertices(p);
  Rational best = v.vertices.front().dot(objective);
  for (const auto& x : v.vertices) best = std::max(best, Rational(x.dot(objective)));
  return best;
}

}  // namespace dofregion
