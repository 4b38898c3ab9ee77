#include "doctest.h"

#include "dofregion/errors.hpp"
#include "dofregion/regions.hpp"

using namespace dofregion;

namespace {

Rational r(long p, long q = 1) { return Rational(p, q); }

}  // namespace

TEST_CASE("rs_tuple examples") {
  const VectorXr alpha = make_vector({1, r(1, 2)});
  CHECK(equal(rs_tuple(alpha, {r(1, 2), make_vector({1, 0})}), make_vector({1, r(1, 2)})));
  CHECK(equal(rs_tuple(alpha, {0, make_vector({0, 1})}), make_vector({0, 1})));
  const VectorXr alpha3 = make_vector({1, r(4, 5), r(1, 2)});
  const DofTuple d = rs_tuple(alpha3, {r(4, 5), make_vector({1, 0, 0})});
  CHECK(equal(d, make_vector({1, r(4, 5), r(1, 2)})));
  CHECK(d.sum() == r(23, 10));
}

TEST_CASE("rs_tuple errors") {
  CHECK_THROWS_AS(rs_tuple(make_vector({r(1, 2), 1}), {0, make_vector({1, 0})}), UnsortedAlpha);
  CHECK_THROWS_AS(rs_tuple(make_vector({1, 0}), {r(3, 2), make_vector({1, 0})}), ParameterOutOfRange);
  CHECK_THROWS_AS(rs_tuple(make_vector({1, 0}), {0, make_vector({r(1, 2), 0})}), ParameterOutOfRange);
  CHECK_THROWS_AS(rs_tuple(make_vector({1, 0}), {0, make_vector({2, -1})}), ParameterOutOfRange);
  CHECK_THROWS_AS(rs_tuple(make_vector({1, 0}), {0, make_vector({1})}), DimensionMismatch);
}

TEST_CASE("rs_star_tuple examples") {
  const VectorXr alpha = make_vector({1, r(1, 2)});
  CHECK(equal(rs_star_tuple(alpha, {make_vector({1, r(1, 2)}), make_vector({0, 0})}), make_vector({1, 0})));
  CHECK(equal(rs_star_tuple(alpha, {make_vector({r(1, 2), r(1, 2)}), make_vector({r(1, 2), 0})}),
              make_vector({1, r(1, 2)})));
  const VectorXr alpha3 = make_vector({r(1, 3), 1, 0});
  CHECK(equal(rs_star_tuple(alpha3, {VectorXr::Zero(3), make_vector({1, 0, 0})}), make_vector({1, 0, 0})));
  CHECK_THROWS_AS(rs_star_tuple(alpha, {make_vector({r(1, 2), 0}), make_vector({r(1, 2), r(1, 4)})}),
                  CommonBudgetExceeded);
  CHECK_THROWS_AS(rs_star_tuple(alpha, {make_vector({0, 0}), make_vector({-1, 0})}), ParameterOutOfRange);
}

TEST_CASE("rs_region_via_fm examples") {
  const HPolytope two = rs_region_via_fm(make_vector({1, r(1, 2)}));
  CHECK(two.inequalities() == canonical_region(make_vector({1, r(1, 2)})).inequalities());
  CHECK(maximize(two, make_vector({1, 1})) == r(3, 2));

  CHECK(polytopes_equal(rs_region_via_fm(make_vector({0, 0})), canonical_region(make_vector({0, 0}))));
  CHECK(polytopes_equal(rs_region_via_fm(make_vector({1, r(4, 5), r(1, 2)})),
                        canonical_region(make_vector({1, r(4, 5), r(1, 2)}))));
  CHECK_THROWS_AS(rs_region_via_fm(make_vector({0, 1})), UnsortedAlpha);
  CHECK_THROWS_AS(rs_region_via_fm(VectorXr::Zero(7)), ParameterOutOfRange);
}

TEST_CASE("rate splitting system layout") {
  const LinearSystem sys = rate_splitting_system(make_vector({1, r(1, 2)}));
  CHECK(sys.variables() == std::vector<std::string>{"d1", "d2", "dc1", "dc2", "a"});
  CHECK(sys.inequalities().size() == 4 * 2 + 4);
  CHECK(rate_splitting_variables(3).size() == 7);
}
