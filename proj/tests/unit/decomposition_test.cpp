#include "doctest.h"

#include "dofregion/errors.hpp"
#include "dofregion/regions.hpp"

using namespace dofregion;

namespace {

Rational r(long p, long q = 1) { return Rational(p, q); }

void check_postconditions(const CsitPattern& pattern, const DofTuple& d, const std::vector<DofTuple>& parts) {
  REQUIRE(static_cast<int>(parts.size()) == pattern.subchannels());
  DofTuple sum = DofTuple::Zero(pattern.users());
  for (int m = 0; m < pattern.subchannels(); ++m) {
    CHECK(contains_point(subchannel_region(pattern, m), parts[static_cast<std::size_t>(m)]));
    sum += parts[static_cast<std::size_t>(m)];
  }
  CHECK(equal(sum, d * Rational(pattern.subchannels())));
}

}  // namespace

TEST_CASE("separate_tuple splits (3/4, 3/4) over a perfect and a blind subchannel") {
  const CsitPattern p = make_pattern({{1, 0}, {1, 0}});
  const DofTuple d = make_vector({r(3, 4), r(3, 4)});
  const auto parts = separate_tuple(p, d);
  check_postconditions(p, d, parts);
  CHECK(equal(parts[0], make_vector({1, 1})));
  CHECK(equal(parts[1], make_vector({r(1, 2), r(1, 2)})));
}

TEST_CASE("separate_tuple on a corner of a two-level pattern") {
  const CsitPattern p = make_pattern({{1, 1}, {r(1, 2), 0}});
  const DofTuple d = make_vector({1, r(1, 4)});
  const auto parts = separate_tuple(p, d);
  check_postconditions(p, d, parts);
  CHECK(equal(parts[0], make_vector({1, r(1, 2)})));
  CHECK(equal(parts[1], make_vector({1, 0})));

  // Grid oracle at denominator 4: the split exists and is unique on the grid.
  int splits = 0;
  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; b <= 8; ++b) {
      const DofTuple first = make_vector({r(a, 4), r(b, 4)});
      const DofTuple second = d * Rational(2) - first;
      if (contains_point(subchannel_region(p, 0), first) && contains_point(subchannel_region(p, 1), second)) {
        ++splits;
        CHECK(equal(first, parts[0]));
      }
    }
  }
  CHECK(splits == 1);
}

TEST_CASE("separate_tuple of the origin is all zero") {
  const CsitPattern p = make_pattern({{r(1, 3), 1, r(1, 2)}, {r(1, 4), 1, 0}, {0, r(1, 2), 0}});
  const auto parts = separate_tuple(p, VectorXr::Zero(3));
  check_postconditions(p, VectorXr::Zero(3), parts);
  for (const auto& part : parts) CHECK(equal(part, VectorXr::Zero(3)));
}

TEST_CASE("separate_tuple with users given out of order") {
  const CsitPattern p = make_pattern({{0, r(1, 2)}, {1, 1}, {r(1, 2), r(3, 4)}});
  const HPolytope outer = outer_bound_region(p);
  for (const auto& v : enumerate_vertices(outer).vertices) {
    CAPTURE(to_string(v));
    check_postconditions(p, v, separate_tuple(p, v));
  }
}

TEST_CASE("separate_tuple errors") {
  CHECK_THROWS_AS(separate_tuple(make_pattern({{1, 0}, {0, 1}}), make_vector({0, 0})), NotTotallyOrdered);
  const CsitPattern p = make_pattern({{1, 0}, {1, 0}});
  CHECK_THROWS_AS(separate_tuple(p, make_vector({1, 1})), TupleOutsideOuterBound);
  CHECK_THROWS_AS(separate_tuple(p, make_vector({r(-1, 4), 0})), TupleOutsideOuterBound);
  CHECK_THROWS_AS(separate_tuple(p, make_vector({0, 0, 0})), DimensionMismatch);
}
