#include <doctest.h>

#include "mhproj/errors.hpp"
#include "mhproj/proj.hpp"

using namespace mhproj;

namespace {

RingSpec ring_from(std::size_t r, const std::vector<std::vector<long>>& cols,
                   std::vector<std::string> names = {}) {
  IntMatrix m(r, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < r; ++i) m(i, j) = Int(cols[j][i]);
  return RingSpec::make(std::move(m), std::move(names));
}

}  // namespace

TEST_SUITE("proj") {
  TEST_CASE("projective plane") {
    RingSpec ring = ring_from(1, {{1}, {1}, {1}});
    ProjAtlas atlas = build_atlas(ring);
    CHECK(atlas.nonempty);
    CHECK(atlas.normal);
    CHECK(atlas.every_point_prime);
    CHECK_FALSE(atlas.non_prime_witness.has_value());
    REQUIRE(atlas.charts.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(atlas.charts[i].support == SupportSet{i});
      CHECK(atlas.charts[i].prime_points);
      CHECK(atlas.charts[i].degree_lattice.basis.columns() ==
            std::vector<Ivec>{Ivec{Int(1)}});
    }
  }

  TEST_CASE("two charts when one variable is forced into every support") {
    RingSpec ring = ring_from(2, {{0, 1}, {1, 0}, {1, 0}}, {"X", "Y", "Z"});
    ProjAtlas atlas = build_atlas(ring);
    CHECK(atlas.nonempty);
    REQUIRE(atlas.charts.size() == 2);
    CHECK(atlas.charts[0].support == SupportSet{0, 1});
    CHECK(atlas.charts[1].support == SupportSet{0, 2});
    CHECK(atlas.charts[0].prime_points);
    CHECK(atlas.charts[1].prime_points);
    CHECK(atlas.every_point_prime);
    Chart overlap = chart_intersection(ring, atlas.charts[0], atlas.charts[1]);
    CHECK(overlap.support == SupportSet{0, 1, 2});
    CHECK(overlap.prime_points);
  }

  TEST_CASE("empty scheme when no support is relevant") {
    RingSpec ring = ring_from(2, {{1, 0}, {2, 0}});
    ProjAtlas atlas = build_atlas(ring);
    CHECK_FALSE(atlas.nonempty);
    CHECK(atlas.charts.empty());
  }

  TEST_CASE("prime chart points and the index") {
    RingSpec weights = ring_from(1, {{1}, {2}, {3}});
    CHECK(chart_prime_property(weights, {0}));
    CHECK_FALSE(chart_prime_property(weights, {1}));  // index 2
    CHECK_FALSE(chart_prime_property(weights, {2}));  // index 3
    CHECK(chart_prime_property(weights, {1, 2}));     // gcd(2, 3) = 1
    ProjAtlas atlas = build_atlas(weights);
    CHECK_FALSE(atlas.every_point_prime);
    REQUIRE(atlas.non_prime_witness.has_value());
    CHECK(*atlas.non_prime_witness == SupportSet{1});
    // a non-relevant support has an empty chart and no distinguished point
    RingSpec split = ring_from(2, {{0, 1}, {1, 0}, {1, 0}});
    CHECK_THROWS_AS(chart_prime_property(split, {1, 2}), analysis_error);
  }

  TEST_CASE("prime point criterion witnesses the first bad subset") {
    RingSpec ring = ring_from(2, {{1, 0}, {1, 2}, {0, 1}});
    PrimePointCriterion crit = all_points_prime(ring);
    CHECK_FALSE(crit.all_prime);
    REQUIRE(crit.witness.has_value());
    CHECK(*crit.witness == SupportSet{0, 1});  // determinant 2
    CHECK(all_points_prime(ring_from(2, {{0, 1}, {1, 0}, {1, 0}})).all_prime);
    for (std::size_t n = 2; n <= 5; ++n)
      CHECK(all_points_prime(ring_from(1, std::vector<std::vector<long>>(n, {1}))).all_prime);
  }

  TEST_CASE("criterion is vacuous when fewer variables than the rank") {
    RingSpec ring = ring_from(2, {{1, 1}});
    PrimePointCriterion crit = all_points_prime(ring);
    CHECK(crit.all_prime);
    CHECK_FALSE(crit.witness.has_value());
    CHECK_FALSE(build_atlas(ring).nonempty);
  }
}
