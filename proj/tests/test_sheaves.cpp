#include <doctest.h>

#include <algorithm>
#include <random>

#include "mhproj/errors.hpp"
#include "mhproj/sheaves.hpp"

using namespace mhproj;

namespace {

RingSpec ring_from(std::size_t r, const std::vector<std::vector<long>>& cols,
                   std::vector<std::string> names = {}) {
  IntMatrix m(r, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < r; ++i) m(i, j) = Int(cols[j][i]);
  return RingSpec::make(std::move(m), std::move(names));
}

RingSpec split_ring() { return ring_from(2, {{0, 1}, {1, 0}, {1, 0}}, {"X", "Y", "Z"}); }

Ivec iv(std::initializer_list<long> xs) {
  Ivec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_SUITE("sheaves") {
  TEST_CASE("global sections can exceed the graded piece") {
    RingSpec ring = split_ring();
    ProjAtlas atlas = build_atlas(ring);
    CHECK(core_support(atlas) == SupportSet{0});  // X is inverted on every chart
    LaurentBasis sections = global_sections(ring, atlas, iv({2, -1}), 12);
    CHECK(sections.complete);
    CHECK(sections.monomials ==
          std::vector<Ivec>{iv({-1, 0, 2}), iv({-1, 1, 1}), iv({-1, 2, 0})});
    CHECK(laurent_string(ring, iv({-1, 1, 1})) == "Y*Z*X^-1");
    // the honest graded piece of the same degree is empty
    GradedComponentBasis graded = graded_component(ring, iv({2, -1}), 12);
    CHECK(graded.complete);
    CHECK(graded.monomials.empty());
  }

  TEST_CASE("chart sections invert exactly the chart's variables") {
    RingSpec ring = split_ring();
    ProjAtlas atlas = build_atlas(ring);
    LaurentBasis s = chart_sections(ring, atlas, {0, 1}, iv({2, -1}), 6);
    CHECK_FALSE(s.complete);  // Y^-k Z^(2+k) runs forever; the box cuts it
    CHECK(s.monomials.size() == 7);
    for (const Ivec& m : s.monomials) {
      CHECK(degree_of(ring, m) == iv({2, -1}));
      CHECK(m[2] >= 0);  // Z is not inverted on this chart
    }
    CHECK(std::find(s.monomials.begin(), s.monomials.end(), iv({-1, 2, 0})) !=
          s.monomials.end());
    CHECK(std::find(s.monomials.begin(), s.monomials.end(), iv({-1, -4, 6})) !=
          s.monomials.end());
    CHECK_THROWS_AS(chart_sections(ring, atlas, {1, 2}, iv({0, 0}), 6), analysis_error);
  }

  TEST_CASE("sections over a standard chart of the projective line") {
    RingSpec ring = ring_from(1, {{1}, {1}});
    ProjAtlas atlas = build_atlas(ring);
    const long box = 6;
    LaurentBasis s = chart_sections(ring, atlas, {0}, iv({-1}), box);
    CHECK_FALSE(s.complete);
    CHECK(s.monomials.size() == static_cast<std::size_t>(box));
    CHECK(std::find(s.monomials.begin(), s.monomials.end(), iv({-1, 0})) != s.monomials.end());
    for (const Ivec& m : s.monomials) {
      CHECK(m[0] + m[1] == -1);
      CHECK(m[1] >= 0);
    }
  }

  TEST_CASE("empty schemes have no sections to offer") {
    RingSpec ring = ring_from(2, {{1, 0}, {2, 0}});
    ProjAtlas atlas = build_atlas(ring);
    CHECK_THROWS_AS(core_support(atlas), analysis_error);
    CHECK_THROWS_AS(global_sections(ring, atlas, iv({0, 0}), 6), analysis_error);
    CHECK_THROWS_AS(twist_degree_lattice(ring, atlas), analysis_error);
  }

  TEST_CASE("hypothesis: omitting one variable keeps the grading periodic") {
    CHECK(global_sections_hypothesis(ring_from(1, {{1}, {1}, {1}})));
    CHECK(global_sections_hypothesis(ring_from(1, {{1}, {2}, {3}})));
    CHECK_FALSE(global_sections_hypothesis(split_ring()));  // dropping X kills rank 2
    CHECK_FALSE(global_sections_hypothesis(ring_from(1, {{1}})));
  }

  TEST_CASE("twist lattice of weighted projective space is the lcm lattice") {
    RingSpec ring = ring_from(1, {{1}, {2}, {3}});
    ProjAtlas atlas = build_atlas(ring);
    Sublattice twists = twist_degree_lattice(ring, atlas);
    CHECK(twists.basis.columns() == std::vector<Ivec>{iv({6})});
    for (long d = -12; d <= 12; ++d)
      CHECK(is_line_bundle(ring, atlas, iv({d})) == (d % 6 == 0));
  }

  TEST_CASE("every twist is a line bundle when the charts see the full lattice") {
    RingSpec ring = split_ring();
    ProjAtlas atlas = build_atlas(ring);
    Sublattice twists = twist_degree_lattice(ring, atlas);
    CHECK(lattice_index(twists).has_value());
    CHECK(*lattice_index(twists) == 1);
    CHECK(is_line_bundle(ring, atlas, iv({2, -1})));
    auto witness = local_triviality_witness(ring, {0, 1}, iv({2, -1}));
    REQUIRE(witness.has_value());
    CHECK(*witness == iv({-1, 2, 0}));
    CHECK(laurent_string(ring, *witness) == "Y^2*X^-1");
  }

  TEST_CASE("local triviality witnesses match the lattice membership") {
    RingSpec ring = ring_from(1, {{1}, {2}, {3}});
    for (long d = -12; d <= 12; ++d) {
      for (std::size_t chart = 0; chart < 3; ++chart) {
        SupportSet s{chart};
        auto witness = local_triviality_witness(ring, s, iv({d}));
        bool member = lattice_contains(support_degree_lattice(ring, s), iv({d}));
        CHECK(witness.has_value() == member);
        if (witness) {
          CHECK(degree_of(ring, *witness) == iv({d}));
          for (std::size_t j = 0; j < 3; ++j)
            if (j != chart) CHECK((*witness)[j] == 0);
        }
      }
    }
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> entry(-3, 3), twist(-6, 6);
    for (int trial = 0; trial < 40; ++trial) {
      IntMatrix m(2, 3);
      for (std::size_t j = 0; j < 3; ++j) {
        bool zero = true;
        do {
          zero = true;
          for (std::size_t i = 0; i < 2; ++i) {
            m(i, j) = entry(rng);
            if (m(i, j) != 0) zero = false;
          }
        } while (zero);
      }
      RingSpec ring2 = RingSpec::make(m, {});
      SupportSet s{0, 2};
      Ivec d = iv({twist(rng), twist(rng)});
      auto witness = local_triviality_witness(ring2, s, d);
      CHECK(witness.has_value() ==
            lattice_contains(support_degree_lattice(ring2, s), d));
      if (witness) {
        CHECK(degree_of(ring2, *witness) == d);
        CHECK((*witness)[1] == 0);
      }
    }
  }

  TEST_CASE("laurent rendering") {
    RingSpec ring = split_ring();
    CHECK(laurent_string(ring, iv({0, 0, 0})) == "1");
    CHECK(laurent_string(ring, iv({0, 2, 0})) == "Y^2");
    CHECK(laurent_string(ring, iv({-2, 1, 3})) == "Y*Z^3*X^-2");
    CHECK(laurent_string(ring, iv({1, 1, 1})) == "X*Y*Z");
  }
}
