#include <doctest.h>

#include <random>

#include "mhproj/relevance.hpp"

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

TEST_SUITE("relevance") {
  TEST_CASE("support masks round trip") {
    for (unsigned long mask = 0; mask < 32; ++mask)
      CHECK(mask_from_support(support_from_mask(mask, 5)) == mask);
    CHECK(support_from_mask(0b101, 3) == SupportSet{0, 2});
  }

  TEST_CASE("relevance of supports in a rank-two grading") {
    RingSpec ring = ring_from(2, {{0, 1}, {1, 0}, {1, 0}}, {"X", "Y", "Z"});
    RelevanceReport xy = is_relevant_support(ring, {0, 1});
    CHECK(xy.relevant);
    CHECK(xy.index.has_value());
    CHECK(*xy.index == 1);
    RelevanceReport yz = is_relevant_support(ring, {1, 2});
    CHECK_FALSE(yz.relevant);
    CHECK_FALSE(yz.index.has_value());  // rank 1 < 2: infinite index
    // input support is sorted and deduplicated
    RelevanceReport dup = is_relevant_support(ring, {2, 0, 2});
    CHECK(dup.support == SupportSet{0, 2});
    CHECK(dup.relevant);
    CHECK(minimal_relevant_supports(ring) ==
          std::vector<SupportSet>{{0, 1}, {0, 2}});
    CHECK(has_relevant_element(ring));
  }

  TEST_CASE("weighted projective line of weights 1, 2, 3") {
    RingSpec ring = ring_from(1, {{1}, {2}, {3}});
    CHECK(minimal_relevant_supports(ring) ==
          std::vector<SupportSet>{{0}, {1}, {2}});
    CHECK(*is_relevant_support(ring, {0}).index == 1);
    CHECK(*is_relevant_support(ring, {1}).index == 2);
    CHECK(*is_relevant_support(ring, {2}).index == 3);
    CHECK(*is_relevant_support(ring, {1, 2}).index == 1);  // gcd(2, 3)
  }

  TEST_CASE("no relevant supports when the degrees stay in a hyperplane") {
    RingSpec ring = ring_from(2, {{1, 0}, {2, 0}});
    CHECK(minimal_relevant_supports(ring).empty());
    CHECK_FALSE(has_relevant_element(ring));
  }

  TEST_CASE("support degree lattices") {
    RingSpec ring = ring_from(2, {{0, 1}, {1, 0}, {2, 0}});
    Sublattice l = support_degree_lattice(ring, {1, 2});
    CHECK(l.rank() == 1);
    CHECK(lattice_contains(l, Ivec{Int(3), Int(0)}));
    CHECK_FALSE(lattice_contains(l, Ivec{Int(0), Int(1)}));
  }

  TEST_CASE("worker count never changes the answer") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int trial = 0; trial < 20; ++trial) {
      IntMatrix m(2, 5);
      for (std::size_t j = 0; j < 5; ++j) {
        bool zero = true;
        do {
          zero = true;
          for (std::size_t i = 0; i < 2; ++i) {
            m(i, j) = entry(rng);
            if (m(i, j) != 0) zero = false;
          }
        } while (zero);
      }
      RingSpec ring = RingSpec::make(m, {});
      CHECK(minimal_relevant_supports(ring, 1) == minimal_relevant_supports(ring, 4));
    }
  }
}
