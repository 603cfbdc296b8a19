#include <doctest.h>

#include <random>

#include "mhproj/errors.hpp"
#include "mhproj/ring.hpp"

using namespace mhproj;

namespace {

RingSpec ring_from(std::size_t r, const std::vector<std::vector<long>>& cols,
                   std::vector<std::string> names = {}) {
  IntMatrix m(r, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < r; ++i) m(i, j) = Int(cols[j][i]);
  return RingSpec::make(std::move(m), std::move(names));
}

// standard Z-grading on n+1 variables (projective n-space ring)
RingSpec standard_ring(std::size_t nvars) {
  return ring_from(1, std::vector<std::vector<long>>(nvars, {1}));
}

// three variables X, Y, Z with degrees (0,1), (1,0), (1,0): the minimal
// example where global sections exceed the graded piece
RingSpec split_ring() { return ring_from(2, {{0, 1}, {1, 0}, {1, 0}}, {"X", "Y", "Z"}); }

Ivec iv(std::initializer_list<long> xs) {
  Ivec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// nested-loop enumeration of the fiber inside the box, the dumb way
std::vector<Ivec> fiber_by_loops(const IntMatrix& degrees, const Ivec& d,
                                 const std::vector<bool>& neg, long box) {
  const std::size_t n = degrees.cols;
  std::vector<Ivec> out;
  Ivec a(n);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      if (mul(degrees, a) == d) out.push_back(a);
      return;
    }
    for (long t = neg[k] ? -box : 0; t <= box; ++t) {
      a[k] = t;
      self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

TEST_SUITE("ring") {
  TEST_CASE("construction guards") {
    CHECK_THROWS_AS(ring_from(2, {{1, 0}, {0, 0}}), input_error);
    CHECK_THROWS_AS(ring_from(1, {{1}, {1}}, {"a", "a"}), input_error);
    CHECK_THROWS_AS(ring_from(1, {{1}, {1}}, {"a"}), input_error);
    CHECK_THROWS_AS(ring_from(1, {{1}}, {""}), input_error);
    RingSpec r = ring_from(1, {{1}, {2}});
    CHECK(r.names == std::vector<std::string>{"x1", "x2"});
    CHECK(r.degree_column(1) == iv({2}));
  }

  TEST_CASE("degrees of monomials") {
    RingSpec r = standard_ring(3);
    CHECK(degree_of(r, iv({2, 0, 1})) == iv({3}));
    RingSpec s = split_ring();
    CHECK(degree_of(s, iv({-1, 1, 1})) == iv({2, -1}));
    CHECK_THROWS_AS(degree_of(s, iv({1, 2})), input_error);
  }

  TEST_CASE("weight cones") {
    CHECK(weight_cone(standard_ring(2)).rays == std::vector<Ivec>{iv({1})});
    RationalCone w = weight_cone(split_ring());
    CHECK(w.rays == std::vector<Ivec>{iv({0, 1}), iv({1, 0})});
    CHECK(is_full_dimensional(w));
  }

  TEST_CASE("effective grading") {
    CHECK(is_effective_grading(standard_ring(2)));
    CHECK(is_effective_grading(split_ring()));
    CHECK_FALSE(is_effective_grading(ring_from(1, {{2}, {4}})));
    CHECK_FALSE(is_effective_grading(ring_from(2, {{1, 2}, {2, 1}})));  // index 3
    CHECK_FALSE(is_effective_grading(ring_from(2, {{1, 0}, {2, 0}})));  // rank 1
  }

  TEST_CASE("graded components of the standard grading") {
    RingSpec r = standard_ring(3);
    GradedComponentBasis quad = graded_component(r, iv({2}), 12);
    CHECK(quad.complete);
    CHECK(quad.monomials ==
          std::vector<Ivec>{iv({0, 0, 2}), iv({0, 1, 1}), iv({0, 2, 0}), iv({1, 0, 1}),
                            iv({1, 1, 0}), iv({2, 0, 0})});
    GradedComponentBasis neg = graded_component(r, iv({-1}), 12);
    CHECK(neg.complete);
    CHECK(neg.monomials.empty());
  }

  TEST_CASE("unbounded components are clipped to the box and flagged") {
    RingSpec r = ring_from(1, {{1}, {-1}});
    GradedComponentBasis zero = graded_component(r, iv({0}), 4);
    CHECK_FALSE(zero.complete);
    std::vector<Ivec> expected;
    for (long k = 0; k <= 4; ++k) expected.push_back(iv({k, k}));
    CHECK(zero.monomials == expected);
  }

  TEST_CASE("huge degrees take the exact enumeration fallback") {
    // degrees of 2^62 fit a machine word but the pruning sums overflow, so
    // the word-sized enumerator bails mid-run; degrees of 2^64 + 1 are
    // rejected before it starts.  Both must agree with the small-input path.
    for (int shift_fits : {1, 0}) {
      Int s = shift_fits ? Int(Int(1) << 62) : Int((Int(1) << 64) + 1);
      IntMatrix degrees(1, 2);
      degrees(0, 0) = s;
      degrees(0, 1) = s;
      FiberBasis f = enumerate_degree_fiber(degrees, {s}, {false, false}, 4);
      CHECK(f.complete);
      CHECK(f.exponents == std::vector<Ivec>{iv({0, 1}), iv({1, 0})});
    }
  }

  TEST_CASE("fibers with inverted variables") {
    IntMatrix degrees(1, 2);
    degrees(0, 0) = 1;
    degrees(0, 1) = 1;
    FiberBasis f = enumerate_degree_fiber(degrees, iv({1}), {true, false}, 4);
    CHECK_FALSE(f.complete);  // the first exponent can drop without bound
    CHECK(f.exponents == std::vector<Ivec>{iv({-3, 4}), iv({-2, 3}), iv({-1, 2}), iv({0, 1}),
                                           iv({1, 0})});
  }

  TEST_CASE("fiber enumeration agrees with nested loops") {
    std::mt19937 rng(321);
    std::uniform_int_distribution<int> entry(-2, 2), dims(1, 3), deg(-4, 4);
    const long box = 3;
    for (int trial = 0; trial < 80; ++trial) {
      std::size_t r = dims(rng), n = dims(rng);
      IntMatrix degrees(r, n);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) degrees(i, j) = entry(rng);
      Ivec d(r);
      for (std::size_t i = 0; i < r; ++i) d[i] = deg(rng);
      std::vector<bool> neg(n);
      for (std::size_t j = 0; j < n; ++j) neg[j] = (rng() & 1) != 0;
      FiberBasis fiber = enumerate_degree_fiber(degrees, d, neg, box);
      std::vector<Ivec> oracle = fiber_by_loops(degrees, d, neg, box);
      for (const Ivec& a : fiber.exponents) {
        CHECK(mul(degrees, a) == d);
        for (std::size_t j = 0; j < n; ++j)
          if (!neg[j]) CHECK(a[j] >= 0);
      }
      if (fiber.complete) {
        // exact list: within the box it matches the loops, outside it only adds
        std::vector<Ivec> inside;
        for (const Ivec& a : fiber.exponents) {
          bool in = true;
          for (const Int& x : a) in = in && x >= -box && x <= box;
          if (in) inside.push_back(a);
        }
        CHECK(inside == oracle);
      } else {
        CHECK(fiber.exponents == oracle);
      }
    }
  }

  TEST_CASE("veronese dimensions") {
    VeroneseDims std3 = veronese_dims(standard_ring(3), iv({1}), 2, 12);
    CHECK(std3.complete);
    CHECK(std3.dims == std::vector<std::size_t>{1, 3, 6});
    VeroneseDims split = veronese_dims(split_ring(), iv({1, 1}), 2, 12);
    CHECK(split.complete);
    CHECK(split.dims == std::vector<std::size_t>{1, 2, 3});
  }

  TEST_CASE("degree-one veronese generation") {
    CHECK(veronese_generated_in_degree_one(standard_ring(3), iv({1}), 6, 12));
    CHECK(veronese_generated_in_degree_one(split_ring(), iv({1, 1}), 6, 12));
    // weights (1, 2): the second variable is not a product of degree-1 pieces
    CHECK_FALSE(veronese_generated_in_degree_one(ring_from(1, {{1}, {2}}), iv({1}), 3, 12));
    // doubling the witness degree repairs it
    CHECK(veronese_generated_in_degree_one(ring_from(1, {{1}, {2}}), iv({2}), 3, 12));
  }
}
