#pragma once

#include <optional>
#include <vector>

#include "mhproj/relevance.hpp"

namespace mhproj {

/// One affine chart of the glued scheme: the degree-zero part of the ring
/// with the support's variables inverted.
struct Chart {
  SupportSet support;
  Sublattice degree_lattice;
  bool prime_points = false;  // the distinguished point of this chart is prime
};

/// The scheme assembled from the charts at the minimal relevant supports.
/// Charts at larger supports are intersections of these, so the minimal ones
/// form an atlas. The coordinate rings are degree-zero parts of localizations
/// of a polynomial ring, hence normal domains; `normal` records that.
struct ProjAtlas {
  std::vector<Chart> charts;
  bool nonempty = false;
  bool normal = false;
  bool every_point_prime = false;
  std::optional<SupportSet> non_prime_witness;
};

ProjAtlas build_atlas(const RingSpec& ring, unsigned workers = 1);

/// The chart at the union of two supports: where both monomials are
/// invertible, i.e. the overlap of the two charts.
Chart chart_intersection(const RingSpec& ring, const Chart& a, const Chart& b);

/// Whether the distinguished point of the chart at s is prime, i.e. whether
/// the support degree lattice is all of Z^r. Errors when s is not relevant:
/// the chart is empty then and has no distinguished point.
bool chart_prime_property(const RingSpec& ring, const SupportSet& s);

/// Every closed point of every chart is prime iff every linearly independent
/// size-r subset of degree columns is a Z-basis of Z^r (determinant +-1).
/// On failure, `witness` is the lex-first offending subset.
struct PrimePointCriterion {
  bool all_prime = false;
  std::optional<SupportSet> witness;
};

PrimePointCriterion all_points_prime(const RingSpec& ring);

}  // namespace mhproj
