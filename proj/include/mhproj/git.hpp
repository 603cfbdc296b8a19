#pragma once

#include <map>

#include "mhproj/cone.hpp"
#include "mhproj/relevance.hpp"

namespace mhproj {

/// cone(deg x_i : i in S) for every nonempty support S, plus the deduplicated
/// list of the distinct cones in canonical order.
struct OrbitConeTable {
  std::map<SupportSet, RationalCone> entries;
  std::vector<RationalCone> distinct;
};

OrbitConeTable orbit_cones(const RingSpec& ring);

/// The chamber of m: the intersection of all orbit cones containing m.
/// Errors when m is outside the weight cone.
RationalCone git_cone(const RingSpec& ring, const OrbitConeTable& table, const Ivec& m);
RationalCone git_cone(const RingSpec& ring, const Ivec& m);

/// The chambers, pairwise intersecting in common faces, covering the weight
/// cone. Computed by sampling the closure of the orbit cones under
/// intersection; verify_quasifan checks the structural invariants.
struct GITFan {
  std::vector<RationalCone> chambers;
  RationalCone support;  // the weight cone
};

GITFan git_fan(const RingSpec& ring, const OrbitConeTable& table);
GITFan git_fan(const RingSpec& ring);

/// Inclusion-minimal supports S with m in cone(deg_S): the toric orbits whose
/// points are semistable for the weight m. For m = 0 every point is
/// semistable, reported as the single empty support.
std::vector<SupportSet> semistable_supports(const RingSpec& ring, const OrbitConeTable& table,
                                            const Ivec& m);
std::vector<SupportSet> semistable_supports(const RingSpec& ring, const Ivec& m);

/// A relevant monomial whose degree lies in the relative interior of a
/// full-dimensional chamber: per extreme ray, the smallest positive multiple
/// realized by a variable degree (searched up to ray_multiple_bound), summed
/// over the rays. The support collects one realizing variable per ray.
struct RelevantInteriorWitness {
  SupportSet support;
  Ivec degree;
};

RelevantInteriorWitness relevant_in_relint(const RingSpec& ring, const RationalCone& chamber,
                                           long ray_multiple_bound);

/// Comparison between the glued scheme and the weight-cone interior quotient:
/// the flags whose conjunction makes the two isomorphic (and the scheme
/// projective over the quotient's base).
struct ComparisonReport {
  bool applicable = false;  // a full-dimensional chamber exists
  std::string reason;       // set when not applicable
  RationalCone chamber;
  SupportSet witness_support;
  Ivec witness_degree;
  bool single_chamber = false;
  bool simplicial_weight_cone = false;
  bool ray_generated = false;       // every variable degree lies on a ray of the weight cone
  bool veronese_degree_one = false; // the witness Veronese slice is generated in degree one
  bool isomorphism_criterion = false;
  std::size_t veronese_bound_used = 0;
};

ComparisonReport comparison_report(const RingSpec& ring, std::size_t veronese_bound,
                                   long ray_multiple_bound, long box);

}  // namespace mhproj
