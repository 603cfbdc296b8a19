#pragma once

#include <optional>
#include <string>

#include "mhproj/proj.hpp"

namespace mhproj {

/// Laurent monomial exponent vectors of one twisted piece, lex-sorted.
/// Negative exponents are confined to the chart's inverted variables
/// (respectively, for global sections, to the variables inverted on every
/// chart). `complete` as in the fiber enumerator.
struct LaurentBasis {
  Ivec twist;
  std::vector<Ivec> monomials;
  bool complete = false;
};

/// Sections of the twist-d sheaf over the chart at s: monomials of degree d
/// with negative exponents only inside s. s must be a support of one of the
/// atlas charts.
LaurentBasis chart_sections(const RingSpec& ring, const ProjAtlas& atlas, const SupportSet& s,
                            const Ivec& d, long box);

/// Global sections of the twist-d sheaf: sections over every chart at once,
/// so negative exponents are allowed only on the intersection of all minimal
/// relevant supports. Errors when the scheme is empty.
LaurentBasis global_sections(const RingSpec& ring, const ProjAtlas& atlas, const Ivec& d,
                             long box);

/// Variables inverted on every chart (the intersection of the atlas
/// supports). Errors when the scheme is empty.
SupportSet core_support(const ProjAtlas& atlas);

/// Hypothesis under which global sections of the twist-d sheaf are spanned by
/// the honest degree-d monomials for every d: omitting any single variable
/// must leave degrees that still span a finite-index subgroup of Z^r.
bool global_sections_hypothesis(const RingSpec& ring);

/// Twists d for which the sheaf is locally free of rank one by the lattice
/// criterion: the intersection of the charts' degree lattices.
Sublattice twist_degree_lattice(const RingSpec& ring, const ProjAtlas& atlas);

/// The lattice criterion for the twist-d sheaf: d lies in every chart's
/// degree lattice, so each chart carries an invertible monomial of degree d.
bool is_line_bundle(const RingSpec& ring, const ProjAtlas& atlas, const Ivec& d);

/// A Laurent monomial of degree d supported on the chart at s, trivializing
/// the twist-d sheaf there; nullopt when d is outside the chart's degree
/// lattice.
std::optional<Ivec> local_triviality_witness(const RingSpec& ring, const SupportSet& s,
                                             const Ivec& d);

/// "Y*Z*X^-1" style rendering of a Laurent exponent vector ("1" for zero).
std::string laurent_string(const RingSpec& ring, const Ivec& exponents);

}  // namespace mhproj
