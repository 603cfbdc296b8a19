#pragma once

#include <optional>
#include <vector>

#include "mhproj/lattice.hpp"
#include "mhproj/ring.hpp"

namespace mhproj {

/// A set of variable indices (0-based), sorted and duplicate-free.
using SupportSet = std::vector<std::size_t>;

SupportSet support_from_mask(unsigned long mask, std::size_t nvars);
unsigned long mask_from_support(const SupportSet& s);

/// Sublattice of Z^r generated by the degrees of the variables in s.
Sublattice support_degree_lattice(const RingSpec& ring, const SupportSet& s);

/// A monomial with support s is relevant iff inverting it makes the grading
/// periodic, which happens exactly when its support degrees span a
/// finite-index subgroup of Z^r: the units of the localization are the scalar
/// multiples of Laurent monomials in the inverted variables, so their degrees
/// are precisely the lattice generated by the support degrees.
struct RelevanceReport {
  SupportSet support;
  Sublattice degree_lattice;
  std::optional<Int> index;  // nullopt = infinite
  bool relevant = false;
};

RelevanceReport is_relevant_support(const RingSpec& ring, const SupportSet& s);

/// All inclusion-minimal relevant supports, lex-sorted. The scan over the
/// 2^n - 1 nonempty supports is split across `workers` threads; the merge is
/// by mask order, so the result does not depend on the worker count.
std::vector<SupportSet> minimal_relevant_supports(const RingSpec& ring, unsigned workers = 1);

bool has_relevant_element(const RingSpec& ring, unsigned workers = 1);

}  // namespace mhproj
