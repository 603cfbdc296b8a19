#pragma once

#include <optional>
#include <vector>

#include "mhproj/matrix.hpp"

namespace mhproj {

/// u * input * v = s with u, v unimodular and s diagonal,
/// s(0,0) | s(1,1) | ... with nonnegative diagonal entries.
struct SmithForm {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;
};

SmithForm smith_normal_form(IntMatrix m);

/// Canonical column Hermite form of the column span: pivot rows strictly
/// increasing, pivots positive, entries left of a pivot in its row reduced
/// into [0, pivot). Zero columns are dropped, so the result has rank-many
/// columns. Two generating sets span the same lattice iff they agree here.
IntMatrix hermite_columns(IntMatrix m);

/// Basis of {x : m x = 0} as a saturated sublattice of Z^cols.
std::vector<Ivec> integer_kernel(const IntMatrix& m);

/// A finitely generated subgroup of Z^ambient_rank, stored by its canonical
/// Hermite basis so equality of values is equality of lattices.
struct Sublattice {
  std::size_t ambient_rank = 0;
  IntMatrix basis;  // ambient_rank x rank(), canonical column Hermite form

  std::size_t rank() const { return basis.cols; }

  friend bool operator==(const Sublattice&, const Sublattice&) = default;
};

Sublattice sublattice_from_generators(std::size_t ambient_rank, const std::vector<Ivec>& gens);
Sublattice full_lattice(std::size_t ambient_rank);
Sublattice zero_lattice(std::size_t ambient_rank);

/// [Z^r : L], or nullopt when the index is infinite (rank < r).
std::optional<Int> lattice_index(const Sublattice& l);

bool lattice_contains(const Sublattice& l, const Ivec& v);

Sublattice lattice_intersection(const Sublattice& a, const Sublattice& b);

}  // namespace mhproj
