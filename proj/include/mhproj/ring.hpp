#pragma once

#include <string>
#include <vector>

#include "mhproj/cone.hpp"
#include "mhproj/matrix.hpp"

namespace mhproj {

/// A polynomial ring k[x_1..x_n] graded by Z^r: column j of `degrees` is
/// deg(x_j). No column may be zero (that would put a unit-like variable in
/// degree 0 and break the k = A_0 convention); violations are input errors.
struct RingSpec {
  std::size_t nvars = 0;
  std::size_t grading_rank = 0;
  IntMatrix degrees;  // grading_rank x nvars
  std::vector<std::string> names;

  static RingSpec make(IntMatrix degrees, std::vector<std::string> names);

  Ivec degree_column(std::size_t j) const { return degrees.column(j); }
};

/// Degree of the monomial with the given exponent vector.
Ivec degree_of(const RingSpec& ring, const Ivec& exponents);

/// cone spanned by all generator degrees.
RationalCone weight_cone(const RingSpec& ring);

/// Whether the degrees generate all of Z^r (index-one degree lattice).
bool is_effective_grading(const RingSpec& ring);

/// Monomial exponent vectors of one graded piece, lex-sorted. `complete` is
/// true when the solution polyhedron is provably bounded (equivalently, the
/// weight cone is pointed), in which case the list is exhaustive; otherwise
/// only exponents within the configured box are listed.
struct GradedComponentBasis {
  Ivec degree;
  std::vector<Ivec> monomials;
  bool complete = false;
};

GradedComponentBasis graded_component(const RingSpec& ring, const Ivec& d, long box);

struct VeroneseDims {
  std::vector<std::size_t> dims;  // dim_k A_{n u} for n = 0..bound
  bool complete = false;
};

VeroneseDims veronese_dims(const RingSpec& ring, const Ivec& u, std::size_t bound, long box);

/// Whether A_{(n+1)u} = A_u * A_{nu} (as monomial sets, via exponent sums)
/// for all n < bound: the degree-u Veronese slice is generated in degree one
/// as far as the bound sees.
bool veronese_generated_in_degree_one(const RingSpec& ring, const Ivec& u, std::size_t bound,
                                      long box);

/// All exponent vectors a with degrees*a = d, where a_i may be negative only
/// at positions with negative_allowed[i]; everything else is >= 0. When the
/// solution polyhedron is bounded the enumeration is exact and complete is
/// true; otherwise every coordinate is clipped to [-box, box] (respectively
/// [0, box]) and complete is false. Output is lex-sorted.
struct FiberBasis {
  std::vector<Ivec> exponents;
  bool complete = false;
};

FiberBasis enumerate_degree_fiber(const IntMatrix& degrees, const Ivec& d,
                                  const std::vector<bool>& negative_allowed, long box);

}  // namespace mhproj
