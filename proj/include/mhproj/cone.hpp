#pragma once

#include <vector>

#include "mhproj/lattice.hpp"
#include "mhproj/numeric.hpp"

namespace mhproj {

/// A rational polyhedral cone. The generator side is canonical — two cones
/// are equal as sets iff those fields compare equal:
///   - rays: primitive extreme rays of the pointed quotient, projected into
///     the orthogonal complement of the lineality space, lex-sorted;
///   - lineality_basis: canonical Hermite basis of the (saturated) lineality
///     lattice.
/// The inequality side is deterministic but not normalised beyond primitive
/// + lex-sorted (membership tests are unchanged by scaling, ordering, or
/// span components in a normal, so the extra normalisation would buy
/// nothing):
///   - facet_normals: primitive inner normals, one per facet;
///   - span_normals: basis of the annihilator of the linear span (the
///     equations cutting out the span).
struct RationalCone {
  std::size_t ambient_dim = 0;
  std::vector<Ivec> rays;
  std::vector<Ivec> lineality_basis;
  std::vector<Ivec> facet_normals;
  std::vector<Ivec> span_normals;

  /// rays and +-lineality basis together: a generating set.
  std::vector<Ivec> generators() const;

  std::size_t dim() const { return ambient_dim - span_normals.size(); }
  std::size_t lineality_dim() const { return lineality_basis.size(); }

  friend bool operator==(const RationalCone& a, const RationalCone& b) {
    return a.ambient_dim == b.ambient_dim && a.rays == b.rays &&
           a.lineality_basis == b.lineality_basis;
  }
};

/// Strict weak order compatible with equality; used for deterministic
/// dedup/sort of cone collections.
bool cone_less(const RationalCone& a, const RationalCone& b);

RationalCone cone_from_generators(std::size_t ambient_dim, const std::vector<Ivec>& gens);

/// {x : <n, x> >= 0 for n in normals, <e, x> = 0 for e in equations}.
RationalCone cone_from_constraints(std::size_t ambient_dim, const std::vector<Ivec>& normals,
                                   const std::vector<Ivec>& equations);

RationalCone dual_cone(const RationalCone& c);

bool contains(const RationalCone& c, const Ivec& v);
bool relint_contains(const RationalCone& c, const Ivec& v);

RationalCone intersect(const RationalCone& a, const RationalCone& b);
RationalCone intersect_many(std::size_t ambient_dim, const std::vector<const RationalCone*>& cones);

/// Whether f is a face of c (f = c and the trivial face included).
bool is_face_of(const RationalCone& f, const RationalCone& c);

bool is_pointed(const RationalCone& c);
bool is_simplicial(const RationalCone& c);
bool is_full_dimensional(const RationalCone& c);

/// An integer point in the relative interior. The zero cone has none;
/// asking for one there is an analysis error.
Ivec relative_interior_point(const RationalCone& c);

/// A finite collection of cones closed-ish under the checks below; support
/// is the union of the members.
struct QuasiFan {
  std::vector<RationalCone> cones;
  RationalCone support;
};

/// Throws internal_error unless every pairwise intersection of members is a
/// face of both and every member lies inside the support.
void verify_quasifan(const QuasiFan& fan);

}  // namespace mhproj
