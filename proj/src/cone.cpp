#include "mhproj/cone.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>

#include "mhproj/errors.hpp"
#include "machine.hpp"

namespace mhproj {
namespace {

// ---------------------------------------------------------------------------
// tight-set bitmasks over constraint indices

struct Bits {
  std::vector<std::uint64_t> w;

  explicit Bits(std::size_t nbits = 0) : w((nbits + 63) / 64, 0) {}

  void set(std::size_t i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }

  friend Bits operator&(const Bits& a, const Bits& b) {
    Bits r;
    r.w.resize(a.w.size());
    for (std::size_t i = 0; i < a.w.size(); ++i) r.w[i] = a.w[i] & b.w[i];
    return r;
  }

  /// a subset of b?
  friend bool subset(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.w.size(); ++i)
      if (a.w[i] & ~b.w[i]) return false;
    return true;
  }
};

struct DDPair {
  std::vector<Ivec> lineality;  // some basis of the lineality space
  std::vector<Ivec> rays;       // extreme rays mod lineality, primitive
};

// ---------------------------------------------------------------------------
// scalar policies for the double-description core
//
// The incremental step needs nothing beyond dot products, the shear
// ca*a - cb*b and content reduction, so the core is templated over a scalar
// policy.  MachineOps runs on native integers with every add/sub/mul
// overflow-checked; the moment one would wrap it throws and the caller
// restarts the whole computation with ExactOps.

struct ExactOps {
  using Scalar = Int;
  using Vec = Ivec;
  static Int dot(const Ivec& a, const Ivec& b) { return mhproj::dot(a, b); }
  static Ivec primitive(Ivec v) { return mhproj::primitive(std::move(v)); }
  static Ivec scaled_sub(const Int& ca, const Ivec& a, const Int& cb, const Ivec& b) {
    return mhproj::scaled_sub(ca, a, cb, b);
  }
  static Ivec negated(const Ivec& v) { return mhproj::negated(v); }
  static bool is_zero(const Ivec& v) { return mhproj::is_zero(v); }
  static Int negate(Int x) { return -std::move(x); }
};

struct MachineOps {
  using Scalar = long;
  using Vec = std::vector<long>;

  static long dot(const Vec& a, const Vec& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = machine::add(s, machine::mul(a[i], b[i]));
    return s;
  }

  static Vec primitive(Vec v) {
    unsigned long g = 0;
    for (long x : v) {
      if (x == std::numeric_limits<long>::min()) throw machine::overflow{};
      g = std::gcd(g, static_cast<unsigned long>(x < 0 ? -x : x));
    }
    if (g > 1)
      for (long& x : v) x /= static_cast<long>(g);
    return v;
  }

  static Vec scaled_sub(long ca, const Vec& a, long cb, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      r[i] = machine::sub(machine::mul(ca, a[i]), machine::mul(cb, b[i]));
    return r;
  }

  static Vec negated(const Vec& v) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = machine::sub(0, v[i]);
    return r;
  }

  static bool is_zero(const Vec& v) {
    for (long x : v)
      if (x != 0) return false;
    return true;
  }

  static long negate(long x) { return machine::sub(0, x); }
};

// Incremental double description: intersect halfspaces one at a time,
// starting from the full space. The cone is carried as span(lineality)
// + cone(rays), with rays extreme modulo lineality and each ray holding the
// exact set of processed constraints it is tight at. Adjacency of two rays is
// decided combinatorially: no third ray's tight set may contain the
// intersection of theirs.
template <class Ops>
std::pair<std::vector<typename Ops::Vec>, std::vector<typename Ops::Vec>> dual_description_core(
    std::size_t dim, const std::vector<typename Ops::Vec>& cons_in) {
  using Vec = typename Ops::Vec;
  using Scalar = typename Ops::Scalar;
  struct DDRay {
    Vec v;
    Bits tight;
  };

  std::vector<Vec> cons;
  cons.reserve(cons_in.size());
  for (const Vec& c : cons_in) {
    assert(c.size() == dim);
    Vec p = Ops::primitive(c);
    if (Ops::is_zero(p)) continue;
    if (std::find(cons.begin(), cons.end(), p) == cons.end()) cons.push_back(std::move(p));
  }
  const std::size_t N = cons.size();

  std::vector<Vec> L;
  L.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    Vec e(dim);
    e[i] = 1;
    L.push_back(std::move(e));
  }
  std::vector<DDRay> R;

  for (std::size_t ci = 0; ci < N; ++ci) {
    const Vec& a = cons[ci];
    std::size_t i0 = 0;
    while (i0 < L.size() && Ops::dot(a, L[i0]) == 0) ++i0;
    if (i0 < L.size()) {
      // the constraint cuts the lineality space: one lineality vector becomes
      // a ray, the rest (and all rays) are sheared into the hyperplane
      Vec l0 = L[i0];
      Scalar d0 = Ops::dot(a, l0);
      if (d0 < 0) {
        l0 = Ops::negated(l0);
        d0 = Ops::negate(std::move(d0));
      }
      std::vector<Vec> newL;
      newL.reserve(L.size() - 1);
      for (std::size_t i = 0; i < L.size(); ++i) {
        if (i == i0) continue;
        Vec l = Ops::primitive(Ops::scaled_sub(d0, L[i], Ops::dot(a, L[i]), l0));
        assert(!Ops::is_zero(l));
        newL.push_back(std::move(l));
      }
      for (DDRay& r : R) {
        r.v = Ops::primitive(Ops::scaled_sub(d0, r.v, Ops::dot(a, r.v), l0));
        assert(!Ops::is_zero(r.v));
        r.tight.set(ci);
      }
      DDRay nr{std::move(l0), Bits(N)};
      for (std::size_t b = 0; b < ci; ++b) nr.tight.set(b);  // previous constraints vanish on old L
      R.push_back(std::move(nr));
      L = std::move(newL);
    } else {
      std::vector<Scalar> d(R.size());
      std::vector<std::size_t> plus, minus;
      for (std::size_t i = 0; i < R.size(); ++i) {
        d[i] = Ops::dot(a, R[i].v);
        if (d[i] > 0)
          plus.push_back(i);
        else if (d[i] < 0)
          minus.push_back(i);
      }
      std::vector<DDRay> combos;
      for (std::size_t p : plus)
        for (std::size_t q : minus) {
          Bits z = R[p].tight & R[q].tight;
          bool adjacent = true;
          for (std::size_t s = 0; s < R.size() && adjacent; ++s)
            if (s != p && s != q && subset(z, R[s].tight)) adjacent = false;
          if (!adjacent) continue;
          Vec v = Ops::primitive(Ops::scaled_sub(d[p], R[q].v, d[q], R[p].v));
          assert(!Ops::is_zero(v));
          z.set(ci);
          combos.push_back(DDRay{std::move(v), std::move(z)});
        }
      std::vector<DDRay> keep;
      keep.reserve(R.size() - minus.size() + combos.size());
      for (std::size_t i = 0; i < R.size(); ++i) {
        if (d[i] < 0) continue;
        if (d[i] == 0) R[i].tight.set(ci);
        keep.push_back(std::move(R[i]));
      }
      for (DDRay& c : combos) keep.push_back(std::move(c));
      R = std::move(keep);
    }
  }

  std::pair<std::vector<Vec>, std::vector<Vec>> out;
  out.first = std::move(L);
  out.second.reserve(R.size());
  for (DDRay& r : R) out.second.push_back(std::move(r.v));
  return out;
}

bool fits_machine(const Ivec& v) {
  for (const Int& x : v)
    if (!x.fits_slong_p()) return false;
  return true;
}

Ivec to_exact(const std::vector<long>& v) {
  Ivec r;
  r.reserve(v.size());
  for (long x : v) r.emplace_back(x);
  return r;
}

DDPair dual_description_raw(std::size_t dim, const std::vector<Ivec>& cons_in) {
  bool machine = true;
  for (const Ivec& c : cons_in)
    if (!fits_machine(c)) {
      machine = false;
      break;
    }
  if (machine) {
    std::vector<std::vector<long>> cons;
    cons.reserve(cons_in.size());
    for (const Ivec& c : cons_in) {
      std::vector<long> s;
      s.reserve(c.size());
      for (const Int& x : c) s.push_back(x.get_si());
      cons.push_back(std::move(s));
    }
    try {
      auto [lin, rays] = dual_description_core<MachineOps>(dim, cons);
      DDPair out;
      out.lineality.reserve(lin.size());
      for (const std::vector<long>& v : lin) out.lineality.push_back(to_exact(v));
      out.rays.reserve(rays.size());
      for (const std::vector<long>& v : rays) out.rays.push_back(to_exact(v));
      return out;
    } catch (const machine::overflow&) {
      // an intermediate value wrapped; redo the whole run exactly
    }
  }
  auto [lin, rays] = dual_description_core<ExactOps>(dim, cons_in);
  return DDPair{std::move(lin), std::move(rays)};
}

// ---------------------------------------------------------------------------
// canonicalization helpers

// exact solve of a square nonsingular rational system (Gaussian elimination)
Qvec solve_linear(std::vector<Qvec> m, Qvec rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) throw internal_error("solve_linear: singular system");
    std::swap(m[p], m[k]);
    std::swap(rhs[p], rhs[k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k] == 0) continue;
      Rat f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
      rhs[i] -= f * rhs[k];
    }
  }
  Qvec x(n);
  for (std::size_t k = n; k-- > 0;) {
    Rat s = rhs[k];
    for (std::size_t j = k + 1; j < n; ++j) s -= m[k][j] * x[j];
    x[k] = s / m[k][k];
  }
  return x;
}

// primitive generator of the projection of r onto the orthogonal complement
// of span(basis); r must not lie in that span
Ivec project_off_span(const Ivec& r, const std::vector<Ivec>& basis) {
  if (basis.empty()) return primitive(r);
  if (basis.size() == 1) {
    // (b.b) r - (b.r) b is the projection scaled by b.b > 0, so it has the
    // same primitive generator; no rational arithmetic needed
    const Ivec& b = basis[0];
    Ivec out = primitive(scaled_sub(dot(b, b), r, dot(b, r), b));
    if (is_zero(out)) throw internal_error("project_off_span: vector lies in the span");
    return out;
  }
  const std::size_t k = basis.size();
  std::vector<Qvec> gram(k, Qvec(k));
  Qvec t(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) gram[a][b] = Rat(dot(basis[a], basis[b]));
    t[a] = Rat(dot(basis[a], r));
  }
  Qvec c = solve_linear(std::move(gram), std::move(t));
  Qvec perp(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    perp[i] = Rat(r[i]);
    for (std::size_t a = 0; a < k; ++a) perp[i] -= c[a] * Rat(basis[a][i]);
  }
  Ivec out = primitive(perp);
  if (is_zero(out)) throw internal_error("project_off_span: vector lies in the span");
  return out;
}

// canonical Hermite basis of the saturation of the span of the given
// vectors, which must be linearly independent (the double-description
// lineality list always is: it starts as the identity and is only sheared or
// shortened).  Rank 0, 1 and full rank — the only shapes a rank-2 ambient
// ever produces — shortcut the two kernel computations.
std::vector<Ivec> saturated_basis(std::size_t dim, const std::vector<Ivec>& vecs) {
  if (vecs.empty()) return {};
  if (vecs.size() == dim) return IntMatrix::identity(dim).columns();
  if (vecs.size() == 1) {
    Ivec p = primitive(vecs[0]);
    for (const Int& x : p) {
      if (x > 0) break;
      if (x < 0) {
        p = negated(p);
        break;
      }
    }
    return {p};
  }
  std::vector<Ivec> perp = integer_kernel(IntMatrix::from_rows(vecs));
  std::vector<Ivec> sat = integer_kernel(IntMatrix::from_rows(perp));
  if (perp.empty()) sat = IntMatrix::identity(dim).columns();
  return hermite_columns(IntMatrix::from_columns(dim, sat)).columns();
}

struct CanonicalPair {
  std::vector<Ivec> lineality;  // canonical Hermite basis of the saturated lattice
  std::vector<Ivec> rays;       // primitive, orthogonal to the lineality span, lex-sorted
};

CanonicalPair canonicalize(std::size_t dim, const DDPair& dd) {
  CanonicalPair out;
  out.lineality = saturated_basis(dim, dd.lineality);
  out.rays.reserve(dd.rays.size());
  for (const Ivec& r : dd.rays) out.rays.push_back(project_off_span(r, out.lineality));
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  return out;
}

// the inequality side of a cone needs no canonical form: containment and
// relative-interior tests are unchanged by scaling, ordering, or adding span
// components to a facet normal.  Primitive and sorted keeps the output
// deterministic at a fraction of the cost of the full canonicalization.
CanonicalPair primitive_sorted(const DDPair& dd) {
  CanonicalPair out;
  out.lineality.reserve(dd.lineality.size());
  for (const Ivec& b : dd.lineality) out.lineality.push_back(primitive(b));
  std::sort(out.lineality.begin(), out.lineality.end());
  out.rays.reserve(dd.rays.size());
  for (const Ivec& r : dd.rays) out.rays.push_back(primitive(r));
  std::sort(out.rays.begin(), out.rays.end());
  out.rays.erase(std::unique(out.rays.begin(), out.rays.end()), out.rays.end());
  return out;
}

std::vector<Ivec> with_negations(const std::vector<Ivec>& vecs) {
  std::vector<Ivec> out;
  out.reserve(2 * vecs.size());
  for (const Ivec& v : vecs) {
    out.push_back(v);
    out.push_back(negated(v));
  }
  return out;
}

}  // namespace

std::vector<Ivec> RationalCone::generators() const {
  std::vector<Ivec> g = rays;
  for (const Ivec& b : lineality_basis) {
    g.push_back(b);
    g.push_back(negated(b));
  }
  std::sort(g.begin(), g.end());
  return g;
}

bool cone_less(const RationalCone& a, const RationalCone& b) {
  if (a.ambient_dim != b.ambient_dim) return a.ambient_dim < b.ambient_dim;
  if (a.rays != b.rays) return a.rays < b.rays;
  return a.lineality_basis < b.lineality_basis;
}

RationalCone cone_from_generators(std::size_t ambient_dim, const std::vector<Ivec>& gens_in) {
  std::vector<Ivec> gens;
  gens.reserve(gens_in.size());
  for (const Ivec& g : gens_in) {
    if (g.size() != ambient_dim) throw internal_error("cone generator of wrong length");
    Ivec p = primitive(g);
    if (!is_zero(p)) gens.push_back(std::move(p));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  RationalCone c;
  c.ambient_dim = ambient_dim;

  // the generators, read as inequalities, describe the dual cone; its
  // lineality is the orthogonal complement of our span, its extreme rays are
  // our facet normals
  CanonicalPair dual = primitive_sorted(dual_description_raw(ambient_dim, gens));
  c.span_normals = dual.lineality;
  c.facet_normals = dual.rays;

  // a second pass over our own inequality description recovers canonical
  // extreme rays and lineality
  std::vector<Ivec> cons = c.facet_normals;
  for (const Ivec& e : with_negations(c.span_normals)) cons.push_back(e);
  CanonicalPair prim = canonicalize(ambient_dim, dual_description_raw(ambient_dim, cons));
  c.lineality_basis = prim.lineality;
  c.rays = prim.rays;
  return c;
}

RationalCone cone_from_constraints(std::size_t ambient_dim, const std::vector<Ivec>& normals,
                                   const std::vector<Ivec>& equations) {
  std::vector<Ivec> cons = normals;
  for (const Ivec& e : with_negations(equations)) cons.push_back(e);
  // canonical rays and lineality come straight out of the primal
  // description (they are determined by the geometry alone, so they agree
  // exactly with the generator-side constructor); one more pass over those
  // generators recovers a facet/span description.
  CanonicalPair prim = canonicalize(ambient_dim, dual_description_raw(ambient_dim, cons));
  std::vector<Ivec> gens = prim.rays;
  for (const Ivec& b : with_negations(prim.lineality)) gens.push_back(b);
  CanonicalPair dual = primitive_sorted(dual_description_raw(ambient_dim, gens));
  RationalCone c;
  c.ambient_dim = ambient_dim;
  c.rays = std::move(prim.rays);
  c.lineality_basis = std::move(prim.lineality);
  c.facet_normals = std::move(dual.rays);
  c.span_normals = std::move(dual.lineality);
  return c;
}

RationalCone dual_cone(const RationalCone& c) {
  std::vector<Ivec> gens = c.facet_normals;
  for (const Ivec& e : with_negations(c.span_normals)) gens.push_back(e);
  return cone_from_generators(c.ambient_dim, gens);
}

bool contains(const RationalCone& c, const Ivec& v) {
  if (v.size() != c.ambient_dim) throw internal_error("contains: length mismatch");
  for (const Ivec& e : c.span_normals)
    if (dot(e, v) != 0) return false;
  for (const Ivec& n : c.facet_normals)
    if (dot(n, v) < 0) return false;
  return true;
}

bool relint_contains(const RationalCone& c, const Ivec& v) {
  if (v.size() != c.ambient_dim) throw internal_error("relint_contains: length mismatch");
  for (const Ivec& e : c.span_normals)
    if (dot(e, v) != 0) return false;
  for (const Ivec& n : c.facet_normals)
    if (dot(n, v) <= 0) return false;
  return true;
}

namespace {

bool cone_subset(const RationalCone& inner, const RationalCone& outer) {
  for (const Ivec& g : inner.rays)
    if (!contains(outer, g)) return false;
  for (const Ivec& b : inner.lineality_basis)
    if (!contains(outer, b) || !contains(outer, negated(b))) return false;
  return true;
}

}  // namespace

RationalCone intersect(const RationalCone& a, const RationalCone& b) {
  // nested intersections keep the inner cone's canonical form; skip the
  // double description for them
  if (cone_subset(a, b)) return a;
  if (cone_subset(b, a)) return b;
  return intersect_many(a.ambient_dim, {&a, &b});
}

RationalCone intersect_many(std::size_t ambient_dim,
                            const std::vector<const RationalCone*>& cones) {
  std::vector<Ivec> normals, equations;
  for (const RationalCone* c : cones) {
    if (c->ambient_dim != ambient_dim) throw internal_error("intersect: dimension mismatch");
    normals.insert(normals.end(), c->facet_normals.begin(), c->facet_normals.end());
    equations.insert(equations.end(), c->span_normals.begin(), c->span_normals.end());
  }
  return cone_from_constraints(ambient_dim, normals, equations);
}

bool is_face_of(const RationalCone& f, const RationalCone& c) {
  if (f.ambient_dim != c.ambient_dim) return false;
  if (f == c) return true;
  std::vector<Ivec> fgens = f.generators();
  for (const Ivec& g : fgens)
    if (!contains(c, g)) return false;
  // the smallest face of c containing f is cut out by the facets tight on f;
  // it equals the lineality of c plus the extreme rays of c those facets
  // keep.  f is a face exactly when that cut lies back inside f.  Every
  // proper face has at least one tight facet.
  std::vector<const Ivec*> tight;
  for (const Ivec& n : c.facet_normals) {
    bool t = true;
    for (const Ivec& g : fgens)
      if (dot(n, g) != 0) {
        t = false;
        break;
      }
    if (t) tight.push_back(&n);
  }
  if (tight.empty()) return false;
  for (const Ivec& r : c.rays) {
    bool kept = true;
    for (const Ivec* n : tight)
      if (dot(*n, r) != 0) {
        kept = false;
        break;
      }
    if (kept && !contains(f, r)) return false;
  }
  for (const Ivec& b : c.lineality_basis)
    if (!contains(f, b) || !contains(f, negated(b))) return false;
  return true;
}

bool is_pointed(const RationalCone& c) { return c.lineality_dim() == 0; }

bool is_simplicial(const RationalCone& c) {
  return c.lineality_dim() == 0 && c.rays.size() == c.dim();
}

bool is_full_dimensional(const RationalCone& c) { return c.dim() == c.ambient_dim; }

Ivec relative_interior_point(const RationalCone& c) {
  if (c.dim() == 0) throw analysis_error("the zero cone has no relative interior point");
  Ivec p(c.ambient_dim);
  for (const Ivec& r : c.rays) p = add(p, r);
  for (const Ivec& b : c.lineality_basis) p = add(p, b);
  if (!relint_contains(c, p))
    throw internal_error("relative_interior_point: candidate missed the relative interior");
  return p;
}

void verify_quasifan(const QuasiFan& fan) {
  for (std::size_t i = 0; i < fan.cones.size(); ++i)
    for (const Ivec& g : fan.cones[i].generators())
      if (!contains(fan.support, g))
        throw internal_error("quasifan member escapes the support cone");
  for (std::size_t i = 0; i < fan.cones.size(); ++i)
    for (std::size_t j = i + 1; j < fan.cones.size(); ++j) {
      RationalCone meet = intersect(fan.cones[i], fan.cones[j]);
      if (!is_face_of(meet, fan.cones[i]) || !is_face_of(meet, fan.cones[j]))
        throw internal_error("quasifan members meet outside a common face");
    }
}

}  // namespace mhproj
