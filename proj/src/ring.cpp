#include "mhproj/ring.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <map>
#include <utility>

#include "mhproj/errors.hpp"
#include "machine.hpp"

namespace mhproj {

RingSpec RingSpec::make(IntMatrix degrees, std::vector<std::string> names) {
  RingSpec ring;
  ring.grading_rank = degrees.rows;
  ring.nvars = degrees.cols;
  if (ring.grading_rank == 0) throw input_error("the grading rank must be at least 1");
  if (ring.nvars == 0) throw input_error("the ring needs at least one variable");
  for (std::size_t j = 0; j < ring.nvars; ++j) {
    bool zero = true;
    for (std::size_t i = 0; i < ring.grading_rank && zero; ++i) zero = degrees(i, j) == 0;
    if (zero)
      throw input_error("variable " + (names.size() == ring.nvars ? names[j] : std::to_string(j + 1)) +
                        " has degree zero; degree-zero generators would enlarge the degree-0 part "
                        "beyond the ground field");
  }
  if (names.empty()) {
    names.reserve(ring.nvars);
    for (std::size_t j = 0; j < ring.nvars; ++j) names.push_back("x" + std::to_string(j + 1));
  }
  if (names.size() != ring.nvars)
    throw input_error("expected one variable name per degree column");
  for (std::size_t j = 0; j < names.size(); ++j) {
    if (names[j].empty()) throw input_error("variable names must be nonempty");
    for (std::size_t k = j + 1; k < names.size(); ++k)
      if (names[j] == names[k]) throw input_error("duplicate variable name: " + names[j]);
  }
  ring.degrees = std::move(degrees);
  ring.names = std::move(names);
  return ring;
}

Ivec degree_of(const RingSpec& ring, const Ivec& exponents) {
  if (exponents.size() != ring.nvars)
    throw input_error("exponent vector has wrong length");
  return mul(ring.degrees, exponents);
}

RationalCone weight_cone(const RingSpec& ring) {
  return cone_from_generators(ring.grading_rank, ring.degrees.columns());
}

bool is_effective_grading(const RingSpec& ring) {
  Sublattice l = sublattice_from_generators(ring.grading_rank, ring.degrees.columns());
  auto idx = lattice_index(l);
  return idx.has_value() && *idx == 1;
}

namespace {

// interval [lo, hi] of the partial sums sum_{i >= k} deg(j, i) * a_i over the
// per-coordinate boxes; used to prune the search tree
struct SuffixRange {
  std::vector<Ivec> lo;  // indexed [k][row]
  std::vector<Ivec> hi;
};

SuffixRange suffix_ranges(const IntMatrix& degrees, const Ivec& lo, const Ivec& hi) {
  const std::size_t r = degrees.rows, n = degrees.cols;
  SuffixRange s;
  s.lo.assign(n + 1, Ivec(r));
  s.hi.assign(n + 1, Ivec(r));
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t j = 0; j < r; ++j) {
      Int a = degrees(j, k) * lo[k];
      Int b = degrees(j, k) * hi[k];
      if (a > b) std::swap(a, b);
      s.lo[k][j] = s.lo[k + 1][j] + a;
      s.hi[k][j] = s.hi[k + 1][j] + b;
    }
  }
  return s;
}

void fiber_dfs(const IntMatrix& degrees, const Ivec& target, const Ivec& lo, const Ivec& hi,
               const SuffixRange& suffix, std::size_t k, Ivec& current, Ivec& partial,
               std::vector<Ivec>& out) {
  const std::size_t r = degrees.rows, n = degrees.cols;
  for (std::size_t j = 0; j < r; ++j) {
    Int need = target[j] - partial[j];
    if (need < suffix.lo[k][j] || need > suffix.hi[k][j]) return;
  }
  if (k == n) {
    out.push_back(current);
    return;
  }
  for (Int a = lo[k]; a <= hi[k]; ++a) {
    current[k] = a;
    for (std::size_t j = 0; j < r; ++j) partial[j] += degrees(j, k) * a;
    fiber_dfs(degrees, target, lo, hi, suffix, k + 1, current, partial, out);
    for (std::size_t j = 0; j < r; ++j) partial[j] -= degrees(j, k) * a;
  }
  current[k] = 0;
}

// machine-word mirror of suffix_ranges + fiber_dfs.  Returns false when the
// input does not fit in native integers or an intermediate would overflow;
// the caller then redoes the enumeration with exact arithmetic.  On success
// the output is identical to the exact enumerator's, sorted.
bool machine_enumerate(const IntMatrix& degrees, const Ivec& target, const Ivec& lo,
                       const Ivec& hi, std::vector<Ivec>& out) {
  const std::size_t r = degrees.rows, n = degrees.cols;
  auto fits = [](const Int& x) { return x.fits_slong_p(); };
  std::vector<long> deg(r * n), t(r), l(n), h(n);
  for (std::size_t j = 0; j < r; ++j) {
    if (!fits(target[j])) return false;
    t[j] = target[j].get_si();
    for (std::size_t i = 0; i < n; ++i) {
      if (!fits(degrees(j, i))) return false;
      deg[j * n + i] = degrees(j, i).get_si();
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!fits(lo[i]) || !fits(hi[i])) return false;
    l[i] = lo[i].get_si();
    h[i] = hi[i].get_si();
    if (h[i] == std::numeric_limits<long>::max()) return false;  // ++a below must not wrap
  }

  std::vector<std::vector<long>> found;
  try {
    std::vector<std::vector<long>> slo(n + 1, std::vector<long>(r)), shi = slo;
    for (std::size_t k = n; k-- > 0;)
      for (std::size_t j = 0; j < r; ++j) {
        long a = machine::mul(deg[j * n + k], l[k]);
        long b = machine::mul(deg[j * n + k], h[k]);
        if (a > b) std::swap(a, b);
        slo[k][j] = machine::add(slo[k + 1][j], a);
        shi[k][j] = machine::add(shi[k + 1][j], b);
      }
    std::vector<long> current(n), partial(r);
    auto dfs = [&](auto&& self, std::size_t k) -> void {
      for (std::size_t j = 0; j < r; ++j) {
        long need = machine::sub(t[j], partial[j]);
        if (need < slo[k][j] || need > shi[k][j]) return;
      }
      if (k == n) {
        found.push_back(current);
        return;
      }
      for (long a = l[k]; a <= h[k]; ++a) {
        current[k] = a;
        for (std::size_t j = 0; j < r; ++j)
          partial[j] = machine::add(partial[j], machine::mul(deg[j * n + k], a));
        self(self, k + 1);
        for (std::size_t j = 0; j < r; ++j)
          partial[j] = machine::sub(partial[j], machine::mul(deg[j * n + k], a));
      }
      current[k] = 0;
    };
    dfs(dfs, 0);
  } catch (const machine::overflow&) {
    return false;
  }
  std::sort(found.begin(), found.end());
  out.reserve(found.size());
  for (const std::vector<long>& v : found) {
    Ivec e;
    e.reserve(n);
    for (long x : v) e.emplace_back(x);
    out.push_back(std::move(e));
  }
  return true;
}

}  // namespace

FiberBasis enumerate_degree_fiber(const IntMatrix& degrees, const Ivec& d,
                                  const std::vector<bool>& negative_allowed, long box) {
  const std::size_t r = degrees.rows, n = degrees.cols;
  if (d.size() != r) throw input_error("degree vector has wrong length");
  if (negative_allowed.size() != n) throw internal_error("enumerate_degree_fiber: flag length");
  if (box < 0) throw input_error("the exponent box must be nonnegative");

  // recession cone of {degrees a = d, a_i >= 0 off the allowed set}: trivial
  // iff the solution set is bounded
  std::vector<Ivec> cons;
  for (std::size_t j = 0; j < r; ++j) {
    Ivec row = degrees.row(j);
    cons.push_back(negated(row));
    cons.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!negative_allowed[i]) {
      Ivec e(n);
      e[i] = 1;
      cons.push_back(std::move(e));
    }
  RationalCone recession = cone_from_constraints(n, cons, {});
  const bool bounded = recession.dim() == 0;

  FiberBasis basis;
  Ivec lo(n), hi(n);
  if (bounded) {
    basis.complete = true;
    // homogenize: rays of {(a, t) : degrees a = t d, signs, t >= 0} with
    // t > 0, rescaled to t = 1, are the vertices of the solution polytope
    std::vector<Ivec> hcons;
    for (std::size_t j = 0; j < r; ++j) {
      Ivec row(n + 1);
      for (std::size_t i = 0; i < n; ++i) row[i] = degrees(j, i);
      row[n] = -d[j];
      hcons.push_back(negated(row));
      hcons.push_back(std::move(row));
    }
    for (std::size_t i = 0; i <= n; ++i)
      if (i == n || !negative_allowed[i]) {
        Ivec e(n + 1);
        e[i] = 1;
        hcons.push_back(std::move(e));
      }
    RationalCone hom = cone_from_constraints(n + 1, hcons, {});
    if (hom.lineality_dim() != 0)
      throw internal_error("bounded fiber produced a homogenization with lineality");
    if (hom.rays.empty()) return basis;  // empty polytope
    bool first = true;
    for (const Ivec& w : hom.rays) {
      if (w[n] <= 0) throw internal_error("bounded fiber produced a horizontal ray");
      for (std::size_t i = 0; i < n; ++i) {
        Rat x = rat_of(w[i], w[n]);
        Int f = rat_floor(x), c = rat_ceil(x);
        if (first || f < lo[i]) lo[i] = f;
        if (first || c > hi[i]) hi[i] = c;
      }
      first = false;
    }
    for (std::size_t i = 0; i < n; ++i)
      if (!negative_allowed[i] && lo[i] < 0) lo[i] = 0;
  } else {
    basis.complete = false;
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = negative_allowed[i] ? Int(-box) : Int(0);
      hi[i] = box;
    }
  }

  if (!machine_enumerate(degrees, d, lo, hi, basis.exponents)) {
    SuffixRange suffix = suffix_ranges(degrees, lo, hi);
    Ivec current(n), partial(r);
    fiber_dfs(degrees, d, lo, hi, suffix, 0, current, partial, basis.exponents);
    std::sort(basis.exponents.begin(), basis.exponents.end());
  }
  return basis;
}

GradedComponentBasis graded_component(const RingSpec& ring, const Ivec& d, long box) {
  FiberBasis fiber =
      enumerate_degree_fiber(ring.degrees, d, std::vector<bool>(ring.nvars, false), box);
  GradedComponentBasis out;
  out.degree = d;
  out.monomials = std::move(fiber.exponents);
  out.complete = fiber.complete;
  return out;
}

VeroneseDims veronese_dims(const RingSpec& ring, const Ivec& u, std::size_t bound, long box) {
  VeroneseDims out;
  out.complete = true;
  out.dims.reserve(bound + 1);
  Ivec d(ring.grading_rank);
  for (std::size_t n = 0; n <= bound; ++n) {
    GradedComponentBasis piece = graded_component(ring, d, box);
    out.dims.push_back(piece.monomials.size());
    out.complete = out.complete && piece.complete;
    d = add(d, u);
  }
  return out;
}

bool veronese_generated_in_degree_one(const RingSpec& ring, const Ivec& u, std::size_t bound,
                                      long box) {
  if (u.size() != ring.grading_rank) throw input_error("weight vector has wrong length");
  GradedComponentBasis deg_one = graded_component(ring, u, box);
  Ivec d = u;
  GradedComponentBasis prev = deg_one;
  for (std::size_t n = 1; n < bound; ++n) {
    d = add(d, u);
    GradedComponentBasis next = graded_component(ring, d, box);
    // product of graded pieces, as exponent sums; when the target piece is
    // only enumerated inside the box, sums escaping the box say nothing and
    // are dropped before comparing
    std::vector<Ivec> sums;
    sums.reserve(deg_one.monomials.size() * prev.monomials.size());
    for (const Ivec& a : deg_one.monomials)
      for (const Ivec& b : prev.monomials) {
        Ivec s = add(a, b);
        if (!next.complete) {
          bool inside = true;
          for (const Int& e : s)
            if (e > box) {
              inside = false;
              break;
            }
          if (!inside) continue;
        }
        sums.push_back(std::move(s));
      }
    std::sort(sums.begin(), sums.end());
    sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
    if (sums != next.monomials) return false;
    prev = std::move(next);
  }
  return true;
}

}  // namespace mhproj
