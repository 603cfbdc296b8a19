#include "mhproj/lattice.hpp"

#include <cassert>

#include "mhproj/errors.hpp"

namespace mhproj {
namespace {

void ext_gcd(const Int& a, const Int& b, Int& g, Int& p, Int& q) {
  mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

// rows t, i of m <- (p*row_t + q*row_i, ao*row_i - bo*row_t); the 2x2 block
// [[p, q], [-bo, ao]] has determinant p*ao + q*bo = 1.
void combine_rows(IntMatrix& m, std::size_t t, std::size_t i, const Int& p, const Int& q,
                  const Int& ao, const Int& bo) {
  for (std::size_t j = 0; j < m.cols; ++j) {
    Int x = m(t, j), y = m(i, j);
    m(t, j) = p * x + q * y;
    m(i, j) = ao * y - bo * x;
  }
}

void combine_cols(IntMatrix& m, std::size_t t, std::size_t j, const Int& p, const Int& q,
                  const Int& ao, const Int& bo) {
  for (std::size_t i = 0; i < m.rows; ++i) {
    Int x = m(i, t), y = m(i, j);
    m(i, t) = p * x + q * y;
    m(i, j) = ao * y - bo * x;
  }
}

void add_row(IntMatrix& m, std::size_t t, std::size_t i) {
  for (std::size_t j = 0; j < m.cols; ++j) m(t, j) += m(i, j);
}

// col_l -= f * col_p
void col_axpy(IntMatrix& m, std::size_t l, std::size_t p, const Int& f) {
  if (f == 0) return;
  for (std::size_t i = 0; i < m.rows; ++i) m(i, l) -= f * m(i, p);
}

// row_l -= f * row_p
void row_axpy(IntMatrix& m, std::size_t l, std::size_t p, const Int& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < m.cols; ++j) m(l, j) -= f * m(p, j);
}

}  // namespace

SmithForm smith_normal_form(IntMatrix m) {
  const std::size_t R = m.rows, C = m.cols;
  IntMatrix u = IntMatrix::identity(R);
  IntMatrix v = IntMatrix::identity(C);
  const std::size_t K = R < C ? R : C;
  Int g, p, q;
  for (std::size_t t = 0; t < K; ++t) {
    // move some nonzero entry of the trailing block to (t, t)
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < R && !found; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (m(i, j) != 0) {
          pi = i;
          pj = j;
          found = true;
          break;
        }
    if (!found) break;
    m.swap_rows(t, pi);
    u.swap_rows(t, pi);
    m.swap_cols(t, pj);
    v.swap_cols(t, pj);
    for (;;) {
      // when the pivot divides the target, shear: it leaves the pivot row
      // and column untouched.  The gcd combine may mix the eliminated line
      // back into the pivot's, so reserving it for the non-divisible case
      // (where the pivot strictly shrinks) is what bounds this loop.
      for (std::size_t i = t + 1; i < R; ++i) {
        if (m(i, t) == 0) continue;
        if (m(i, t) % m(t, t) == 0) {
          Int f = m(i, t) / m(t, t);
          row_axpy(m, i, t, f);
          row_axpy(u, i, t, f);
          continue;
        }
        ext_gcd(m(t, t), m(i, t), g, p, q);
        Int ao = m(t, t) / g, bo = m(i, t) / g;
        combine_rows(m, t, i, p, q, ao, bo);
        combine_rows(u, t, i, p, q, ao, bo);
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (m(t, j) == 0) continue;
        if (m(t, j) % m(t, t) == 0) {
          Int f = m(t, j) / m(t, t);
          col_axpy(m, j, t, f);
          col_axpy(v, j, t, f);
          continue;
        }
        ext_gcd(m(t, t), m(t, j), g, p, q);
        Int ao = m(t, t) / g, bo = m(t, j) / g;
        combine_cols(m, t, j, p, q, ao, bo);
        combine_cols(v, t, j, p, q, ao, bo);
      }
      // column elimination can re-dirty column t; only when both are clean
      // may the divisibility sweep run.
      bool clean = true;
      for (std::size_t i = t + 1; i < R && clean; ++i) clean = m(i, t) == 0;
      for (std::size_t j = t + 1; j < C && clean; ++j) clean = m(t, j) == 0;
      if (!clean) continue;
      // make the pivot divide everything it will dominate
      bool divides = true;
      for (std::size_t i = t + 1; i < R && divides; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (m(i, j) % m(t, t) != 0) {
            add_row(m, t, i);
            add_row(u, t, i);
            divides = false;
            break;
          }
      if (divides) break;
    }
  }
  for (std::size_t i = 0; i < K; ++i)
    if (m(i, i) < 0) {
      m.negate_row(i);
      u.negate_row(i);
    }
  return {std::move(u), std::move(m), std::move(v)};
}

IntMatrix hermite_columns(IntMatrix m) {
  const std::size_t R = m.rows, C = m.cols;
  std::size_t pc = 0;  // next pivot column
  Int g, p, q;
  for (std::size_t i = 0; i < R && pc < C; ++i) {
    std::size_t j0 = pc;
    while (j0 < C && m(i, j0) == 0) ++j0;
    if (j0 == C) continue;
    m.swap_cols(pc, j0);
    for (std::size_t j = pc + 1; j < C; ++j) {
      if (m(i, j) == 0) continue;
      if (m(i, j) % m(i, pc) == 0) {
        col_axpy(m, j, pc, m(i, j) / m(i, pc));
        continue;
      }
      ext_gcd(m(i, pc), m(i, j), g, p, q);
      Int ao = m(i, pc) / g, bo = m(i, j) / g;
      combine_cols(m, pc, j, p, q, ao, bo);
    }
    if (m(i, pc) < 0) m.negate_col(pc);
    for (std::size_t l = 0; l < pc; ++l) col_axpy(m, l, pc, floor_div(m(i, l), m(i, pc)));
    ++pc;
  }
  m.truncate_cols(pc);
  return m;
}

std::vector<Ivec> integer_kernel(const IntMatrix& m) {
  SmithForm snf = smith_normal_form(m);
  const std::size_t C = m.cols;
  const std::size_t K = m.rows < C ? m.rows : C;
  std::size_t r = 0;
  while (r < K && snf.s(r, r) != 0) ++r;
  std::vector<Ivec> kernel;
  kernel.reserve(C - r);
  for (std::size_t j = r; j < C; ++j) kernel.push_back(snf.v.column(j));
  return kernel;
}

Sublattice sublattice_from_generators(std::size_t ambient_rank, const std::vector<Ivec>& gens) {
  IntMatrix m = IntMatrix::from_columns(ambient_rank, gens);
  return Sublattice{ambient_rank, hermite_columns(std::move(m))};
}

Sublattice full_lattice(std::size_t ambient_rank) {
  return Sublattice{ambient_rank, IntMatrix::identity(ambient_rank)};
}

Sublattice zero_lattice(std::size_t ambient_rank) {
  return Sublattice{ambient_rank, IntMatrix(ambient_rank, 0)};
}

std::optional<Int> lattice_index(const Sublattice& l) {
  if (l.rank() < l.ambient_rank) return std::nullopt;
  // square Hermite basis: the index is the product of the diagonal pivots
  Int idx = 1;
  for (std::size_t j = 0; j < l.basis.cols; ++j) idx *= l.basis(j, j);
  return idx;
}

bool lattice_contains(const Sublattice& l, const Ivec& v) {
  if (v.size() != l.ambient_rank) throw internal_error("lattice_contains: length mismatch");
  Ivec rem = v;
  std::size_t row = 0;
  for (std::size_t j = 0; j < l.basis.cols; ++j) {
    // pivot row of column j: first nonzero entry
    while (row < l.ambient_rank && l.basis(row, j) == 0) ++row;
    assert(row < l.ambient_rank);
    const Int& piv = l.basis(row, j);
    if (rem[row] % piv != 0) return false;
    Int c = rem[row] / piv;
    if (c != 0)
      for (std::size_t i = row; i < l.ambient_rank; ++i) rem[i] -= c * l.basis(i, j);
  }
  return is_zero(rem);
}

Sublattice lattice_intersection(const Sublattice& a, const Sublattice& b) {
  if (a.ambient_rank != b.ambient_rank)
    throw internal_error("lattice_intersection: ambient rank mismatch");
  const std::size_t r = a.ambient_rank;
  if (a.rank() == 0 || b.rank() == 0) return zero_lattice(r);
  IntMatrix stacked(r, a.rank() + b.rank());
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j) stacked(i, j) = a.basis(i, j);
    for (std::size_t j = 0; j < b.rank(); ++j) stacked(i, a.rank() + j) = -b.basis(i, j);
  }
  std::vector<Ivec> gens;
  for (const Ivec& w : integer_kernel(stacked)) {
    Ivec g(r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < a.rank(); ++j) g[i] += a.basis(i, j) * w[j];
    gens.push_back(std::move(g));
  }
  return sublattice_from_generators(r, gens);
}

}  // namespace mhproj
