#include "mhproj/numeric.hpp"

#include <cassert>

#include "mhproj/errors.hpp"

namespace mhproj {

int sign(const Int& x) { return sgn(x); }

Int dot(const Ivec& a, const Ivec& b) {
  assert(a.size() == b.size());
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const Ivec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

Int content(const Ivec& v) {
  Int g = 0;
  for (const Int& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Ivec primitive(Ivec v) {
  Int g = content(v);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

Ivec primitive(const Qvec& v) {
  Int den = 1;
  for (const Rat& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den().get_mpz_t());
  Ivec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rat scaled = v[i] * den;
    assert(scaled.get_den() == 1);
    w[i] = scaled.get_num();
  }
  return primitive(std::move(w));
}

Ivec negated(const Ivec& v) {
  Ivec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = -v[i];
  return w;
}

Ivec add(const Ivec& a, const Ivec& b) {
  assert(a.size() == b.size());
  Ivec w(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) w[i] = a[i] + b[i];
  return w;
}

Ivec scaled_sub(const Int& ca, const Ivec& a, const Int& cb, const Ivec& b) {
  assert(a.size() == b.size());
  Ivec w(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) w[i] = ca * a[i] - cb * b[i];
  return w;
}

Ivec scaled(const Int& c, const Ivec& v) {
  Ivec w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) w[i] = c * v[i];
  return w;
}

Int floor_div(const Int& a, const Int& b) {
  assert(b != 0);
  Int q;
  if (b > 0)
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  else
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), Int(-b).get_mpz_t()), q = -q;
  return q;
}

Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

Rat rat_of(const Int& num, const Int& den) {
  if (den == 0) throw internal_error("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int rat_floor(const Rat& x) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

Int rat_ceil(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
  return q;
}

std::string to_string(const Ivec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  s += ")";
  return s;
}

}  // namespace mhproj
