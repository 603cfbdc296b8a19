#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace mhproj {

using Int = mpz_class;
using Rat = mpq_class;
using Ivec = std::vector<Int>;
using Qvec = std::vector<Rat>;

int sign(const Int& x);

Int dot(const Ivec& a, const Ivec& b);

bool is_zero(const Ivec& v);

/// gcd of the absolute values of the entries; 0 for the zero vector.
Int content(const Ivec& v);

/// v divided by its content; the zero vector is returned unchanged.
Ivec primitive(Ivec v);

/// Clear denominators, then reduce to the primitive integer vector.
Ivec primitive(const Qvec& v);

Ivec negated(const Ivec& v);
Ivec add(const Ivec& a, const Ivec& b);

/// ca*a - cb*b, entrywise.
Ivec scaled_sub(const Int& ca, const Ivec& a, const Int& cb, const Ivec& b);

Ivec scaled(const Int& c, const Ivec& v);

Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

Rat rat_of(const Int& num, const Int& den);
Int rat_floor(const Rat& x);
Int rat_ceil(const Rat& x);

/// "(a, b, c)" with exact integer entries.
std::string to_string(const Ivec& v);

}  // namespace mhproj
