#pragma once

// Overflow-checked native-integer arithmetic for internal fast paths.  Every
// operation either returns the exact result or throws machine::overflow, so a
// caller can run a whole computation on machine words and restart it with
// exact bignum arithmetic the moment anything would wrap.  Which path served
// a given call is unobservable from the results.

namespace mhproj::machine {

struct overflow {};

inline long add(long a, long b) {
  long r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow{};
  return r;
}

inline long sub(long a, long b) {
  long r;
  if (__builtin_sub_overflow(a, b, &r)) throw overflow{};
  return r;
}

inline long mul(long a, long b) {
  long r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow{};
  return r;
}

}  // namespace mhproj::machine
