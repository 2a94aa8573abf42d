#pragma once

#include <gmpxx.h>

#include <string>

#include "icox/errors.hpp"

namespace icox {

// Exact arbitrary-precision integers and rationals. All certified
// computations in the library run on these; doubles appear only in the
// volume module and in display code.
using Int = mpz_class;
using Rat = mpq_class;

// gmpxx has no long long conversions; every count in this library fits a long.
inline Int to_int(long long v) { return Int(static_cast<long>(v)); }

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat make_rat(long num, long den) { return make_rat(Int(num), Int(den)); }

// Accepts "5", "-3/7", "0.25", "1e-8", "2.5e-3".
Rat parse_rational(const std::string& text);

// Lowest-terms rendering: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& r);

double rat_to_double(const Rat& r);

// Closed rational interval [lo, hi]; lo == hi encodes an exact value.
struct RatInterval {
  Rat lo, hi;

  bool exact() const { return lo == hi; }
  Rat width() const { return hi - lo; }
  Rat midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rat& x) const { return lo <= x && x <= hi; }
  std::string str() const;
};

}  // namespace icox
