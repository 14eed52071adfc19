#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>

#include "belyi/errors.hpp"

namespace belyi {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "n" or "n/d" with optional sign.  Throws ParseError on junk.
Rat rat_from_string(const std::string& s);

std::string to_string(const Rat& r);

bool is_integer(const Rat& r);

// Exact value if r is an integer fitting in long, otherwise throws.
long to_long(const Rat& r);

// r^e for any integer e (negative e requires r != 0).
Rat pow_rat(const Rat& r, long e);

// Writes n = s^2 * d with d squarefree (sign kept on d).  n must be nonzero.
// Extraction of square factors uses trial division up to a fixed bound plus a
// perfect-square tail, which covers everything this library produces.
std::pair<Int, Int> squarefree_split(const Int& n);

// Element a + b*sqrt(d) of a real or imaginary quadratic field, or of Q when
// d == 0 (then b == 0 too).  d is squarefree and != 1.  Arithmetic between
// values with different nonzero d throws FieldMismatch.
struct Scalar {
  Rat a;
  Rat b;
  long d = 0;

  Scalar() : a(0), b(0) {}
  Scalar(long n) : a(n), b(0) {}
  Scalar(const Rat& r) : a(r), b(0) {}
  Scalar(const Rat& a_, const Rat& b_, long d_);

  bool is_rational() const { return d == 0; }
  bool is_zero() const { return a == 0 && b == 0; }
  const Rat& rational() const;
  Scalar conjugate() const { return Scalar(a, -b, d); }
  Rat norm() const { return a * a - d * b * b; }
};

Scalar operator+(const Scalar& x, const Scalar& y);
Scalar operator-(const Scalar& x, const Scalar& y);
Scalar operator-(const Scalar& x);
Scalar operator*(const Scalar& x, const Scalar& y);
Scalar operator/(const Scalar& x, const Scalar& y);
bool operator==(const Scalar& x, const Scalar& y);
inline bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

Scalar inverse(const Scalar& x);
Scalar pow_scalar(const Scalar& x, long e);

// Total order for deterministic output: by (d, a, b).
bool scalar_less(const Scalar& x, const Scalar& y);

std::string to_string(const Scalar& x);

// Embedding into R taking sqrt(d) > 0 for d > 0; throws for d < 0.
double to_double(const Scalar& x);

}  // namespace belyi
