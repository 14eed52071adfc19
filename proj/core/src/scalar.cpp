#include "belyi/scalar.hpp"

#include <cctype>
#include <cmath>

namespace belyi {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '+' &&
        c != '/')
      throw ParseError("bad rational literal: " + s);
  }
  // GMP accepts neither a leading '+' nor a zero denominator.
  const std::string body = s[0] == '+' ? s.substr(1) : s;
  try {
    Rat r(body);
    if (r.get_den() == 0) throw ParseError("zero denominator: " + s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ParseError("bad rational literal: " + s);
  }
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

bool is_integer(const Rat& r) { return r.get_den() == 1; }

long to_long(const Rat& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p())
    throw NotRational("value is not a small integer: " + to_string(r));
  return r.get_num().get_si();
}

Rat pow_rat(const Rat& r, long e) {
  if (e == 0) return Rat(1);
  if (r == 0 && e < 0) throw DivisionByZero("0 to a negative power");
  Rat base = e > 0 ? r : Rat(1) / r;
  unsigned long n = e > 0 ? e : -e;
  Rat res;
  mpz_pow_ui(res.get_num().get_mpz_t(), base.get_num().get_mpz_t(), n);
  mpz_pow_ui(res.get_den().get_mpz_t(), base.get_den().get_mpz_t(), n);
  res.canonicalize();
  return res;
}

std::pair<Int, Int> squarefree_split(const Int& n) {
  if (n == 0) throw Error("squarefree_split of zero");
  Int s = 1;
  Int d = abs(n);
  // Trial division: pull out p^2 factors for small primes.
  for (unsigned long p = 2; p <= 1000000ul && Int(p) * p <= d; p == 2 ? p = 3 : p += 2) {
    Int p2 = Int(p) * p;
    while (mpz_divisible_p(d.get_mpz_t(), p2.get_mpz_t())) {
      d /= p2;
      s *= p;
    }
  }
  // Whatever large square factor is left must be a perfect square of a prime
  // (or product of large primes); catch the perfect-square tail.
  if (mpz_perfect_square_p(d.get_mpz_t())) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), d.get_mpz_t());
    s *= r;
    d = 1;
  }
  if (sgn(n) < 0) d = -d;
  return {s, d};
}

Scalar::Scalar(const Rat& a_, const Rat& b_, long d_) : a(a_), b(b_), d(d_) {
  if (b == 0) {
    d = 0;
    return;
  }
  if (d == 0) throw Error("nonzero sqrt coefficient with d == 0");
  if (d == 1) {
    a += b;
    b = 0;
    d = 0;
    return;
  }
  auto [s, d0] = squarefree_split(Int(d));
  if (d0 != d) {
    b *= Rat(s);
    if (!d0.fits_slong_p()) throw Error("field discriminant too large");
    d = d0.get_si();
    if (d == 1) {
      a += b;
      b = 0;
      d = 0;
    }
  }
}

const Rat& Scalar::rational() const {
  if (d != 0) throw NotRational("value lies in Q(sqrt(" + std::to_string(d) +
                                ")), not Q");
  return a;
}

namespace {
long joint_field(const Scalar& x, const Scalar& y) {
  if (x.d == 0) return y.d;
  if (y.d == 0 || x.d == y.d) return x.d;
  throw FieldMismatch("mixing Q(sqrt(" + std::to_string(x.d) +
                      ")) with Q(sqrt(" + std::to_string(y.d) + "))");
}
}  // namespace

Scalar operator+(const Scalar& x, const Scalar& y) {
  long d = joint_field(x, y);
  return Scalar(x.a + y.a, x.b + y.b, d);
}

Scalar operator-(const Scalar& x, const Scalar& y) {
  long d = joint_field(x, y);
  return Scalar(x.a - y.a, x.b - y.b, d);
}

Scalar operator-(const Scalar& x) { return Scalar(-x.a, -x.b, x.d); }

Scalar operator*(const Scalar& x, const Scalar& y) {
  long d = joint_field(x, y);
  return Scalar(x.a * y.a + Rat(d) * x.b * y.b, x.a * y.b + x.b * y.a, d);
}

Scalar inverse(const Scalar& x) {
  if (x.is_zero()) throw DivisionByZero("inverse of zero");
  if (x.d == 0) return Scalar(Rat(1) / x.a);
  Rat n = x.norm();
  if (n == 0) throw DivisionByZero("inverse of zero-norm element");
  return Scalar(x.a / n, -x.b / n, x.d);
}

Scalar operator/(const Scalar& x, const Scalar& y) { return x * inverse(y); }

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.b == 0 && y.b == 0) return x.a == y.a;
  return x.a == y.a && x.b == y.b && x.d == y.d;
}

Scalar pow_scalar(const Scalar& x, long e) {
  if (e < 0) return pow_scalar(inverse(x), -e);
  Scalar acc(1);
  Scalar base = x;
  unsigned long n = e;
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  return acc;
}

bool scalar_less(const Scalar& x, const Scalar& y) {
  if (x.d != y.d) return x.d < y.d;
  int c = cmp(x.a, y.a);
  if (c != 0) return c < 0;
  return cmp(x.b, y.b) < 0;
}

std::string to_string(const Scalar& x) {
  if (x.d == 0) return to_string(x.a);
  std::string out = to_string(x.a);
  if (sgn(x.b) >= 0) out += "+";
  out += to_string(x.b) + "*sqrt(" + std::to_string(x.d) + ")";
  return out;
}

double to_double(const Scalar& x) {
  if (x.d == 0) return x.a.get_d();
  if (x.d < 0) throw Error("no real embedding for d < 0");
  return x.a.get_d() + x.b.get_d() * std::sqrt(static_cast<double>(x.d));
}

}  // namespace belyi
