#pragma once

#include <initializer_list>
#include <vector>

#include "belyi/scalar.hpp"

namespace belyi {

// Dense univariate polynomial over Q or a fixed quadratic field.  The zero
// polynomial has an empty coefficient vector and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs);
  Poly(std::initializer_list<Scalar> coeffs);
  static Poly constant(const Scalar& c);
  // x - already shifted monomial helpers are built from this.
  static Poly x();

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Scalar coeff(long k) const;
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar leading() const;

  Scalar eval(const Scalar& z) const;
  Poly derivative() const;
  Poly pow(unsigned long e) const;
  Poly monic() const;
  bool all_rational() const;

  // Clears denominators and content: returns primitive integer-coefficient
  // polynomial with the same roots (requires rational coefficients).
  Poly primitive_integer() const;

  friend Poly operator+(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p);
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(const Scalar& s, const Poly& p);
  friend bool operator==(const Poly& p, const Poly& q);
  friend bool operator!=(const Poly& p, const Poly& q) { return !(p == q); }

  // Field division; q must be nonzero.
  static std::pair<Poly, Poly> divrem(const Poly& p, const Poly& q);
  static Poly gcd_monic(const Poly& p, const Poly& q);

 private:
  void trim();
  std::vector<Scalar> c_;
};

// Numerator of p((a*x+b)/(c*x+d)) cleared against (c*x+d)^N, for N >= deg p.
Poly compose_mobius_numerator(const Poly& p, long N, const Scalar& a,
                              const Scalar& b, const Scalar& c,
                              const Scalar& d);

}  // namespace belyi
