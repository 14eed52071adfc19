#pragma once

#include "belyi/poly.hpp"

namespace belyi {

// Truncated power series: coefficients of x^0..x^(T-1), exact scalars.
class Series {
 public:
  Series() = default;
  Series(std::vector<Scalar> coeffs, long T);
  static Series one(long T);
  static Series from_poly(const Poly& p, long T);

  long truncation() const { return static_cast<long>(c_.size()); }
  Scalar coeff(long k) const;
  const std::vector<Scalar>& coeffs() const { return c_; }

  // Truncation of this series to a polynomial of degree <= deg.
  Poly truncate(long deg) const;

  friend Series operator+(const Series& p, const Series& q);
  friend Series operator-(const Series& p, const Series& q);
  friend Series operator*(const Series& p, const Series& q);

 private:
  std::vector<Scalar> c_;
};

// (1 + alpha*x + beta*x^2)^e as a series to T terms, for rational exponent e.
Series series_binomial_pow(const Scalar& alpha, const Scalar& beta,
                           const Rat& e, long T);

}  // namespace belyi
