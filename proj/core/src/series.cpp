#include "belyi/series.hpp"

namespace belyi {

Series::Series(std::vector<Scalar> coeffs, long T) : c_(std::move(coeffs)) {
  c_.resize(T, Scalar(0));
}

Series Series::one(long T) {
  std::vector<Scalar> c(T, Scalar(0));
  if (T > 0) c[0] = Scalar(1);
  Series s;
  s.c_ = std::move(c);
  return s;
}

Series Series::from_poly(const Poly& p, long T) {
  std::vector<Scalar> c(T, Scalar(0));
  for (long k = 0; k < T && k <= p.degree(); ++k) c[k] = p.coeff(k);
  Series s;
  s.c_ = std::move(c);
  return s;
}

Scalar Series::coeff(long k) const {
  if (k < 0 || k >= truncation())
    throw Error("series coefficient beyond truncation");
  return c_[k];
}

Poly Series::truncate(long deg) const {
  std::vector<Scalar> c;
  for (long k = 0; k <= deg && k < truncation(); ++k) c.push_back(c_[k]);
  return Poly(std::move(c));
}

Series operator+(const Series& p, const Series& q) {
  long T = std::min(p.truncation(), q.truncation());
  std::vector<Scalar> c(T);
  for (long k = 0; k < T; ++k) c[k] = p.c_[k] + q.c_[k];
  Series s;
  s.c_ = std::move(c);
  return s;
}

Series operator-(const Series& p, const Series& q) {
  long T = std::min(p.truncation(), q.truncation());
  std::vector<Scalar> c(T);
  for (long k = 0; k < T; ++k) c[k] = p.c_[k] - q.c_[k];
  Series s;
  s.c_ = std::move(c);
  return s;
}

Series operator*(const Series& p, const Series& q) {
  long T = std::min(p.truncation(), q.truncation());
  std::vector<Scalar> c(T, Scalar(0));
  for (long i = 0; i < T; ++i) {
    if (p.c_[i].is_zero()) continue;
    for (long j = 0; i + j < T; ++j) c[i + j] = c[i + j] + p.c_[i] * q.c_[j];
  }
  Series s;
  s.c_ = std::move(c);
  return s;
}

Series series_binomial_pow(const Scalar& alpha, const Scalar& beta,
                           const Rat& e, long T) {
  // f = (1 + a x + b x^2)^e satisfies (1 + a x + b x^2) f' = e (a + 2 b x) f,
  // giving a two-term recurrence for the coefficients.
  std::vector<Scalar> f(std::max<long>(T, 1), Scalar(0));
  f[0] = Scalar(1);
  Scalar se{Rat(e)};
  for (long k = 0; k + 1 < T; ++k) {
    Scalar t = (se - Scalar(rat(k))) * alpha * f[k];
    if (k >= 1)
      t = t + (Scalar(rat(2)) * se - Scalar(rat(k - 1))) * beta * f[k - 1];
    f[k + 1] = t / Scalar(rat(k + 1));
  }
  f.resize(T, Scalar(0));
  return Series(std::move(f), T);
}

}  // namespace belyi
