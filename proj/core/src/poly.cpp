#include "belyi/poly.hpp"

#include <algorithm>

namespace belyi {

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

Poly Poly::constant(const Scalar& c) { return Poly({c}); }

Poly Poly::x() { return Poly({Scalar(0), Scalar(1)}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Poly::coeff(long k) const {
  if (k < 0 || k >= static_cast<long>(c_.size())) return Scalar(0);
  return c_[k];
}

Scalar Poly::leading() const {
  if (is_zero()) throw Error("leading coefficient of zero polynomial");
  return c_.back();
}

Scalar Poly::eval(const Scalar& z) const {
  Scalar acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly Poly::derivative() const {
  if (degree() <= 0) return Poly();
  std::vector<Scalar> d(c_.size() - 1);
  for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = Scalar(Rat(k)) * c_[k];
  return Poly(std::move(d));
}

Poly Poly::pow(unsigned long e) const {
  Poly acc = Poly::constant(Scalar(1));
  Poly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Scalar inv = inverse(leading());
  return inv * *this;
}

bool Poly::all_rational() const {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Scalar& s) { return s.is_rational(); });
}

Poly Poly::primitive_integer() const {
  if (is_zero()) return *this;
  Int den = 1;
  for (const auto& s : c_) den = lcm(den, s.rational().get_den());
  Int content = 0;
  std::vector<Int> zs;
  zs.reserve(c_.size());
  for (const auto& s : c_) {
    Rat scaled = s.rational() * Rat(den);
    zs.push_back(scaled.get_num());
    content = gcd(content, zs.back());
  }
  std::vector<Scalar> out;
  out.reserve(zs.size());
  for (const auto& z : zs) out.emplace_back(Rat(z / content));
  return Poly(std::move(out));
}

Poly operator+(const Poly& p, const Poly& q) {
  std::vector<Scalar> c(std::max(p.c_.size(), q.c_.size()), Scalar(0));
  for (size_t k = 0; k < c.size(); ++k) c[k] = p.coeff(k) + q.coeff(k);
  return Poly(std::move(c));
}

Poly operator-(const Poly& p, const Poly& q) {
  std::vector<Scalar> c(std::max(p.c_.size(), q.c_.size()), Scalar(0));
  for (size_t k = 0; k < c.size(); ++k) c[k] = p.coeff(k) - q.coeff(k);
  return Poly(std::move(c));
}

Poly operator-(const Poly& p) { return Scalar(-1) * p; }

Poly operator*(const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Poly();
  std::vector<Scalar> c(p.c_.size() + q.c_.size() - 1, Scalar(0));
  for (size_t i = 0; i < p.c_.size(); ++i)
    for (size_t j = 0; j < q.c_.size(); ++j)
      c[i + j] = c[i + j] + p.c_[i] * q.c_[j];
  return Poly(std::move(c));
}

Poly operator*(const Scalar& s, const Poly& p) {
  std::vector<Scalar> c(p.c_.size());
  for (size_t k = 0; k < c.size(); ++k) c[k] = s * p.c_[k];
  return Poly(std::move(c));
}

bool operator==(const Poly& p, const Poly& q) {
  if (p.c_.size() != q.c_.size()) return false;
  for (size_t k = 0; k < p.c_.size(); ++k)
    if (p.c_[k] != q.c_[k]) return false;
  return true;
}

std::pair<Poly, Poly> Poly::divrem(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw DivisionByZero("polynomial division by zero");
  Poly rem = p;
  if (p.degree() < q.degree()) return {Poly(), rem};
  std::vector<Scalar> quo(p.degree() - q.degree() + 1, Scalar(0));
  Scalar lead_inv = inverse(q.leading());
  while (!rem.is_zero() && rem.degree() >= q.degree()) {
    long shift = rem.degree() - q.degree();
    Scalar f = rem.leading() * lead_inv;
    quo[shift] = f;
    std::vector<Scalar> sub(shift, Scalar(0));
    sub.insert(sub.end(), q.c_.begin(), q.c_.end());
    rem = rem - f * Poly(std::move(sub));
  }
  return {Poly(std::move(quo)), rem};
}

Poly Poly::gcd_monic(const Poly& p, const Poly& q) {
  Poly a = p, b = q;
  while (!b.is_zero()) {
    auto [quo, rem] = divrem(a, b);
    (void)quo;
    a = b;
    b = rem;
  }
  return a.is_zero() ? a : a.monic();
}

Poly compose_mobius_numerator(const Poly& p, long N, const Scalar& a,
                              const Scalar& b, const Scalar& c,
                              const Scalar& d) {
  if (N < p.degree()) throw Error("compose_mobius_numerator: N < deg p");
  Poly num({b, a});
  Poly den({d, c});
  Poly out;
  for (long k = 0; k <= p.degree(); ++k) {
    if (p.coeff(k).is_zero()) continue;
    out = out + p.coeff(k) * (num.pow(k) * den.pow(N - k));
  }
  // Degree-N homogenization even when all terms vanished at top degree.
  if (p.is_zero()) return Poly();
  return out;
}

}  // namespace belyi
