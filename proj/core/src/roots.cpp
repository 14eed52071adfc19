#include "belyi/roots.hpp"

#include <algorithm>
#include <map>

namespace belyi {

namespace {

// Positive divisors of |n| from trial-division factorization.  A residual
// cofactor is kept as one pseudo-prime factor; this is only a heuristic for
// rational-root candidates, so an incomplete factorization merely leaves
// roots in the residual.
std::vector<Int> positive_divisors(Int n) {
  n = abs(n);
  std::map<Int, int> fac;
  for (unsigned long p = 2; Int(p) * p <= n && p <= 2000000ul;
       p == 2 ? p = 3 : p += 2) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      fac[Int(p)]++;
      n /= p;
    }
  }
  if (n > 1) fac[n]++;
  std::vector<Int> divs{Int(1)};
  for (const auto& [p, e] : fac) {
    size_t sz = divs.size();
    Int pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < sz; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

std::optional<Rat> sqrt_detect(const Rat& x) {
  if (sgn(x) < 0) return std::nullopt;
  if (x == 0) return Rat(0);
  if (!mpz_perfect_square_p(x.get_num().get_mpz_t()) ||
      !mpz_perfect_square_p(x.get_den().get_mpz_t()))
    return std::nullopt;
  Rat r;
  mpz_sqrt(r.get_num().get_mpz_t(), x.get_num().get_mpz_t());
  mpz_sqrt(r.get_den().get_mpz_t(), x.get_den().get_mpz_t());
  return r;
}

std::optional<Scalar> sqrt_detect_quad(const Scalar& x) {
  if (x.is_rational()) {
    if (auto r = sqrt_detect(x.a)) return Scalar(*r);
    return std::nullopt;
  }
  // y = s + t sqrt(d) with y^2 = x requires s^2 + d t^2 = a and 2 s t = b.
  // s^2 is then a root of X^2 - a X + d b^2 / 4.
  Rat disc = x.a * x.a - Rat(x.d) * x.b * x.b;  // field norm of x
  auto n = sqrt_detect(disc);
  if (!n) return std::nullopt;
  for (int sign = 0; sign < 2; ++sign) {
    Rat s2 = (x.a + (sign ? -*n : *n)) / 2;
    auto s = sqrt_detect(s2);
    if (!s || *s == 0) continue;
    Rat t = x.b / (2 * *s);
    Scalar y(*s, t, x.d);
    if (y * y == x) return y;
  }
  // x could be d times a rational square: sqrt = t*sqrt(d), needs b == 0,
  // which is handled by the rational branch; nothing else lies in the field.
  return std::nullopt;
}

std::pair<Scalar, Scalar> solve_quadratic(const Rat& A, const Rat& B,
                                          const Rat& C) {
  if (A == 0) throw Error("solve_quadratic: leading coefficient is zero");
  Rat disc = B * B - 4 * A * C;
  if (auto r = sqrt_detect(abs(disc)); r && sgn(disc) >= 0) {
    Scalar r1((-B - *r) / (2 * A));
    Scalar r2((-B + *r) / (2 * A));
    if (scalar_less(r2, r1)) std::swap(r1, r2);
    return {r1, r2};
  }
  auto [s, d0] = squarefree_split(Rat(disc).get_num() * Rat(disc).get_den());
  // disc = num/den = (num*den)/den^2, so sqrt(disc) = s*sqrt(d0)/den.
  if (!d0.fits_slong_p()) throw Error("discriminant field too large");
  Rat coef(s, Rat(disc).get_den());
  coef.canonicalize();
  Scalar r1(-B / (2 * A), -coef / (2 * A), d0.get_si());
  Scalar r2(-B / (2 * A), coef / (2 * A), d0.get_si());
  if (scalar_less(r2, r1)) std::swap(r1, r2);
  return {r1, r2};
}

std::pair<Scalar, Scalar> quad_factor_roots(const QuadFactor& f) {
  if (f.factor.degree() != 2) throw Error("quad_factor_roots: degree != 2");
  return solve_quadratic(f.factor.coeff(2).rational(),
                         f.factor.coeff(1).rational(),
                         f.factor.coeff(0).rational());
}

SplitResult split_roots(const Poly& p) {
  if (!p.all_rational()) throw Error("split_roots: coefficients must be rational");
  SplitResult out;
  if (p.is_zero() || p.degree() == 0) return out;

  Poly work = p;
  std::map<Rat, int> roots;

  // Root x = 0 first.
  while (!work.is_zero() && work.coeff(0).is_zero() && work.degree() >= 1) {
    roots[Rat(0)]++;
    std::vector<Scalar> c(work.coeffs().begin() + 1, work.coeffs().end());
    work = Poly(std::move(c));
  }

  bool progress = true;
  while (progress && work.degree() >= 1) {
    progress = false;
    Poly zp = work.primitive_integer();
    Int a0 = zp.coeff(0).rational().get_num();
    Int an = zp.leading().rational().get_num();
    auto nums = positive_divisors(a0);
    auto dens = positive_divisors(an);
    for (const Int& n : nums) {
      for (const Int& d : dens) {
        if (gcd(n, d) != 1) continue;
        for (int sign = 0; sign < 2; ++sign) {
          Rat cand(sign ? -n : n, d);
          cand.canonicalize();
          if (!work.eval(Scalar(cand)).is_zero()) continue;
          Poly lin({Scalar(-cand), Scalar(1)});
          while (true) {
            auto [quo, rem] = Poly::divrem(work, lin);
            if (!rem.is_zero()) break;
            roots[cand]++;
            work = quo;
            progress = true;
          }
        }
      }
      if (work.degree() < 1) break;
    }
  }

  for (const auto& [r, m] : roots) out.rational_roots.push_back({r, m});

  if (work.degree() == 2) {
    Poly mon = work.monic();
    Rat disc =
        mon.coeff(1).rational() * mon.coeff(1).rational() - 4 * mon.coeff(0).rational();
    auto [s, d0] = squarefree_split(disc.get_num() * disc.get_den());
    (void)s;
    long fd = d0.fits_slong_p() ? d0.get_si() : 0;
    out.quadratic_factors.push_back({mon, 1, fd});
  } else if (work.degree() >= 3) {
    out.residual = work.monic();
  }
  return out;
}

std::vector<Scalar> explicit_roots(const SplitResult& s) {
  std::vector<Scalar> out;
  for (const auto& r : s.rational_roots) out.emplace_back(r.root);
  for (const auto& q : s.quadratic_factors) {
    auto [r1, r2] = quad_factor_roots(q);
    out.push_back(r1);
    out.push_back(r2);
  }
  std::sort(out.begin(), out.end(), scalar_less);
  return out;
}

}  // namespace belyi
