#include "belyi/hypergeom.hpp"

namespace belyi {

Rat pochhammer(const Rat& a, long k) {
  if (k < 0) throw Error("pochhammer: negative k");
  Rat out(1);
  for (long j = 0; j < k; ++j) out *= a + j;
  return out;
}

namespace {

// Lower parameter c is unusable when the series hits a zero of (c)_k before
// terminating at degree n, i.e. c in {0, -1, ..., -(n-1)}.
bool lower_param_bad(const Rat& c, long n) {
  if (!is_integer(c)) return false;
  return sgn(c) <= 0 && c > Rat(-n);
}

Poly terminating_series(long n, const Rat& a_upper, const Rat& b_upper,
                        const Rat& c) {
  std::vector<Scalar> coef(n + 1, Scalar(0));
  Rat term(1);
  coef[0] = Scalar(term);
  for (long k = 1; k <= n; ++k) {
    term *= (a_upper + (k - 1)) * (b_upper + (k - 1));
    term /= (c + (k - 1)) * k;
    coef[k] = Scalar(term);
  }
  return Poly(std::move(coef));
}

}  // namespace

Poly hpg_poly(const HpgSpec& spec) {
  if (spec.N < 0) throw UndefinedParameters("hpg_poly: N must be >= 0");
  if (lower_param_bad(spec.c, spec.N))
    throw UndefinedParameters(
        "hpg_poly: lower parameter " + to_string(spec.c) +
        " makes the series undefined (needs c <= " + std::to_string(-spec.N) +
        " among nonpositive integers)");
  return terminating_series(spec.N, Rat(-spec.N), spec.b, spec.c);
}

Poly hpg_half_poly(const HalfSpec& spec) {
  if (spec.N < 0) throw UndefinedParameters("hpg_half_poly: N must be >= 0");
  long M = spec.N / 2;
  if (lower_param_bad(spec.c, M))
    throw UndefinedParameters(
        "hpg_half_poly: lower parameter " + to_string(spec.c) +
        " makes the series undefined");
  // Upper parameters -N/2 and -(N-1)/2; the integer one is -M.
  Rat b = spec.N % 2 == 0 ? rat(1 - spec.N, 2) : rat(-spec.N, 2);
  return terminating_series(M, Rat(-M), b, spec.c);
}

Rat Mobius::apply(const Rat& z) const {
  Rat den = c * z + d;
  if (den == 0) throw DivisionByZero("Mobius map pole");
  return (a * z + b) / den;
}

std::vector<SymmetryImage> symmetry_images(const HpgSpec& spec) {
  // Work with the symmetric lower-parameter convention: the input polynomial
  // is F(-N, b; -c+1-N; z) for c = 1 - N - c_lower.
  long N = spec.N;
  Rat b = spec.b;
  Rat c = Rat(1 - N) - spec.c;
  Rat e = -b - c + Rat(1 - N);
  Rat cN = pochhammer(c, N);
  if (cN == 0)
    throw UndefinedParameters("symmetry_images: input parameters undefined");

  std::vector<SymmetryImage> out;
  auto push = [&](std::string tag, Rat ub, Rat lc, Mobius mu, Rat num_factor,
                  long pz, long p1) {
    SymmetryImage img;
    img.tag = std::move(tag);
    img.spec = HpgSpec{N, ub, lc};
    img.mobius = mu;
    img.prefactor = num_factor / cN;
    img.pow_z = pz;
    img.pow_one_minus_z = p1;
    if (lower_param_bad(lc, N)) {
      img.defined = false;
      img.why_undefined = "image lower parameter " + to_string(lc) +
                          " is an excluded nonpositive integer";
    }
    out.push_back(std::move(img));
  };

  push("identity", b, spec.c, Mobius{1, 0, 0, 1}, cN, 0, 0);
  push("z->1/z", c, Rat(1 - N) - b, Mobius{0, 1, 1, 0}, pochhammer(b, N), N,
       0);
  push("z->1-z", b, b + c, Mobius{-1, 1, 0, 1}, pochhammer(b + c, N), 0, 0);
  push("z->1-1/z", c, b + c, Mobius{1, -1, 1, 0}, pochhammer(b + c, N), N, 0);
  push("z->z/(z-1)", e, spec.c, Mobius{1, 0, 1, -1}, cN, 0, N);
  push("z->1/(1-z)", e, Rat(1 - N) - b, Mobius{0, 1, -1, 1},
       (N % 2 ? Rat(-1) : Rat(1)) * pochhammer(b, N), 0, N);
  return out;
}

bool symmetry_image_holds(const HpgSpec& spec, const SymmetryImage& img) {
  if (!img.defined) return false;
  Poly p = hpg_poly(spec);
  Poly q = hpg_poly(img.spec);
  long N = spec.N;
  Poly den({Scalar(img.mobius.d), Scalar(img.mobius.c)});
  Poly lhs = p * den.pow(N);
  Poly zpow = Poly::x().pow(img.pow_z);
  Poly one_minus_z = Poly({Scalar(1), Scalar(-1)}).pow(img.pow_one_minus_z);
  Poly comp = compose_mobius_numerator(q, N, Scalar(img.mobius.a),
                                       Scalar(img.mobius.b),
                                       Scalar(img.mobius.c),
                                       Scalar(img.mobius.d));
  Poly rhs = Scalar(img.prefactor) * (zpow * one_minus_z * comp);
  return lhs == rhs;
}

Poly contiguous_step(Family fam, long k, const Rat& b, const Rat& c,
                     const Poly& pk, const Poly& pk_minus_1) {
  Poly z = Poly::x();
  if (fam == Family::Integer) {
    if (c + k == 0 || c + (k - 1) == 0)
      throw DegenerateParameters("contiguous_step: pivot (c+k)(c+k-1) = 0");
    // (k+c) P(k+1) = (kz+k+bz+c) P(k) - k(k-1+b+c) z/(k-1+c) P(k-1)
    Poly lin({Scalar(Rat(k) + c), Scalar(Rat(k) + b)});
    Rat f = Rat(k) * (Rat(k - 1) + b + c) / (Rat(k - 1) + c);
    Poly rhs = lin * pk - Scalar(f) * (z * pk_minus_1);
    return Scalar(Rat(1) / (Rat(k) + c)) * rhs;
  }
  if (c + k == 0 || c + (k - 1) == 0)
    throw DegenerateParameters("contiguous_step: pivot (c+k)(c+k-1) = 0");
  // P(k+1) = P(k) - k z (2c+k-1)/(4(c+k)(c+k-1)) P(k-1)
  Rat f = Rat(k) * (2 * c + (k - 1)) / (4 * (c + k) * (c + (k - 1)));
  return pk - Scalar(f) * (z * pk_minus_1);
}

Rat value_at_one(Family fam, long k, const Rat& b, const Rat& c) {
  if (fam == Family::Integer) {
    Rat den = pochhammer(c, k);
    if (den == 0) throw DegenerateParameters("value_at_one: (c)_k = 0");
    return pochhammer(b + c, k) / den;
  }
  long half = k / 2;
  Rat den = pochhammer(c + Rat((k + 1) / 2), half);
  if (den == 0) throw DegenerateParameters("value_at_one: denominator zero");
  return pochhammer(c + rat(1, 2), half) / den;
}

Rat krawtchouk(long n, const Rat& x, const Rat& p, long N) {
  if (p == 0) throw DivisionByZero("krawtchouk: p = 0");
  Poly f = hpg_poly(HpgSpec{n, -x, Rat(-N)});
  return f.eval(Scalar(Rat(1) / p)).rational();
}

std::pair<Rat, Rat> krawtchouk_bridge(long m, long n, const Rat& M,
                                      const Rat& p) {
  Poly f = hpg_poly(HpgSpec{n, Rat(-m), M});
  Rat lhs = f.eval(Scalar(Rat(1) - Rat(1) / p)).rational();
  Rat den = pochhammer(M, n);
  if (den == 0) throw DegenerateParameters("krawtchouk_bridge: (M)_n = 0");
  Rat pref = pochhammer(M + m, n) / den;
  long Nbig = to_long(M + m + n - 1);
  Rat rhs = pref * krawtchouk(n, Rat(m), p, Nbig);
  return {lhs, rhs};
}

}  // namespace belyi
