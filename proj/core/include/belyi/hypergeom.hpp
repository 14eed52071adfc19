#pragma once

#include <string>
#include <vector>

#include "belyi/poly.hpp"

namespace belyi {

// (a)_k = a (a+1) ... (a+k-1), with (a)_0 = 1.
Rat pochhammer(const Rat& a, long k);

// Terminating Gauss series F(-N, b; c; z) as a polynomial of degree <= N.
// Integer c <= 0 is accepted only in the degenerate reading c <= -N; lower
// parameters in {0, -1, ..., -(N-1)} are rejected (UndefinedParameters).
struct HpgSpec {
  long N = 0;
  Rat b;
  Rat c;
};
Poly hpg_poly(const HpgSpec& spec);

// Half-integer family: F(-N/2, -(N-1)/2; c; z) read as the terminating
// series of degree M = floor(N/2); the non-integer upper parameter plays the
// role of b.  Lower parameters in {0, -1, ..., -(M-1)} are rejected.
struct HalfSpec {
  long N = 0;
  Rat c;
};
Poly hpg_half_poly(const HalfSpec& spec);

struct Mobius {
  // z -> (a z + b) / (c z + d)
  Rat a, b, c, d;
  Rat apply(const Rat& z) const;
};

// One member of the six-element symmetry orbit: the original polynomial P
// satisfies prefactor * z^pow_z * (1-z)^pow_one_minus_z * Q(mobius(z)) = P(z)
// as rational functions, where Q is the polynomial of `spec`.
struct SymmetryImage {
  std::string tag;
  HpgSpec spec;
  Mobius mobius;
  Rat prefactor;
  long pow_z = 0;
  long pow_one_minus_z = 0;
  bool defined = true;   // false when the image's parameters are excluded
  std::string why_undefined;
};

std::vector<SymmetryImage> symmetry_images(const HpgSpec& spec);

// Verifies the identity of a symmetry image exactly (denominators cleared).
bool symmetry_image_holds(const HpgSpec& spec, const SymmetryImage& img);

enum class Family { Integer, Half };

// Three-term contiguous step: from P_k and P_{k-1} produce P_{k+1}, where
// P_k = F(-k, b; c_k; z) along the family's lower-parameter path.
// Integer family: P_k = F(-k, b; c - k + 1 ... ) is indexed so that
// contiguous_step(Integer, k, b, c, ...) uses the printed recurrences.
Poly contiguous_step(Family fam, long k, const Rat& b, const Rat& c,
                     const Poly& pk, const Poly& pk_minus_1);

// Closed form for P_k(1) (Chu-Vandermonde).
Rat value_at_one(Family fam, long k, const Rat& b, const Rat& c);

// Krawtchouk polynomial K_n(x; p, N) = F(-n, -x; -N; 1/p).
Rat krawtchouk(long n, const Rat& x, const Rat& p, long N);

// Both sides of the bridge identity
//   F(-m, -n; M; 1 - 1/p) = (M+m)_n / (M)_n * K_n(m; p, M+m+n-1)
// for integer m, n >= 0 (M such that everything is defined).
std::pair<Rat, Rat> krawtchouk_bridge(long m, long n, const Rat& M,
                                      const Rat& p);

}  // namespace belyi
