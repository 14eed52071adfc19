#pragma once

#include <random>
#include <vector>

#include "belyi/poly.hpp"

namespace testutil {

using belyi::Poly;
using belyi::Rat;
using belyi::Scalar;

// Deterministic small rationals for property tests.
class RatGen {
 public:
  explicit RatGen(unsigned seed) : rng_(seed) {}

  Rat rat(long max_num = 12, long max_den = 6) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return belyi::rat(num(rng_), den(rng_));
  }

  Rat nonzero_rat(long max_num = 12, long max_den = 6) {
    for (;;) {
      Rat r = rat(max_num, max_den);
      if (r != 0) return r;
    }
  }

  long integer(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng_);
  }

 private:
  std::mt19937 rng_;
};

// Lagrange interpolation through (x_i, y_i) with distinct x_i.
inline Poly interpolate(const std::vector<std::pair<Rat, Rat>>& pts) {
  Poly out;
  for (size_t i = 0; i < pts.size(); ++i) {
    Poly basis{Scalar(1)};
    Rat denom(1);
    for (size_t j = 0; j < pts.size(); ++j) {
      if (j == i) continue;
      basis = basis * Poly{Scalar(-pts[j].first), Scalar(1)};
      denom *= pts[i].first - pts[j].first;
    }
    out = out + Scalar(Rat(pts[i].second / denom)) * basis;
  }
  return out;
}

// F(-N, b; c; z) evaluated with quadratic-field scalars, for residual checks
// where c or z lies outside Q.
inline Scalar hpg_eval_scalar(long N, const Rat& b, const Scalar& c,
                              const Scalar& z) {
  Scalar sum(1), term(1);
  for (long k = 0; k < N; ++k) {
    Scalar lower = c + Scalar(k);
    term = term * Scalar(belyi::rat(-(N - k)) * (b + k)) * z /
           (lower * Scalar(k + 1));
    sum = sum + term;
  }
  return sum;
}

}  // namespace testutil
