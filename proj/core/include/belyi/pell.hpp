#pragma once

#include <utility>
#include <vector>

#include "belyi/scalar.hpp"

namespace belyi {

// Element a + b*sqrt(d) of a real quadratic order (d in {6, 10} here).
struct QuadUnit {
  Int a, b;
  long d = 6;
};

Int unit_norm(const QuadUnit& x);  // a^2 - d b^2
QuadUnit unit_mul(const QuadUnit& x, const QuadUnit& y);
QuadUnit unit_power(const QuadUnit& base, unsigned long n);

enum class PellFamily { Six, TenUnitReduced, TenNormPlus, TenNormMinus };

struct PellCandidate {
  long n = 0;  // generator exponent
  Int m;
  std::pair<Rat, Rat> z_roots;  // the two roots of the primary quadratic
  PellFamily family = PellFamily::Six;
  bool parity_valid = true;
};

// Solutions of (2m+3)^2 - 6d^2 = 1 from powers of 5+2*sqrt(6); the two
// z-roots solve 3z^2 + 6(m+1)z + m^2 - 1 = 0.
std::vector<PellCandidate> solve_pell6(long n_max);

// Solutions of (2m+3)^2 - 10d^2 = 9 from the unit 3+sqrt(10) (norm -1) and
// the two norm-(-9) seeds 1 +/- sqrt(10); parity_valid marks the exponent
// classes that make m even.  The z-roots solve 15z^2 - 10mz + m(m-2) = 0.
std::vector<PellCandidate> solve_pell10(long n_max);

// Exponent/quadratic-factor data feeding the one-quadratic Belyi map form.
struct Form2Seed {
  long p = 0, r = 0, m = 0;
  Rat alpha, beta;
};

// Both branches of a candidate: the integer p/r = -l with l = (m+5)/2
// (odd m) or (m+6)/2 (even m), and the half-integer companion with
// l = m-4 resp. m-5.  Throws ParityInvalid unless parity_valid.
std::vector<Form2Seed> pell_to_candidates(const PellCandidate& c);

}  // namespace belyi
