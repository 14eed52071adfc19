#pragma once

#include <optional>

#include "belyi/poly.hpp"

namespace belyi {

struct RootMult {
  Rat root;
  int mult = 1;
};

// Monic irreducible quadratic over Q, with the squarefree part of its
// discriminant exposed as the field tag of its roots.
struct QuadFactor {
  Poly factor;
  int mult = 1;
  long field_d = 0;
};

struct SplitResult {
  std::vector<RootMult> rational_roots;
  std::vector<QuadFactor> quadratic_factors;
  // Rational-coefficient factor of degree >= 3 with no rational root, left
  // unfactored (monic).  Zero polynomial when everything split.
  Poly residual;
};

// Splits off all rational roots of a rational-coefficient polynomial and
// factors a remaining degree-2 part over its quadratic field.  Deterministic
// ordering: rational roots ascending, quadratic factors by coefficients.
SplitResult split_roots(const Poly& p);

std::optional<Rat> sqrt_detect(const Rat& x);

// Square root within the quadratic field of x (or Q if x is rational).
std::optional<Scalar> sqrt_detect_quad(const Scalar& x);

// Exact roots of A z^2 + B z + C = 0 over Q or a quadratic extension.
// A must be nonzero.  Roots returned in scalar_less order.
std::pair<Scalar, Scalar> solve_quadratic(const Rat& A, const Rat& B,
                                          const Rat& C);

// Both roots of an irreducible monic quadratic factor.
std::pair<Scalar, Scalar> quad_factor_roots(const QuadFactor& f);

// All explicit roots (rational and quadratic-field, with multiplicity 1 per
// listing), in deterministic order.  Residual roots are not included.
std::vector<Scalar> explicit_roots(const SplitResult& s);

}  // namespace belyi
