#pragma once

#include <array>
#include <optional>
#include <utility>

#include "belyi/roots.hpp"

namespace belyi {

// Degree-6 surface (bz+c)^3 + 3(bz+c)(bz^2+c) + 2(bz^3+c) = 0; the expanded
// and the compact forms are evaluated separately and asserted equal.
Scalar s3_residual(const Scalar& b, const Scalar& c, const Scalar& z);

// Quartic surface ((bz+c)^2+3bz^2+3c)^2 + 2(bz^2+c)^2 + 8bcz(z-1)^2
// + 6(bz^4+c) = 0.
Scalar s4_residual(const Scalar& b, const Scalar& c, const Scalar& z);

// One of the three lines the exceptional chart points blow up to.
struct BlowupLine {
  // The line is {b_coef*b + c_coef*c + const_term = 0, z = z_value}.
  Rat b_coef, c_coef, const_term;
  Rat z_value;
};

struct S3ParamResult {
  std::optional<std::pair<Scalar, Scalar>> point;  // (b, c)
  std::optional<BlowupLine> line;
  bool both_positive = false;  // z < 0 and e(3e+2z+2) < 0
};

// Chart (e, z) -> (b, c) with e = bz + c.  Preconditions: z not in {0, 1}.
// On the locus 3e+2z+2 = 0, the three points (0,-1), (-2,2), (-1,1/2)
// return their blowup lines; any other point on the locus throws NoPreimage.
S3ParamResult s3_param(const Scalar& e, const Scalar& z);

struct S3SplitResult {
  Scalar b, c;
  std::array<Scalar, 3> roots;  // the three z-roots, first one is s
};

// Chart (t, y) parametrizing the points where the cubic in z splits
// completely over Q.  Throws Degenerate at (y, t) in {(3,-1), (-3,1)} and
// DegenerateChart when a chart denominator vanishes.
S3SplitResult s3_split_param(const Scalar& t, const Scalar& y);

// (t, y) -> ((t-3)/(t+1), (y-3)/(y+1)): moves the selected root z = s to
// another root of the same cubic.  Throws PoleOfMap at t = -1 or y = -1.
std::pair<Scalar, Scalar> s3_root_swap(const Scalar& t, const Scalar& y);

// (t, y) -> (-t, -y): keeps (e, s) fixed and swaps the other two roots.
std::pair<Scalar, Scalar> s3_central(const Scalar& t, const Scalar& y);

// The (e, s) values of a split chart point (needed to track which root the
// swap selects).
std::pair<Scalar, Scalar> s3_chart_es(const Scalar& t, const Scalar& y);

struct S4Point {
  Scalar b, c, z;
};

// Cubic-pencil chart for the quartic surface: z = -U/V with the printed
// b, c.  Throws DegenerateChart naming the vanishing denominator.
S4Point s4_param(const Scalar& t, const Scalar& y);

// Inverse chart.  Preconditions: b, c, z, z-1 nonzero.
std::pair<Scalar, Scalar> s4_param_inv(const Scalar& b, const Scalar& c,
                                       const Scalar& z);

enum class CremonaSym { Sym1, Sym2 };

// Cremona transformations of the pencil chart realizing (b,c,z) -> (c,b,1/z)
// (Sym1) and the 1-z symmetry (Sym2).  Throws PoleOfMap.
std::pair<Scalar, Scalar> s4_cremona(CremonaSym which, const Scalar& t,
                                     const Scalar& y);

// Exact sign of a scalar (-1, 0, +1); requires a real embedding (d >= 0).
int scalar_sign(const Scalar& x);

}  // namespace belyi
