#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "belyi/roots.hpp"

namespace belyi {

// v^2 = u^3 + a2 u^2 + a4 u + a6 over Q.
struct CurveQ {
  Rat a2, a4, a6;
  Rat rhs(const Rat& u) const { return ((u + a2) * u + a4) * u + a6; }
};

struct PointQ {
  bool infinity = true;
  Rat u, v;
  PointQ() = default;
  PointQ(Rat u_, Rat v_) : infinity(false), u(std::move(u_)), v(std::move(v_)) {}
  static PointQ at_infinity() { return PointQ(); }
};

bool operator==(const PointQ& a, const PointQ& b);

bool on_curve(const CurveQ& E, const PointQ& P);
PointQ ec_negate(const CurveQ& E, const PointQ& P);
PointQ ec_add(const CurveQ& E, const PointQ& P, const PointQ& Q);
PointQ ec_sub(const CurveQ& E, const PointQ& P, const PointQ& Q);
PointQ ec_scalar_mul(const CurveQ& E, const Int& n, const PointQ& P);
// Smallest n <= max_order with nP = infinity, if any.
std::optional<long> ec_torsion_order(const CurveQ& E, const PointQ& P,
                                     long max_order);
Rat j_invariant(const CurveQ& E);

struct MWSpec {
  CurveQ curve;
  std::vector<PointQ> free_generators;
  std::vector<std::pair<PointQ, long>> torsion_generators;
  long bound = 0;
};

// All combinations sum n_i g_i + torsion part with |n_i| <= bound,
// deduplicated, infinity excluded, sorted by (denominator height, u, v).
std::vector<PointQ> mw_enumerate(const MWSpec& spec);

// Fibration of the cubic surface by b: v^2 = u^3 + b^2 (3u-16b-16)^2.
struct E3Bundle {
  Rat b;
  CurveQ curve;
  MWSpec mw;  // torsion (0,16b(b+1)) of order 3, free (8b, 8b(b+2))

  // (c, z) of a finite point with v != 0; throws VZero.
  std::pair<Rat, Rat> to_surface(const PointQ& P) const;
  PointQ from_surface(const Rat& c, const Rat& z) const;
  // The other two roots of the cubic in z, over Q or a quadratic extension.
  std::pair<Scalar, Scalar> companions(const PointQ& P) const;
};
// Throws SingularFiber for b in {0, -1, -2}.
E3Bundle e3_bundle(const Rat& b);

// Fibration of the quartic surface by z: v^2 = u^3 - 20Z u^2 + 108Z^2 u
// - 648(Z-1)^2 with Z = z^2 - z + 1.
struct E4Bundle {
  Rat z, Z;
  CurveQ curve;

  std::pair<Rat, Rat> to_surface(const PointQ& P) const;  // (b, c)
  // The six rank generators over Q(z): u in {6, 6z^2, 6(z-1)^2, 9, 9z^2,
  // 9(z-1)^2} with the positive-v representative.
  std::vector<PointQ> generator_table() const;
};
// Throws DegenerateFiber for z in {0, 1}.
E4Bundle e4_bundle(const Rat& z);

// Fibration of the quartic surface by b after factoring out the z -> 1-z
// symmetry: v^2 = u (u^2 - 4b(5b+9)u + 108b(b+1)^2(b+2)).
struct E4StarBundle {
  Rat b;
  CurveQ curve;
  MWSpec mw;  // torsion (0,0) of order 2, free (6b(b+1), 12b(b+1)(b+3))

  // (c, z) candidates recovered from the two invariant quadratics, paired
  // by the third invariant; throws WZero when W2 = 0 at the point.
  std::vector<std::pair<Scalar, Scalar>> fiber_image(const PointQ& P) const;
  // sqrt((v+4bu)^2 + 864 b(b+1)(b+2) u) when it is a rational square:
  // detects points whose z-roots are rational.
  std::optional<Rat> square_filter(const PointQ& P) const;
};
// Throws ExcludedFiber for b in {0, -1, -2, -3}.
E4StarBundle e4star_bundle(const Rat& b);

// The specialized curves for quadratic H2 condition of degree-3/4
// hypergeometric relations, with point -> (p/r, z) candidate maps.
struct SpecializedCurve {
  long m = 0;
  CurveQ curve;
  MWSpec mw;
  // Every returned (p/r, z) satisfies F(-N, b; -p/r-m; z) = 0 exactly for
  // the matching (N, b).
  std::vector<std::pair<Scalar, Scalar>> image(const PointQ& P) const;
};
SpecializedCurve specialize(long m);  // m in {5, 6, 7, 8}

struct DensityReport {
  long m = 0;
  double rho = 0;                     // real period
  std::vector<double> sub_integrals;  // positive-sign arcs (two finite-oval,
                                      // one infinite-branch)
  double odds_ratio = 0;              // (rho - oval subs) / oval subs
  double odds_ratio_infinite = 0;     // (rho - branch sub) / branch sub
};

// Numeric du/v integrals for m in {5, 6}; both printed period expressions
// are computed and must agree within tolerance.
DensityReport period_density(long m, double tolerance);

}  // namespace belyi
