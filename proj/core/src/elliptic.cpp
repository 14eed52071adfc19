#include "belyi/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace belyi {

bool operator==(const PointQ& a, const PointQ& b) {
  if (a.infinity || b.infinity) return a.infinity == b.infinity;
  return a.u == b.u && a.v == b.v;
}

bool on_curve(const CurveQ& E, const PointQ& P) {
  if (P.infinity) return true;
  return P.v * P.v == E.rhs(P.u);
}

namespace {

void require_on_curve(const CurveQ& E, const PointQ& P, const char* who) {
  if (!on_curve(E, P))
    throw NotOnCurve(std::string(who) + ": point is not on the curve");
}

}  // namespace

PointQ ec_negate(const CurveQ& E, const PointQ& P) {
  require_on_curve(E, P, "ec_negate");
  if (P.infinity) return P;
  return PointQ(P.u, -P.v);
}

PointQ ec_add(const CurveQ& E, const PointQ& P, const PointQ& Q) {
  require_on_curve(E, P, "ec_add");
  require_on_curve(E, Q, "ec_add");
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  Rat slope;
  if (P.u == Q.u) {
    if (P.v == -Q.v) return PointQ::at_infinity();
    // Tangent line (P == Q with v != 0).
    slope = (3 * P.u * P.u + 2 * E.a2 * P.u + E.a4) / (2 * P.v);
  } else {
    slope = (Q.v - P.v) / (Q.u - P.u);
  }
  Rat u3 = slope * slope - E.a2 - P.u - Q.u;
  Rat v3 = slope * (P.u - u3) - P.v;
  return PointQ(u3, v3);
}

PointQ ec_sub(const CurveQ& E, const PointQ& P, const PointQ& Q) {
  return ec_add(E, P, ec_negate(E, Q));
}

PointQ ec_scalar_mul(const CurveQ& E, const Int& n, const PointQ& P) {
  require_on_curve(E, P, "ec_scalar_mul");
  Int k = n;
  PointQ base = P;
  if (k < 0) {
    k = -k;
    base = ec_negate(E, base);
  }
  PointQ acc = PointQ::at_infinity();
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) acc = ec_add(E, acc, base);
    k >>= 1;
    if (k > 0) base = ec_add(E, base, base);
  }
  return acc;
}

std::optional<long> ec_torsion_order(const CurveQ& E, const PointQ& P,
                                     long max_order) {
  require_on_curve(E, P, "ec_torsion_order");
  PointQ acc = PointQ::at_infinity();
  for (long n = 1; n <= max_order; ++n) {
    acc = ec_add(E, acc, P);
    if (acc.infinity) return n;
  }
  return std::nullopt;
}

Rat j_invariant(const CurveQ& E) {
  Rat A = E.a4 - E.a2 * E.a2 / 3;
  Rat B = 2 * E.a2 * E.a2 * E.a2 / 27 - E.a2 * E.a4 / 3 + E.a6;
  Rat den = 4 * A * A * A + 27 * B * B;
  if (den == 0) throw Degenerate("j_invariant: singular curve");
  return 6912 * A * A * A / den;
}

std::vector<PointQ> mw_enumerate(const MWSpec& spec) {
  for (const auto& g : spec.free_generators)
    require_on_curve(spec.curve, g, "mw_enumerate");
  std::vector<PointQ> torsion_part = {PointQ::at_infinity()};
  for (const auto& [t, order] : spec.torsion_generators) {
    require_on_curve(spec.curve, t, "mw_enumerate");
    if (!ec_scalar_mul(spec.curve, order, t).infinity)
      throw NotOnCurve("mw_enumerate: torsion generator order mismatch");
    std::vector<PointQ> extended;
    for (const auto& base : torsion_part) {
      PointQ acc = base;
      for (long k = 0; k < order; ++k) {
        extended.push_back(acc);
        acc = ec_add(spec.curve, acc, t);
      }
    }
    torsion_part = std::move(extended);
  }

  std::vector<PointQ> combos = torsion_part;
  for (const auto& g : spec.free_generators) {
    std::vector<PointQ> extended;
    PointQ step = g;
    for (const auto& base : combos) {
      extended.push_back(base);
      PointQ plus = base, minus = base;
      for (long n = 1; n <= spec.bound; ++n) {
        plus = ec_add(spec.curve, plus, step);
        minus = ec_sub(spec.curve, minus, step);
        extended.push_back(plus);
        extended.push_back(minus);
      }
    }
    combos = std::move(extended);
  }

  std::vector<PointQ> out;
  for (const auto& P : combos)
    if (!P.infinity) out.push_back(P);
  auto less = [](const PointQ& a, const PointQ& b) {
    Int da = a.u.get_den(), db = b.u.get_den();
    if (da != db) return da < db;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  };
  std::sort(out.begin(), out.end(), less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

// Exact square root of a nonzero rational into a + b*sqrt(d) form.
Scalar scalar_sqrt(const Rat& x) {
  if (x == 0) return Scalar(0);
  Int n = x.get_num() * x.get_den();
  auto [s, d] = squarefree_split(n);
  return Scalar(Rat(0), Rat(Rat(s) / Rat(x.get_den())), d.get_si());
}

}  // namespace

E3Bundle e3_bundle(const Rat& b) {
  if (b == 0 || b == -1 || b == -2)
    throw SingularFiber("e3_bundle: b in {0, -1, -2}");
  E3Bundle out;
  out.b = b;
  out.curve = {9 * b * b, -96 * b * b * (b + 1), 256 * b * b * (b + 1) * (b + 1)};
  out.mw.curve = out.curve;
  out.mw.torsion_generators = {{PointQ(Rat(0), 16 * b * (b + 1)), 3}};
  out.mw.free_generators = {PointQ(8 * b, 8 * b * (b + 2))};
  out.mw.bound = 3;
  return out;
}

std::pair<Rat, Rat> E3Bundle::to_surface(const PointQ& P) const {
  require_on_curve(curve, P, "e3 to_surface");
  if (P.infinity || P.v == 0) throw VZero("e3 to_surface: v = 0");
  Rat head = P.v + 3 * b * P.u - 16 * b * (b + 1);
  Rat c = -(b + 2) * head / (2 * P.v);
  Rat z = (P.v + (3 * b + 4) * P.u - 16 * b * (b + 1)) / (2 * P.v);
  return {c, z};
}

PointQ E3Bundle::from_surface(const Rat& c, const Rat& z) const {
  Rat den = b * c + (b + 2) * (3 * b * z + 2 * c + 2);
  if (den == 0) throw Degenerate("e3 from_surface: denominator vanishes");
  Rat u = 16 * b * (b + 1) * (b * z + 2 * z + c) / den;
  Rat v = 32 * b * (b + 1) * (b + 2) / den;
  return PointQ(u, v);
}

std::pair<Scalar, Scalar> E3Bundle::companions(const PointQ& P) const {
  require_on_curve(curve, P, "e3 companions");
  if (P.infinity || P.v == 0) throw VZero("e3 companions: v = 0");
  Scalar root = scalar_sqrt(3 * P.u / (b + 1) - 12);
  Scalar head = Scalar(P.v + (3 * b - 2) * P.u - 16 * b * (b + 1));
  Scalar den = Scalar(2 * P.v);
  return {(head + Scalar(P.u) * root) / den, (head - Scalar(P.u) * root) / den};
}

E4Bundle e4_bundle(const Rat& z) {
  if (z == 0 || z == 1) throw DegenerateFiber("e4_bundle: z in {0, 1}");
  E4Bundle out;
  out.z = z;
  out.Z = z * z - z + 1;
  Rat Z = out.Z;
  out.curve = {-20 * Z, 108 * Z * Z, -648 * (Z - 1) * (Z - 1)};
  return out;
}

std::pair<Rat, Rat> E4Bundle::to_surface(const PointQ& P) const {
  require_on_curve(curve, P, "e4 to_surface");
  if (P.infinity) throw DegenerateFiber("e4 to_surface: infinite point");
  Rat u = P.u, v = P.v;
  Rat q = u * u - 12 * Z * u + 12 * Z * Z;
  if (q == 0) throw DegenerateFiber("e4 to_surface: chart pole");
  // The combination e = bz + c has a clean parametric expression on the
  // fiber; recover b from it through the degree-2 model of the surface in
  // the coordinates (e, f) with f = bz(z-1), which reads
  //   3f^2 + (6e^2 + (8z+14)e + 6(z^2+z+1)) f + e(e+1)(e+2)(e+3) = 0.
  Rat e = (2 * Z * v - (z + 1) * (u * u - 2 * (8 * Z - 3 * z) * u +
                                  36 * (z - 1) * (z - 1) * Z)) /
          q;
  Rat B = 6 * e * e + (8 * z + 14) * e + 6 * (z * z + z + 1);
  Rat C = e * (e + 1) * (e + 2) * (e + 3);
  auto s = sqrt_detect(B * B - 12 * C);
  if (!s) throw DegenerateFiber("e4 to_surface: fiber root is irrational");
  Rat f = (v >= 0 ? -B + *s : -B - *s) / 6;
  if (f == 0) f = (v >= 0 ? -B - *s : -B + *s) / 6;
  Rat b = f / (z * (z - 1));
  return {b, e - b * z};
}

std::vector<PointQ> E4Bundle::generator_table() const {
  std::vector<Rat> us = {Rat(6),          6 * z * z, 6 * (z - 1) * (z - 1),
                         Rat(9),          9 * z * z, 9 * (z - 1) * (z - 1)};
  std::vector<PointQ> out;
  for (const Rat& u : us) {
    auto v = sqrt_detect(curve.rhs(u));
    if (!v)
      throw DegenerateFiber("e4 generator_table: section is not rational");
    out.emplace_back(u, *v);
  }
  return out;
}

E4StarBundle e4star_bundle(const Rat& b) {
  if (b == 0 || b == -1 || b == -2 || b == -3)
    throw ExcludedFiber("e4star_bundle: b in {0, -1, -2, -3}");
  E4StarBundle out;
  out.b = b;
  out.curve = {-4 * b * (5 * b + 9), 108 * b * (b + 1) * (b + 1) * (b + 2),
               Rat(0)};
  out.mw.curve = out.curve;
  out.mw.torsion_generators = {{PointQ(Rat(0), Rat(0)), 2}};
  out.mw.free_generators = {
      PointQ(6 * b * (b + 1), 12 * b * (b + 1) * (b + 3))};
  out.mw.bound = 3;
  return out;
}

std::vector<std::pair<Scalar, Scalar>> E4StarBundle::fiber_image(
    const PointQ& P) const {
  require_on_curve(curve, P, "e4star fiber_image");
  if (P.infinity) throw WZero("e4star fiber_image: infinite point");
  Rat u = P.u, v = P.v;
  Rat b123 = b * (b + 1) * (b + 2);
  Rat W2 = 8 * b * v + u * u - 4 * b * (b + 9) * u + 108 * b123 * (b + 9);
  if (W2 == 0) throw WZero("e4star fiber_image: W2 = 0");
  Rat I1 = -6 * (v + 2 * (2 * b + 3) * u - 36 * b123) / W2;
  Rat I2 = -216 * b123 * (b + 3) * (b + 3) / W2;
  Rat I3 = -(b + 3) *
           (2 * (4 * b + 3) * v + u * u - 4 * b * (b + 3) * u +
            108 * b123 * (b + 5)) /
           W2;

  auto [z1, z2] = solve_quadratic(Rat(1), Rat(-1), I1);
  auto [c1, c2] = solve_quadratic(Rat(1), b + 3, -I2);
  Scalar bs(b), three(3);
  std::vector<std::pair<Scalar, Scalar>> pairs;
  for (const Scalar& c : {c1, c2}) {
    std::optional<Scalar> matched;
    for (const Scalar& z : {z1, z2}) {
      bool holds = false;
      try {
        holds = c * z + (bs + c + three) * (z - Scalar(1)) == Scalar(I3);
      } catch (const FieldMismatch&) {
        continue;
      }
      if (holds) {
        if (matched && !(*matched == z))
          throw Degenerate("e4star fiber_image: ambiguous root pairing");
        matched = z;
      }
    }
    if (matched) pairs.emplace_back(c, *matched);
    if (c1 == c2) break;
  }
  return pairs;
}

std::optional<Rat> E4StarBundle::square_filter(const PointQ& P) const {
  require_on_curve(curve, P, "e4star square_filter");
  if (P.infinity) throw WZero("e4star square_filter: infinite point");
  Rat head = P.v + 4 * b * P.u;
  Rat val = head * head + 864 * b * (b + 1) * (b + 2) * P.u;
  return sqrt_detect(val);
}

namespace {

// Composition of the affine shift to the b-fibration coordinates with the
// surface map, for the degree-3 specializations (m = 5, 6).
std::vector<std::pair<Scalar, Scalar>> cubic_image(const PointQ& P,
                                                   const Rat& shift,
                                                   const Rat& b,
                                                   const Rat& pr_offset) {
  if (P.infinity) throw VZero("specialized image: infinite point");
  Rat ug = (P.u - shift) / 4;
  Rat vg = P.v / 8;
  if (vg == 0) throw VZero("specialized image: v = 0");
  Rat head = vg + 3 * b * ug - 16 * b * (b + 1);
  Rat c = -(b + 2) * head / (2 * vg);
  Rat z = (vg + (3 * b + 4) * ug - 16 * b * (b + 1)) / (2 * vg);
  return {{Scalar(c - pr_offset), Scalar(z)}};
}

}  // namespace

SpecializedCurve specialize(long m) {
  SpecializedCurve out;
  out.m = m;
  switch (m) {
    case 5:
      out.curve = {Rat(0), Rat(-2475), Rat(-5850)};
      out.mw.curve = out.curve;
      out.mw.free_generators = {PointQ(Rat(-5), Rat(80))};
      out.mw.torsion_generators = {{PointQ(Rat(75), Rat(480)), 3}};
      out.mw.bound = 6;
      break;
    case 6:
      out.curve = {Rat(0), Rat(-17787), Rat(692566)};
      out.mw.curve = out.curve;
      out.mw.free_generators = {PointQ(Rat(35), Rat(336))};
      out.mw.torsion_generators = {{PointQ(Rat(147), Rat(1120)), 3}};
      out.mw.bound = 6;
      break;
    case 7: {
      E4StarBundle star = e4star_bundle(rat(-7, 2));
      out.curve = star.curve;
      out.mw = star.mw;
      out.mw.free_generators.push_back(PointQ(Rat(60), Rat(15)));
      break;
    }
    case 8: {
      E4StarBundle star = e4star_bundle(rat(-9, 2));
      out.curve = star.curve;
      out.mw = star.mw;
      out.mw.free_generators.push_back(PointQ(rat(945, 4), rat(14175, 8)));
      break;
    }
    default:
      throw InputDegenerate("specialize: m must be in {5, 6, 7, 8}");
  }
  return out;
}

std::vector<std::pair<Scalar, Scalar>> SpecializedCurve::image(
    const PointQ& P) const {
  require_on_curve(curve, P, "specialized image");
  switch (m) {
    case 5:
      return cubic_image(P, Rat(75), rat(-5, 2), Rat(3));
    case 6:
      return cubic_image(P, Rat(147), rat(-7, 2), Rat(4));
    case 7:
    case 8: {
      Rat b = m == 7 ? rat(-7, 2) : rat(-9, 2);
      Rat offset = m == 7 ? Rat(4) : Rat(5);
      E4StarBundle star = e4star_bundle(b);
      auto pairs = star.fiber_image(P);
      for (auto& [c, z] : pairs) c = c - Scalar(offset);
      return pairs;
    }
  }
  throw InputDegenerate("specialized image: bad m");
}

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double fa, double fm, double fb, double whole,
                        double tol, int depth) {
  double m = (a + b) / 2;
  double lm = (a + m) / 2, rm = (m + b) / 2;
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6 * (fa + 4 * flm + fm);
  double right = (b - m) / 6 * (fm + 4 * frm + fb);
  double delta = left + right - whole;
  if (depth <= 0 || std::fabs(delta) < 15 * tol)
    return left + right + delta / 15;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  double fa = f(a), fb = f(b), fm = f((a + b) / 2);
  double whole = (b - a) / 6 * (fa + 4 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

// Smallest root of a cubic (as double lambda) in (lo, hi) by bisection;
// requires a sign change.
double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    double mid = (lo + hi) / 2;
    double fmid = f(mid);
    if ((flo < 0) == (fmid < 0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

std::vector<double> real_roots_scan(const std::function<double(double)>& f,
                                    double lo, double hi, double step) {
  std::vector<double> roots;
  double prev = f(lo);
  for (double x = lo + step; x <= hi + step / 2; x += step) {
    double cur = f(x);
    if ((prev < 0) != (cur < 0)) roots.push_back(bisect(f, x - step, x));
    prev = cur;
  }
  return roots;
}

}  // namespace

DensityReport period_density(long m, double tolerance) {
  if (tolerance <= 0) throw InputDegenerate("period_density: tolerance <= 0");
  if (m != 5 && m != 6)
    throw InputDegenerate("period_density: m must be 5 or 6");

  double a4 = m == 5 ? -2475 : -17787;
  double a6 = m == 5 ? -5850 : 692566;
  auto f = [&](double u) { return (u * u + a4) * u + a6; };
  // Numerator line k*v = A - B*u of the p/r map: 15u+11v=645 resp.
  // 63u+13v=5901.
  double A = m == 5 ? 645 : 5901;
  double B = m == 5 ? 15 : 63;
  double k = m == 5 ? 11 : 13;
  double i1a = m == 5 ? -45 : -133, i1b = m == 5 ? -5 : 35;
  double i2a = m == 5 ? 51 : 107, i2b = m == 5 ? 315 : 707;

  auto roots = real_roots_scan(f, -200, 800, 0.5);
  if (roots.size() != 3)
    throw QuadratureFailure("period_density: expected three real roots");
  double r1 = roots[0], r2 = roots[1], r3 = roots[2];
  if (!(r1 < i1a && i1b < r2 && r3 < i2a))
    throw QuadratureFailure("period_density: interval touches a root");

  auto inv_sqrt_f = [&](double u) { return 1.0 / std::sqrt(f(u)); };
  double rho1 = 3 * integrate(inv_sqrt_f, i1a, i1b, tolerance / 8);
  double rho2 = 3 * integrate(inv_sqrt_f, i2a, i2b, tolerance / 8);
  if (std::fabs(rho1 - rho2) > 64 * tolerance + 1e-12)
    throw QuadratureFailure("period_density: period expressions disagree");

  // Sign-change points of the numerator on the curve: k^2 f(u) = (A-Bu)^2.
  auto cross = [&](double u) {
    double lin = A - B * u;
    return k * k * f(u) - lin * lin;
  };
  auto crossings = real_roots_scan(cross, -200, 800, 0.25);
  if (crossings.size() != 3)
    throw QuadratureFailure("period_density: expected three crossings");
  double c1 = crossings[0], c2 = crossings[1], c3 = crossings[2];
  if (!(r1 < c1 && c1 < c2 && c2 < r2 && r3 < c3))
    throw QuadratureFailure("period_density: unexpected region layout");

  // Desingularized arcs: u = root +/- t^2 against the factored cubic.
  auto arc_left = [&](double r, double other1, double other2, double b_end) {
    auto g = [&](double t) {
      double u = r + t * t;
      return 2.0 / std::sqrt((u - other1) * (u - other2));
    };
    return integrate(g, 0, std::sqrt(b_end - r), tolerance / 8);
  };
  auto arc_right = [&](double r, double other1, double other2, double a_end) {
    auto g = [&](double t) {
      double u = r - t * t;
      return 2.0 / std::sqrt((u - other1) * (other2 - u));
    };
    return integrate(g, 0, std::sqrt(r - a_end), tolerance / 8);
  };
  double s1 = arc_left(r1, r2, r3, c1);   // upper oval, left positive arc
  double s2 = arc_right(r2, r1, r3, c2);  // upper oval, right positive arc
  double s3 = arc_left(r3, r1, r2, c3);   // lower infinite branch sliver

  DensityReport rep;
  rep.m = m;
  rep.rho = rho1;
  rep.sub_integrals = {s1, s2, s3};
  rep.odds_ratio = (rho1 - s1 - s2) / (s1 + s2);
  rep.odds_ratio_infinite = (rho1 - s3) / s3;
  return rep;
}

}  // namespace belyi
