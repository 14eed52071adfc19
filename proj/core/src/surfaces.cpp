#include "belyi/surfaces.hpp"

#include <algorithm>

namespace belyi {

namespace {

Scalar sq(const Scalar& x) { return x * x; }

}  // namespace

int scalar_sign(const Scalar& x) {
  auto sgn = [](const Rat& r) { return mpq_sgn(r.get_mpq_t()); };
  if (x.d == 0) return sgn(x.a);
  if (x.d < 0)
    throw NotRational("scalar_sign: no real embedding for d = " +
                      std::to_string(x.d));
  int sa = sgn(x.a), sb = sgn(x.b);
  if (sa == sb) return sa;
  if (sa == 0) return sb;
  if (sb == 0) return sa;
  // Opposite signs: |a| vs |b| sqrt(d) decides; a^2 = d b^2 would force
  // sqrt(d) rational, excluded by normalization.
  int cmp = sgn(x.a * x.a - Rat(x.d) * x.b * x.b);
  return sa > 0 ? cmp : -cmp;
}

Scalar s3_residual(const Scalar& b, const Scalar& c, const Scalar& z) {
  Scalar one(1), two(2), three(3);
  Scalar expanded = b * (b + one) * (b + two) * z * z * z +
                    three * b * c * (b + one) * z * z +
                    three * b * c * (c + one) * z +
                    c * (c + one) * (c + two);
  Scalar e = b * z + c;
  Scalar compact = e * e * e + three * e * (b * z * z + c) +
                   two * (b * z * z * z + c);
  if (expanded != compact)
    throw Error("s3_residual: the two printed forms disagree");
  return expanded;
}

Scalar s4_residual(const Scalar& b, const Scalar& c, const Scalar& z) {
  Scalar two(2), three(3), six(6), eight(8);
  Scalar e = b * z + c;
  Scalar z2 = z * z;
  Scalar head = e * e + three * b * z2 + three * c;
  return head * head + two * sq(b * z2 + c) +
         eight * b * c * z * sq(z - Scalar(1)) + six * (b * z2 * z2 + c);
}

S3ParamResult s3_param(const Scalar& e, const Scalar& z) {
  if (z.is_zero() || z == Scalar(1))
    throw InputDegenerate("s3_param: z must avoid {0, 1}");
  Scalar one(1), two(2), three(3);
  Scalar den = three * e + two * z + two;
  S3ParamResult out;
  if (den.is_zero()) {
    if (e.is_zero() && z == Scalar(-1))
      out.line = BlowupLine{Rat(1), Rat(-1), Rat(0), Rat(-1)};
    else if (e == Scalar(-2) && z == Scalar(2))
      out.line = BlowupLine{Rat(2), Rat(1), Rat(2), Rat(2)};
    else if (e == Scalar(-1) && z == Scalar(rat(1, 2)))
      out.line = BlowupLine{Rat(1), Rat(2), Rat(2), rat(1, 2)};
    else
      throw NoPreimage("s3_param: 3e+2z+2 = 0 away from the blown-up points");
    return out;
  }
  Scalar b = e * (e + one) * (e + two) / (z * (one - z) * den);
  Scalar c = e * (e + z) * (e + two * z) / ((z - one) * den);
  out.point = {b, c};
  out.both_positive = scalar_sign(z) < 0 && scalar_sign(e * den) < 0;
  return out;
}

std::pair<Scalar, Scalar> s3_chart_es(const Scalar& t, const Scalar& y) {
  Scalar three(3);
  if (t == y) throw DegenerateChart("s3 chart: t = y");
  if (t * y == three) throw DegenerateChart("s3 chart: t*y = 3");
  Scalar e = Scalar(2) * t * (y * y + three) / ((t - y) * (t * y - three));
  Scalar s = y * (t * t + Scalar(2) * t * y - three) /
             ((y - t) * (t * y - three));
  return {e, s};
}

S3SplitResult s3_split_param(const Scalar& t, const Scalar& y) {
  if ((y == Scalar(3) && t == Scalar(-1)) ||
      (y == Scalar(-3) && t == Scalar(1)))
    throw Degenerate("s3_split_param: (y,t) gives the rejected (b,c)=(0,-1)");
  Scalar two(2), three(3);
  Scalar dt = t * t + two * t * y - three;
  Scalar dy = y * y + two * t * y - three;
  if (t == y) throw DegenerateChart("s3_split_param: t = y");
  if (t * y == three) throw DegenerateChart("s3_split_param: t*y = 3");
  if (dt.is_zero()) throw DegenerateChart("s3_split_param: t^2+2ty-3 = 0");
  if (dy.is_zero()) throw DegenerateChart("s3_split_param: y^2+2ty-3 = 0");

  Scalar b, c;
  if (y == -t) {
    b = t * t / three - Scalar(1);
    c = -t * t / Scalar(6) - Scalar(rat(1, 2));
  } else {
    b = -(t * t + three) * (y * y + three) * (t * y + three) /
        (three * dt * dy);
    c = (y * y + three) * (t * t * y - three * y - Scalar(6) * t) /
        (three * (y - t) * dy);
  }
  auto [e, s] = s3_chart_es(t, y);
  (void)e;

  // All three z-roots from the cleared cubic; the chart guarantees they are
  // rational.
  Scalar one(1);
  Poly cubic({c * (c + one) * (c + two), three * b * c * (c + one),
              three * b * c * (b + one), b * (b + one) * (b + two)});
  if (cubic.degree() != 3)
    throw Degenerate("s3_split_param: cubic in z degenerates");
  SplitResult split = split_roots(cubic);
  std::vector<Scalar> roots;
  for (const auto& rm : split.rational_roots)
    for (int i = 0; i < rm.mult; ++i) roots.push_back(Scalar(rm.root));
  if (roots.size() != 3)
    throw Degenerate("s3_split_param: cubic does not split over Q");
  auto it = std::find(roots.begin(), roots.end(), s);
  if (it == roots.end())
    throw Degenerate("s3_split_param: chart root s is not a root");
  roots.erase(it);
  std::sort(roots.begin(), roots.end(), scalar_less);
  return {b, c, {s, roots[0], roots[1]}};
}

std::pair<Scalar, Scalar> s3_root_swap(const Scalar& t, const Scalar& y) {
  if (t == Scalar(-1) || y == Scalar(-1))
    throw PoleOfMap("s3_root_swap: pole at t = -1 or y = -1");
  Scalar three(3), one(1);
  return {(t - three) / (t + one), (y - three) / (y + one)};
}

std::pair<Scalar, Scalar> s3_central(const Scalar& t, const Scalar& y) {
  return {-t, -y};
}

S4Point s4_param(const Scalar& t, const Scalar& y) {
  Scalar two(2), three(3), four(4), six(6);
  Scalar U = two * t * t * y - six * t * t + four * t * y - three * y * y +
             three * y;
  Scalar V = t * y * y + four * t * t - two * t * y + three * t - six * y;
  if (V.is_zero()) throw DegenerateChart("s4_param: V = 0");
  if (U.is_zero()) throw DegenerateChart("s4_param: U = 0");
  if ((U + V).is_zero()) throw DegenerateChart("s4_param: U + V = 0");
  Scalar z = -U / V;
  Scalar b = three * (y * y - two * t + y) *
             (t * y * y - Scalar(8) * t * t + four * t * y - three * y * y +
              three * t + three * y) /
             (U * (U + V));
  Scalar c = -six * (four * t * t + two * t - three * y - three) *
             (t * t * y - t * t + t * y - y * y) / (V * (U + V));
  return {b, c, z};
}

std::pair<Scalar, Scalar> s4_param_inv(const Scalar& b, const Scalar& c,
                                       const Scalar& z) {
  if (b.is_zero()) throw DegenerateChart("s4_param_inv: b = 0");
  if (c.is_zero()) throw DegenerateChart("s4_param_inv: c = 0");
  if (z.is_zero()) throw DegenerateChart("s4_param_inv: z = 0");
  if (z == Scalar(1)) throw DegenerateChart("s4_param_inv: z = 1");
  Scalar one(1), two(2), three(3);
  Scalar t = three * (b + one) / two -
             three * (c + one) * (c + two) / (two * b * z) +
             three * (b + c + one) * (b + c + two) / (two * b * (z - one));
  Scalar y = -c + (b + two) * (b + three) * z / c +
             (b + c + two) * (b + c + three) * z / (c * (z - one));
  return {t, y};
}

std::pair<Scalar, Scalar> s4_cremona(CremonaSym which, const Scalar& t,
                                     const Scalar& y) {
  Scalar two(2), three(3), four(4), eight(8);
  if (which == CremonaSym::Sym2) {
    Scalar den = t * y - t - three;
    if (den.is_zero()) throw PoleOfMap("s4_cremona sym2: ty - t - 3 = 0");
    return {t, (t * y - four * t * t - three * t + three * y) / den};
  }
  Scalar dt = two * (t * t * y - t * t + t * y - y * y);
  Scalar dy = t * y * y - eight * t * t + four * t * y - three * y * y +
              three * t + three * y;
  if (dt.is_zero()) throw PoleOfMap("s4_cremona sym1: t-denominator = 0");
  if (dy.is_zero()) throw PoleOfMap("s4_cremona sym1: y-denominator = 0");
  Scalar tn = t * (y * y - t * y * y - three * t + three * y) / dt;
  Scalar yn = (three - two * t) * (t * y * y - y * y + three * t - three * y) / dy;
  return {tn, yn};
}

}  // namespace belyi
