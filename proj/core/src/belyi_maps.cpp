#include "belyi/belyi_maps.hpp"

#include "belyi/hypergeom.hpp"

#include <algorithm>
#include <map>

namespace belyi {

std::string to_string(DegClass c) {
  switch (c) {
    case DegClass::Generic: return "generic";
    case DegClass::NoMaps: return "no-maps";
    case DegClass::ReducedDegree: return "reduced-degree";
    case DegClass::LambdaPowerFactor: return "lambda-power-factor";
    case DegClass::OneMinusLambdaFactor: return "one-minus-lambda-factor";
    case DegClass::SquareRootFactor: return "square-root-factor";
    case DegClass::AlphaZeroOnly: return "alpha-zero-only";
  }
  return "?";
}

Series h_series(long p, long q, long r, const Scalar& lambda, long T) {
  if (r == 0) throw InputDegenerate("h_series: r = 0");
  Series a = series_binomial_pow(Scalar(-1), Scalar(0), rat(-p, r), T);
  Series b = series_binomial_pow(-lambda, Scalar(0), rat(-q, r), T);
  return a * b;
}

Series g_series(long p, long r, const Scalar& alpha, const Scalar& beta,
                long T) {
  if (r == 0) throw InputDegenerate("g_series: r = 0");
  return series_binomial_pow(alpha, beta, rat(-p, r), T);
}

namespace {

// l such that value = -l * r with l a positive integer in [lo, hi], if any.
std::optional<long> neg_multiple(long value, long r, long lo, long hi) {
  if (value % r != 0) return std::nullopt;
  long l = -value / r;
  if (l >= lo && l <= hi) return l;
  return std::nullopt;
}

// Strips x^a and (1-x)^b factors from a rational-coefficient polynomial,
// returning (stripped, a, b).
std::tuple<Poly, long, long> strip_trivial_roots(Poly p) {
  long a = 0, b = 0;
  while (!p.is_zero() && p.degree() >= 1 && p.coeff(0).is_zero()) {
    std::vector<Scalar> c(p.coeffs().begin() + 1, p.coeffs().end());
    p = Poly(std::move(c));
    ++a;
  }
  Poly one_minus({Scalar(1), Scalar(-1)});
  while (p.degree() >= 1) {
    auto [quo, rem] = Poly::divrem(p, one_minus);
    if (!rem.is_zero()) break;
    p = quo;
    ++b;
  }
  return {p, a, b};
}

std::vector<Scalar> sorted_valid_roots(const SplitResult& split) {
  std::vector<Scalar> roots;
  for (const Scalar& s : explicit_roots(split)) {
    if (s == Scalar(0) || s == Scalar(1)) continue;
    roots.push_back(s);
  }
  return roots;
}

}  // namespace

Form11Solution solve_form11(long p, long q, long r, long m) {
  if (p == 0 || q == 0 || r == 0)
    throw InputDegenerate(
        "solve_form11: p, q, r must be nonzero (degenerate factor count)");
  if (m < 0) throw InputDegenerate("solve_form11: m must be >= 0");
  {
    // The no-maps region is reported cleanly even when it overlaps the
    // collapsed-infinity locus p+q+mr = 0.
    auto lp0 = neg_multiple(p, r, 1, m);
    auto lq0 = neg_multiple(q, r, 1, m);
    if (!(lp0 && lq0 && *lp0 + *lq0 <= m) && p + q + m * r == 0)
      throw InputDegenerate(
          "solve_form11: p+q+mr = 0 collapses the point above infinity");
  }

  // Condition polynomial: h_{m+1} as a polynomial in lambda, cleared by
  // (m+1)! r^(m+1).
  std::vector<Scalar> cond(m + 2, Scalar(0));
  for (long j = 0; j <= m + 1; ++j) {
    Rat term = pochhammer(rat(p, r), m + 1 - j) * pochhammer(rat(q, r), j);
    term /= pochhammer(Rat(1), m + 1 - j) * pochhammer(Rat(1), j);
    cond[j] = Scalar(term);
  }
  Poly condition(std::move(cond));
  if (!condition.is_zero()) condition = condition.primitive_integer();

  Form11Solution out;
  out.condition = condition;

  auto lq = neg_multiple(q, r, 1, m);
  auto lp = neg_multiple(p, r, 1, m);
  auto ls = neg_multiple(p + q, r, 0, m);
  long deg_pred = lq ? *lq : m + 1;
  long zero_mult = lp ? m + 1 - *lp : 0;
  long one_mult = ls ? *ls + 1 : 0;
  long expected = std::max<long>(0, deg_pred - zero_mult - one_mult);
  if (lp && lq && *lp + *lq <= m) expected = 0;

  out.report.expected_count = expected;
  if (expected == 0) {
    out.report.cls = DegClass::NoMaps;
    out.report.ell = 0;
  } else if (lq) {
    out.report.cls = DegClass::ReducedDegree;
    out.report.ell = *lq;
  } else if (lp) {
    out.report.cls = DegClass::LambdaPowerFactor;
    out.report.ell = *lp;
  } else if (ls) {
    out.report.cls = DegClass::OneMinusLambdaFactor;
    out.report.ell = *ls;
  }

  if (condition.is_zero()) return out;

  auto [stripped, a, b] = strip_trivial_roots(condition);
  (void)a;
  (void)b;
  SplitResult split = split_roots(stripped);
  out.roots = sorted_valid_roots(split);
  out.unresolved = split.residual;
  return out;
}

Form2Solution solve_form2(long p, long r, long m) {
  if (r == 0) throw InputDegenerate("solve_form2: r = 0");
  if (p == 0) throw InputDegenerate("solve_form2: p = 0");
  if (p == r)
    throw InputDegenerate(
        "solve_form2: p = r belongs to the trivial (1-x^(m+2))^q family");
  if (2 * p + m * r == 0)
    throw InputDegenerate(
        "solve_form2: 2p+mr = 0 collapses the point above infinity");
  if (m < 0) throw InputDegenerate("solve_form2: m must be >= 0");

  // g_{m+1} with alpha = 1, as a polynomial in z = 4*beta: coefficient of
  // beta^j is (-1)^(m+1-j) (p/r)_(m+1-j) / ((m+1-2j)! j!), then beta = z/4.
  long J = (m + 1) / 2;
  std::vector<Scalar> cond(J + 1, Scalar(0));
  for (long j = 0; j <= J; ++j) {
    Rat term = pochhammer(rat(p, r), m + 1 - j);
    if ((m + 1 - j) % 2) term = -term;
    term /= pochhammer(Rat(1), m + 1 - 2 * j) * pochhammer(Rat(1), j);
    term /= pow_rat(Rat(4), j);
    cond[j] = Scalar(term);
  }
  Poly condition(std::move(cond));
  if (!condition.is_zero()) condition = condition.primitive_integer();

  Form2Solution out;
  out.condition = condition;

  auto li = neg_multiple(p, r, 1, m);            // p = -l r
  auto lh = (2 * p) % r == 0 && (-2 * p / r) % 2 != 0
                ? neg_multiple(2 * p, r, 1, m)
                : std::nullopt;                  // 2p = -l r, l odd

  long total;
  if (li && *li <= m / 2) {
    total = 0;
    out.report.cls = DegClass::NoMaps;
    out.report.ell = *li;
  } else if (li) {
    total = *li - (m + 1) / 2;
    out.report.ell = *li;
    out.report.cls = total == 0 ? DegClass::NoMaps
                     : (m % 2 == 0 && total == 1) ? DegClass::AlphaZeroOnly
                                                  : DegClass::LambdaPowerFactor;
  } else if (lh) {
    total = (m - *lh + 1) / 2;
    out.report.ell = *lh;
    out.report.cls = total == 0 ? DegClass::NoMaps
                     : (m % 2 == 0 && total == 1) ? DegClass::AlphaZeroOnly
                                                  : DegClass::SquareRootFactor;
  } else {
    total = (m + 2) / 2;  // ceil((m+1)/2)
    out.report.cls = DegClass::Generic;
  }
  out.report.expected_count = total;
  out.alpha_zero_map = m % 2 == 0 && total > 0;

  if (condition.is_zero() || total == 0) return out;

  auto [stripped, a, b] = strip_trivial_roots(condition);
  (void)a;
  (void)b;
  SplitResult split = split_roots(stripped);
  out.z_roots = sorted_valid_roots(split);
  out.unresolved = split.residual;
  return out;
}

BelyiMap assemble_two_linear(long p, long q, long r, long m,
                             const Scalar& lambda) {
  Series h = h_series(p, q, r, lambda, m + 2);
  if (!h.coeff(m + 1).is_zero())
    throw DegenerateRoot("assemble: lambda does not solve the condition");
  Poly G = h.truncate(m);
  if (G.degree() < m)
    throw DegenerateRoot("assemble: companion polynomial has degree < m");
  if (G.eval(Scalar(1)).is_zero())
    throw DegenerateRoot("assemble: G has the undue root x = 1");
  if (!lambda.is_zero() && G.eval(inverse(lambda)).is_zero())
    throw DegenerateRoot("assemble: G has the undue root x = 1/lambda");
  BelyiMap out;
  out.form = TwoLinear{p, q, r, m, lambda};
  out.G = G;
  return out;
}

BelyiMap assemble_one_quadratic(long p, long r, long m, const Scalar& alpha,
                                const Scalar& beta) {
  Series g = g_series(p, r, alpha, beta, m + 2);
  if (!g.coeff(m + 1).is_zero())
    throw DegenerateRoot("assemble: (alpha, beta) does not solve the condition");
  Poly G = g.truncate(m);
  if (G.degree() < m)
    throw DegenerateRoot("assemble: companion polynomial has degree < m");
  Poly H2({Scalar(1), alpha, beta});
  if (Poly::gcd_monic(G, H2).degree() > 0)
    throw DegenerateRoot("assemble: G shares a root with the quadratic factor");
  BelyiMap out;
  out.form = OneQuadratic{p, r, m, alpha, beta};
  out.G = G;
  return out;
}

namespace {

struct Factored {
  std::vector<std::pair<Poly, long>> factors;  // (base, signed exponent)
  long p = 0, q = 0, r = 0, m = 0;
  long inf_order = 0;  // signed: p+q+mr resp. 2p+mr
  bool two_linear = true;
  Scalar lambda, alpha, beta;
};

Factored split_form(const BelyiMap& map) {
  Factored f;
  if (const auto* tl = std::get_if<TwoLinear>(&map.form)) {
    f.p = tl->p;
    f.q = tl->q;
    f.r = tl->r;
    f.m = tl->m;
    f.lambda = tl->lambda;
    f.inf_order = tl->p + tl->q + tl->m * tl->r;
    f.factors = {{Poly({Scalar(1), Scalar(-1)}), tl->p},
                 {Poly({Scalar(1), -tl->lambda}), tl->q},
                 {map.G, tl->r}};
  } else {
    const auto& oq = std::get<OneQuadratic>(map.form);
    f.two_linear = false;
    f.p = oq.p;
    f.r = oq.r;
    f.m = oq.m;
    f.alpha = oq.alpha;
    f.beta = oq.beta;
    f.inf_order = 2 * oq.p + oq.m * oq.r;
    f.factors = {{Poly({Scalar(1), oq.alpha, oq.beta}), oq.p}, {map.G, oq.r}};
  }
  return f;
}

long degree_of(const Factored& f) {
  auto mx = [](std::initializer_list<long> xs) {
    long best = 0;
    for (long x : xs) best = std::max(best, std::labs(x));
    return best;
  };
  if (f.two_linear)
    return mx({f.p, f.q, f.p + f.q, f.m * f.r, f.p + f.m * f.r,
               f.q + f.m * f.r, f.p + f.q + f.m * f.r});
  return mx({2 * f.p, f.m * f.r, 2 * f.p + f.m * f.r});
}

}  // namespace

BelyiCertificate certify(const BelyiMap& map) {
  BelyiCertificate cert;
  Factored f = split_form(map);
  cert.degree = degree_of(f);
  long d = cert.degree;

  auto fail = [&](const std::string& why) {
    cert.valid = false;
    cert.reason = why;
    return cert;
  };

  // Numerator / denominator by exponent signs.
  Poly N = Poly::constant(Scalar(1));
  Poly D = Poly::constant(Scalar(1));
  for (const auto& [base, e] : f.factors) {
    if (e > 0)
      N = N * base.pow(e);
    else if (e < 0)
      D = D * base.pow(-e);
  }
  Poly P = N - D;
  if (P.is_zero()) return fail("map is identically 1");
  long v = 0;
  while (P.coeff(v).is_zero()) ++v;
  cert.vanishing_order = v;

  // Zero coefficients of the defining series in (m+1, d]: extra vanishing
  // that the certificate reports (they belong to maps with larger m).
  Series s = f.two_linear ? h_series(f.p, f.q, f.r, f.lambda, d + 1)
                          : g_series(f.p, f.r, f.alpha, f.beta, d + 1);
  for (long k = f.m + 2; k <= d; ++k)
    if (s.coeff(k).is_zero()) cert.extra_vanishing.push_back(k);

  // Fiber tables.
  auto& above0 = cert.fibers[0];
  auto& above1 = cert.fibers[1];
  auto& aboveInf = cert.fibers[2];
  auto add_factor = [&](const Poly& base, long e, long npoints) {
    FiberEntry fe;
    if (base.degree() == 1) {
      fe.kind = FiberEntry::Kind::Point;
      fe.point = -base.coeff(0) / base.coeff(1);
      fe.count = 1;
    } else {
      fe.kind = FiberEntry::Kind::PolyRoots;
      fe.roots_of = base;
      fe.count = npoints;
    }
    fe.order = std::labs(e);
    (e > 0 ? above0 : aboveInf).push_back(fe);
  };
  for (const auto& [base, e] : f.factors)
    add_factor(base, e, base.degree() == f.m ? f.m : base.degree());
  {
    FiberEntry inf;
    inf.kind = FiberEntry::Kind::Infinity;
    inf.order = std::labs(f.inf_order);
    inf.count = 1;
    (f.inf_order < 0 ? above0 : aboveInf).push_back(inf);
  }
  {
    FiberEntry zero;
    zero.kind = FiberEntry::Kind::Point;
    zero.point = Scalar(0);
    zero.order = f.m + 2;
    above1.push_back(zero);
    FiberEntry rest;
    rest.kind = FiberEntry::Kind::Aggregate;
    rest.count = d - f.m - 2;
    rest.order = 1;
    above1.push_back(rest);
  }
  long total = 0;
  for (const auto& fib : cert.fibers)
    for (const auto& fe : fib) total += fe.count;
  cert.total_points = total;

  // Validity checks.
  if (d < f.m + 2) return fail("degree below m+2");
  if (v != f.m + 2)
    return fail("vanishing order " + std::to_string(v) + " != m+2 = " +
                std::to_string(f.m + 2));
  if (map.G.degree() != f.m) return fail("G degree != m");
  if (map.G.coeff(0) != Scalar(1)) return fail("G(0) != 1");
  if (Poly::gcd_monic(map.G, map.G.derivative()).degree() > 0)
    return fail("G is not squarefree");
  if (f.two_linear) {
    if (f.lambda.is_zero() || f.lambda == Scalar(1))
      return fail("lambda in {0, 1}");
    if (map.G.eval(Scalar(1)).is_zero()) return fail("G(1) = 0");
    if (map.G.eval(inverse(f.lambda)).is_zero())
      return fail("G(1/lambda) = 0");
  } else {
    if (f.beta.is_zero()) return fail("quadratic factor degenerates (beta = 0)");
    if (f.alpha * f.alpha == Scalar(4) * f.beta)
      return fail("quadratic factor is a full square");
    Poly H2({Scalar(1), f.alpha, f.beta});
    if (Poly::gcd_monic(map.G, H2).degree() > 0)
      return fail("G shares a root with the quadratic factor");
  }
  if (total != d + 2)
    return fail("point count " + std::to_string(total) + " != d+2");
  cert.valid = true;
  return cert;
}

std::vector<SigmaMap> m1_sigma_family(long p, long q, long r) {
  if (p == 0 || q == 0 || r == 0)
    throw InputDegenerate("m1_sigma_family: p, q, r must be nonzero");
  if (p + q + r == 0)
    throw InputDegenerate(
        "m1_sigma_family: p+q+r = 0 (sigma = 0) is outside this shape");

  // Two-term vanishing condition: q(q+r) l^2 + 2pq l + p(p+r) = 0.
  Rat A = rat(q) * rat(q + r), B = 2 * rat(p) * rat(q), C = rat(p) * rat(p + r);
  std::vector<Scalar> lambdas;
  if (A != 0) {
    auto [l1, l2] = solve_quadratic(A, B, C);
    lambdas = {l1, l2};
    if (l1 == l2) lambdas.pop_back();
  } else if (B != 0) {
    lambdas = {Scalar(-C / B)};
  }

  std::vector<SigmaMap> out;
  for (const Scalar& lam : lambdas) {
    if (lam.is_zero() || lam == Scalar(1)) continue;
    try {
      SigmaMap sm;
      sm.map = assemble_two_linear(p, q, r, 1, lam);
      sm.sigma = -(Scalar(rat(p) * rat(q)) + lam * Scalar(rat(q) * rat(q + r)));
      if (!certify(sm.map).valid) continue;
      out.push_back(std::move(sm));
    } catch (const DegenerateRoot&) {
      continue;
    }
  }
  if (out.empty())
    throw AllDegenerate("m1_sigma_family: every candidate collapses");
  return out;
}

SigmaTriple sigma_triple_from_uv(const Rat& u, const Rat& v) {
  SigmaTriple t;
  Rat w = u * v + 1;
  t.p = u * w;
  t.q = v * w;
  t.r = -u - v;
  t.sigma = -u * v * (u + v) * w;
  return t;
}

Rat canonical_rescale(const Poly& G) {
  if (!G.all_rational())
    throw NotRational("canonical_rescale: G must have rational coefficients");
  // For each prime dividing a coefficient denominator, take the least power
  // e with k*e >= -val_p(g_k) for all k.
  std::map<Int, long> exps;
  for (long k = 1; k <= G.degree(); ++k) {
    Int den = G.coeff(k).rational().get_den();
    Int rem = den;
    for (unsigned long pr = 2; Int(pr) * pr <= rem;
         pr == 2 ? pr = 3 : pr += 2) {
      long val = 0;
      while (mpz_divisible_ui_p(rem.get_mpz_t(), pr)) {
        rem /= pr;
        ++val;
      }
      if (val) exps[Int(pr)] = std::max(exps[Int(pr)], (val + k - 1) / k);
    }
    if (rem > 1) exps[rem] = std::max(exps[rem], (1 + k - 1) / k);
  }
  Rat c(1);
  for (const auto& [pr, e] : exps)
    for (long i = 0; i < e; ++i) c *= Rat(pr);
  return c;
}

namespace {

Poly rescale_poly(const Poly& G, const Scalar& c) {
  std::vector<Scalar> out(G.degree() + 1, Scalar(0));
  Scalar ck(1);
  for (long k = 0; k <= G.degree(); ++k) {
    out[k] = G.coeff(k) * ck;
    ck = ck * c;
  }
  return Poly(std::move(out));
}

}  // namespace

bool maps_equivalent(const BelyiMap& A, const BelyiMap& B) {
  if (A.form.index() != B.form.index()) return false;
  if (const auto* ta = std::get_if<TwoLinear>(&A.form)) {
    const auto& tb = std::get<TwoLinear>(B.form);
    if (ta->p != tb.p || ta->q != tb.q || ta->r != tb.r || ta->m != tb.m)
      return false;
    // Both maps are normalized with the (1-x)^p factor at scale 1, so the
    // only remaining freedom is none: compare directly.
    return ta->lambda == tb.lambda && A.G == B.G;
  }
  const auto& qa = std::get<OneQuadratic>(A.form);
  const auto& qb = std::get<OneQuadratic>(B.form);
  if (qa.p != qb.p || qa.r != qb.r || qa.m != qb.m) return false;
  // Scale freedom x -> c x: alpha scales by c, beta by c^2; compare the
  // weighted invariant and the rescaled G.
  if (qa.alpha.is_zero() != qb.alpha.is_zero()) return false;
  if (!qa.alpha.is_zero()) {
    Scalar za = Scalar(4) * qa.beta / (qa.alpha * qa.alpha);
    Scalar zb = Scalar(4) * qb.beta / (qb.alpha * qb.alpha);
    if (za != zb) return false;
    Scalar c = qa.alpha / qb.alpha;
    return A.G == rescale_poly(B.G, c);
  }
  // alpha = 0: compare beta up to squares? scale c^2 = qa.beta/qb.beta.
  Scalar ratio = qa.beta / qb.beta;
  auto c = sqrt_detect_quad(ratio);
  if (!c) return false;
  return A.G == rescale_poly(B.G, *c) || A.G == rescale_poly(B.G, -*c);
}

}  // namespace belyi
