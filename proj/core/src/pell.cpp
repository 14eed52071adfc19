#include "belyi/pell.hpp"

#include "belyi/roots.hpp"

namespace belyi {

Int unit_norm(const QuadUnit& x) { return x.a * x.a - x.d * x.b * x.b; }

QuadUnit unit_mul(const QuadUnit& x, const QuadUnit& y) {
  if (x.d != y.d) throw FieldMismatch("unit_mul: different fields");
  return {x.a * y.a + Int(x.d) * x.b * y.b, x.a * y.b + x.b * y.a, x.d};
}

QuadUnit unit_power(const QuadUnit& base, unsigned long n) {
  QuadUnit acc{1, 0, base.d};
  QuadUnit sq = base;
  while (n > 0) {
    if (n & 1) acc = unit_mul(acc, sq);
    n >>= 1;
    if (n > 0) sq = unit_mul(sq, sq);
  }
  return acc;
}

std::vector<PellCandidate> solve_pell6(long n_max) {
  if (n_max < 1) throw InputDegenerate("solve_pell6: n_max must be >= 1");
  std::vector<PellCandidate> out;
  QuadUnit gen{5, 2, 6};
  QuadUnit w{1, 0, 6};
  for (long n = 1; n <= n_max; ++n) {
    w = unit_mul(w, gen);
    // (5+2*sqrt6)^n = (2m+3) +/- sqrt6 (z+m+1)
    PellCandidate c;
    c.n = n;
    c.family = PellFamily::Six;
    c.m = (w.a - 3) / 2;
    Rat m(c.m);
    c.z_roots = {-(m + 1) + Rat(w.b), -(m + 1) - Rat(w.b)};
    c.parity_valid = true;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<PellCandidate> solve_pell10(long n_max) {
  if (n_max < 1) throw InputDegenerate("solve_pell10: n_max must be >= 1");
  std::vector<PellCandidate> out;
  QuadUnit gen{3, 1, 10};
  auto push = [&](long n, const QuadUnit& w, PellFamily fam, bool parity) {
    // |a| = 2m+3; the z-roots are (m +/- d)/3 with d = |b|.
    Int a = abs(w.a), d = abs(w.b);
    if (a < 3 || (a - 3) % 2 != 0) return;
    PellCandidate c;
    c.n = n;
    c.family = fam;
    c.m = (a - 3) / 2;
    Rat m(c.m);
    c.z_roots = {(m + Rat(d)) / 3, (m - Rat(d)) / 3};
    c.parity_valid = parity && mpz_even_p(c.m.get_mpz_t());
    out.push_back(std::move(c));
  };
  for (long n = 1; n <= n_max; ++n) {
    QuadUnit w = unit_power(gen, n);
    if (n % 2 == 0) {
      // Unit solutions of (2m/3+1)^2 - 10 dhat^2 = 1; need n = 0 mod 4 for
      // even m.
      Int A = w.a;  // = 2m/3 + 1
      PellCandidate c;
      c.n = n;
      c.family = PellFamily::TenUnitReduced;
      c.m = 3 * (A - 1) / 2;
      Rat m(c.m);
      // d of (2m+3)^2 - 10d^2 = 9 equals 3*bhat.
      Rat d(3 * w.b);
      c.z_roots = {(m + d) / 3, (m - d) / 3};
      c.parity_valid = (n % 4 == 0) && mpz_even_p(c.m.get_mpz_t());
      out.push_back(std::move(c));
    }
    push(n, unit_mul({1, 1, 10}, w), PellFamily::TenNormPlus, n % 4 == 3);
    push(n, unit_mul({1, -1, 10}, w), PellFamily::TenNormMinus, n % 4 == 1);
  }
  return out;
}

namespace {

void append_seeds(std::vector<Form2Seed>& out, long p, long r, long m,
                  const Rat& alpha, const std::pair<Scalar, Scalar>& z_pair,
                  bool beta_is_z) {
  std::vector<Scalar> zs = {z_pair.first};
  if (!(z_pair.second == z_pair.first)) zs.push_back(z_pair.second);
  for (const Scalar& z : zs) {
    if (z.d != 0) continue;  // irrational branch: no map over Q
    Rat zr = z.rational();
    out.push_back({p, r, m, alpha, beta_is_z ? zr : zr / 4});
  }
}

}  // namespace

std::vector<Form2Seed> pell_to_candidates(const PellCandidate& c) {
  if (!c.parity_valid)
    throw ParityInvalid("pell_to_candidates: candidate fails the parity rule");
  long m = to_long(Rat(c.m));
  std::vector<Form2Seed> out;
  bool odd = m % 2 != 0;
  // Primary branch: integer l, H2 = 1 + x + (z/4) x^2.
  long ell = odd ? (m + 5) / 2 : (m + 6) / 2;
  std::pair<Scalar, Scalar> z_primary =
      odd ? solve_quadratic(Rat(3), Rat(6 * (m + 1)), Rat(m) * Rat(m) - 1)
          : solve_quadratic(Rat(15), Rat(-10 * m), Rat(m) * Rat(m - 2));
  append_seeds(out, -ell, 1, m, Rat(1), z_primary, false);
  // Companion branch: half-integer p/r, H2 = 1 + 2x + z x^2.
  long ell2 = odd ? m - 4 : m - 5;
  std::pair<Scalar, Scalar> z_comp =
      odd ? solve_quadratic(Rat(3), Rat(-6 * (m + 2)),
                            Rat(m + 2) * Rat(m + 4))
          : solve_quadratic(Rat(15), Rat(-10 * (m + 3)),
                            Rat(m + 3) * Rat(m + 5));
  append_seeds(out, -ell2, 2, m, Rat(2), z_comp, true);
  return out;
}

}  // namespace belyi
