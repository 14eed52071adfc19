#include <doctest.h>

#include "belyi/hypergeom.hpp"
#include "belyi/series.hpp"
#include "helpers.hpp"

using namespace belyi;
using testutil::RatGen;

namespace {

// The 15 x 15 parameter grid of Lemma-suite checks: non-integer rationals so
// no Pochhammer factor (b)_k, (c)_k, (b+c)_k can vanish for k <= 6.
std::vector<Rat> lemma_grid() {
  std::vector<Rat> g;
  for (long num : {-7, -5, -4, -2, -1, 1, 2, 4, 5, 7, 8, 10, 11, 13, 14})
    g.push_back(rat(num, 3));
  return g;
}

Poly pk_integer(long k, const Rat& b, const Rat& c) {
  return hpg_poly({k, b, Rat(1 - k) - c});
}

Poly pk_half(long k, const Rat& c) {
  return hpg_half_poly({k, Rat(1 - k) - c});
}

bool squarefree(const Poly& p) {
  return Poly::gcd_monic(p, p.derivative()).degree() == 0;
}

}  // namespace

TEST_SUITE("hypergeom") {

TEST_CASE("pochhammer") {
  CHECK(pochhammer(rat(7, 2), 0) == Rat(1));
  CHECK(pochhammer(Rat(3), 4) == Rat(360));
  CHECK(pochhammer(Rat(-4), 5) == Rat(0));
}

TEST_CASE("terminating series values") {
  CHECK(hpg_poly({7, Rat(-3), Rat(13)}).eval(Scalar(-1)).is_zero());
  CHECK(hpg_poly({10, Rat(-4), Rat(4)}).eval(Scalar(-1)).is_zero());
  CHECK(hpg_poly({7, Rat(-4), Rat(7)}).eval(Scalar(-1)).is_zero());
  CHECK(hpg_poly({2, Rat(1), Rat(3)}).eval(Scalar(1)) == Scalar(rat(1, 2)));
  CHECK_THROWS_AS(hpg_poly({3, Rat(1), Rat(-2)}), UndefinedParameters);
  // Degenerate reading: c <= -N is accepted.
  CHECK(hpg_poly({2, Rat(1), Rat(-3)}).degree() == 2);

  CHECK(hpg_half_poly({1, Rat(5)}).degree() == 0);
  CHECK(hpg_half_poly({8, Rat(-17)}).eval(Scalar(4)).is_zero());
  CHECK(hpg_half_poly({2, Rat(1)}).eval(Scalar(-2)).is_zero());
}

TEST_CASE("value at zero and degree law") {
  RatGen gen(53);
  for (int i = 0; i < 200; ++i) {
    long N = gen.integer(0, 8);
    Rat b = gen.rat(9, 4), c = gen.rat(9, 4);
    Poly p;
    try {
      p = hpg_poly({N, b, c});
    } catch (const UndefinedParameters&) {
      continue;
    }
    CHECK(p.coeff(0) == Scalar(1));
    CHECK((p.degree() == N) == (pochhammer(b, N) != 0));
  }
}

TEST_CASE("distinct-root lemma suite, integer family") {
  for (const Rat& b : lemma_grid()) {
    for (const Rat& c : lemma_grid()) {
      Poly prev = pk_integer(0, b, c);
      for (long k = 1; k <= 6; ++k) {
        // Lemma hypotheses: (b)_k, (c)_k and (b+c)_k all nonzero.  The grid
        // keeps b and c non-integral, so only (b+c)_k can vanish.
        if (pochhammer(b + c, k) == 0) break;
        Poly pk = pk_integer(k, b, c);
        CHECK(pk.degree() == k);
        CHECK(squarefree(pk));
        CHECK(Poly::gcd_monic(pk, prev).degree() == 0);
        Rat at_one = pochhammer(b + c, k) / pochhammer(c, k);
        CHECK(pk.eval(Scalar(1)) == Scalar(at_one));
        CHECK(value_at_one(Family::Integer, k, b, c) == at_one);
        prev = pk;
      }
    }
  }
}

TEST_CASE("distinct-root lemma suite, half family") {
  for (const Rat& c : lemma_grid()) {
    Poly prev = pk_half(0, c);
    for (long k = 1; k <= 6; ++k) {
      Poly pk = pk_half(k, c);
      CHECK(pk.degree() == k / 2);
      CHECK(squarefree(pk));
      if (k >= 2) CHECK(Poly::gcd_monic(pk, prev).degree() == 0);
      CHECK(pk.eval(Scalar(1)) ==
            Scalar(value_at_one(Family::Half, k, Rat(0), c)));
      prev = pk;
    }
  }
}

TEST_CASE("contiguous recurrences reproduce the next polynomial") {
  for (const Rat& b : lemma_grid()) {
    for (const Rat& c : lemma_grid()) {
      Poly pk_minus = pk_integer(0, b, c);
      Poly pk = pk_integer(1, b, c);
      for (long k = 1; k <= 5; ++k) {
        Poly next = contiguous_step(Family::Integer, k, b, c, pk, pk_minus);
        CHECK(next == pk_integer(k + 1, b, c));
        pk_minus = pk;
        pk = next;
      }
      Poly hk_minus = pk_half(0, c);
      Poly hk = pk_half(1, c);
      for (long k = 1; k <= 5; ++k) {
        Poly next = contiguous_step(Family::Half, k, b, c, hk, hk_minus);
        CHECK(next == pk_half(k + 1, c));
        hk_minus = hk;
        hk = next;
      }
    }
  }
}

TEST_CASE("value_at_one closed forms") {
  CHECK(value_at_one(Family::Integer, 2, Rat(2), Rat(3)) == rat(5, 2));
  CHECK(value_at_one(Family::Integer, 0, rat(7, 3), rat(-1, 2)) == Rat(1));
  CHECK(value_at_one(Family::Half, 2, Rat(0), Rat(1)) == rat(3, 4));
}

TEST_CASE("the six-element symmetry orbit") {
  RatGen gen(59);
  int verified = 0;
  for (int i = 0; i < 30; ++i) {
    HpgSpec spec{gen.integer(1, 5), gen.rat(9, 4), gen.rat(9, 4)};
    std::vector<SymmetryImage> orbit;
    try {
      orbit = symmetry_images(spec);
    } catch (const UndefinedParameters&) {
      continue;
    }
    CHECK(orbit.size() == 6);
    for (const auto& img : orbit) {
      if (!img.defined) continue;
      CHECK(symmetry_image_holds(spec, img));
      ++verified;
    }
  }
  CHECK(verified > 60);

  // An orbit member with excluded lower parameter is flagged, not emitted.
  HpgSpec degenerate{3, Rat(1), Rat(1)};  // the 1-z image lands on b+c = -2
  bool saw_undefined = false;
  for (const auto& img : symmetry_images(degenerate)) {
    if (!img.defined) {
      saw_undefined = true;
      CHECK(!img.why_undefined.empty());
    }
  }
  CHECK(saw_undefined);
}

TEST_CASE("Euler transformation fails under blind degenerate application") {
  // F(-2, 1; -3; z) uses the degenerate reading; Euler's transformation
  // claims (1-z)^{-2} F(-1, -4; -3; z), whose series diverges from the
  // polynomial at order 4.
  Poly lhs = hpg_poly({2, Rat(1), Rat(-3)});
  Poly linear = hpg_poly({1, Rat(-4), Rat(-3)});
  Series rhs = series_binomial_pow(Scalar(-1), Scalar(0), Rat(-2), 6) *
               Series::from_poly(linear, 6);
  CHECK(rhs.coeff(0) == lhs.coeff(0));
  CHECK(rhs.coeff(1) == lhs.coeff(1));
  CHECK(rhs.coeff(2) == lhs.coeff(2));
  CHECK(rhs.coeff(4) != Scalar(0));  // the blind identity is false

  // With -c >= max(-a, -b) the same transformation is exact.
  Poly lhs_ok = hpg_poly({2, Rat(-1), Rat(-3)});
  Poly rhs_ok = hpg_poly({1, Rat(-2), Rat(-3)});  // (1-z)^0 prefactor
  CHECK(lhs_ok == rhs_ok);
}

TEST_CASE("Krawtchouk values and the bridge identity") {
  CHECK(krawtchouk(0, Rat(3), rat(1, 2), 9) == Rat(1));
  CHECK(krawtchouk(4, Rat(0), rat(1, 3), 9) == Rat(1));
  RatGen gen(61);
  for (int i = 0; i < 50; ++i) {
    long m = gen.integer(0, 5), n = gen.integer(0, 5);
    Rat M = Rat(gen.integer(10, 25));  // the bridge needs an integer level
    Rat p = gen.nonzero_rat(5, 3);
    if (p == 1) continue;
    auto [lhs, rhs] = krawtchouk_bridge(m, n, M, p);
    CHECK(lhs == rhs);
  }
  // The m = 6 evaluation re-expressed through a Krawtchouk value.
  auto [lhs, rhs] = krawtchouk_bridge(7, 3, Rat(13), rat(1, 2));
  CHECK(lhs == rhs);
}

}  // TEST_SUITE
