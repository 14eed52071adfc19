#include <doctest.h>

#include <algorithm>
#include <vector>

#include "belyi/belyi_maps.hpp"
#include "belyi/pell.hpp"
#include "helpers.hpp"

using namespace belyi;
using testutil::RatGen;

namespace {

const PellCandidate* find_m(const std::vector<PellCandidate>& v, long m) {
  for (const auto& c : v)
    if (c.m == m) return &c;
  return nullptr;
}

}  // namespace

TEST_SUITE("pell") {

TEST_CASE("unit arithmetic") {
  QuadUnit g6{5, 2, 6};
  QuadUnit g6sq = unit_power(g6, 2);
  CHECK(g6sq.a == 49);
  CHECK(g6sq.b == 20);
  QuadUnit g6cu = unit_power(g6, 3);
  CHECK(g6cu.a == 485);
  CHECK(g6cu.b == 198);
  CHECK(unit_norm(g6) == 1);

  QuadUnit g10{3, 1, 10};
  CHECK(unit_norm(g10) == -1);
  QuadUnit g10p4 = unit_power(g10, 4);
  CHECK(g10p4.a == 721);
  CHECK(g10p4.b == 228);
  CHECK(unit_norm(g10p4) == 1);

  RatGen gen(53);
  for (int i = 0; i < 50; ++i) {
    QuadUnit x{Int(gen.integer(-9, 9)), Int(gen.integer(-9, 9)), 10};
    QuadUnit y{Int(gen.integer(-9, 9)), Int(gen.integer(-9, 9)), 10};
    CHECK(unit_norm(unit_mul(x, y)) == unit_norm(x) * unit_norm(y));
  }
}

TEST_CASE("d = 6 candidates") {
  std::vector<PellCandidate> cands = solve_pell6(4);
  for (long m : {23L, 241L, 2399L}) {
    const PellCandidate* c = find_m(cands, m);
    REQUIRE(c != nullptr);
    CHECK(c->parity_valid);
    for (Rat z : {c->z_roots.first, c->z_roots.second}) {
      CHECK(3 * z * z + 6 * (m + 1) * z + m * m - 1 == 0);
    }
    // Pell condition on (2m+3).
    Int t = Int(2 * m + 3) * Int(2 * m + 3) - 1;
    CHECK(t % 6 == 0);
    auto [s, d] = squarefree_split(t / 6);
    CHECK(d == 1);
    // Shared discriminant with the companion quadratic.
    Rat disc = Rat(24) * (m + 1) * (m + 2);
    Rat comp_disc =
        36 * Rat(m + 2) * (m + 2) - 12 * Rat(m + 2) * (m + 4);
    CHECK(disc == comp_disc);
  }
  const PellCandidate* c23 = find_m(cands, 23);
  Rat lo = std::min(c23->z_roots.first, c23->z_roots.second);
  Rat hi = std::max(c23->z_roots.first, c23->z_roots.second);
  CHECK(lo == Rat(-44));
  CHECK(hi == Rat(-4));
}

TEST_CASE("d = 10 candidates") {
  std::vector<PellCandidate> cands = solve_pell10(6);
  const PellCandidate* c27 = find_m(cands, 27);
  REQUIRE(c27 != nullptr);
  CHECK(!c27->parity_valid);
  for (long m : {1080L, 242L, 4802L}) {
    const PellCandidate* c = find_m(cands, m);
    REQUIRE(c != nullptr);
    CHECK(c->parity_valid);
    for (Rat z : {c->z_roots.first, c->z_roots.second}) {
      CHECK(15 * z * z - 10 * m * z + Rat(m) * (m - 2) == 0);
    }
    CHECK((Int(2 * m + 3) * Int(2 * m + 3) - 9) % 10 == 0);
  }
}

TEST_CASE("candidates expand to one-quadratic seeds") {
  std::vector<PellCandidate> cands = solve_pell6(2);
  const PellCandidate* c23 = find_m(cands, 23);
  REQUIRE(c23 != nullptr);
  std::vector<Form2Seed> seeds = pell_to_candidates(*c23);
  REQUIRE(seeds.size() == 4);

  std::vector<std::pair<Rat, Rat>> ab;
  for (const Form2Seed& s : seeds) {
    CHECK(s.m == 23);
    CHECK((s.r == 1 || s.r == 2));
    if (s.r == 1) CHECK(s.p == -14);
    if (s.r == 2) CHECK(s.p == -19);
    ab.push_back({s.alpha, s.beta});
  }
  auto has = [&](long a, long b) {
    return std::find(ab.begin(), ab.end(),
                     std::make_pair(Rat(a), Rat(b))) != ab.end();
  };
  CHECK(has(1, -1));
  CHECK(has(1, -11));
  CHECK(has(2, 5));
  CHECK(has(2, 45));

  // End to end: every seed assembles to a certified map whose condition
  // coefficient vanishes.
  for (const Form2Seed& s : seeds) {
    BelyiMap map =
        assemble_one_quadratic(s.p, s.r, s.m, Scalar(s.alpha), Scalar(s.beta));
    const auto& oq = std::get<OneQuadratic>(map.form);
    CHECK(oq.alpha == Scalar(s.alpha));
    Series g = g_series(s.p, s.r, Scalar(s.alpha), Scalar(s.beta), 26);
    CHECK(g.coeff(24).is_zero());
    BelyiCertificate cert = certify(map);
    CHECK(cert.valid);
  }

  // Parity-invalid candidates are rejected.
  std::vector<PellCandidate> tens = solve_pell10(2);
  const PellCandidate* c27 = find_m(tens, 27);
  REQUIRE(c27 != nullptr);
  CHECK_THROWS_AS(pell_to_candidates(*c27), ParityInvalid);
}

}  // TEST_SUITE
