#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "belyi/roots.hpp"
#include "belyi/series.hpp"

namespace belyi {

// phi(x) = (1-x)^p (1-lambda*x)^q G(x)^r with phi = 1 + O(x^(m+2)).
struct TwoLinear {
  long p = 0, q = 0, r = 0, m = 0;
  Scalar lambda;
};

// phi(x) = (1 + alpha*x + beta*x^2)^p G(x)^r with phi = 1 + O(x^(m+2)).
struct OneQuadratic {
  long p = 0, r = 0, m = 0;
  Scalar alpha, beta;
};

struct BelyiMap {
  std::variant<TwoLinear, OneQuadratic> form;
  Poly G;  // degree m, G(0) = 1
};

enum class DegClass {
  Generic,
  NoMaps,                // no valid maps exist in this parameter regime
  ReducedDegree,         // q = -l*r drops the degree in lambda to l
  LambdaPowerFactor,     // p = -l*r forces a lambda^(m+1-l) factor
  OneMinusLambdaFactor,  // p+q = -l*r forces a (1-lambda)^(l+1) factor
  SquareRootFactor,      // form 2, 2p = -l*r with odd l: (1-z) power factor
  AlphaZeroOnly          // form 2, only the alpha = 0 map survives
};

struct DegeneracyReport {
  DegClass cls = DegClass::Generic;
  long ell = 0;          // the l of the active degeneration, if any
  long expected_count = 0;  // maps predicted by the count law
};

std::string to_string(DegClass c);

// Coefficients of (1-x)^(-p/r) (1-lambda*x)^(-q/r) to T terms.
Series h_series(long p, long q, long r, const Scalar& lambda, long T);

// Coefficients of (1 + alpha*x + beta*x^2)^(-p/r) to T terms.
Series g_series(long p, long r, const Scalar& alpha, const Scalar& beta,
                long T);

struct Form11Solution {
  std::vector<Scalar> roots;  // lambda values, excluding 0 and 1
  Poly unresolved;            // rational factor of degree >= 3, or zero
  DegeneracyReport report;
  Poly condition;  // the cleared condition polynomial in lambda
};

Form11Solution solve_form11(long p, long q, long r, long m);

struct Form2Solution {
  std::vector<Scalar> z_roots;  // z = 4*beta/alpha^2, excluding 0 (and 1)
  bool alpha_zero_map = false;
  Poly unresolved;
  DegeneracyReport report;
  Poly condition;  // condition polynomial in z
};

Form2Solution solve_form2(long p, long r, long m);

BelyiMap assemble_two_linear(long p, long q, long r, long m,
                             const Scalar& lambda);
BelyiMap assemble_one_quadratic(long p, long r, long m, const Scalar& alpha,
                                const Scalar& beta);

struct FiberEntry {
  enum class Kind { Point, Infinity, PolyRoots, Aggregate };
  Kind kind = Kind::Point;
  Scalar point;     // for Kind::Point
  Poly roots_of;    // for Kind::PolyRoots
  long count = 1;   // number of distinct points this entry stands for
  long order = 1;   // common ramification order
};

struct BelyiCertificate {
  long degree = 0;
  long vanishing_order = 0;  // order of phi - 1 at x = 0
  std::array<std::vector<FiberEntry>, 3> fibers;  // above 0, 1, infinity
  long total_points = 0;
  std::vector<long> extra_vanishing;  // zero series coefficients in (m+1, d]
  bool valid = false;
  std::string reason;  // empty when valid
};

BelyiCertificate certify(const BelyiMap& map);

// All m = 1 maps for given exponents, derived from the two-root condition;
// throws AllDegenerate when every candidate collapses.
struct SigmaMap {
  BelyiMap map;
  Scalar sigma;  // sqrt(-p q r (p+q+r)), the branch selector
};
std::vector<SigmaMap> m1_sigma_family(long p, long q, long r);

// Rational parametrization of -q r (p+q+r) p = square: exposes (p:q:r) up to
// scaling for parameters (u, v).
struct SigmaTriple {
  Rat p, q, r;
  Rat sigma;
};
SigmaTriple sigma_triple_from_uv(const Rat& u, const Rat& v);

// Canonical x-rescaling factor making G have integer coefficients with the
// smallest such scale (G must have rational coefficients).
Rat canonical_rescale(const Poly& G);

// True when the two maps agree up to the x -> c*x rescaling freedom.
bool maps_equivalent(const BelyiMap& A, const BelyiMap& B);

}  // namespace belyi
