#pragma once

// Baxterisations of the FC, BMW and Liu algebras and the local relations
// behind transfer-operator commutation. All checks are exact identities in
// A_2 or A_3 with the spectral parameters u, v kept symbolic.
//
// Conventions (one click rho = rotate_element(t, 2, ., 1)):
//   YBE_1  R_1(u) Y_2 R_1(v)            = R_2(v) Y_1 R_2(u),           Y = Y_1(u,v)
//   YBE_2  (rho^-1 R(u))_2 Y_1 R(v)_2   = R(v)_1 Y_2 (rho^-1 R(u))_1,  Y = Y_2(u,v)
//   YBE_3  R(v)_2 Y_1 (rho R(u))_2      = (rho R(u))_1 Y_2 R(v)_1,     Y = Y_3(u,v)
// YBE_2 and YBE_3 are the images of YBE_1 under a click of A_3 backwards
// and forwards. Inversion is horizontal composition to the identity, i.e.
// rho(Y) rho(Ybar) = 1.

#include <array>
#include <memory>
#include <optional>

#include "ybpa/linalg.hpp"
#include "ybpa/presentations.hpp"

namespace ybpa {

enum class Family { FC, BMW, Liu };

struct Baxterisation {
  Family family;
  std::string label;   // e.g. "BMW omega=-tau*q"
  std::string third;   // generator family of the third basis element: P, g or s
  AlphabetPtr alphabet;
  std::shared_ptr<PresentedTower> tower;
  RationalFn u, v;
  // (r_1, r_e, r_third)(x)
  std::function<std::array<RationalFn, 3>(const RationalFn&)> coeffs;
  // Ybar_1(u, v) as a function of w = uv.
  std::function<Vec(const RationalFn&)> ybar1;
  // Crossing data rho R(x) = ctilde(x) R(c(x)), absent for Liu.
  std::function<RationalFn(const RationalFn&)> ctilde, cross;
  // Spectral values where R has a pole.
  std::vector<RationalFn> poles;

  Vec element(const std::array<RationalFn, 3>& c) const;
  Vec R(const RationalFn& x) const { return element(coeffs(x)); }
  Vec Y(int i, const RationalFn& a, const RationalFn& b) const;
  Vec Ybar(int i, const RationalFn& a, const RationalFn& b) const;
  Vec rot(const Vec& x, int clicks) const;
};

// c_0 1 + c_1 X1 + c_2 Y1 in A_2 for generator families X (cup-cap) and Y.
Vec two_box_element(const Tower& t, const std::string& cupcap, const std::string& third,
                    const std::array<RationalFn, 3>& c);

// Alphabets must contain the named parameters plus "u" and "v".
Baxterisation fc_baxterisation(const AlphabetPtr& a, int max_level = 3);            // gamma
Baxterisation bmw_baxterisation(const AlphabetPtr& a, int omega, BmwStar star = BmwStar::Same,
                                int max_level = 3);                                 // tau, q; omega 0: -tau q, 1: tau/q
Baxterisation liu_baxterisation(const AlphabetPtr& a, int mu, const GQ& eps, int max_level = 3);  // delta
// Same families at fixed parameter values (u, v still symbolic).
Baxterisation fc_baxterisation_at(const GQ& gamma, int max_level);
Baxterisation bmw_baxterisation_at(const GQ& tau, const GQ& q, int omega, int max_level);
Baxterisation liu_baxterisation_at(const GQ& delta, int mu, const GQ& eps, int max_level);

// Liu helpers: phi(x) = i(1+x)/(1-x), Delta = (i - delta)/(i + delta).
RationalFn liu_phi(const RationalFn& x);
RationalFn liu_Delta(const RationalFn& delta);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

// rho(Y_i(u,v)) rho(Ybar_i(u,v)) = 1_2.
Check check_inversion(const Baxterisation& b, int i);
// LHS - RHS of YBE_i in A_3.
Vec ybe_residual(const Baxterisation& b, int i);
Check check_ybe(const Baxterisation& b, int i);
// rho^-1[Yb_2] Yb_1(u,v) = Yb_1(v,u) rho[Yb_3] and rho[Y_2] Y_1(u,v) = Y_1(v,u) rho^-1[Y_3].
std::array<Check, 2> check_bybe(const Baxterisation& b);
// FC/BMW: rho R(u) = ctilde(u) R(c(u)) exactly. Liu: the linear system for
// rho R(u) = k 1 + l e + l mu delta s (any ctilde, c) has augmented rank 3.
Check check_crossing(const Baxterisation& b);
// rotate by one click, then solve rho R(u) = ctilde R(c) for (ctilde, phi(c))
// as a linear system; returns the rank of coefficient and augmented matrices.
std::pair<int, int> liu_crossing_ranks(const Baxterisation& b);
Check check_self_adjoint(const Baxterisation& b);

// R(u) is specious when r_a(u) r_b(v) - r_b(u) r_a(v) vanishes for all a, b.
bool specious(const std::function<std::array<RationalFn, 3>(const RationalFn&)>& coeffs, const RationalFn& u,
              const RationalFn& v);

// Horizontal composition rho^-1(rho a . rho b) in A_2.
Vec horizontal(const Tower& t, const Vec& a, const Vec& b);

// Trilinear forms in (r(u), y(u,v), r(v)): key (a, b, c) indexes the
// monomial r_a(u) y_b(u,v) r_c(v), with 0 = 1, 1 = e, 2 = s.
using Trilinear = std::map<std::array<int, 3>, RationalFn>;

struct DefectExpansion {
  // Coefficients of (e1-e2), (s1-s2), (s1e2-e1s2), (s2e1-e2s1), (s1s2s1-s2s1s2).
  std::array<Trilinear, 5> brackets;
  bool in_span = false;  // the defect is exactly a combination of the five
};
// YBE_1 defect with u, v exchanged, R_1(v) Y_2 R_1(u) - R_2(u) Y_1 R_2(v), in PSG_3 words of
// length <= 3, with all nine coefficients generic.
DefectExpansion ybe_defect_expansion(const AlphabetPtr& a, const RationalFn& delta, const RationalFn& alpha,
                                     const GQ& eps);

struct BraidLimits {
  Vec at_zero;      // (1 + i delta) R(0)
  Vec at_infinity;  // lim (1 - i delta) R(u)
  std::vector<Check> checks;
};
// Needs b built with max_level >= 3.
BraidLimits braid_limits(const Baxterisation& b);

}  // namespace ybpa
