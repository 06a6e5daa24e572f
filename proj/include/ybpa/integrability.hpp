#pragma once

// Homogeneous double-row transfer operators, their commutation and
// self-adjointness, and polynomialisability of the commuting family.
//
// T_n(u) = ptrace_{n+1}(R_n(u) ... R_1(u) R_1(u) ... R_n(u)) in A_n, with
// R_i the 2-box placed on strands i, i+1 of A_{n+1}. This is the closure of
// build_transfer_net with identity boundary operators; it needs one level
// less than compiling the net.

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>

#include "ybpa/baxter.hpp"

namespace ybpa {

using RFunction = std::function<Vec(const RationalFn&)>;

// R(x) of a Baxterisation realised in another tower of the same algebra
// (e.g. the diagram tower for FC).
RFunction r_function(const Baxterisation& b, std::shared_ptr<const Tower> t);
// Temperley-Lieb: R(x) = 1 + z(x-1)/(z^2-x) e with loop z + 1/z.
RFunction tl_r_function(std::shared_ptr<const Tower> t, const RationalFn& z);

Vec transfer_element(const Tower& t, int n, const Vec& lower, const Vec& upper);

struct TransferFamily {
  std::string label;
  std::shared_ptr<const Tower> tower;
  int n = 0;
  RFunction R;
  RationalFn u;
  Vec T;  // T_n(u), empty when built without the symbolic element
  std::vector<RationalFn> excluded;

  // T_n at a value of u, from the symbolic element when present.
  Vec at(const RationalFn& x) const;
  bool is_excluded(const RationalFn& x) const;
};

TransferFamily transfer_operator(std::string label, std::shared_ptr<const Tower> t, int n, RFunction R,
                                 const RationalFn& u, std::vector<RationalFn> excluded = {}, bool symbolic = true);
TransferFamily transfer_operator(const Baxterisation& b, int n, bool symbolic = true);

struct CommutationReport {
  Check check;
  Vec commutator;         // symbolic mode
  int samples = 0;        // randomized mode
  int resampled = 0;
  uint64_t seed = 0;
};
// Symbolic: T(u)T(v) - T(v)T(u) with v the second symbol. Randomized:
// exact values at random admissible rational points.
CommutationReport commutation_symbolic(const TransferFamily& f, const RationalFn& v);
CommutationReport commutation_randomized(const TransferFamily& f, int samples, uint64_t seed);

// T(x)^* = T(x) at each point. Points outside the domain (u real, or
// |u| = 1 when u is declared unit-modulus) are flagged and not checked.
std::vector<Check> check_selfadjoint(const TransferFamily& f, const std::vector<GQ>& points);

// Exact univariate polynomials over Q(i), lowest degree first.
using UPoly = std::vector<GQ>;
// Minimal polynomial of x in A (all coefficients constant), monic.
UPoly minimal_polynomial(const FiniteAlgebra& A, const Vec& x);
UPoly upoly_gcd(UPoly a, UPoly b);
UPoly upoly_derivative(const UPoly& p);
// Minimal polynomial squarefree, hence rho(x) diagonalisable.
bool diagonalizability_check(const FiniteAlgebra& A, const Vec& x);

// x as a polynomial in b exactly, if it lies in Q(i)[b].
std::optional<std::vector<GQ>> exact_polynomial_in(const FiniteAlgebra& A, const Vec& b, const Vec& x);

struct PolyGenerator {
  Vec b;
  std::vector<std::complex<double>> spectrum;  // distinct eigenvalues of rho(b)
  // values[j][k]: T(u_j) on the k-th eigenspace; p_j interpolates these.
  std::vector<std::vector<std::complex<double>>> values;
  std::vector<std::vector<std::complex<double>>> coefficients;  // monomial coefficients of p_j
  double residual = 0;  // max_j ||p_j(rho b) - rho T(u_j)||_max / max(1, ||rho T(u_j)||_max)
};
// b is a random combination of the samples (fixed seed). Samples must have
// constant coefficients.
PolyGenerator find_polynomial_generator(const FiniteAlgebra& A, const std::vector<Vec>& samples, uint64_t seed = 1);

std::vector<double> gram_eigenvalues(const Tower& t, int n);

// Unit-circle point (1 - t^2 + 2it)/(1 + t^2).
GQ unit_circle_point(const mpq_class& t);

}  // namespace ybpa
