#pragma once

// Concrete presentations: Temperley-Lieb, proto-singly-generated (PSG),
// Fuss-Catalan, BMW (Dubrovnik form, generators e and g), Liu, and the
// braid-semigroup algebra. Parameters are RationalFn so they can be kept
// symbolic or fixed to numbers.

#include "ybpa/presented.hpp"

namespace ybpa {

Presentation tl_presentation(int n, const AlphabetPtr& a, const RationalFn& delta);

// PS_n^(eps)(alpha, delta). eps in {1,-1,i,-i}; alpha must be 0 when eps^2 = -1.
// The star s* = s holds for real alpha, which is the only mode provided.
Presentation psg_presentation(int n, const AlphabetPtr& a, const RationalFn& delta, const RationalFn& alpha,
                              const GQ& eps);

// L_n^(eps)(delta): PSG at alpha = 0 plus the triple relation, eps = +-i.
Presentation liu_presentation(int n, const AlphabetPtr& a, const RationalFn& delta, const GQ& eps);

// FC_n(gamma) with generators E_i, P_i; loop value gamma^2.
Presentation fc_presentation(int n, const AlphabetPtr& a, const RationalFn& gamma);

enum class BmwStar { Inverse, Same };  // |tau|=|q|=1 resp. tau, q real

// BMW_n(tau, q). Only e_i and g_i are letters; g^{-1} = g - Q(1 - e).
Presentation bmw_presentation(int n, const AlphabetPtr& a, const RationalFn& tau, const RationalFn& q,
                              BmwStar star = BmwStar::Same);
// Same algebra with Q = q - 1/q supplied directly; every relation depends on
// q only through Q.
Presentation bmw_presentation_Q(int n, const AlphabetPtr& a, const RationalFn& tau, const RationalFn& Q,
                                BmwStar star = BmwStar::Same);
RationalFn bmw_delta(const RationalFn& tau, const RationalFn& q);
// (tau^2 + Q tau - 1)(tau^2 + Q(Q^2+3) tau - 1)
RationalFn bmw_gamma(const RationalFn& tau, const RationalFn& q);
// g_i^{-1} as an element of the free algebra on the BMW letters.
FreeElem bmw_ginv(const Presentation& p, int i);

// Braid semigroup BS_n: letters b_i, braid and far-commutation relations.
// Infinite-dimensional; used only as a source of substitution checks.
Presentation bs_presentation(int n, const AlphabetPtr& a);

// Expected dimensions (Catalan, Fuss-Catalan, (2n-1)!!).
long expected_dimension(const std::string& algebra, int n);

// Towers over the presentations above; dimensions are asserted against the
// closed forms where one exists.
std::unique_ptr<PresentedTower> tl_tower(const AlphabetPtr& a, const RationalFn& delta, int max_level);
std::unique_ptr<PresentedTower> psg_tower(const AlphabetPtr& a, const RationalFn& delta, const RationalFn& alpha,
                                          const GQ& eps, int max_level);
std::unique_ptr<PresentedTower> liu_tower(const AlphabetPtr& a, const RationalFn& delta, const GQ& eps, int max_level);
std::unique_ptr<PresentedTower> fc_tower(const AlphabetPtr& a, const RationalFn& gamma, int max_level);
std::unique_ptr<PresentedTower> bmw_tower(const AlphabetPtr& a, const RationalFn& tau, const RationalFn& q,
                                          BmwStar star, int max_level);

}  // namespace ybpa
