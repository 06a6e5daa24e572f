#pragma once

// Substitution checks for the quotient descriptions of FC, BMW and Liu as
// quotients of PSG algebras, and of BMW as a quotient of the braid
// semigroup. Each report runs both directions of the isomorphism where the
// quotient is finite: the target relations (and ideal generators) vanish
// after substitution, and the quotient presentation completes to the right
// dimension with the source relations holding in it.

#include "ybpa/presentations.hpp"

namespace ybpa {

struct QuotientSummary {
  QuotientReport report;
  long quotient_dim = -1;  // dimension of the completed quotient presentation
};

// FC_n(gamma) vs PS_n^(1)(mu(gamma - 1/gamma), gamma^2)/<iota_ij>, symbolic gamma.
QuotientSummary check_fc_quotient(int n, int mu);
// BMW_n(tau, q) vs PS_n^(1)(mu Q(tau^2+1)/sqrt(Gamma), delta)/<iota_i>, with
// sqrt(Gamma) a formal root.
QuotientSummary check_bmw_quotient(int n, int mu);
// L_n^(eps)(delta) vs PS_n^(eps)(0, delta)/<iota_i>.
QuotientSummary check_liu_quotient(int n, const GQ& eps);
// BMW_n(tau, q) as a quotient of BS_n: b_i = g_i.
QuotientSummary check_braid_semigroup_quotient(int n);

// The ideal generators as elements over PSG letters.
FreeElem fc_iota(const Presentation& psg, int i, int j, const RationalFn& shat_scale);
FreeElem bmw_iota(const Presentation& psg, int i, const RationalFn& shat_scale, const RationalFn& tau,
                  const RationalFn& q);
FreeElem bmw_iota_Q(const Presentation& psg, int i, const RationalFn& shat_scale, const RationalFn& tau,
                    const RationalFn& Q);
FreeElem liu_iota(const Presentation& psg, int i, const RationalFn& delta, const GQ& eps);

}  // namespace ybpa
