#pragma once

#include "thetapark/sym_func.hpp"
#include "thetapark/word_vectors.hpp"

namespace thetapark {

// Modified Macdonald polynomial at t = 1 in the elementary basis:
// (q;q)_mu sum_eta e_eta sum over partition vectors in PR(eta, mu) of
// products of forgotten principal evaluations.
SymFunc macdonald_t1(const Partition& mu);

// Independent monomial-side route: coefficient of m_lambda is the word sum
// below, assembled for every lambda of |mu|.
SymFunc macdonald_t1_monomial_oracle(const Partition& mu);

// <Ht_mu, h_lambda> at t = 1: sum of q^revmaj over WV(lambda, mu).
QPoly pair_h_t1(const Composition& mu, const Partition& lambda);

// <Ht_mu, s_lambda> at t = 1, via standard Young tableaux (comaj blocks) and
// via lattice word vectors; the two agree.
QPoly pair_s_t1(const Composition& mu, const Partition& lambda);
QPoly pair_s_t1_lattice(const Composition& mu, const Partition& lambda);

// m_gamma[[beta_1]_q + ... + [beta_r]_q], by the label-word expansion.
QPoly monomial_principal(const Partition& gamma, const Composition& beta);
// Same value by direct evaluation of m_gamma at the alphabet {q^j}.
QPoly monomial_principal_plethystic(const Partition& gamma, const Composition& beta);

// Coefficients of Delta_{m_gamma} Xi e_lambda (kind 'e') and
// Delta_{m_gamma} Xi s_lambda (kind 's') at t = 1, as polynomials in q
// grouped by the elementary-basis index eta.
EExpansion xi_expand_t1(char kind, const Partition& lambda, const Partition& gamma);

} // namespace thetapark
