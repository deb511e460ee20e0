#pragma once

#include "thetapark/partition.hpp"
#include "thetapark/qrat.hpp"

namespace thetapark {

QPoly q_int(int n);                          // [n]_q = 1 + q + ... + q^{n-1}
QPoly q_pochhammer(int n);                   // (q;q)_n
QPoly q_pochhammer(const Partition& mu);     // product of (q;q)_{mu_i}
// [ l(mu) choose m_1(mu), m_2(mu), ... ]_q; the division is exact.
QPoly q_multinomial(const Partition& mu);

struct QAnalogs {
    QPoly q_integer;
    QPoly pochhammer;
    QPoly multinomial;
};
QAnalogs q_analogs(int n, const Partition& mu);

// Principal evaluation of the forgotten symmetric function at 1/(1-q):
// (-1)^{|mu|-l(mu)} sum over rearrangements alpha of products of geometric
// series 1/(1-q^{sigma_k}) with sigma_k the tail sums of alpha.
QRat forgotten_principal(const Partition& mu);

// Same sum restricted to the first index equal to zero; this is the
// q-enumerator of column-composition tableaux with an empty first column
// (times the sign).
QRat forgotten_principal_c1_zero(const Partition& mu);

} // namespace thetapark
