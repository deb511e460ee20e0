#pragma once

#include <map>

#include "thetapark/partition.hpp"
#include "thetapark/qtrat.hpp"
#include "thetapark/sym_func.hpp"

namespace thetapark {

// Homogeneous symmetric function over the (q,t) rational function field.
class SymFuncQT {
public:
    using Coeffs = std::map<Partition, QTRat, CanonicalPartitionLess>;

    SymFuncQT(Basis basis, int degree) : basis_(basis), degree_(degree) {}

    Basis basis() const { return basis_; }
    int degree() const { return degree_; }
    const Coeffs& coeffs() const { return coeffs_; }
    QTRat coeff(const Partition& key) const;
    void add_term(const Partition& key, const QTRat& value);

    friend bool operator==(const SymFuncQT&, const SymFuncQT&) = default;

private:
    Basis basis_;
    int degree_;
    Coeffs coeffs_;
};

SymFuncQT basis_convert_qt(const SymFuncQT& f, Basis target, int degree_bound = 5);

struct MuConstants {
    Partition mu;
    QTRat b;  // B_mu, sum of q^coarm t^coleg over cells
    QTRat pi; // Pi_mu, product of (1 - q^coarm t^coleg) over non-corner cells
    QTRat w;  // w_mu, product of (q^arm - t^{leg+1})(t^leg - q^{arm+1})
};

MuConstants mu_constants(const Partition& mu);

// Modified Macdonald polynomial in the monomial basis via the filling
// statistics, exact in Z[q,t]; the hard degree cap can be raised explicitly.
SymFuncQT ht_full(const Partition& mu, int degree_bound = 5);

// m_gamma evaluated at the cell alphabet {q^coarm t^coleg} of mu.
QTRat monomial_at_cells(const Partition& gamma, const Partition& mu);

// Delta_{m_gamma} Xi e_lambda at generic (q,t) in the elementary basis; every
// coefficient clears to a polynomial in q and t.
SymFuncQT xi_full(const Partition& lambda, const Partition& gamma, int degree_bound = 5);

struct EPositivityTerm {
    Partition eta;
    // coefficient of t^j is a polynomial in u (the image of q = 1 + u)
    std::vector<QPoly> u_polys_by_t;
};

struct EPositivityReport {
    Partition lambda, gamma;
    std::vector<EPositivityTerm> terms;
    bool all_nonnegative = true;
    std::string counterexample; // set when a negative coefficient appears
};

EPositivityReport epositivity_check(const Partition& lambda, const Partition& gamma, int degree_bound = 5);
// Same report computed from an expansion already in hand.
EPositivityReport epositivity_report(const SymFuncQT& expansion, const Partition& lambda,
                                     const Partition& gamma);

} // namespace thetapark
