#pragma once

#include <string>
#include <vector>

namespace thetapark {

struct SuiteResult {
    std::string name;
    long checks = 0;
    std::vector<std::string> failures;
    double seconds = 0;
    bool ok() const { return failures.empty(); }
};

// Theorem-level equalities between the operator oracle and the parking
// function enumeration, for all lambda of size up to n_max and gamma of size
// up to m_max.
SuiteResult verify_theorem1(int n_max, int m_max, int threads);
SuiteResult verify_theorem2(int n_max, int m_max, int threads);
// Xi e_n = e_n through both pipelines.
SuiteResult verify_xi_identity(int n_max);
// The involution on the bounded-weight slice: order two, weight preserved,
// sign reversed off fixed points, and the signed sum equals the fixed-point
// sum coefficientwise.
SuiteResult verify_involution(int n_max, int m_max, long weight_max);
// phi and iota round trips, statistic preservation, cardinality match.
SuiteResult verify_bijection(int n_max, int m_max);
// Macdonald specialization against the word-enumeration oracle, and the
// Schur pairing at q = 1 against hook-length counts.
SuiteResult verify_specialization(int mu_max);
// Closed-form forgotten principal evaluation against tableau enumeration.
SuiteResult verify_forgotten(int mu_max, int series_degree);
// Colored parking functions against decorated Dyck paths, with the direct
// operator cross-check.
SuiteResult verify_extended_delta(int n_max, int m_max, int threads);
// Two-label parking functions against parallelogram polyominoes.
SuiteResult verify_two_car(int total_max);
// Ascent versus descent labelings.
SuiteResult verify_labelings(int n_max, int m_max);
// Randomized field identities on rational functions.
SuiteResult verify_qalgebra(unsigned seed, int trials);
// Generic-(q,t) expansion: polynomial coefficients, t=1 consistency with
// both specialized pipelines, and e-positivity after q -> 1+u.
SuiteResult verify_conjecture(int n_max, int m_max, int threads);

} // namespace thetapark
