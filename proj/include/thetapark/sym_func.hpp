#pragma once

#include <map>
#include <string>

#include "thetapark/partition.hpp"
#include "thetapark/qrat.hpp"

namespace thetapark {

enum class Basis { m, e, h, s };

std::string basis_name(Basis b);

// Homogeneous symmetric function of a fixed degree, stored as a coefficient
// map on partitions of that degree; absent keys are zero.
class SymFunc {
public:
    using Coeffs = std::map<Partition, QRat, CanonicalPartitionLess>;

    SymFunc(Basis basis, int degree) : basis_(basis), degree_(degree) {}

    Basis basis() const { return basis_; }
    int degree() const { return degree_; }
    const Coeffs& coeffs() const { return coeffs_; }

    QRat coeff(const Partition& key) const;
    void add_term(const Partition& key, const QRat& value);
    SymFunc& operator+=(const SymFunc& other);
    SymFunc& scale(const QRat& factor);

    friend bool operator==(const SymFunc&, const SymFunc&) = default;

private:
    Basis basis_;
    int degree_;
    Coeffs coeffs_;
};

// Re-express a symmetric function in another basis; exact, throws
// std::invalid_argument above the degree bound.
SymFunc basis_convert(const SymFunc& f, Basis target, int degree_bound = 8);

// Shared transition data, usable for coefficient rings beyond QRat.
const std::vector<Partition>& partition_index(int n);
// rows indexed by the source basis, columns by the monomial basis
const std::vector<std::vector<Int>>& basis_to_m_matrix(int n, Basis source);
// rational inverse: solves for target-basis coefficients from m coefficients
const std::vector<std::vector<Rational>>& m_to_basis_matrix(int n, Basis target);

// Expansion in the elementary basis with polynomial coefficients.
class EExpansion {
public:
    using Terms = std::map<Partition, QPoly, CanonicalPartitionLess>;

    explicit EExpansion(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    void add_term(const Partition& eta, const QPoly& poly);
    QPoly term(const Partition& eta) const;

    std::string str() const; // unicode-subscripted e terms

    friend bool operator==(const EExpansion&, const EExpansion&) = default;

private:
    int degree_;
    Terms terms_;
};

} // namespace thetapark
