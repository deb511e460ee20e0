#pragma once

#include <string>
#include <vector>

#include "thetapark/qrat.hpp"

namespace thetapark {

// Dense polynomial in t with coefficients in the field of rational functions
// in q; lowest degree first, no trailing zeros.
class TPoly {
public:
    TPoly() = default;
    TPoly(int constant) : TPoly(QRat(constant)) {}
    TPoly(QRat constant) {
        if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
    }
    explicit TPoly(std::vector<QRat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static TPoly variable() { return monomial(1); }
    static TPoly monomial(int exp, QRat coeff = QRat(1));

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == QRat(1); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    QRat coeff(int exp) const;
    const std::vector<QRat>& coeffs() const { return coeffs_; }
    const QRat& leading() const { return coeffs_.back(); }

    TPoly& operator+=(const TPoly& other);
    TPoly& operator-=(const TPoly& other);
    TPoly& operator*=(const TPoly& other);
    friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
    friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
    friend TPoly operator*(TPoly a, const TPoly& b) { return a *= b; }
    TPoly operator-() const;
    TPoly& scale(const QRat& factor);

    static void divmod(const TPoly& n, const TPoly& d, TPoly& quot, TPoly& rem);
    QRat eval(const QRat& t_value) const;

    std::string str() const;

    friend bool operator==(const TPoly&, const TPoly&) = default;

private:
    void trim();
    std::vector<QRat> coeffs_;
};

TPoly tpoly_gcd(TPoly a, TPoly b); // monic in t

// q^a t^b with a rational coefficient
TPoly qt_monomial(int q_exp, int t_exp, const Rational& coeff = 1);

// Reduced fraction of t-polynomials over the rational function field in q;
// the denominator is monic in t.
class QTRat {
public:
    QTRat() : num_(), den_(1) {}
    QTRat(int constant) : num_(constant), den_(1) {}
    QTRat(QRat constant) : num_(std::move(constant)), den_(1) {}
    QTRat(TPoly p) : num_(std::move(p)), den_(1) {}
    QTRat(TPoly num, TPoly den);

    const TPoly& num() const { return num_; }
    const TPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    QTRat& operator+=(const QTRat& other);
    QTRat& operator-=(const QTRat& other);
    QTRat& operator*=(const QTRat& other);
    QTRat& operator/=(const QTRat& other);
    friend QTRat operator+(QTRat a, const QTRat& b) { return a += b; }
    friend QTRat operator-(QTRat a, const QTRat& b) { return a -= b; }
    friend QTRat operator*(QTRat a, const QTRat& b) { return a *= b; }
    friend QTRat operator/(QTRat a, const QTRat& b) { return a /= b; }
    QTRat operator-() const;

    // true when the value lies in Z[q,t] up to rational scalars: the t-layer
    // clears and every coefficient clears in q
    bool is_polynomial() const;
    // t-coefficients as polynomials in q; throws NonPolynomialError otherwise
    std::vector<QPoly> as_qt_polynomial() const;

    QRat eval_t(const QRat& t_value) const;

    std::string str() const;

    friend bool operator==(const QTRat&, const QTRat&) = default;

private:
    void normalize();
    TPoly num_, den_;
};

} // namespace thetapark
