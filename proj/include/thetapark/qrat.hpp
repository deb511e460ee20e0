#pragma once

#include <stdexcept>
#include <string>

#include "thetapark/qpoly.hpp"

namespace thetapark {

// Raised when a rational function that should clear to a polynomial does not;
// carries the offending remainder.
class NonPolynomialError : public std::runtime_error {
public:
    NonPolynomialError(std::string what, QPoly remainder)
        : std::runtime_error(std::move(what)), remainder_(std::move(remainder)) {}
    const QPoly& remainder() const { return remainder_; }

private:
    QPoly remainder_;
};

// Reduced fraction of polynomials in q with monic denominator; equality is
// representational.
class QRat {
public:
    QRat() : num_(), den_(1) {}
    QRat(int constant) : num_(constant), den_(1) {}
    QRat(const Rational& constant) : num_(constant), den_(1) {}
    QRat(QPoly p) : num_(std::move(p)), den_(1) {}
    QRat(QPoly num, QPoly den);

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    QRat& operator+=(const QRat& other);
    QRat& operator-=(const QRat& other);
    QRat& operator*=(const QRat& other);
    QRat& operator/=(const QRat& other);
    friend QRat operator+(QRat a, const QRat& b) { return a += b; }
    friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
    friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
    friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
    QRat operator-() const;
    QRat inverse() const;

    bool is_polynomial() const { return den_.degree() == 0; }
    // Succeeds iff the denominator divides the numerator exactly.
    QPoly as_polynomial() const;

    // Power series expansion at q = 0 through degree n; requires den(0) != 0.
    std::vector<Rational> series(int n) const;

    Rational eval(const Rational& x) const; // den(x) must be nonzero

    std::string str() const;

    friend bool operator==(const QRat&, const QRat&) = default;

private:
    void normalize();
    QPoly num_, den_;
};

QPoly assert_polynomial(const QRat& r);

} // namespace thetapark
