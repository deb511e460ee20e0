#include "thetapark/qrat.hpp"

#include <sstream>

namespace thetapark {

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
    normalize();
}

void QRat::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly(1);
        return;
    }
    QPoly g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = *num_.divided_exactly(g);
        den_ = *den_.divided_exactly(g);
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_.scale(inv);
        den_.scale(inv);
    }
}

QRat& QRat::operator+=(const QRat& other) {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ *= other.den_;
    normalize();
    return *this;
}

QRat& QRat::operator-=(const QRat& other) {
    num_ = num_ * other.den_ - other.num_ * den_;
    den_ *= other.den_;
    normalize();
    return *this;
}

QRat& QRat::operator*=(const QRat& other) {
    num_ *= other.num_;
    den_ *= other.den_;
    normalize();
    return *this;
}

QRat& QRat::operator/=(const QRat& other) {
    if (other.is_zero()) throw std::invalid_argument("division by zero rational function");
    num_ *= other.den_;
    den_ *= other.num_;
    normalize();
    return *this;
}

QRat QRat::operator-() const {
    QRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QRat QRat::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero rational function");
    return QRat(den_, num_);
}

QPoly QRat::as_polynomial() const {
    QPoly quot, rem;
    QPoly::divmod(num_, den_, quot, rem);
    if (!rem.is_zero())
        throw NonPolynomialError("rational function does not clear to a polynomial", rem);
    return quot;
}

std::vector<Rational> QRat::series(int n) const {
    if (den_.coeff(0) == 0) throw std::invalid_argument("series expansion needs den(0) != 0");
    std::vector<Rational> out(static_cast<size_t>(n) + 1, Rational(0));
    const Rational d0 = den_.coeff(0);
    for (int k = 0; k <= n; ++k) {
        Rational acc = num_.coeff(k);
        for (int j = 1; j <= k; ++j) acc -= den_.coeff(j) * out[static_cast<size_t>(k - j)];
        out[static_cast<size_t>(k)] = acc / d0;
    }
    return out;
}

Rational QRat::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw std::invalid_argument("denominator vanishes at evaluation point");
    return num_.eval(x) / d;
}

std::string QRat::str() const {
    if (is_polynomial()) return num_.str();
    std::ostringstream out;
    out << '(' << num_.str() << ")/(" << den_.str() << ')';
    return out.str();
}

QPoly assert_polynomial(const QRat& r) { return r.as_polynomial(); }

} // namespace thetapark
