#include "thetapark/qtrat.hpp"

#include <sstream>
#include <stdexcept>

namespace thetapark {

void TPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

TPoly TPoly::monomial(int exp, QRat coeff) {
    TPoly p;
    if (!coeff.is_zero()) {
        p.coeffs_.assign(static_cast<size_t>(exp) + 1, QRat());
        p.coeffs_.back() = std::move(coeff);
    }
    return p;
}

QRat TPoly::coeff(int exp) const {
    if (exp < 0 || exp >= static_cast<int>(coeffs_.size())) return QRat();
    return coeffs_[static_cast<size_t>(exp)];
}

TPoly& TPoly::operator+=(const TPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), QRat());
    for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

TPoly& TPoly::operator-=(const TPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), QRat());
    for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

TPoly& TPoly::operator*=(const TPoly& other) {
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<QRat> result(coeffs_.size() + other.coeffs_.size() - 1, QRat());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < other.coeffs_.size(); ++j) {
            if (other.coeffs_[j].is_zero()) continue;
            result[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    coeffs_ = std::move(result);
    trim();
    return *this;
}

TPoly TPoly::operator-() const {
    TPoly p = *this;
    for (QRat& c : p.coeffs_) c = -c;
    return p;
}

TPoly& TPoly::scale(const QRat& factor) {
    if (factor.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (QRat& c : coeffs_) c *= factor;
    return *this;
}

void TPoly::divmod(const TPoly& n, const TPoly& d, TPoly& quot, TPoly& rem) {
    if (d.is_zero()) throw std::invalid_argument("t-polynomial division by zero");
    quot = TPoly();
    rem = n;
    const int dd = d.degree();
    QRat lead_inv = d.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        QRat factor = rem.leading() * lead_inv;
        TPoly term = monomial(shift, factor);
        quot += term;
        rem -= term * d;
    }
}

QRat TPoly::eval(const QRat& t_value) const {
    QRat value;
    for (size_t i = coeffs_.size(); i-- > 0;) value = value * t_value + coeffs_[i];
    return value;
}

std::string TPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int e = degree(); e >= 0; --e) {
        QRat c = coeff(e);
        if (c.is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        out << '(' << c.str() << ')';
        if (e >= 1) {
            out << "*t";
            if (e >= 2) out << '^' << e;
        }
    }
    return out.str();
}

namespace {

// Fraction-free layer: t-polynomials with q-polynomial coefficients, used to
// keep gcd computations away from rational-function blowup.
using ZPoly = std::vector<QPoly>; // index = t exponent

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

QPoly zcontent(const ZPoly& p) {
    QPoly g;
    for (const QPoly& c : p) g = poly_gcd(g, c);
    return g;
}

ZPoly zprimitive(ZPoly p) {
    QPoly g = zcontent(p);
    if (g.degree() > 0) {
        for (QPoly& c : p) c = *c.divided_exactly(g);
    }
    return p;
}

// pseudo-remainder of a by b: multiply a's tail by lead(b) as needed so the
// division stays fraction free
ZPoly zpseudo_rem(ZPoly a, const ZPoly& b) {
    const QPoly& lead = b.back();
    while (a.size() >= b.size()) {
        QPoly top = a.back();
        size_t shift = a.size() - b.size();
        for (QPoly& c : a) c *= lead;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= top * b[i];
        ztrim(a);
        if (a.empty()) break;
    }
    return a;
}

ZPoly zgcd(ZPoly a, ZPoly b) {
    ztrim(a);
    ztrim(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        ZPoly r = zpseudo_rem(a, b);
        a = std::move(b);
        b = zprimitive(std::move(r));
    }
    return zprimitive(std::move(a));
}

// exact long division; the quotient coefficients land in the polynomial ring
ZPoly zdiv_exact(ZPoly n, const ZPoly& d) {
    if (d.empty()) throw std::logic_error("fraction-free division by zero");
    if (n.empty()) return {};
    if (n.size() < d.size()) throw std::logic_error("fraction-free division is not exact");
    ZPoly quot(n.size() - d.size() + 1);
    while (!n.empty() && n.size() >= d.size()) {
        auto q_c = n.back().divided_exactly(d.back());
        if (!q_c) throw std::logic_error("fraction-free division is not exact");
        size_t shift = n.size() - d.size();
        quot[shift] = *q_c;
        for (size_t i = 0; i < d.size(); ++i) n[shift + i] -= *q_c * d[i];
        ztrim(n);
    }
    if (!n.empty()) throw std::logic_error("fraction-free division is not exact");
    return quot;
}

// common denominator of the coefficients, and the cleared q-polynomial layer
QPoly common_denominator(const TPoly& p) {
    QPoly d(1);
    for (const QRat& c : p.coeffs()) {
        QPoly g = poly_gcd(d, c.den());
        d = *(d * c.den()).divided_exactly(g);
    }
    return d;
}

ZPoly cleared(const TPoly& p, const QPoly& d) {
    ZPoly out;
    out.reserve(p.coeffs().size());
    for (const QRat& c : p.coeffs()) out.push_back(c.num() * *d.divided_exactly(c.den()));
    return out;
}

TPoly from_zpoly(const ZPoly& p) {
    std::vector<QRat> coeffs;
    coeffs.reserve(p.size());
    for (const QPoly& c : p) coeffs.emplace_back(c);
    return TPoly(std::move(coeffs));
}

} // namespace

TPoly tpoly_gcd(TPoly a, TPoly b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    ZPoly za = cleared(a, common_denominator(a));
    ZPoly zb = cleared(b, common_denominator(b));
    return from_zpoly(zgcd(std::move(za), std::move(zb)));
}

TPoly qt_monomial(int q_exp, int t_exp, const Rational& coeff) {
    return TPoly::monomial(t_exp, QRat(QPoly::monomial(q_exp, coeff)));
}

QTRat::QTRat(TPoly num, TPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
    normalize();
}

void QTRat::normalize() {
    if (num_.is_zero()) {
        den_ = TPoly(1);
        return;
    }
    // joint clearing of the q-denominators keeps the whole reduction in the
    // polynomial ring
    QPoly dn = common_denominator(num_), dd = common_denominator(den_);
    QPoly g_d = poly_gcd(dn, dd);
    QPoly scale_d = *(dn * dd).divided_exactly(g_d);
    ZPoly zn, zd;
    {
        QPoly extra_n = *scale_d.divided_exactly(dn);
        ZPoly base = cleared(num_, dn);
        zn.reserve(base.size());
        for (QPoly& c : base) zn.push_back(c * extra_n);
        QPoly extra_d = *scale_d.divided_exactly(dd);
        base = cleared(den_, dd);
        zd.reserve(base.size());
        for (QPoly& c : base) zd.push_back(c * extra_d);
    }
    ZPoly g = zgcd(zn, zd);
    if (g.size() > 1) {
        zn = zdiv_exact(std::move(zn), g);
        zd = zdiv_exact(std::move(zd), g);
    }
    QPoly common = poly_gcd(zcontent(zn), zcontent(zd));
    if (common.degree() > 0) {
        for (QPoly& c : zn) c = *c.divided_exactly(common);
        for (QPoly& c : zd) c = *c.divided_exactly(common);
    }
    Rational lead = zd.back().leading();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        for (QPoly& c : zn) c.scale(inv);
        for (QPoly& c : zd) c.scale(inv);
    }
    num_ = from_zpoly(zn);
    den_ = from_zpoly(zd);
}

QTRat& QTRat::operator+=(const QTRat& other) {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ *= other.den_;
    normalize();
    return *this;
}

QTRat& QTRat::operator-=(const QTRat& other) {
    num_ = num_ * other.den_ - other.num_ * den_;
    den_ *= other.den_;
    normalize();
    return *this;
}

QTRat& QTRat::operator*=(const QTRat& other) {
    num_ *= other.num_;
    den_ *= other.den_;
    normalize();
    return *this;
}

QTRat& QTRat::operator/=(const QTRat& other) {
    if (other.is_zero()) throw std::invalid_argument("division by zero rational function");
    num_ *= other.den_;
    den_ *= other.num_;
    normalize();
    return *this;
}

QTRat QTRat::operator-() const {
    QTRat r = *this;
    r.num_ = -r.num_;
    return r;
}

bool QTRat::is_polynomial() const {
    if (!(den_ == TPoly(1))) return false;
    for (const QRat& c : num_.coeffs())
        if (!c.is_polynomial()) return false;
    return true;
}

std::vector<QPoly> QTRat::as_qt_polynomial() const {
    if (!(den_ == TPoly(1)))
        throw NonPolynomialError("t-denominator does not clear", QPoly());
    std::vector<QPoly> out;
    out.reserve(num_.coeffs().size());
    for (const QRat& c : num_.coeffs()) out.push_back(c.as_polynomial());
    return out;
}

QRat QTRat::eval_t(const QRat& t_value) const {
    QRat d = den_.eval(t_value);
    if (d.is_zero()) throw std::invalid_argument("denominator vanishes at t evaluation point");
    return num_.eval(t_value) / d;
}

std::string QTRat::str() const {
    if (den_ == TPoly(1)) return num_.str();
    std::ostringstream out;
    out << '[' << num_.str() << "] / [" << den_.str() << ']';
    return out.str();
}

} // namespace thetapark
