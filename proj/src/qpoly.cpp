#include "thetapark/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace thetapark {

namespace {
const Rational kZero = 0;
}

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::monomial(int exp, const Rational& coeff) {
    if (exp < 0) throw std::invalid_argument("monomial exponent must be nonnegative");
    QPoly p;
    if (coeff != 0) {
        p.coeffs_.assign(static_cast<size_t>(exp) + 1, Rational(0));
        p.coeffs_.back() = coeff;
    }
    return p;
}

QPoly QPoly::one_minus_q_pow(int k) {
    QPoly p(1);
    p -= monomial(k);
    return p;
}

const Rational& QPoly::coeff(int exp) const {
    if (exp < 0 || exp >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(exp)];
}

QPoly& QPoly::operator+=(const QPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& other) {
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> result(coeffs_.size() + other.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < other.coeffs_.size(); ++j) {
            if (other.coeffs_[j] == 0) continue;
            result[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    coeffs_ = std::move(result);
    trim();
    return *this;
}

QPoly QPoly::operator-() const {
    QPoly p = *this;
    for (Rational& c : p.coeffs_) c = -c;
    return p;
}

QPoly& QPoly::scale(const Rational& factor) {
    if (factor == 0) {
        coeffs_.clear();
        return *this;
    }
    for (Rational& c : coeffs_) c *= factor;
    return *this;
}

QPoly QPoly::shifted(int exp) const {
    if (is_zero()) return {};
    QPoly p;
    p.coeffs_.assign(static_cast<size_t>(exp), Rational(0));
    p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return p;
}

void QPoly::divmod(const QPoly& n, const QPoly& d, QPoly& quot, QPoly& rem) {
    if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
    quot = QPoly();
    rem = n;
    const int dd = d.degree();
    const Rational& lead = d.leading();
    while (!rem.is_zero() && rem.degree() >= dd) {
        int shift = rem.degree() - dd;
        Rational factor = rem.leading() / lead;
        QPoly term = monomial(shift, factor);
        quot += term;
        rem -= term * d;
    }
}

std::optional<QPoly> QPoly::divided_exactly(const QPoly& d) const {
    QPoly quot, rem;
    divmod(*this, d, quot, rem);
    if (!rem.is_zero()) return std::nullopt;
    return quot;
}

Rational QPoly::eval(const Rational& x) const {
    Rational value = 0;
    for (size_t i = coeffs_.size(); i-- > 0;) value = value * x + coeffs_[i];
    return value;
}

QPoly QPoly::compose_one_plus_u() const {
    // Horner with q = 1 + u
    QPoly image(1);
    image += QPoly::variable();
    QPoly value;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        value *= image;
        value += QPoly(coeffs_[i]);
    }
    return value;
}

bool QPoly::integer_coefficients() const {
    for (const Rational& c : coeffs_)
        if (denominator(c) != 1) return false;
    return true;
}

bool QPoly::nonnegative_coefficients() const {
    for (const Rational& c : coeffs_)
        if (c < 0) return false;
    return true;
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int e = degree(); e >= 0; --e) {
        const Rational& c = coeff(e);
        if (c == 0) continue;
        Rational abs_c = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool unit = abs_c == 1;
        if (e == 0 || !unit) out << abs_c.str();
        if (e >= 1) {
            if (!unit) out << '*';
            out << var;
            if (e >= 2) out << '^' << e;
        }
    }
    return out.str();
}

QPoly poly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly quot, rem;
        QPoly::divmod(a, b, quot, rem);
        a = std::move(b);
        b = std::move(rem);
    }
    if (!a.is_zero()) a.scale(Rational(1) / a.leading());
    return a;
}

} // namespace thetapark
