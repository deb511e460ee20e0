#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thetapark/ints.hpp"

namespace thetapark {

// Dense univariate polynomial over the rationals, coefficients stored lowest
// degree first with no trailing zeros.  The zero polynomial has an empty
// coefficient list and degree -1.
class QPoly {
public:
    QPoly() = default;
    QPoly(int constant) : QPoly(Rational(constant)) {}
    QPoly(const Int& constant) : QPoly(Rational(constant)) {}
    QPoly(const Rational& constant) {
        if (constant != 0) coeffs_.push_back(constant);
    }
    explicit QPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static QPoly variable() { return monomial(1); }
    static QPoly monomial(int exp, const Rational& coeff = 1);
    static QPoly one_minus_q_pow(int k); // 1 - q^k

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int exp) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& leading() const { return coeffs_.back(); }

    QPoly& operator+=(const QPoly& other);
    QPoly& operator-=(const QPoly& other);
    QPoly& operator*=(const QPoly& other);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
    QPoly operator-() const;
    QPoly& scale(const Rational& factor);
    QPoly shifted(int exp) const; // multiply by q^exp

    // Quotient and remainder with deg(r) < deg(d); d must be nonzero.
    static void divmod(const QPoly& n, const QPoly& d, QPoly& quot, QPoly& rem);
    std::optional<QPoly> divided_exactly(const QPoly& d) const;

    Rational eval(const Rational& x) const;
    QPoly compose_one_plus_u() const; // q -> 1 + u
    Rational at_one() const { return eval(1); }

    bool integer_coefficients() const;
    bool nonnegative_coefficients() const;

    std::string str(const std::string& var = "q") const;

    friend bool operator==(const QPoly&, const QPoly&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Monic greatest common divisor over the rationals; gcd(0,0) = 0.
QPoly poly_gcd(QPoly a, QPoly b);

} // namespace thetapark
