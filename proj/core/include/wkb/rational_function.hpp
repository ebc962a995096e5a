#pragma once

#include <string>

#include "wkb/polynomial.hpp"

namespace wkb {

/* Quotient of polynomials in x_1..x_n, kept reduced: gcd(num, den) = 1 and
 * den has lex-leading coefficient 1. Zero is 0/1, so structural equality is
 * semantic equality. */
class RationalFunction {
public:
    explicit RationalFunction(std::size_t nvars)
        : num_(nvars), den_(nvars, 1) {}
    explicit RationalFunction(Polynomial p)
        : num_(std::move(p)), den_(num_.nvars(), 1) {}
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction constant(std::size_t nvars, const Rational& c) {
        return RationalFunction(Polynomial(nvars, c));
    }

    std::size_t nvars() const { return num_.nvars(); }
    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    bool operator==(const RationalFunction& o) const = default;

    RationalFunction reciprocal() const;
    RationalFunction derivative(std::size_t var) const;

    std::string str(const std::string& stem = "x") const;

private:
    Polynomial num_, den_;

    void reduce();
};

} // namespace wkb
