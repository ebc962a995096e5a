#pragma once

#include <map>
#include <string>

#include "wkb/rational_function.hpp"

namespace wkb {

/* Polynomial in the fiber variables u_1..u_n whose coefficients are rational
 * functions of the base variables x_1..x_n. This is the coefficient ring of
 * the operator calculus on an n-dimensional chart; it is closed under +, *,
 * d/dx_i and d/du_i. */
class CoefficientFunction {
public:
    explicit CoefficientFunction(std::size_t n) : n_(n) {}

    static CoefficientFunction constant(std::size_t n, const Rational& c);
    static CoefficientFunction from_base(RationalFunction f); // u-free
    static CoefficientFunction x_var(std::size_t n, std::size_t i);
    static CoefficientFunction u_var(std::size_t n, std::size_t i);
    static CoefficientFunction u_monomial(Exponents e, RationalFunction f);

    std::size_t n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_u_free() const;
    bool is_constant() const;
    Rational constant_value() const; // pre: is_constant(); 0 when zero
    RationalFunction base_part() const; // pre: is_u_free(); the u^0 coefficient
    std::uint32_t u_degree() const; // total degree in u; 0 for zero
    const std::map<Exponents, RationalFunction>& terms() const { return terms_; }

    CoefficientFunction operator-() const;
    CoefficientFunction& operator+=(const CoefficientFunction& o);
    CoefficientFunction& operator-=(const CoefficientFunction& o);
    CoefficientFunction& operator*=(const CoefficientFunction& o);
    CoefficientFunction& operator*=(const Rational& c);
    friend CoefficientFunction operator+(CoefficientFunction a, const CoefficientFunction& b) { return a += b; }
    friend CoefficientFunction operator-(CoefficientFunction a, const CoefficientFunction& b) { return a -= b; }
    friend CoefficientFunction operator*(CoefficientFunction a, const CoefficientFunction& b) { return a *= b; }
    friend CoefficientFunction operator*(CoefficientFunction a, const Rational& c) { return a *= c; }
    friend CoefficientFunction operator*(const Rational& c, CoefficientFunction a) { return a *= c; }
    bool operator==(const CoefficientFunction& o) const = default;

    CoefficientFunction dx(std::size_t i) const;
    CoefficientFunction du(std::size_t i) const;

    std::string str() const;

private:
    std::size_t n_;
    std::map<Exponents, RationalFunction> terms_; // u-exponents -> coefficient

    void strip();
};

} // namespace wkb
