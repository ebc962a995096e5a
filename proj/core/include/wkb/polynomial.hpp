#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "wkb/rational.hpp"

namespace wkb {

using Exponents = std::vector<std::uint32_t>;

/* Sparse multivariate polynomial over Rational with a fixed variable count.
 * Terms are kept in lexicographic exponent order with nonzero coefficients
 * only, so operator== is structural equality. */
class Polynomial {
public:
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
    Polynomial(std::size_t nvars, const Rational& c);

    static Polynomial variable(std::size_t nvars, std::size_t i);
    static Polynomial monomial(std::size_t nvars, Exponents e, const Rational& c);

    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const; // 0 for the zero polynomial
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    // leading term in lex order (largest exponent vector); pre: !is_zero()
    const std::pair<const Exponents, Rational>& leading() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    bool operator==(const Polynomial& o) const = default;

    Polynomial derivative(std::size_t var) const;
    std::uint32_t degree(std::size_t var) const;
    std::int64_t total_degree() const; // -1 for the zero polynomial

    std::string str(const std::string& stem = "x") const;

private:
    std::size_t nvars_;
    std::map<Exponents, Rational> terms_;

    void strip();
    friend class PolynomialBuilder;
};

// gcd is normalized to lex-leading coefficient 1; gcd(0,0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// exact division; throws std::logic_error if b does not divide a.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

} // namespace wkb
