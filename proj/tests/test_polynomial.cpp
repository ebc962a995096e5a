#include <doctest.h>

#include "testutil.hpp"
#include "wkb/coefficient_function.hpp"
#include "wkb/polynomial.hpp"
#include "wkb/rational_function.hpp"

using namespace wkb;
using wkbtest::Rng;

namespace {

Polynomial x(std::size_t n, std::size_t i) { return Polynomial::variable(n, i); }

} // namespace

TEST_SUITE("polynomial") {

TEST_CASE("ring laws on random data") {
    Rng rng(21);
    for (int rep = 0; rep < 40; ++rep) {
        Polynomial a = wkbtest::random_poly(rng, 2, 3, 3);
        Polynomial b = wkbtest::random_poly(rng, 2, 3, 3);
        Polynomial c = wkbtest::random_poly(rng, 2, 3, 3);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == Polynomial(2));
    }
}

TEST_CASE("derivative satisfies Leibniz") {
    Rng rng(22);
    for (int rep = 0; rep < 30; ++rep) {
        Polynomial a = wkbtest::random_poly(rng, 2, 3, 3);
        Polynomial b = wkbtest::random_poly(rng, 2, 3, 3);
        for (std::size_t v = 0; v < 2; ++v)
            CHECK((a * b).derivative(v) == a.derivative(v) * b + a * b.derivative(v));
    }
    CHECK(x(1, 0).derivative(0) == Polynomial(1, 1));
    CHECK(Polynomial(1, 5).derivative(0).is_zero());
}

TEST_CASE("degrees and leading term") {
    Polynomial p = x(2, 0) * x(2, 0) * x(2, 1) + x(2, 1);
    CHECK(p.degree(0) == 2);
    CHECK(p.degree(1) == 1);
    CHECK(p.total_degree() == 3);
    CHECK(Polynomial(2).total_degree() == -1);
    CHECK(p.leading().first == Exponents{2, 1});
}

TEST_CASE("gcd and exact division") {
    Polynomial a = x(1, 0) * x(1, 0) - Polynomial(1, 1); // x^2 - 1
    Polynomial b = x(1, 0) - Polynomial(1, 1);           // x - 1
    Polynomial g = poly_gcd(a, b);
    CHECK(g == b); // already monic in lex order
    CHECK(exact_div(a, b) == x(1, 0) + Polynomial(1, 1));
    CHECK(poly_gcd(Polynomial(1), Polynomial(1)).is_zero());

    Rng rng(23);
    for (int rep = 0; rep < 20; ++rep) {
        Polynomial u = wkbtest::random_nonzero_poly(rng, 2, 2, 2);
        Polynomial v = wkbtest::random_nonzero_poly(rng, 2, 2, 2);
        Polynomial w = wkbtest::random_nonzero_poly(rng, 2, 1, 2);
        Polynomial d = poly_gcd(u * w, v * w);
        // w divides the gcd of uw and vw
        CHECK(!d.is_zero());
        CHECK(exact_div(u * w, poly_gcd(d, w)) * poly_gcd(d, w) == u * w);
    }
}

TEST_CASE("rational functions stay reduced") {
    Polynomial num = x(1, 0) * x(1, 0) - Polynomial(1, 1);
    Polynomial den = x(1, 0) + Polynomial(1, 1);
    RationalFunction f(num, den); // (x^2-1)/(x+1) = x-1
    CHECK(f.is_polynomial());
    CHECK(f.num() == x(1, 0) - Polynomial(1, 1));
    CHECK(f.den() == Polynomial(1, 1));

    RationalFunction half(Polynomial(1, 1), Polynomial(1, 2));
    CHECK(half.is_constant());
    CHECK(half.constant_value() == Rational(1, 2));
}

TEST_CASE("rational function field laws") {
    Rng rng(24);
    for (int rep = 0; rep < 30; ++rep) {
        RationalFunction a = wkbtest::random_rf(rng, 2);
        RationalFunction b = wkbtest::random_rf(rng, 2);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK(a - a == RationalFunction(2));
        CHECK(a * a.reciprocal() == RationalFunction::constant(2, 1));
        CHECK(a / b == a * b.reciprocal());
    }
    CHECK_THROWS_WITH_AS(RationalFunction(Polynomial(1, 1), Polynomial(1)),
                         doctest::Contains("DivisionByZero"), Error);
    CHECK_THROWS_WITH_AS(RationalFunction(1).reciprocal(),
                         doctest::Contains("DivisionByZero"), Error);
}

TEST_CASE("rational function derivative: quotient rule") {
    Rng rng(25);
    for (int rep = 0; rep < 20; ++rep) {
        RationalFunction f = wkbtest::random_rf(rng, 2);
        RationalFunction g = wkbtest::random_rf(rng, 2);
        for (std::size_t v = 0; v < 2; ++v) {
            CHECK((f * g).derivative(v) == f.derivative(v) * g + f * g.derivative(v));
            CHECK((f + g).derivative(v) == f.derivative(v) + g.derivative(v));
        }
    }
}

TEST_CASE("coefficient functions: u-structure") {
    CoefficientFunction u0 = CoefficientFunction::u_var(2, 0);
    CoefficientFunction x1 = CoefficientFunction::x_var(2, 1);
    CoefficientFunction f = u0 * u0 * x1 + CoefficientFunction::constant(2, 3);
    CHECK(f.u_degree() == 2);
    CHECK(!f.is_u_free());
    CHECK(x1.is_u_free());
    CHECK(x1.base_part() == RationalFunction(Polynomial::variable(2, 1)));
    CHECK(CoefficientFunction::constant(2, 3).constant_value() == 3);
    CHECK(CoefficientFunction(2).is_zero());
}

TEST_CASE("coefficient function derivations commute and satisfy Leibniz") {
    Rng rng(26);
    for (int rep = 0; rep < 20; ++rep) {
        CoefficientFunction a = wkbtest::random_cf(rng, 2, 3, 2);
        CoefficientFunction b = wkbtest::random_cf(rng, 2, 3, 2);
        for (std::size_t v = 0; v < 2; ++v) {
            CHECK((a * b).du(v) == a.du(v) * b + a * b.du(v));
            CHECK((a * b).dx(v) == a.dx(v) * b + a * b.dx(v));
            CHECK(a.dx(0).du(v) == a.du(v).dx(0));
        }
    }
    CoefficientFunction u1 = CoefficientFunction::u_var(2, 1);
    CHECK(u1.du(1) == CoefficientFunction::constant(2, 1));
    CHECK(u1.du(0).is_zero());
    CHECK(u1.dx(0).is_zero());
}

}
