#include "wkb/rational_function.hpp"

#include "wkb/errors.hpp"

namespace wkb {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("DivisionByZero", "zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = Polynomial(num_.nvars(), 1);
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    const Rational lc = den_.leading().second;
    if (lc != 1) {
        const Rational s = Rational(1) / lc;
        num_ *= s;
        den_ *= s;
    }
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    // common denominator over the lcm keeps the final gcd small
    const Polynomial g = poly_gcd(den_, o.den_);
    if (g.is_constant()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    } else {
        const Polynomial ra = exact_div(den_, g);
        const Polynomial rb = exact_div(o.den_, g);
        num_ = num_ * rb + o.num_ * ra;
        den_ = den_ * rb;
    }
    reduce();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    // inputs are reduced, so cross cancellation leaves little for reduce()
    const Polynomial g1 = poly_gcd(num_, o.den_);
    const Polynomial g2 = poly_gcd(o.num_, den_);
    Polynomial on = o.num_;
    Polynomial od = o.den_;
    if (!g1.is_constant()) {
        num_ = exact_div(num_, g1);
        od = exact_div(od, g1);
    }
    if (!g2.is_constant()) {
        on = exact_div(on, g2);
        den_ = exact_div(den_, g2);
    }
    num_ *= on;
    den_ *= od;
    reduce();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw Error("DivisionByZero", "division by zero rational function");
    return *this *= o.reciprocal();
}

RationalFunction RationalFunction::reciprocal() const {
    if (is_zero()) throw Error("DivisionByZero", "reciprocal of zero");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
    // (n/d)' = (n'd - nd')/d^2, with the guaranteed factor gcd(d, d')
    // cancelled up front so the constructor's reduction stays cheap
    const Polynomial dd = den_.derivative(var);
    const Polynomial g = poly_gcd(den_, dd);
    if (g.is_constant()) {
        Polynomial n = num_.derivative(var) * den_ - num_ * dd;
        return RationalFunction(std::move(n), den_ * den_);
    }
    const Polynomial e = exact_div(den_, g);
    Polynomial n = num_.derivative(var) * e - num_ * exact_div(dd, g);
    return RationalFunction(std::move(n), den_ * e);
}

std::string RationalFunction::str(const std::string& stem) const {
    if (is_polynomial()) return num_.str(stem);
    return "(" + num_.str(stem) + ")/(" + den_.str(stem) + ")";
}

} // namespace wkb
