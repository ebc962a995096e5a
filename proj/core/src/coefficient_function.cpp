#include "wkb/coefficient_function.hpp"

#include <stdexcept>

namespace wkb {

CoefficientFunction CoefficientFunction::constant(std::size_t n, const Rational& c) {
    return from_base(RationalFunction::constant(n, c));
}

CoefficientFunction CoefficientFunction::from_base(RationalFunction f) {
    CoefficientFunction r(f.nvars());
    if (!f.is_zero()) r.terms_.emplace(Exponents(r.n_, 0), std::move(f));
    return r;
}

CoefficientFunction CoefficientFunction::x_var(std::size_t n, std::size_t i) {
    return from_base(RationalFunction(Polynomial::variable(n, i)));
}

CoefficientFunction CoefficientFunction::u_var(std::size_t n, std::size_t i) {
    if (i >= n) throw std::logic_error("u index out of range");
    Exponents e(n, 0);
    e[i] = 1;
    return u_monomial(std::move(e), RationalFunction::constant(n, 1));
}

CoefficientFunction CoefficientFunction::u_monomial(Exponents e, RationalFunction f) {
    CoefficientFunction r(e.size());
    if (f.nvars() != e.size()) throw std::logic_error("variable count mismatch");
    if (!f.is_zero()) r.terms_.emplace(std::move(e), std::move(f));
    return r;
}

bool CoefficientFunction::is_u_free() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Exponents(n_, 0));
}

bool CoefficientFunction::is_constant() const {
    return is_u_free() && (terms_.empty() || terms_.begin()->second.is_constant());
}

Rational CoefficientFunction::constant_value() const {
    if (!is_constant()) throw std::logic_error("not a constant");
    return terms_.empty() ? Rational(0) : terms_.begin()->second.constant_value();
}

RationalFunction CoefficientFunction::base_part() const {
    if (!is_u_free()) throw std::logic_error("not u-free");
    return terms_.empty() ? RationalFunction(n_) : terms_.begin()->second;
}

std::uint32_t CoefficientFunction::u_degree() const {
    std::uint32_t d = 0;
    for (const auto& [e, f] : terms_) {
        std::uint32_t s = 0;
        for (auto k : e) s += k;
        d = std::max(d, s);
    }
    return d;
}

void CoefficientFunction::strip() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero()) it = terms_.erase(it);
        else ++it;
    }
}

CoefficientFunction CoefficientFunction::operator-() const {
    CoefficientFunction r(*this);
    for (auto& [e, f] : r.terms_) f = -f;
    return r;
}

CoefficientFunction& CoefficientFunction::operator+=(const CoefficientFunction& o) {
    if (n_ != o.n_) throw std::logic_error("chart dimension mismatch");
    for (const auto& [e, f] : o.terms_) {
        auto it = terms_.find(e);
        if (it == terms_.end()) terms_.emplace(e, f);
        else it->second += f;
    }
    strip();
    return *this;
}

CoefficientFunction& CoefficientFunction::operator-=(const CoefficientFunction& o) {
    return *this += -o;
}

CoefficientFunction& CoefficientFunction::operator*=(const CoefficientFunction& o) {
    if (n_ != o.n_) throw std::logic_error("chart dimension mismatch");
    std::map<Exponents, RationalFunction> out;
    for (const auto& [ea, fa] : terms_) {
        for (const auto& [eb, fb] : o.terms_) {
            Exponents e(n_);
            for (std::size_t i = 0; i < n_; ++i) e[i] = ea[i] + eb[i];
            RationalFunction p = fa * fb;
            auto it = out.find(e);
            if (it == out.end()) out.emplace(std::move(e), std::move(p));
            else it->second += p;
        }
    }
    terms_ = std::move(out);
    strip();
    return *this;
}

CoefficientFunction& CoefficientFunction::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    const RationalFunction s = RationalFunction::constant(n_, c);
    for (auto& [e, f] : terms_) f *= s;
    return *this;
}

CoefficientFunction CoefficientFunction::dx(std::size_t i) const {
    CoefficientFunction r(n_);
    for (const auto& [e, f] : terms_) {
        RationalFunction d = f.derivative(i);
        if (!d.is_zero()) r.terms_.emplace(e, std::move(d));
    }
    return r;
}

CoefficientFunction CoefficientFunction::du(std::size_t i) const {
    CoefficientFunction r(n_);
    for (const auto& [e, f] : terms_) {
        if (e[i] == 0) continue;
        Exponents d(e);
        d[i] -= 1;
        RationalFunction g = f * RationalFunction::constant(n_, e[i]);
        auto it = r.terms_.find(d);
        if (it == r.terms_.end()) r.terms_.emplace(std::move(d), std::move(g));
        else it->second += g;
    }
    r.strip();
    return r;
}

std::string CoefficientFunction::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, f] = *it;
        std::string mono;
        for (std::size_t i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "u" + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (!out.empty()) out += " + ";
        if (mono.empty()) out += f.str();
        else out += "(" + f.str() + ")*" + mono;
    }
    return out;
}

} // namespace wkb
