#include "wkb/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace wkb {

Polynomial::Polynomial(std::size_t nvars, const Rational& c) : nvars_(nvars) {
    if (c != 0) terms_.emplace(Exponents(nvars, 0), c);
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw std::logic_error("variable index out of range");
    Exponents e(nvars, 0);
    e[i] = 1;
    return monomial(nvars, std::move(e), 1);
}

Polynomial Polynomial::monomial(std::size_t nvars, Exponents e, const Rational& c) {
    if (e.size() != nvars) throw std::logic_error("exponent vector size mismatch");
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(std::move(e), c);
    return p;
}

bool Polynomial::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Exponents(nvars_, 0);
}

Rational Polynomial::constant_value() const {
    if (!is_constant()) throw std::logic_error("not a constant polynomial");
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

const std::pair<const Exponents, Rational>& Polynomial::leading() const {
    if (terms_.empty()) throw std::logic_error("leading() of zero polynomial");
    return *terms_.rbegin();
}

void Polynomial::strip() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) it = terms_.erase(it);
        else ++it;
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw std::logic_error("variable count mismatch");
    for (const auto& [e, c] : o.terms_) terms_[e] += c;
    strip();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw std::logic_error("variable count mismatch");
    for (const auto& [e, c] : o.terms_) terms_[e] -= c;
    strip();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (nvars_ != o.nvars_) throw std::logic_error("variable count mismatch");
    std::map<Exponents, Rational> out;
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Exponents e(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            out[std::move(e)] += ca * cb;
        }
    }
    terms_ = std::move(out);
    strip();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

Polynomial Polynomial::derivative(std::size_t var) const {
    Polynomial r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exponents d(e);
        d[var] -= 1;
        r.terms_[std::move(d)] += c * e[var];
    }
    r.strip();
    return r;
}

std::uint32_t Polynomial::degree(std::size_t var) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

std::int64_t Polynomial::total_degree() const {
    std::int64_t d = -1;
    for (const auto& [e, c] : terms_) {
        std::int64_t s = 0;
        for (auto x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

std::string Polynomial::str(const std::string& stem) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += stem + std::to_string(i + 1);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        Rational a = c;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (mono.empty()) out += rational_str(a);
        else if (a == 1) out += mono;
        else out += rational_str(a) + "*" + mono;
    }
    return out;
}

namespace {

bool depends_on(const Polynomial& p, std::size_t v) { return p.degree(v) > 0; }

// p as a univariate polynomial in v; coefficients are v-free.
std::map<std::uint32_t, Polynomial> univar(const Polynomial& p, std::size_t v) {
    std::map<std::uint32_t, Polynomial> out;
    for (const auto& [e, c] : p.terms()) {
        Exponents r(e);
        std::uint32_t k = r[v];
        r[v] = 0;
        auto it = out.find(k);
        if (it == out.end()) it = out.emplace(k, Polynomial(p.nvars())).first;
        it->second += Polynomial::monomial(p.nvars(), std::move(r), c);
    }
    return out;
}

Polynomial mul_pow(const Polynomial& p, std::size_t v, std::uint32_t k) {
    Polynomial r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Exponents d(e);
        d[v] += k;
        r += Polynomial::monomial(p.nvars(), std::move(d), c);
    }
    return r;
}

Polynomial lead_coeff(const Polynomial& p, std::size_t v) {
    auto u = univar(p, v);
    return u.rbegin()->second;
}

Polynomial content(const Polynomial& p, std::size_t v) {
    Polynomial g(p.nvars());
    for (const auto& [k, c] : univar(p, v)) g = poly_gcd(g, c);
    return g;
}

Polynomial pseudo_rem(Polynomial r, const Polynomial& b, std::size_t v) {
    const std::uint32_t db = b.degree(v);
    const Polynomial lb = lead_coeff(b, v);
    while (!r.is_zero() && r.degree(v) >= db) {
        const std::uint32_t k = r.degree(v) - db;
        const Polynomial lr = lead_coeff(r, v);
        r = lb * r - mul_pow(lr, v, k) * b;
    }
    return r;
}

Polynomial normalize_lex(Polynomial p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading().second);
}

// rescale so the coefficients are coprime integers; gcds are only defined up
// to a unit, and without this the remainder sequence blows up over Q
Polynomial rat_primitive(Polynomial p) {
    if (p.is_zero()) return p;
    using boost::multiprecision::cpp_int;
    cpp_int den_lcm = 1;
    for (const auto& [e, c] : p.terms()) den_lcm = lcm(den_lcm, denominator(c));
    cpp_int num_gcd = 0;
    for (const auto& [e, c] : p.terms())
        num_gcd = gcd(num_gcd, cpp_int(numerator(c) * (den_lcm / denominator(c))));
    return p * Rational(den_lcm, num_gcd);
}

// substitute fixed values for every variable except v
Polynomial eval_except(const Polynomial& p, std::size_t v, const std::vector<Rational>& at) {
    Polynomial r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Rational s = c;
        for (std::size_t i = 0; i < p.nvars(); ++i) {
            if (i == v) continue;
            for (std::uint32_t k = 0; k < e[i]; ++k) s *= at[i];
        }
        Exponents d(p.nvars());
        d[v] = e[v];
        r += Polynomial::monomial(p.nvars(), std::move(d), s);
    }
    return r;
}

bool multivariate_in(const Polynomial& p, std::size_t v) {
    for (std::size_t i = 0; i < p.nvars(); ++i)
        if (i != v && depends_on(p, i)) return true;
    return false;
}

} // namespace

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::logic_error("division by zero polynomial");
    Polynomial q(a.nvars());
    Polynomial r(a);
    while (!r.is_zero()) {
        const auto& [er, cr] = r.leading();
        const auto& [eb, cb] = b.leading();
        Exponents e(a.nvars());
        for (std::size_t i = 0; i < a.nvars(); ++i) {
            if (er[i] < eb[i]) throw std::logic_error("inexact polynomial division");
            e[i] = er[i] - eb[i];
        }
        Polynomial t = Polynomial::monomial(a.nvars(), std::move(e), cr / cb);
        q += t;
        r -= t * b;
    }
    return q;
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.nvars() != b.nvars()) throw std::logic_error("variable count mismatch");
    if (a.is_zero()) return normalize_lex(b);
    if (b.is_zero()) return normalize_lex(a);
    if (a.is_constant() || b.is_constant()) return Polynomial(a.nvars(), 1);

    std::size_t v = 0;
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (depends_on(a, i) || depends_on(b, i)) v = i;

    if (!depends_on(a, v)) return poly_gcd(a, content(b, v));
    if (!depends_on(b, v)) return poly_gcd(content(a, v), b);

    const Polynomial ca = content(a, v);
    const Polynomial cb = content(b, v);
    const Polynomial c = poly_gcd(ca, cb);
    Polynomial A = rat_primitive(exact_div(a, ca));
    Polynomial B = rat_primitive(exact_div(b, cb));
    if (A.degree(v) < B.degree(v)) std::swap(A, B);

    // resultant certificate: when substitution preserves both v-degrees and
    // the univariate images are coprime, so are A and B, and the expensive
    // remainder sequence can be skipped
    if (multivariate_in(A, v) || multivariate_in(B, v)) {
        for (int attempt = 0; attempt < 3; ++attempt) {
            std::vector<Rational> at(a.nvars());
            for (std::size_t i = 0; i < a.nvars(); ++i)
                at[i] = 2 + 3 * attempt + static_cast<int>(i);
            Polynomial ia = eval_except(A, v, at);
            Polynomial ib = eval_except(B, v, at);
            if (ia.degree(v) != A.degree(v) || ib.degree(v) != B.degree(v)) continue;
            if (poly_gcd(ia, ib).is_constant()) return normalize_lex(c);
            break;
        }
    }

    // primitive polynomial remainder sequence
    Polynomial g(a.nvars(), 1);
    while (true) {
        Polynomial r = pseudo_rem(A, B, v);
        if (r.is_zero()) {
            g = B;
            break;
        }
        if (r.degree(v) == 0) break; // coprime up to content
        r = rat_primitive(exact_div(r, content(r, v)));
        A = std::move(B);
        B = std::move(r);
    }
    return normalize_lex(c * g);
}

} // namespace wkb
