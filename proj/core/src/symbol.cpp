#include "wkb/symbol.hpp"

#include <limits>

namespace wkb {

namespace {

constexpr long long kNegInf = std::numeric_limits<long long>::min() / 4;

long long floor_or_ninf(const std::optional<int>& f) {
    return f ? static_cast<long long>(*f) : kNegInf;
}

long long efftop(const Symbol& s) {
    if (!s.is_zero()) return *s.top();
    return static_cast<long long>(*s.floor()) - 1;
}

} // namespace

Symbol::Symbol(std::size_t n, std::map<int, CoefficientFunction> terms, std::optional<int> floor)
    : n_(n), terms_(std::move(terms)), floor_(floor) {
    for (const auto& [k, f] : terms_)
        if (f.n() != n_) throw Error("DimensionMismatch", "coefficient dimension mismatch");
    canonicalize();
}

void Symbol::canonicalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second.is_zero() || (floor_ && it->first < *floor_)) it = terms_.erase(it);
        else ++it;
    }
}

Symbol Symbol::zero_to(std::size_t n, int floor) { return Symbol(n, {}, floor); }

Symbol Symbol::one(std::size_t n) { return term(CoefficientFunction::constant(n, 1), 0); }

Symbol Symbol::scalar(std::size_t n, const TauSeries& s) {
    std::map<int, CoefficientFunction> t;
    for (const auto& [k, c] : s.coeffs()) t.emplace(k, CoefficientFunction::constant(n, c));
    return Symbol(n, std::move(t), s.floor());
}

Symbol Symbol::x_var(std::size_t n, std::size_t i) {
    return term(CoefficientFunction::x_var(n, i), 0);
}

Symbol Symbol::u_tau(std::size_t n, std::size_t i) {
    return term(CoefficientFunction::u_var(n, i), 1);
}

Symbol Symbol::term(CoefficientFunction f, int k) {
    std::map<int, CoefficientFunction> t;
    std::size_t n = f.n();
    if (!f.is_zero()) t.emplace(k, std::move(f));
    return Symbol(n, std::move(t), std::nullopt);
}

std::optional<int> Symbol::top() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first;
}

CoefficientFunction Symbol::coeff(int k) const {
    if (floor_ && k < *floor_)
        throw Error("BelowTruncation", "coefficient at tau^" + std::to_string(k) +
                                           " is below the truncation window");
    auto it = terms_.find(k);
    return it == terms_.end() ? CoefficientFunction(n_) : it->second;
}

int Symbol::order() const {
    if (is_zero()) throw Error("ZeroOperator", "the zero operator has no order");
    return *top();
}

CoefficientFunction Symbol::principal_symbol() const { return coeff(order()); }

CoefficientFunction Symbol::symbol_of_order(int m) const {
    if (floor_ && m < *floor_)
        throw Error("BelowTruncation", "sigma_" + std::to_string(m) + " is below the window");
    if (!is_zero() && order() > m)
        throw Error("OrderTooHigh", "operator has order " + std::to_string(order()) +
                                        " > " + std::to_string(m));
    return coeff(m);
}

Symbol Symbol::truncated_to(int floor) const {
    Symbol r(*this);
    r.floor_ = floor_ ? std::max(*floor_, floor) : floor;
    r.canonicalize();
    return r;
}

Symbol Symbol::truncated_depth(int depth) const {
    if (depth < 1) throw Error("ParseError", "depth must be positive");
    if (is_zero()) return *this;
    return truncated_to(*top() - depth + 1);
}

bool Symbol::is_central() const {
    for (const auto& [k, f] : terms_)
        if (!f.is_constant()) return false;
    return true;
}

TauSeries Symbol::central_part() const {
    std::map<int, Rational> c;
    for (const auto& [k, f] : terms_) c.emplace(k, f.constant_value());
    return TauSeries(std::move(c), floor_);
}

Symbol Symbol::operator-() const {
    Symbol r(*this);
    for (auto& [k, f] : r.terms_) f = -f;
    return r;
}

Symbol operator+(const Symbol& a, const Symbol& b) {
    if (a.n_ != b.n_) throw Error("DimensionMismatch", "chart dimension mismatch");
    std::optional<int> floor;
    if (a.floor_ || b.floor_)
        floor = static_cast<int>(std::max(floor_or_ninf(a.floor_), floor_or_ninf(b.floor_)));
    std::map<int, CoefficientFunction> t(a.terms_);
    for (const auto& [k, f] : b.terms_) {
        auto it = t.find(k);
        if (it == t.end()) t.emplace(k, f);
        else it->second += f;
    }
    return Symbol(a.n_, std::move(t), floor);
}

Symbol operator-(const Symbol& a, const Symbol& b) { return a + (-b); }

Symbol operator*(const Symbol& a, const Rational& c) {
    Symbol r(a);
    for (auto& [k, f] : r.terms_) f *= c;
    r.canonicalize();
    return r;
}

std::string Symbol::str() const {
    std::string out;
    if (terms_.empty()) out = "0";
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        out += "(" + it->second.str() + ")";
        if (it->first != 0) out += "*tau^" + std::to_string(it->first);
    }
    if (floor_) out += " + O(tau^" + std::to_string(*floor_ - 1) + ")";
    return out;
}

void for_each_multiindex(std::size_t n, std::uint32_t total,
                         const std::function<void(const Exponents&)>& fn) {
    Exponents alpha(n, 0);
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
        if (i + 1 == n) {
            alpha[i] = left;
            fn(alpha);
            return;
        }
        for (std::uint32_t k = 0; k <= left; ++k) {
            alpha[i] = k;
            rec(i + 1, left - k);
        }
    };
    if (n == 0) {
        if (total == 0) fn(alpha);
        return;
    }
    rec(0, total);
}

Symbol star(const Symbol& a, const Symbol& b) {
    if (a.n() != b.n()) throw Error("DimensionMismatch", "chart dimension mismatch");
    const std::size_t n = a.n();
    if ((a.is_zero() && a.is_exact()) || (b.is_zero() && b.is_exact())) return Symbol(n);

    std::optional<int> floor;
    {
        long long f = kNegInf;
        if (a.floor()) f = std::max(f, floor_or_ninf(a.floor()) - 1 + efftop(b));
        if (b.floor()) f = std::max(f, floor_or_ninf(b.floor()) - 1 + efftop(a));
        if (f > kNegInf / 2) floor = static_cast<int>(f + 1);
    }

    std::uint32_t max_du = 0;
    for (const auto& [j, f] : a.terms()) max_du = std::max(max_du, f.u_degree());

    std::map<int, CoefficientFunction> out;
    auto add = [&](int e, CoefficientFunction f) {
        if (f.is_zero()) return;
        auto it = out.find(e);
        if (it == out.end()) out.emplace(e, std::move(f));
        else it->second += f;
    };

    for (std::uint32_t s = 0; s <= max_du; ++s) {
        for_each_multiindex(n, s, [&](const Exponents& alpha) {
            Rational fact = 1;
            for (auto k : alpha)
                for (std::uint32_t i = 2; i <= k; ++i) fact *= i;
            const Rational scale = Rational(1) / fact;

            // d_u^alpha a
            std::map<int, CoefficientFunction> da;
            for (const auto& [j, f] : a.terms()) {
                CoefficientFunction g = f;
                for (std::size_t i = 0; i < n && !g.is_zero(); ++i)
                    for (std::uint32_t k = 0; k < alpha[i] && !g.is_zero(); ++k) g = g.du(i);
                if (!g.is_zero()) da.emplace(j, std::move(g));
            }
            if (da.empty()) return;
            // d_x^alpha b
            std::map<int, CoefficientFunction> db;
            for (const auto& [k, f] : b.terms()) {
                CoefficientFunction g = f;
                for (std::size_t i = 0; i < n && !g.is_zero(); ++i)
                    for (std::uint32_t t = 0; t < alpha[i] && !g.is_zero(); ++t) g = g.dx(i);
                if (!g.is_zero()) db.emplace(k, std::move(g));
            }
            for (const auto& [j, fa] : da) {
                for (const auto& [k, fb] : db) {
                    int e = j + k - static_cast<int>(s);
                    if (floor && e < *floor) continue;
                    add(e, scale * (fa * fb));
                }
            }
        });
    }
    return Symbol(n, std::move(out), floor);
}

Symbol commutator(const Symbol& a, const Symbol& b) { return star(a, b) - star(b, a); }

bool is_invertible(const Symbol& p) {
    if (p.is_zero()) return false;
    return p.principal_symbol().is_u_free();
}

Symbol invert(const Symbol& p) {
    if (!is_invertible(p))
        throw Error("NotInvertible", p.is_zero() ? "zero operator"
                                                 : "principal symbol is not a unit");
    const std::size_t n = p.n();
    const int m = p.order();
    const RationalFunction lead = p.principal_symbol().base_part();
    const Symbol b0 = Symbol::term(CoefficientFunction::from_base(lead.reciprocal()), -m);
    Symbol e = star(p, b0) - Symbol::one(n); // order <= -1
    if (e.is_zero() && e.is_exact()) return b0;
    if (p.is_exact())
        throw Error("DepthRequired",
                    "inverse of an exact operator with lower-order terms is an "
                    "infinite series; truncate to a finite depth first");

    Symbol acc = Symbol::one(n);
    Symbol term = Symbol::one(n);
    const int guard = m - *p.floor() + 2;
    for (int k = 0; k < guard; ++k) {
        term = star(term, -e);
        if (term.is_zero()) break;
        acc = acc + term;
    }
    return star(b0, acc);
}

Symbol invert(const Symbol& p, int depth) { return invert(p.truncated_depth(depth)); }

Symbol ad_apply(const Symbol& p, const Symbol& q) {
    return star(star(p, q), invert(p));
}

Symbol tau_reflect(const Symbol& p) {
    std::map<int, CoefficientFunction> t(p.terms());
    for (auto& [k, f] : t)
        if (k % 2 != 0) f = -f;
    return Symbol(p.n(), std::move(t), p.floor());
}

Symbol adjoint_dx(const Symbol& p) {
    const std::size_t n = p.n();
    const Symbol q = tau_reflect(p);
    std::uint32_t max_du = 0;
    for (const auto& [j, f] : q.terms()) max_du = std::max(max_du, f.u_degree());

    std::map<int, CoefficientFunction> out;
    for (std::uint32_t s = 0; s <= max_du; ++s) {
        for_each_multiindex(n, s, [&](const Exponents& alpha) {
            Rational fact = 1;
            for (auto k : alpha)
                for (std::uint32_t i = 2; i <= k; ++i) fact *= i;
            const Rational scale = Rational(1) / fact;
            for (const auto& [j, f] : q.terms()) {
                CoefficientFunction g = f;
                for (std::size_t i = 0; i < n && !g.is_zero(); ++i)
                    for (std::uint32_t k = 0; k < alpha[i] && !g.is_zero(); ++k)
                        g = g.du(i).dx(i);
                if (g.is_zero()) continue;
                int e = j - static_cast<int>(s);
                if (p.floor() && e < *p.floor()) continue;
                g *= scale;
                auto it = out.find(e);
                if (it == out.end()) out.emplace(e, std::move(g));
                else it->second += g;
            }
        });
    }
    return Symbol(n, std::move(out), p.floor());
}

bool agree_on_window(const Symbol& a, const Symbol& b) {
    if (a.n() != b.n()) throw Error("DimensionMismatch", "chart dimension mismatch");
    if (a.is_exact() && b.is_exact()) return a.terms() == b.terms();
    long long f = std::max(floor_or_ninf(a.floor()), floor_or_ninf(b.floor()));
    for (const auto& [k, v] : a.terms()) {
        if (k < f) continue;
        auto it = b.terms().find(k);
        if (it == b.terms().end() || !(it->second == v)) return false;
    }
    for (const auto& [k, v] : b.terms()) {
        if (k < f) continue;
        if (a.terms().find(k) == a.terms().end()) return false;
    }
    return true;
}

} // namespace wkb
