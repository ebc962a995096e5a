#include "wkb/tau_series.hpp"

#include <limits>

namespace wkb {

namespace {

constexpr long long kNegInf = std::numeric_limits<long long>::min() / 4;

long long floor_or_ninf(const std::optional<int>& f) {
    return f ? static_cast<long long>(*f) : kNegInf;
}

} // namespace

TauSeries::TauSeries(std::map<int, Rational> coeffs, std::optional<int> floor)
    : c_(std::move(coeffs)), floor_(floor) {
    canonicalize();
}

void TauSeries::canonicalize() {
    for (auto it = c_.begin(); it != c_.end();) {
        if (it->second == 0 || (floor_ && it->first < *floor_)) it = c_.erase(it);
        else ++it;
    }
}

TauSeries TauSeries::zero_to(int floor) { return TauSeries({}, floor); }

TauSeries TauSeries::constant(const Rational& c) { return monomial(0, c); }

TauSeries TauSeries::monomial(int k, const Rational& c) {
    TauSeries s;
    if (c != 0) s.c_.emplace(k, c);
    return s;
}

std::optional<int> TauSeries::top() const {
    if (c_.empty()) return std::nullopt;
    return c_.rbegin()->first;
}

Rational TauSeries::coeff(int k) const {
    if (floor_ && k < *floor_)
        throw Error("BelowTruncation", "coefficient at tau^" + std::to_string(k) +
                                           " is below the truncation window");
    auto it = c_.find(k);
    return it == c_.end() ? Rational(0) : it->second;
}

TauSeries TauSeries::truncated_to(int floor) const {
    TauSeries r(*this);
    r.floor_ = floor_ ? std::max(*floor_, floor) : floor;
    r.canonicalize();
    return r;
}

TauSeries TauSeries::truncated_depth(int depth) const {
    if (depth < 1) throw Error("ParseError", "depth must be positive");
    if (is_zero()) return *this;
    return truncated_to(*top() - depth + 1);
}

TauSeries TauSeries::operator-() const {
    TauSeries r(*this);
    for (auto& [k, v] : r.c_) v = -v;
    return r;
}

TauSeries operator+(const TauSeries& a, const TauSeries& b) {
    std::optional<int> floor;
    if (a.floor_ || b.floor_)
        floor = static_cast<int>(std::max(floor_or_ninf(a.floor_), floor_or_ninf(b.floor_)));
    std::map<int, Rational> c(a.c_);
    for (const auto& [k, v] : b.c_) c[k] += v;
    return TauSeries(std::move(c), floor);
}

TauSeries operator-(const TauSeries& a, const TauSeries& b) { return a + (-b); }

TauSeries operator*(const TauSeries& a, const TauSeries& b) {
    // an exact zero annihilates everything
    if ((a.is_zero() && a.is_exact()) || (b.is_zero() && b.is_exact())) return TauSeries();

    auto efftop = [](const TauSeries& s) -> long long {
        if (!s.is_zero()) return *s.top();
        return static_cast<long long>(*s.floor()) - 1;
    };

    std::optional<int> floor;
    long long f = kNegInf;
    if (a.floor_) f = std::max(f, floor_or_ninf(a.floor_) - 1 + efftop(b));
    if (b.floor_) f = std::max(f, floor_or_ninf(b.floor_) - 1 + efftop(a));
    if (f > kNegInf / 2) floor = static_cast<int>(f + 1);

    std::map<int, Rational> c;
    for (const auto& [j, va] : a.c_) {
        for (const auto& [k, vb] : b.c_) {
            int e = j + k;
            if (floor && e < *floor) continue;
            c[e] += va * vb;
        }
    }
    return TauSeries(std::move(c), floor);
}

TauSeries operator*(const TauSeries& a, const Rational& c) {
    TauSeries r(a);
    for (auto& [k, v] : r.c_) v *= c;
    r.canonicalize();
    return r;
}

std::string TauSeries::str() const {
    std::string out;
    if (c_.empty()) out = "0";
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        const auto& [k, v] = *it;
        Rational a = v;
        if (out.empty()) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += a < 0 ? " - " : " + ";
            if (a < 0) a = -a;
        }
        if (k == 0) out += rational_str(a);
        else {
            if (a != 1) out += rational_str(a) + "*";
            out += k == 1 ? "tau" : "tau^" + std::to_string(k);
        }
    }
    if (floor_) out += " + O(tau^" + std::to_string(*floor_ - 1) + ")";
    return out;
}

TauSeries invert(const TauSeries& s) {
    if (s.is_zero())
        throw Error("ZeroLeadingCoefficient", "cannot invert the zero series");
    const int m = *s.top();
    const Rational lead = s.coeff(m);
    if (s.is_exact()) {
        if (s.coeffs().size() == 1) return TauSeries::monomial(-m, Rational(1) / lead);
        throw Error("DepthRequired",
                    "inverse of an exact multi-term series is an infinite series; "
                    "truncate to a finite depth first");
    }
    const int depth = m - *s.floor() + 1;
    // order-descending recursion for b with s*b = 1
    std::map<int, Rational> b;
    b[-m] = Rational(1) / lead;
    for (int r = 1; r < depth; ++r) {
        Rational acc = 0;
        for (int i = 1; i <= r; ++i) {
            auto it = s.coeffs().find(m - i);
            if (it == s.coeffs().end()) continue;
            auto jt = b.find(-m - r + i);
            if (jt == b.end()) continue;
            acc += it->second * jt->second;
        }
        if (acc != 0) b[-m - r] = -acc / lead;
    }
    return TauSeries(std::move(b), -m - depth + 1);
}

TauSeries invert(const TauSeries& s, int depth) { return invert(s.truncated_depth(depth)); }

TauSeries subst_neg_tau(const TauSeries& s) {
    std::map<int, Rational> c(s.coeffs());
    for (auto& [k, v] : c)
        if (k % 2 != 0) v = -v;
    return TauSeries(std::move(c), s.floor());
}

bool kstar_check(const TauSeries& s) {
    if (s.is_zero()) return false;
    if (*s.top() != 0) return false;
    if (s.coeff(0) != 1) return false;
    return agree_on_window(s * subst_neg_tau(s), TauSeries::constant(1));
}

bool agree_on_window(const TauSeries& a, const TauSeries& b) {
    if (a.is_exact() && b.is_exact()) return a.coeffs() == b.coeffs();
    long long f = std::max(floor_or_ninf(a.floor()), floor_or_ninf(b.floor()));
    for (const auto& [k, v] : a.coeffs()) {
        if (k < f) continue;
        auto it = b.coeffs().find(k);
        if (it == b.coeffs().end() || it->second != v) return false;
    }
    for (const auto& [k, v] : b.coeffs()) {
        if (k < f) continue;
        if (a.coeffs().find(k) == a.coeffs().end()) return false;
    }
    return true;
}

} // namespace wkb
