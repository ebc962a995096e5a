#pragma once

#include <map>
#include <optional>
#include <string>

#include "wkb/rational.hpp"

namespace wkb {

/* Formal Laurent series in tau with finitely many terms above any exponent
 * and a truncation window at the bottom.
 *
 * floor() == nullopt means the series is exact (nothing truncated away);
 * otherwise coefficients at exponents >= *floor() are known and everything
 * below is unknown ("+ O(tau^{floor-1})"). Canonical form keeps only nonzero
 * coefficients inside the window, so == is structural. Binary operations
 * return the coarsest sound window. */
class TauSeries {
public:
    TauSeries() = default; // exact zero
    TauSeries(std::map<int, Rational> coeffs, std::optional<int> floor);

    static TauSeries zero_to(int floor);
    static TauSeries constant(const Rational& c);
    static TauSeries monomial(int k, const Rational& c);

    bool is_zero() const { return c_.empty(); }
    bool is_exact() const { return !floor_.has_value(); }
    std::optional<int> floor() const { return floor_; }
    std::optional<int> top() const; // nullopt for the zero series
    const std::map<int, Rational>& coeffs() const { return c_; }

    // known coefficient at exponent k; throws BelowTruncation below the window
    Rational coeff(int k) const;

    TauSeries truncated_to(int floor) const;   // raise the window floor
    TauSeries truncated_depth(int depth) const; // window = [top-depth+1, top]

    TauSeries operator-() const;
    friend TauSeries operator+(const TauSeries& a, const TauSeries& b);
    friend TauSeries operator-(const TauSeries& a, const TauSeries& b);
    friend TauSeries operator*(const TauSeries& a, const TauSeries& b);
    friend TauSeries operator*(const TauSeries& a, const Rational& c);
    friend TauSeries operator*(const Rational& c, const TauSeries& a) { return a * c; }
    bool operator==(const TauSeries& o) const = default;

    std::string str() const;

private:
    std::map<int, Rational> c_;
    std::optional<int> floor_;

    void canonicalize();
};

// multiplicative inverse on the series' own window; the leading coefficient
// must be nonzero (i.e. the series must be nonzero).
TauSeries invert(const TauSeries& s);
TauSeries invert(const TauSeries& s, int depth);

// s(tau) -> s(-tau)
TauSeries subst_neg_tau(const TauSeries& s);

// membership in k*: top degree 0, unit constant term, s(tau)s(-tau) = 1 to
// the sound window
bool kstar_check(const TauSeries& s);

// equality of the known parts on the common sound window
bool agree_on_window(const TauSeries& a, const TauSeries& b);

} // namespace wkb
