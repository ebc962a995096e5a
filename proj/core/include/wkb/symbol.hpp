#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>

#include "wkb/coefficient_function.hpp"
#include "wkb/errors.hpp"
#include "wkb/tau_series.hpp"

namespace wkb {

/* Total symbol of an operator on an n-dimensional cotangent chart:
 *   sigma(P) = sum_{j <= m} p_j(x, u) tau^j,
 * with the same truncation-window semantics as TauSeries (floor() == nullopt
 * means exact). Composition is the star product
 *   sigma(P o Q) = sum_alpha (tau^{-|alpha|} / alpha!)
 *                  d_u^alpha sigma(P) . d_x^alpha sigma(Q),
 * which reproduces normal-ordered composition under u_i tau -> d/dx_i. */
class Symbol {
public:
    explicit Symbol(std::size_t n) : n_(n) {} // exact zero
    Symbol(std::size_t n, std::map<int, CoefficientFunction> terms, std::optional<int> floor);

    static Symbol zero_to(std::size_t n, int floor);
    static Symbol one(std::size_t n);
    static Symbol scalar(std::size_t n, const TauSeries& s);
    static Symbol x_var(std::size_t n, std::size_t i);      // x_i
    static Symbol u_tau(std::size_t n, std::size_t i);      // u_i tau
    static Symbol term(CoefficientFunction f, int k);       // f tau^k, exact

    std::size_t n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_exact() const { return !floor_.has_value(); }
    std::optional<int> floor() const { return floor_; }
    std::optional<int> top() const;
    const std::map<int, CoefficientFunction>& terms() const { return terms_; }

    CoefficientFunction coeff(int k) const; // BelowTruncation below the window

    int order() const; // ZeroOperator on the zero symbol
    CoefficientFunction principal_symbol() const;
    // class of P in F_m/F_{m-1}; OrderTooHigh if order(P) > m, BelowTruncation
    // if m is below the window
    CoefficientFunction symbol_of_order(int m) const;

    Symbol truncated_to(int floor) const;
    Symbol truncated_depth(int depth) const;

    bool is_central() const;      // x-,u-free on the whole window
    TauSeries central_part() const; // pre: is_central()

    Symbol operator-() const;
    friend Symbol operator+(const Symbol& a, const Symbol& b);
    friend Symbol operator-(const Symbol& a, const Symbol& b);
    friend Symbol operator*(const Symbol& a, const Rational& c);
    friend Symbol operator*(const Rational& c, const Symbol& a) { return a * c; }
    bool operator==(const Symbol& o) const = default;

    std::string str() const;

private:
    std::size_t n_ = 0;
    std::map<int, CoefficientFunction> terms_;
    std::optional<int> floor_;

    void canonicalize();
};

Symbol star(const Symbol& a, const Symbol& b);
Symbol commutator(const Symbol& a, const Symbol& b);

bool is_invertible(const Symbol& p);
Symbol invert(const Symbol& p);
Symbol invert(const Symbol& p, int depth);

// conjugation ad(P): Q -> P * Q * P^{-1}; pre: is_invertible(P)
Symbol ad_apply(const Symbol& p, const Symbol& q);

// s(tau) -> s(-tau) on the whole symbol
Symbol tau_reflect(const Symbol& p);

// formal adjoint with respect to the density dx:
//   sigma* = sum_alpha (tau^{-|alpha|}/alpha!) d_x^alpha d_u^alpha [sigma(x,u;-tau)]
Symbol adjoint_dx(const Symbol& p);

bool agree_on_window(const Symbol& a, const Symbol& b);

// enumerate multi-indices alpha in N^n with |alpha| = total
void for_each_multiindex(std::size_t n, std::uint32_t total,
                         const std::function<void(const Exponents&)>& fn);

} // namespace wkb
