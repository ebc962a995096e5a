#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "wkb/errors.hpp"

namespace wkb {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string rational_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline Rational rational_parse(const std::string& s) {
    try {
        Rational r(s);
        return r;
    } catch (const std::exception&) {
        throw Error("ParseError", "bad rational literal '" + s + "'");
    }
}

inline Rational factorial(unsigned n) {
    Rational r = 1;
    for (unsigned k = 2; k <= n; ++k) r *= k;
    return r;
}

} // namespace wkb
