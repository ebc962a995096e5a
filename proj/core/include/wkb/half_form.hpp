#pragma once

#include "wkb/symbol.hpp"

namespace wkb {

/* Operator twisted by a half-form: the pair (g, P) represents P acting on
 * sections twisted by the square root of the density theta = g^2 dx. The
 * same underlying operator at density g2 has symbol r P r^{-1} with
 * r = g/g2, so half-form operators are compared after transport to a common
 * density. */
struct HalfFormOperator {
    RationalFunction g; // nonzero, depends on x only
    Symbol P;

    HalfFormOperator(RationalFunction g_, Symbol P_);
};

// formal adjoint with respect to theta = g^2 dx:
//   P^{*theta} = g^{-2} o P^{*dx} o g^2
HalfFormOperator adjoint(const HalfFormOperator& h);

// re-express at density g2 (symbol becomes r P r^{-1}, r = g/g2)
HalfFormOperator transport(const HalfFormOperator& h, const RationalFunction& g2);

// membership in W^{sqrt v,*}: order 0, principal symbol 1, P P^* = 1 to depth
bool wstar_check(const HalfFormOperator& h);

// equality as operators on half-form sections (transport + window comparison)
bool hf_agree(const HalfFormOperator& a, const HalfFormOperator& b);

} // namespace wkb
