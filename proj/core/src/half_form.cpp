#include "wkb/half_form.hpp"

namespace wkb {

HalfFormOperator::HalfFormOperator(RationalFunction g_, Symbol P_)
    : g(std::move(g_)), P(std::move(P_)) {
    if (g.is_zero()) throw Error("InvalidDensity", "density factor must be nonzero");
    if (g.nvars() != P.n()) throw Error("DimensionMismatch", "density dimension mismatch");
}

HalfFormOperator adjoint(const HalfFormOperator& h) {
    const RationalFunction g2 = h.g * h.g;
    const Symbol m = Symbol::term(CoefficientFunction::from_base(g2), 0);
    const Symbol minv = Symbol::term(CoefficientFunction::from_base(g2.reciprocal()), 0);
    Symbol adj = star(minv, star(adjoint_dx(h.P), m));
    return HalfFormOperator(h.g, std::move(adj));
}

HalfFormOperator transport(const HalfFormOperator& h, const RationalFunction& g2) {
    if (g2.is_zero()) throw Error("InvalidDensity", "density factor must be nonzero");
    const RationalFunction r = h.g / g2;
    const Symbol rs = Symbol::term(CoefficientFunction::from_base(r), 0);
    const Symbol rsinv = Symbol::term(CoefficientFunction::from_base(r.reciprocal()), 0);
    Symbol p = star(rs, star(h.P, rsinv));
    return HalfFormOperator(g2, std::move(p));
}

bool wstar_check(const HalfFormOperator& h) {
    if (h.P.is_zero()) return false;
    if (h.P.order() != 0) return false;
    const CoefficientFunction s0 = h.P.coeff(0);
    if (!s0.is_constant() || s0.constant_value() != 1) return false;
    const HalfFormOperator a = adjoint(h);
    return agree_on_window(star(h.P, a.P), Symbol::one(h.P.n()));
}

bool hf_agree(const HalfFormOperator& a, const HalfFormOperator& b) {
    return agree_on_window(a.P, transport(b, a.g).P);
}

} // namespace wkb
