#include "wkb/descent.hpp"

namespace wkb {

namespace {

std::string edge_name(const Nerve& nv, std::size_t e) {
    return "Q(" + std::to_string(nv.edges[e][0]) + "," + std::to_string(nv.edges[e][1]) + ")";
}

std::string tri_str(const std::array<int, 3>& t) {
    return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
           std::to_string(t[2]) + ")";
}

void check_shape(const DescentDatum& d) {
    auto bad = d.nerve.validate();
    if (!bad.empty()) throw Error("ParseError", "nerve: " + bad.front());
    if (d.q.size() != d.nerve.edges.size() || d.p.size() != d.nerve.triangles.size())
        throw Error("DimensionMismatch", "datum does not match the nerve simplex counts");
    for (const auto& q : d.q)
        if (static_cast<int>(q.n()) != d.n)
            throw Error("DimensionMismatch", "transition operator has wrong chart dimension");
    for (const auto& p : d.p)
        if (static_cast<int>(p.P.n()) != d.n)
            throw Error("DimensionMismatch", "correction operator has wrong chart dimension");
}

// P in the plain dx representation
std::vector<Symbol> plain_p(const DescentDatum& d) {
    RationalFunction one = RationalFunction::constant(static_cast<std::size_t>(d.n), 1);
    std::vector<Symbol> out;
    out.reserve(d.p.size());
    for (const auto& p : d.p) out.push_back(transport(p, one).P);
    return out;
}

// identity check to depth; a comparison where both sides lost every
// coefficient to truncation certifies nothing
bool certified_equal(const Symbol& lhs, const Symbol& rhs, const std::string& item) {
    if ((!lhs.is_exact() || !rhs.is_exact()) && !lhs.top().has_value() &&
        !rhs.top().has_value())
        throw Error("DepthInsufficient",
                    item + ": no coefficients survive to the comparison window");
    return agree_on_window(lhs, rhs);
}

std::string residual_str(const Symbol& lhs, const Symbol& rhs) {
    return "; residual = " + (lhs - rhs).str();
}

// an exact operator with lower-order terms has no finite inverse, so checks
// that conjugate by it cannot be carried out without truncating first
std::string depth_skip(const Error& e) {
    return "skipped: " + std::string(e.what()).substr(e.name().size() + 2);
}

} // namespace

DescentReport validate_descent(const DescentDatum& d) {
    check_shape(d);
    DescentReport rep;
    const Nerve& nv = d.nerve;

    std::vector<bool> q_ok(d.q.size());
    for (std::size_t e = 0; e < d.q.size(); ++e) {
        DescentCheck c;
        c.item = edge_name(nv, e) + " invertible";
        c.ok = is_invertible(d.q[e]);
        if (!c.ok) c.detail = "principal symbol is not a unit";
        q_ok[e] = c.ok;
        rep.checks.push_back(c);
    }

    std::vector<Symbol> pt = plain_p(d);

    for (std::size_t t = 0; t < d.p.size(); ++t) {
        DescentCheck c;
        c.item = "P" + tri_str(nv.triangles[t]) + " unitary";
        c.ok = wstar_check(d.p[t]);
        if (!c.ok) {
            const Symbol& p = d.p[t].P;
            if (!p.top().has_value() || p.order() != 0)
                c.detail = "order != 0";
            else if (!(p.symbol_of_order(0) == CoefficientFunction::constant(p.n(), 1)))
                c.detail = "principal symbol != 1";
            else
                c.detail = "P P^* != 1" +
                           residual_str(star(p, adjoint(d.p[t]).P), Symbol::one(p.n()));
        }
        rep.checks.push_back(c);
    }

    // generators probed by the automorphism identity
    std::vector<std::pair<std::string, Symbol>> gens;
    for (int a = 0; a < d.n; ++a) {
        gens.push_back({"x_" + std::to_string(a + 1),
                        Symbol::x_var(static_cast<std::size_t>(d.n), a)});
        gens.push_back({"u_" + std::to_string(a + 1) + " tau",
                        Symbol::u_tau(static_cast<std::size_t>(d.n), a)});
    }

    for (std::size_t t = 0; t < nv.triangles.size(); ++t) {
        const auto& tr = nv.triangles[t];
        int eij = nv.edge_index(tr[0], tr[1]);
        int ejk = nv.edge_index(tr[1], tr[2]);
        int eik = nv.edge_index(tr[0], tr[2]);
        DescentCheck c;
        c.item = "triangle " + tri_str(tr) + " composition";
        if (!q_ok[eij] || !q_ok[ejk] || !q_ok[eik]) {
            c.ok = false;
            c.detail = "skipped: a transition operator on this triangle is not invertible";
            rep.checks.push_back(c);
            continue;
        }
        if (!is_invertible(pt[t])) {
            c.ok = false;
            c.detail = "skipped: the correction operator is not invertible";
            rep.checks.push_back(c);
            continue;
        }
        c.ok = true;
        try {
            for (const auto& [gname, gen] : gens) {
                Symbol lhs = ad_apply(d.q[eij], ad_apply(d.q[ejk], gen));
                Symbol rhs = ad_apply(pt[t], ad_apply(d.q[eik], gen));
                if (!certified_equal(lhs, rhs, c.item)) {
                    c.ok = false;
                    c.detail = "Ad(Q_ij)Ad(Q_jk) != Ad(P_ijk)Ad(Q_ik) on " + gname +
                               residual_str(lhs, rhs);
                    break;
                }
            }
        } catch (const Error& e) {
            if (e.name() != "DepthRequired") throw;
            c.ok = false;
            c.detail = depth_skip(e);
        }
        rep.checks.push_back(c);
    }

    for (const auto& te : nv.tetrahedra) {
        int i = te[0], j = te[1], k = te[2], l = te[3];
        int tijk = nv.triangle_index(i, j, k);
        int tikl = nv.triangle_index(i, k, l);
        int tjkl = nv.triangle_index(j, k, l);
        int tijl = nv.triangle_index(i, j, l);
        int eij = nv.edge_index(i, j);
        DescentCheck c;
        c.item = "tetrahedron (" + std::to_string(i) + "," + std::to_string(j) + "," +
                 std::to_string(k) + "," + std::to_string(l) + ") cocycle";
        if (!q_ok[eij]) {
            c.ok = false;
            c.detail = "skipped: Q on edge (i,j) is not invertible";
            rep.checks.push_back(c);
            continue;
        }
        try {
            Symbol lhs = star(pt[tijk], pt[tikl]);
            Symbol rhs = star(ad_apply(d.q[eij], pt[tjkl]), pt[tijl]);
            c.ok = certified_equal(lhs, rhs, c.item);
            if (!c.ok)
                c.detail = "P_ijk * P_ikl != Ad(Q_ij)(P_jkl) * P_ijl" + residual_str(lhs, rhs);
        } catch (const Error& e) {
            if (e.name() != "DepthRequired") throw;
            c.ok = false;
            c.detail = depth_skip(e);
        }
        rep.checks.push_back(c);
    }

    rep.ok = true;
    for (const auto& c : rep.checks)
        if (!c.ok) rep.ok = false;
    return rep;
}

std::vector<TauSeries> extract_class(const DescentDatum& d) {
    check_shape(d);
    const Nerve& nv = d.nerve;
    std::vector<Symbol> pt = plain_p(d);

    std::vector<TauSeries> out;
    out.reserve(nv.triangles.size());
    for (std::size_t t = 0; t < nv.triangles.size(); ++t) {
        const auto& tr = nv.triangles[t];
        int eij = nv.edge_index(tr[0], tr[1]);
        int ejk = nv.edge_index(tr[1], tr[2]);
        int eik = nv.edge_index(tr[0], tr[2]);
        Symbol c = star(star(d.q[eij], d.q[ejk]), invert(star(pt[t], d.q[eik])));
        if (!c.is_central())
            throw Error("NonCentralDefect",
                        "defect on triangle " + tri_str(tr) + " is not central");
        TauSeries s = c.central_part();
        if (!kstar_check(s))
            throw Error("NonCentralDefect",
                        "defect on triangle " + tri_str(tr) + " is central but not in k*");
        out.push_back(s);
    }
    return out;
}

} // namespace wkb
