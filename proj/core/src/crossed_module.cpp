#include "wkb/crossed_module.hpp"

namespace wkb {

std::vector<std::string> CrossedModule::validate() const {
    std::vector<std::string> bad;
    const int nm1 = gm1.size();
    const int n0 = g0.size();
    auto g_bad = gm1.validate();
    for (auto& s : g_bad) bad.push_back("G^-1: " + s);
    auto g0_bad = g0.validate();
    for (auto& s : g0_bad) bad.push_back("G^0: " + s);
    if (!bad.empty()) return bad;

    if (static_cast<int>(d.size()) != nm1) {
        bad.push_back("d has wrong domain size");
        return bad;
    }
    for (int h = 0; h < nm1; ++h)
        if (d[h] < 0 || d[h] >= n0) {
            bad.push_back("d[" + std::to_string(h) + "] out of range");
            return bad;
        }
    if (static_cast<int>(act.size()) != n0) {
        bad.push_back("action table has wrong size");
        return bad;
    }
    for (int g = 0; g < n0; ++g) {
        if (static_cast<int>(act[g].size()) != nm1) {
            bad.push_back("action row " + std::to_string(g) + " has wrong length");
            return bad;
        }
        for (int h = 0; h < nm1; ++h)
            if (act[g][h] < 0 || act[g][h] >= nm1) {
                bad.push_back("act[" + std::to_string(g) + "][" + std::to_string(h) +
                              "] out of range");
                return bad;
            }
    }

    if (d[0] != 0) bad.push_back("d does not preserve the identity");
    for (int h1 = 0; h1 < nm1; ++h1)
        for (int h2 = 0; h2 < nm1; ++h2)
            if (d[gm1.mul(h1, h2)] != g0.mul(d[h1], d[h2])) {
                bad.push_back("d is not a homomorphism at (" + std::to_string(h1) + "," +
                              std::to_string(h2) + ")");
                goto done_hom;
            }
done_hom:
    for (int h = 0; h < nm1; ++h)
        if (act[0][h] != h) {
            bad.push_back("identity of G^0 does not act trivially");
            break;
        }
    for (int g1 = 0; g1 < n0; ++g1)
        for (int g2 = 0; g2 < n0; ++g2)
            for (int h = 0; h < nm1; ++h)
                if (act[g0.mul(g1, g2)][h] != act[g1][act[g2][h]]) {
                    bad.push_back("action is not compatible with G^0 multiplication at (" +
                                  std::to_string(g1) + "," + std::to_string(g2) + "," +
                                  std::to_string(h) + ")");
                    goto done_act;
                }
done_act:
    for (int g = 0; g < n0; ++g)
        for (int h1 = 0; h1 < nm1; ++h1)
            for (int h2 = 0; h2 < nm1; ++h2)
                if (act[g][gm1.mul(h1, h2)] != gm1.mul(act[g][h1], act[g][h2])) {
                    bad.push_back("action of " + std::to_string(g) +
                                  " is not an automorphism at (" + std::to_string(h1) + "," +
                                  std::to_string(h2) + ")");
                    goto done_auto;
                }
done_auto:
    for (int g = 0; g < n0; ++g)
        for (int h = 0; h < nm1; ++h)
            if (d[act[g][h]] != g0.conj(g, d[h])) {
                bad.push_back("equivariance fails at (g=" + std::to_string(g) +
                              ", h=" + std::to_string(h) + ")");
                goto done_equiv;
            }
done_equiv:
    for (int hp = 0; hp < nm1; ++hp)
        for (int h = 0; h < nm1; ++h)
            if (act[d[hp]][h] != gm1.conj(hp, h)) {
                bad.push_back("Peiffer identity fails at (h'=" + std::to_string(hp) +
                              ", h=" + std::to_string(h) + ")");
                goto done_peiffer;
            }
done_peiffer:
    return bad;
}

CrossedModule make_g0(const FiniteGroup& g) {
    CrossedModule cm;
    cm.name = "g0:" + g.name;
    cm.gm1 = groups::trivial();
    cm.g0 = g;
    cm.d = {0};
    cm.act.assign(g.size(), std::vector<int>{0});
    return cm;
}

CrossedModule make_g1(const FiniteGroup& g) {
    if (!g.is_abelian())
        throw Error("NotAbelian", "shifted crossed module [G -> 1] needs abelian G, got " + g.name);
    CrossedModule cm;
    cm.name = "g1:" + g.name;
    cm.gm1 = g;
    cm.g0 = groups::trivial();
    cm.d.assign(g.size(), 0);
    cm.act.assign(1, std::vector<int>(g.size()));
    for (int h = 0; h < g.size(); ++h) cm.act[0][h] = h;
    return cm;
}

CrossedModule make_central(const FiniteGroup& g) {
    Quotient q = quotient_by(g, g.center());
    CrossedModule cm;
    cm.name = "central:" + g.name;
    cm.gm1 = g;
    cm.g0 = q.q;
    cm.d = q.proj;
    cm.act.assign(q.q.size(), std::vector<int>(g.size()));
    for (int c = 0; c < q.q.size(); ++c)
        for (int h = 0; h < g.size(); ++h) cm.act[c][h] = g.conj(q.rep[c], h);
    return cm;
}

CrossedModule cm_fixture(const std::string& name) {
    auto colon = name.find(':');
    if (colon == std::string::npos)
        throw Error("ParseError", "crossed module fixture must look like kind:group, got '" +
                                      name + "'");
    std::string kind = name.substr(0, colon);
    FiniteGroup g = group_fixture(name.substr(colon + 1));
    if (kind == "g0") return make_g0(g);
    if (kind == "g1") return make_g1(g);
    if (kind == "central") return make_central(g);
    throw Error("ParseError", "unknown crossed module kind '" + kind + "'");
}

int arrow_dst(const CrossedModule& cm, const Arrow& a) {
    return cm.g0.mul(cm.d[a.wit], a.src);
}

Arrow identity_arrow(int g) { return Arrow{g, 0}; }

Arrow inverse_arrow(const CrossedModule& cm, const Arrow& a) {
    return Arrow{arrow_dst(cm, a), cm.gm1.inv(a.wit)};
}

Arrow compose(const CrossedModule& cm, const Arrow& b, const Arrow& a) {
    if (arrow_dst(cm, a) != b.src)
        throw Error("NotComposable", "arrow endpoints do not match: dst=" +
                                         std::to_string(arrow_dst(cm, a)) +
                                         " src=" + std::to_string(b.src));
    return Arrow{a.src, cm.gm1.mul(b.wit, a.wit)};
}

Arrow tensor(const CrossedModule& cm, const Arrow& a, const Arrow& b) {
    return Arrow{cm.g0.mul(a.src, b.src), cm.gm1.mul(a.wit, cm.action(a.src, b.wit))};
}

} // namespace wkb
