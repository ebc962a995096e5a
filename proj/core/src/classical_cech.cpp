#include "wkb/classical_cech.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wkb {

namespace {

constexpr long long kEnumCap = 1LL << 26;

// all tuples of given length over {0,...,size-1}, lexicographic order
template <typename Fn>
void for_each_tuple(std::size_t len, int size, Fn&& fn) {
    std::vector<int> t(len, 0);
    while (true) {
        fn(t);
        std::size_t p = len;
        while (p > 0 && t[p - 1] == size - 1) t[--p] = 0;
        if (p == 0) break;
        ++t[p - 1];
    }
}

long long pow_ll(long long b, std::size_t e) {
    long long r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        r *= b;
        if (r > kEnumCap) return kEnumCap + 1;
    }
    return r;
}

std::size_t simplex_count(const Nerve& nv, int p) {
    switch (p) {
    case 0: return static_cast<std::size_t>(nv.n_vertices);
    case 1: return nv.edges.size();
    case 2: return nv.triangles.size();
    case 3: return nv.tetrahedra.size();
    default: return 0;
    }
}

std::vector<int> coboundary(const FiniteGroup& g, const Nerve& nv, int p,
                            const std::vector<int>& c) {
    std::vector<int> out(simplex_count(nv, p + 1), 0);
    if (p == 0) {
        for (std::size_t e = 0; e < nv.edges.size(); ++e) {
            int i = nv.edges[e][0], j = nv.edges[e][1];
            out[e] = g.mul(c[j], g.inv(c[i]));
        }
    } else if (p == 1) {
        for (std::size_t t = 0; t < nv.triangles.size(); ++t) {
            const auto& tr = nv.triangles[t];
            int uij = c[nv.edge_index(tr[0], tr[1])];
            int uik = c[nv.edge_index(tr[0], tr[2])];
            int ujk = c[nv.edge_index(tr[1], tr[2])];
            out[t] = g.mul(g.mul(ujk, g.inv(uik)), uij);
        }
    } else if (p == 2) {
        for (std::size_t q = 0; q < nv.tetrahedra.size(); ++q) {
            const auto& te = nv.tetrahedra[q];
            int wjkl = c[nv.triangle_index(te[1], te[2], te[3])];
            int wikl = c[nv.triangle_index(te[0], te[2], te[3])];
            int wijl = c[nv.triangle_index(te[0], te[1], te[3])];
            int wijk = c[nv.triangle_index(te[0], te[1], te[2])];
            out[q] = g.mul(g.mul(g.mul(wjkl, g.inv(wikl)), wijl), g.inv(wijk));
        }
    }
    return out;
}

bool is_identity(const std::vector<int>& c) {
    return std::all_of(c.begin(), c.end(), [](int v) { return v == 0; });
}

} // namespace

ClassicalCohomology classical_cohomology(const FiniteGroup& g, const Nerve& nv, int degree) {
    if (!g.is_abelian())
        throw Error("NotAbelian", "classical cohomology needs abelian coefficients, got " +
                                      g.name);
    if (degree < 0 || degree > 2)
        throw Error("ParseError", "degree must be 0, 1 or 2");

    ClassicalCohomology out;
    out.degree = degree;

    const std::size_t np = simplex_count(nv, degree);
    if (pow_ll(g.size(), np) > kEnumCap ||
        (degree > 0 && pow_ll(g.size(), simplex_count(nv, degree - 1)) > kEnumCap))
        throw Error("BudgetExceeded", "cochain enumeration too large");

    for_each_tuple(np, g.size(), [&](const std::vector<int>& c) {
        if (is_identity(coboundary(g, nv, degree, c))) out.cocycles.push_back(c);
    });

    if (degree == 0) {
        out.coboundaries.push_back(std::vector<int>(np, 0));
    } else {
        std::set<std::vector<int>> image;
        for_each_tuple(simplex_count(nv, degree - 1), g.size(),
                       [&](const std::vector<int>& c) {
                           image.insert(coboundary(g, nv, degree - 1, c));
                       });
        out.coboundaries.assign(image.begin(), image.end());
    }

    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < out.cocycles.size(); ++i)
        index[out.cocycles[i]] = static_cast<int>(i);

    out.class_of.assign(out.cocycles.size(), -1);
    for (std::size_t i = 0; i < out.cocycles.size(); ++i) {
        if (out.class_of[i] != -1) continue;
        int c = static_cast<int>(out.reps.size());
        out.reps.push_back(static_cast<int>(i));
        for (const auto& b : out.coboundaries) {
            std::vector<int> prod(np);
            for (std::size_t s = 0; s < np; ++s) prod[s] = g.mul(out.cocycles[i][s], b[s]);
            auto it = index.find(prod);
            if (it == index.end())
                throw std::logic_error("coboundary translate left the cocycle set");
            out.class_of[it->second] = c;
        }
    }

    const int n = static_cast<int>(out.reps.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            std::vector<int> prod(np);
            for (std::size_t s = 0; s < np; ++s)
                prod[s] = g.mul(out.cocycles[out.reps[x]][s], out.cocycles[out.reps[y]][s]);
            table[x][y] = out.class_of[index.at(prod)];
        }
    out.invariant_factors = abelian_invariant_factors(table);
    return out;
}

int classical_class_of(const ClassicalCohomology& coh, const std::vector<int>& cocycle) {
    auto it = std::lower_bound(coh.cocycles.begin(), coh.cocycles.end(), cocycle);
    if (it == coh.cocycles.end() || *it != cocycle)
        throw Error("InvalidCocycle", "tuple is not one of the enumerated cocycles");
    return coh.class_of[it - coh.cocycles.begin()];
}

namespace {

struct ClassMaps {
    std::vector<int> fwd; // cm class -> classical class
    std::vector<int> bwd; // classical class -> cm class
    bool ok = true;
};

// builds and checks the two class maps given per-cocycle correspondences
ClassMaps check_bijection(const std::vector<int>& cm_class_of, int cm_classes,
                          const std::vector<int>& cm_to_classical,
                          const std::vector<int>& classical_class_of_vec, int classical_classes,
                          const std::vector<int>& classical_to_cm) {
    ClassMaps m;
    m.fwd.assign(cm_classes, -1);
    m.bwd.assign(classical_classes, -1);
    for (std::size_t i = 0; i < cm_class_of.size(); ++i) {
        int a = cm_class_of[i], b = cm_to_classical[i];
        if (m.fwd[a] == -1)
            m.fwd[a] = b;
        else if (m.fwd[a] != b)
            m.ok = false; // not well defined on classes
    }
    for (std::size_t i = 0; i < classical_class_of_vec.size(); ++i) {
        int b = classical_class_of_vec[i], a = classical_to_cm[i];
        if (m.bwd[b] == -1)
            m.bwd[b] = a;
        else if (m.bwd[b] != a)
            m.ok = false;
    }
    for (int a = 0; a < cm_classes; ++a)
        if (m.fwd[a] == -1 || m.bwd[m.fwd[a]] != a) m.ok = false;
    for (int b = 0; b < classical_classes; ++b)
        if (m.bwd[b] == -1 || m.fwd[m.bwd[b]] != b) m.ok = false;
    return m;
}

} // namespace

HyperComparison compare_hyper(const FiniteGroup& g, const Nerve& nv, long long budget) {
    if (!g.is_abelian())
        throw Error("NotAbelian", "hypercohomology comparison needs abelian G, got " + g.name);

    HyperComparison out;
    CrossedModule cm0 = make_g0(g);
    CrossedModule cm1 = make_g1(g);

    // shift 0 = h0, 1 = h1; g0-type cocycles carry the data in .g, g1-type in .h
    auto run = [&](const char* label, int shift, int classical_degree, const CrossedModule& cm,
                   bool use_g) {
        HyperComparison::Entry entry;
        entry.label = label;
        ClassicalCohomology coh = classical_cohomology(g, nv, classical_degree);
        entry.classes_classical = coh.classes();

        std::vector<int> cm_class_of;
        int cm_classes = 0;
        std::vector<int> cm_to_classical;
        std::vector<int> classical_to_cm(coh.cocycles.size(), -1);

        if (shift == 0) {
            ZeroClassification cls = h0(cm, nv, budget);
            if (!cls.complete)
                throw Error("MismatchDetected",
                            std::string(label) + ": enumeration budget exhausted");
            cm_class_of = cls.class_of;
            cm_classes = static_cast<int>(cls.reps.size());
            entry.classes_cm = cm_classes;
            for (const auto& c : cls.cocycles) {
                const std::vector<int>& t = use_g ? c.g : c.h;
                cm_to_classical.push_back(classical_class_of(coh, t));
            }
            for (std::size_t i = 0; i < coh.cocycles.size(); ++i) {
                ZeroCochain c;
                c.g.assign(nv.n_vertices, 0);
                c.h.assign(nv.edges.size(), 0);
                (use_g ? c.g : c.h) = coh.cocycles[i];
                int idx = find_cocycle(cls.cocycles, c);
                if (idx < 0)
                    throw Error("MismatchDetected",
                                std::string(label) + ": classical cocycle missing on the "
                                                     "crossed-module side");
                classical_to_cm[i] = cls.class_of[idx];
            }
        } else {
            OneClassification cls = h1(cm, nv, budget);
            if (!cls.complete)
                throw Error("MismatchDetected",
                            std::string(label) + ": enumeration budget exhausted");
            cm_class_of = cls.class_of;
            cm_classes = static_cast<int>(cls.reps.size());
            entry.classes_cm = cm_classes;
            for (const auto& c : cls.cocycles) {
                const std::vector<int>& t = use_g ? c.g : c.h;
                cm_to_classical.push_back(classical_class_of(coh, t));
            }
            for (std::size_t i = 0; i < coh.cocycles.size(); ++i) {
                OneCochain c;
                c.g.assign(nv.edges.size(), 0);
                c.h.assign(nv.triangles.size(), 0);
                (use_g ? c.g : c.h) = coh.cocycles[i];
                int idx = find_cocycle(cls.cocycles, c);
                if (idx < 0)
                    throw Error("MismatchDetected",
                                std::string(label) + ": classical cocycle missing on the "
                                                     "crossed-module side");
                classical_to_cm[i] = cls.class_of[idx];
            }
        }

        ClassMaps maps = check_bijection(cm_class_of, cm_classes, cm_to_classical,
                                         coh.class_of, coh.classes(), classical_to_cm);
        entry.matched = maps.ok;
        out.entries.push_back(entry);
    };

    run("h0[g0] ~ H^0", 0, 0, cm0, true);
    run("h1[g0] ~ H^1", 1, 1, cm0, true);
    run("h0[g1] ~ H^1", 0, 1, cm1, false);
    run("h1[g1] ~ H^2", 1, 2, cm1, false);

    out.ok = std::all_of(out.entries.begin(), out.entries.end(),
                         [](const auto& e) { return e.matched; });
    if (!out.ok) {
        std::string which;
        for (const auto& e : out.entries)
            if (!e.matched) which += (which.empty() ? "" : ", ") + e.label;
        throw Error("MismatchDetected", "class bijection failed for: " + which);
    }
    return out;
}

std::vector<int> bridge_forward(const FiniteGroup& g, const Nerve& nv, const OneCochain& c) {
    CrossedModule cm = make_central(g);
    auto bad = check1(cm, nv, c);
    if (!bad.empty()) throw Error("InvalidCocycle", bad.front());
    Quotient q = quotient_by(g, g.center());
    auto center = g.center();
    std::set<int> zset(center.begin(), center.end());

    std::vector<int> z(nv.triangles.size());
    for (std::size_t t = 0; t < nv.triangles.size(); ++t) {
        const auto& tr = nv.triangles[t];
        int gij = q.rep[c.g[nv.edge_index(tr[0], tr[1])]];
        int gik = q.rep[c.g[nv.edge_index(tr[0], tr[2])]];
        int gjk = q.rep[c.g[nv.edge_index(tr[1], tr[2])]];
        int v = g.mul(g.mul(g.mul(gik, g.inv(gjk)), g.inv(gij)), c.h[t]);
        if (!zset.count(v))
            throw Error("LiftFailure", "central defect is not central on triangle " +
                                           std::to_string(t));
        z[t] = v;
    }
    return z;
}

OneCochain bridge_backward(const FiniteGroup& g, const Nerve& nv, const std::vector<int>& z) {
    CrossedModule cm = make_central(g);
    if (z.size() != nv.triangles.size())
        throw Error("ParseError", "2-cochain has wrong length for the nerve");
    auto center = g.center();
    std::set<int> zset(center.begin(), center.end());
    for (std::size_t t = 0; t < z.size(); ++t) {
        if (z[t] < 0 || z[t] >= g.size())
            throw Error("ParseError", "entry " + std::to_string(t) + " out of range");
        if (!zset.count(z[t]))
            throw Error("LiftFailure",
                        "entry " + std::to_string(t) + " is not central in " + g.name);
    }
    OneCochain c;
    c.g.assign(nv.edges.size(), 0); // identity coset
    c.h = z;
    auto bad = check1(cm, nv, c);
    if (!bad.empty()) throw Error("InvalidCocycle", bad.front());
    return c;
}

BridgeVerification bridge_verify(const FiniteGroup& g, const Nerve& nv, long long budget) {
    CrossedModule cm = make_central(g);
    OneClassification cls = h1(cm, nv, budget);

    BridgeVerification out;
    out.nodes = cls.nodes;
    out.complete = cls.complete;
    out.classes_cm = static_cast<int>(cls.reps.size());

    auto center = g.center();
    FiniteGroup zg = subgroup(g, center);
    std::vector<int> to_sub(g.size(), -1);
    for (std::size_t i = 0; i < center.size(); ++i) to_sub[center[i]] = static_cast<int>(i);

    ClassicalCohomology coh = classical_cohomology(zg, nv, 2);
    out.classes_classical = coh.classes();
    if (!out.complete) return out;

    // forward on every cocycle; must be constant on classes and a bijection
    std::vector<int> fwd(out.classes_cm, -1);
    bool fok = true;
    for (std::size_t i = 0; i < cls.cocycles.size(); ++i) {
        std::vector<int> z = bridge_forward(g, nv, cls.cocycles[i]);
        for (int& v : z) v = to_sub[v];
        int cc = classical_class_of(coh, z);
        int a = cls.class_of[i];
        if (fwd[a] == -1)
            fwd[a] = cc;
        else if (fwd[a] != cc)
            fok = false;
    }
    std::vector<int> bwd(out.classes_classical, -1);
    bool bok = true;
    for (std::size_t i = 0; i < coh.cocycles.size(); ++i) {
        std::vector<int> zg_elems = coh.cocycles[i];
        for (int& v : zg_elems) v = center[v];
        OneCochain c = bridge_backward(g, nv, zg_elems);
        // round trip on the nose
        if (bridge_forward(g, nv, c) != zg_elems) bok = false;
        int idx = find_cocycle(cls.cocycles, c);
        if (idx < 0) {
            bok = false;
            continue;
        }
        int a = cls.class_of[idx];
        int cc = coh.class_of[i];
        if (bwd[cc] == -1)
            bwd[cc] = a;
        else if (bwd[cc] != a)
            bok = false;
    }
    for (int a = 0; a < out.classes_cm && fok; ++a)
        if (fwd[a] == -1 || bwd[fwd[a]] != a) fok = false;
    for (int b = 0; b < out.classes_classical && bok; ++b)
        if (bwd[b] == -1 || fwd[bwd[b]] != b) bok = false;
    out.forward_ok = fok;
    out.backward_ok = bok;
    return out;
}

} // namespace wkb
