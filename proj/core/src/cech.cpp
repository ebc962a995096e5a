#include "wkb/cech.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace wkb {

namespace {

std::vector<std::vector<int>> d_fibers(const CrossedModule& cm) {
    std::vector<std::vector<int>> f(cm.g0.size());
    for (int h = 0; h < cm.gm1.size(); ++h) f[cm.d[h]].push_back(h);
    return f;
}

bool action_trivial(const CrossedModule& cm) {
    for (int g = 0; g < cm.g0.size(); ++g)
        for (int h = 0; h < cm.gm1.size(); ++h)
            if (cm.act[g][h] != h) return false;
    return true;
}

std::string pair_str(int i, int j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}
std::string triple_str(int i, int j, int k) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

void require_cocycle(const std::vector<std::string>& bad, const char* which) {
    if (bad.empty()) return;
    std::string msg = std::string(which) + ": " + bad.front();
    if (bad.size() > 1) msg += " (and " + std::to_string(bad.size() - 1) + " more)";
    throw Error("InvalidCocycle", msg);
}

// triangles become fully determined when their last edge slot is filled
std::vector<std::vector<int>> triangles_closing_at_edge(const Nerve& nv) {
    std::vector<std::vector<int>> close(nv.edges.size());
    for (std::size_t t = 0; t < nv.triangles.size(); ++t) {
        const auto& tr = nv.triangles[t];
        int e1 = nv.edge_index(tr[0], tr[1]);
        int e2 = nv.edge_index(tr[0], tr[2]);
        int e3 = nv.edge_index(tr[1], tr[2]);
        close[std::max({e1, e2, e3})].push_back(static_cast<int>(t));
    }
    return close;
}

std::vector<std::vector<int>> tetrahedra_closing_at_triangle(const Nerve& nv) {
    std::vector<std::vector<int>> close(nv.triangles.size());
    for (std::size_t q = 0; q < nv.tetrahedra.size(); ++q) {
        const auto& te = nv.tetrahedra[q];
        int t1 = nv.triangle_index(te[0], te[1], te[2]);
        int t2 = nv.triangle_index(te[0], te[1], te[3]);
        int t3 = nv.triangle_index(te[0], te[2], te[3]);
        int t4 = nv.triangle_index(te[1], te[2], te[3]);
        close[std::max({t1, t2, t3, t4})].push_back(static_cast<int>(q));
    }
    return close;
}

} // namespace

std::vector<std::string> check0(const CrossedModule& cm, const Nerve& nv, const ZeroCochain& c) {
    std::vector<std::string> bad;
    if (static_cast<int>(c.g.size()) != nv.n_vertices || c.h.size() != nv.edges.size())
        throw Error("MissingAssignment", "cochain does not assign a value to every simplex");
    for (int v = 0; v < nv.n_vertices; ++v)
        if (c.g[v] < 0 || c.g[v] >= cm.g0.size())
            throw Error("MissingAssignment", "g[" + std::to_string(v) + "] is not a G0 element");
    for (std::size_t e = 0; e < c.h.size(); ++e)
        if (c.h[e] < 0 || c.h[e] >= cm.gm1.size())
            throw Error("MissingAssignment", "h[" + std::to_string(e) + "] is not a G-1 element");
    for (std::size_t e = 0; e < nv.edges.size(); ++e) {
        int i = nv.edges[e][0], j = nv.edges[e][1];
        if (c.g[i] != cm.g0.mul(cm.d[c.h[e]], c.g[j]))
            bad.push_back("edge " + pair_str(i, j) + ": g_i != d(h_ij) g_j");
    }
    for (const auto& tr : nv.triangles) {
        int i = tr[0], j = tr[1], k = tr[2];
        int hij = c.h[nv.edge_index(i, j)];
        int hjk = c.h[nv.edge_index(j, k)];
        int hik = c.h[nv.edge_index(i, k)];
        if (cm.gm1.mul(hij, hjk) != hik)
            bad.push_back("triangle " + triple_str(i, j, k) + ": h_ij h_jk != h_ik");
    }
    return bad;
}

std::vector<std::string> check1(const CrossedModule& cm, const Nerve& nv, const OneCochain& c) {
    std::vector<std::string> bad;
    if (c.g.size() != nv.edges.size() || c.h.size() != nv.triangles.size())
        throw Error("MissingAssignment", "cochain does not assign a value to every simplex");
    for (std::size_t e = 0; e < c.g.size(); ++e)
        if (c.g[e] < 0 || c.g[e] >= cm.g0.size())
            throw Error("MissingAssignment", "g[" + std::to_string(e) + "] is not a G0 element");
    for (std::size_t t = 0; t < c.h.size(); ++t)
        if (c.h[t] < 0 || c.h[t] >= cm.gm1.size())
            throw Error("MissingAssignment", "h[" + std::to_string(t) + "] is not a G-1 element");
    for (std::size_t t = 0; t < nv.triangles.size(); ++t) {
        const auto& tr = nv.triangles[t];
        int i = tr[0], j = tr[1], k = tr[2];
        int gij = c.g[nv.edge_index(i, j)];
        int gjk = c.g[nv.edge_index(j, k)];
        int gik = c.g[nv.edge_index(i, k)];
        if (cm.g0.mul(gij, gjk) != cm.g0.mul(cm.d[c.h[t]], gik))
            bad.push_back("triangle " + triple_str(i, j, k) + ": g_ij g_jk != d(h_ijk) g_ik");
    }
    for (const auto& te : nv.tetrahedra) {
        int i = te[0], j = te[1], k = te[2], l = te[3];
        int hijk = c.h[nv.triangle_index(i, j, k)];
        int hikl = c.h[nv.triangle_index(i, k, l)];
        int hjkl = c.h[nv.triangle_index(j, k, l)];
        int hijl = c.h[nv.triangle_index(i, j, l)];
        int gij = c.g[nv.edge_index(i, j)];
        int lhs = cm.gm1.mul(hijk, hikl);
        int rhs = cm.gm1.mul(cm.action(gij, hjkl), hijl);
        if (lhs != rhs)
            bad.push_back("tetrahedron (" + std::to_string(i) + "," + std::to_string(j) + "," +
                          std::to_string(k) + "," + std::to_string(l) +
                          "): h_ijk h_ikl != (g_ij . h_jkl) h_ijl");
    }
    return bad;
}

ZeroCochain act0(const CrossedModule& cm, const Nerve& nv, const Witness0& w,
                 const ZeroCochain& c) {
    ZeroCochain out = c;
    for (int v = 0; v < nv.n_vertices; ++v) out.g[v] = cm.g0.mul(cm.d[w.k[v]], c.g[v]);
    for (std::size_t e = 0; e < nv.edges.size(); ++e) {
        int i = nv.edges[e][0], j = nv.edges[e][1];
        out.h[e] = cm.gm1.mul(cm.gm1.mul(w.k[i], c.h[e]), cm.gm1.inv(w.k[j]));
    }
    return out;
}

OneCochain act1(const CrossedModule& cm, const Nerve& nv, const Witness1& w,
                const OneCochain& c) {
    OneCochain out = c;
    for (std::size_t e = 0; e < nv.edges.size(); ++e) {
        int i = nv.edges[e][0], j = nv.edges[e][1];
        int t = cm.g0.mul(cm.g0.mul(w.l[i], c.g[e]), cm.g0.inv(w.l[j]));
        out.g[e] = cm.g0.mul(cm.d[w.k[e]], t);
    }
    for (std::size_t t = 0; t < nv.triangles.size(); ++t) {
        const auto& tr = nv.triangles[t];
        int i = tr[0], j = tr[1], k = tr[2];
        int eij = nv.edge_index(i, j);
        int ejk = nv.edge_index(j, k);
        int eik = nv.edge_index(i, k);
        int r = cm.action(out.g[eij], w.k[ejk]);
        r = cm.gm1.mul(r, w.k[eij]);
        r = cm.gm1.mul(r, cm.action(w.l[i], c.h[t]));
        r = cm.gm1.mul(r, cm.gm1.inv(w.k[eik]));
        out.h[t] = r;
    }
    return out;
}

Witness0 compose_witness0(const CrossedModule& cm, const Nerve& nv, const Witness0& w2,
                          const Witness0& w1) {
    Witness0 out;
    out.k.resize(nv.n_vertices);
    for (int v = 0; v < nv.n_vertices; ++v) out.k[v] = cm.gm1.mul(w2.k[v], w1.k[v]);
    return out;
}

Witness1 compose_witness1(const CrossedModule& cm, const Nerve& nv, const Witness1& w2,
                          const Witness1& w1) {
    Witness1 out;
    out.l.resize(nv.n_vertices);
    out.k.resize(nv.edges.size());
    for (int v = 0; v < nv.n_vertices; ++v) out.l[v] = cm.g0.mul(w2.l[v], w1.l[v]);
    for (std::size_t e = 0; e < nv.edges.size(); ++e) {
        int i = nv.edges[e][0];
        out.k[e] = cm.gm1.mul(w2.k[e], cm.action(w2.l[i], w1.k[e]));
    }
    return out;
}

std::string search_status_str(SearchStatus s) {
    switch (s) {
    case SearchStatus::Equivalent: return "equivalent";
    case SearchStatus::NotEquivalent: return "not_equivalent";
    case SearchStatus::BudgetExceeded: return "budget_exceeded";
    }
    return "unknown";
}

Equiv0Result equiv0(const CrossedModule& cm, const Nerve& nv, const ZeroCochain& a,
                    const ZeroCochain& b) {
    require_cocycle(check0(cm, nv, a), "first cocycle");
    require_cocycle(check0(cm, nv, b), "second cocycle");

    const int V = nv.n_vertices;
    auto fibers = d_fibers(cm);
    auto comp = nv.components();

    // adjacency with edge indices
    std::vector<std::vector<std::pair<int, int>>> adj(V);
    for (std::size_t e = 0; e < nv.edges.size(); ++e) {
        adj[nv.edges[e][0]].push_back({nv.edges[e][1], static_cast<int>(e)});
        adj[nv.edges[e][1]].push_back({nv.edges[e][0], static_cast<int>(e)});
    }

    Equiv0Result res;
    std::vector<int> k(V, -1);
    int ncomp = 1 + *std::max_element(comp.begin(), comp.end());
    for (int c = 0; c < ncomp; ++c) {
        int root = -1;
        std::vector<int> members;
        for (int v = 0; v < V; ++v)
            if (comp[v] == c) {
                if (root < 0) root = v;
                members.push_back(v);
            }
        // spanning tree of the component, BFS from root
        struct Step {
            int child, parent, edge;
        };
        std::vector<Step> order;
        std::vector<char> seen(V, 0);
        seen[root] = 1;
        std::vector<int> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (auto [w, e] : adj[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    order.push_back({w, v, e});
                    queue.push_back(w);
                }
        }

        int target = cm.g0.mul(b.g[root], cm.g0.inv(a.g[root]));
        bool found = false;
        for (int cand : fibers[target]) {
            ++res.nodes;
            k[root] = cand;
            for (const auto& st : order) {
                int e = st.edge;
                int i = nv.edges[e][0], j = nv.edges[e][1];
                if (st.parent == i) // k_j = h'_ij^{-1} k_i h_ij
                    k[j] = cm.gm1.mul(cm.gm1.mul(cm.gm1.inv(b.h[e]), k[i]), a.h[e]);
                else // k_i = h'_ij k_j h_ij^{-1}
                    k[i] = cm.gm1.mul(cm.gm1.mul(b.h[e], k[j]), cm.gm1.inv(a.h[e]));
            }
            bool ok = true;
            for (int v : members)
                if (b.g[v] != cm.g0.mul(cm.d[k[v]], a.g[v])) {
                    ok = false;
                    break;
                }
            if (ok)
                for (std::size_t e = 0; e < nv.edges.size() && ok; ++e) {
                    int i = nv.edges[e][0], j = nv.edges[e][1];
                    if (comp[i] != c) continue;
                    if (b.h[e] != cm.gm1.mul(cm.gm1.mul(k[i], a.h[e]), cm.gm1.inv(k[j])))
                        ok = false;
                }
            if (ok) {
                found = true;
                break;
            }
        }
        if (!found) {
            res.status = SearchStatus::NotEquivalent;
            return res;
        }
    }
    res.status = SearchStatus::Equivalent;
    res.witness.k = k;
    return res;
}

namespace {

struct Equiv1Search {
    const CrossedModule& cm;
    const Nerve& nv;
    const OneCochain& a;
    const OneCochain& b;
    long long budget;
    long long nodes = 0;
    bool exceeded = false;

    std::vector<std::vector<int>> fibers;
    std::vector<int> lreps; // representatives of im(d)\G^0
    std::vector<std::vector<int>> tri_close;
    std::vector<int> l, k;

    Equiv1Search(const CrossedModule& cm_, const Nerve& nv_, const OneCochain& a_,
                 const OneCochain& b_, long long budget_)
        : cm(cm_), nv(nv_), a(a_), b(b_), budget(budget_) {
        fibers = d_fibers(cm);
        std::vector<char> seen(cm.g0.size(), 0);
        for (int g = 0; g < cm.g0.size(); ++g) {
            if (seen[g]) continue;
            lreps.push_back(g);
            for (int h = 0; h < cm.gm1.size(); ++h) seen[cm.g0.mul(cm.d[h], g)] = 1;
        }
        tri_close = triangles_closing_at_edge(nv);
        l.assign(nv.n_vertices, 0);
        k.assign(nv.edges.size(), 0);
    }

    bool spend() {
        if (++nodes > budget) {
            exceeded = true;
            return false;
        }
        return true;
    }

    bool tri_ok(int t) const {
        const auto& tr = nv.triangles[t];
        int i = tr[0], j = tr[1], kk = tr[2];
        int eij = nv.edge_index(i, j);
        int ejk = nv.edge_index(j, kk);
        int eik = nv.edge_index(i, kk);
        int r = cm.action(b.g[eij], k[ejk]);
        r = cm.gm1.mul(r, k[eij]);
        r = cm.gm1.mul(r, cm.action(l[i], a.h[t]));
        r = cm.gm1.mul(r, cm.gm1.inv(k[eik]));
        return r == b.h[t];
    }

    bool assign_edge(std::size_t e) {
        if (e == nv.edges.size()) return true;
        int i = nv.edges[e][0], j = nv.edges[e][1];
        // d(k_e) = g'_ij l_j g_ij^{-1} l_i^{-1}
        int t = cm.g0.mul(b.g[e], l[j]);
        t = cm.g0.mul(t, cm.g0.inv(a.g[e]));
        t = cm.g0.mul(t, cm.g0.inv(l[i]));
        for (int cand : fibers[t]) {
            if (!spend()) return false;
            k[e] = cand;
            bool ok = true;
            for (int tri : tri_close[e])
                if (!tri_ok(tri)) {
                    ok = false;
                    break;
                }
            if (ok && assign_edge(e + 1)) return true;
            if (exceeded) return false;
        }
        return false;
    }

    bool assign_vertex(int v) {
        if (v == nv.n_vertices) return assign_edge(0);
        for (int cand : lreps) {
            if (!spend()) return false;
            l[v] = cand;
            if (assign_vertex(v + 1)) return true;
            if (exceeded) return false;
        }
        return false;
    }
};

} // namespace

Equiv1Result equiv1(const CrossedModule& cm, const Nerve& nv, const OneCochain& a,
                    const OneCochain& b, long long budget) {
    require_cocycle(check1(cm, nv, a), "first cocycle");
    require_cocycle(check1(cm, nv, b), "second cocycle");

    Equiv1Search s(cm, nv, a, b, budget);
    Equiv1Result res;
    if (s.assign_vertex(0)) {
        res.status = SearchStatus::Equivalent;
        res.witness.l = s.l;
        res.witness.k = s.k;
    } else {
        res.status = s.exceeded ? SearchStatus::BudgetExceeded : SearchStatus::NotEquivalent;
    }
    res.nodes = s.nodes;
    return res;
}

namespace {

// shared enumeration + orbit machinery for h0/h1
template <typename Cochain>
struct Orbits {
    std::vector<int> class_of;
    std::vector<int> reps;
};

template <typename Cochain, typename Neighbors>
Orbits<Cochain> orbit_partition(const std::vector<Cochain>& cocycles, bool complete,
                                Neighbors&& neighbors) {
    std::map<Cochain, int> index;
    for (std::size_t i = 0; i < cocycles.size(); ++i) index[cocycles[i]] = static_cast<int>(i);
    Orbits<Cochain> out;
    out.class_of.assign(cocycles.size(), -1);
    for (std::size_t i = 0; i < cocycles.size(); ++i) {
        if (out.class_of[i] != -1) continue;
        int c = static_cast<int>(out.reps.size());
        out.reps.push_back(static_cast<int>(i));
        out.class_of[i] = c;
        std::vector<int> queue{static_cast<int>(i)};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            neighbors(cocycles[queue[qi]], [&](const Cochain& nb) {
                auto it = index.find(nb);
                if (it == index.end()) {
                    if (complete)
                        throw std::logic_error("gauge action left the enumerated cocycle set");
                    return;
                }
                if (out.class_of[it->second] == -1) {
                    out.class_of[it->second] = c;
                    queue.push_back(it->second);
                }
            });
        }
    }
    return out;
}

template <typename Cochain, typename Classification>
void attach_group(const CrossedModule& cm, const std::vector<Cochain>& cocycles,
                  Classification& out) {
    if (!out.complete || cocycles.empty()) return;
    if (!cm.gm1.is_abelian() || !cm.g0.is_abelian() || !action_trivial(cm)) return;
    std::map<Cochain, int> index;
    for (std::size_t i = 0; i < cocycles.size(); ++i) index[cocycles[i]] = static_cast<int>(i);
    const int n = static_cast<int>(out.reps.size());
    std::vector<std::vector<int>> table(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const Cochain& cx = cocycles[out.reps[x]];
            const Cochain& cy = cocycles[out.reps[y]];
            Cochain p = cx;
            for (std::size_t e = 0; e < p.g.size(); ++e) p.g[e] = cm.g0.mul(cx.g[e], cy.g[e]);
            for (std::size_t t = 0; t < p.h.size(); ++t) p.h[t] = cm.gm1.mul(cx.h[t], cy.h[t]);
            auto it = index.find(p);
            if (it == index.end())
                throw std::logic_error("cocycle product left the enumerated set");
            table[x][y] = out.class_of[it->second];
        }
    out.has_group = true;
    out.invariant_factors = abelian_invariant_factors(table);
}

} // namespace

ZeroClassification h0(const CrossedModule& cm, const Nerve& nv, long long budget) {
    ZeroClassification out;
    const int V = nv.n_vertices;
    const std::size_t E = nv.edges.size();
    auto fibers = d_fibers(cm);
    auto tri_close = triangles_closing_at_edge(nv);

    std::vector<int> g(V, 0), h(E, 0);
    struct Enum {
        const CrossedModule& cm;
        const Nerve& nv;
        ZeroClassification& out;
        std::vector<int>& g;
        std::vector<int>& h;
        const std::vector<std::vector<int>>& fibers;
        const std::vector<std::vector<int>>& tri_close;
        long long budget;

        bool spend() {
            if (++out.nodes > budget) {
                out.complete = false;
                return false;
            }
            return true;
        }
        bool tri_ok(int t) const {
            const auto& tr = nv.triangles[t];
            int hij = h[nv.edge_index(tr[0], tr[1])];
            int hjk = h[nv.edge_index(tr[1], tr[2])];
            int hik = h[nv.edge_index(tr[0], tr[2])];
            return cm.gm1.mul(hij, hjk) == hik;
        }
        void edges(std::size_t e) {
            if (!out.complete) return;
            if (e == nv.edges.size()) {
                out.cocycles.push_back(ZeroCochain{g, h});
                return;
            }
            int i = nv.edges[e][0], j = nv.edges[e][1];
            int target = cm.g0.mul(g[i], cm.g0.inv(g[j]));
            for (int cand : fibers[target]) {
                if (!spend()) return;
                h[e] = cand;
                bool ok = true;
                for (int tri : tri_close[e])
                    if (!tri_ok(tri)) {
                        ok = false;
                        break;
                    }
                if (ok) edges(e + 1);
                if (!out.complete) return;
            }
        }
        void vertices(int v) {
            if (!out.complete) return;
            if (v == nv.n_vertices) {
                edges(0);
                return;
            }
            for (int cand = 0; cand < cm.g0.size(); ++cand) {
                if (!spend()) return;
                g[v] = cand;
                vertices(v + 1);
                if (!out.complete) return;
            }
        }
    } en{cm, nv, out, g, h, fibers, tri_close, budget};
    en.vertices(0);

    auto orbits = orbit_partition(out.cocycles, out.complete, [&](const ZeroCochain& c, auto&& emit) {
        Witness0 w;
        w.k.assign(V, 0);
        for (int v = 0; v < V; ++v) {
            for (int m = 1; m < cm.gm1.size(); ++m) {
                w.k[v] = m;
                emit(act0(cm, nv, w, c));
            }
            w.k[v] = 0;
        }
    });
    out.class_of = std::move(orbits.class_of);
    out.reps = std::move(orbits.reps);
    out.trivial_class = out.cocycles.empty() ? -1 : out.class_of[0];
    attach_group(cm, out.cocycles, out);
    return out;
}

OneClassification h1(const CrossedModule& cm, const Nerve& nv, long long budget) {
    OneClassification out;
    const int V = nv.n_vertices;
    const std::size_t E = nv.edges.size();
    const std::size_t T = nv.triangles.size();
    auto fibers = d_fibers(cm);
    auto tri_close = triangles_closing_at_edge(nv);
    auto tet_close = tetrahedra_closing_at_triangle(nv);

    std::vector<int> g(E, 0), h(T, 0);
    struct Enum {
        const CrossedModule& cm;
        const Nerve& nv;
        OneClassification& out;
        std::vector<int>& g;
        std::vector<int>& h;
        const std::vector<std::vector<int>>& fibers;
        const std::vector<std::vector<int>>& tri_close;
        const std::vector<std::vector<int>>& tet_close;
        long long budget;

        bool spend() {
            if (++out.nodes > budget) {
                out.complete = false;
                return false;
            }
            return true;
        }
        int tri_target(int t) const { // d(h_ijk) must equal g_ij g_jk g_ik^{-1}
            const auto& tr = nv.triangles[t];
            int gij = g[nv.edge_index(tr[0], tr[1])];
            int gjk = g[nv.edge_index(tr[1], tr[2])];
            int gik = g[nv.edge_index(tr[0], tr[2])];
            return cm.g0.mul(cm.g0.mul(gij, gjk), cm.g0.inv(gik));
        }
        bool tet_ok(int q) const {
            const auto& te = nv.tetrahedra[q];
            int i = te[0], j = te[1], k = te[2], l = te[3];
            int hijk = h[nv.triangle_index(i, j, k)];
            int hikl = h[nv.triangle_index(i, k, l)];
            int hjkl = h[nv.triangle_index(j, k, l)];
            int hijl = h[nv.triangle_index(i, j, l)];
            int gij = g[nv.edge_index(i, j)];
            return cm.gm1.mul(hijk, hikl) == cm.gm1.mul(cm.action(gij, hjkl), hijl);
        }
        void tris(std::size_t t) {
            if (!out.complete) return;
            if (t == nv.triangles.size()) {
                out.cocycles.push_back(OneCochain{g, h});
                return;
            }
            for (int cand : fibers[tri_target(static_cast<int>(t))]) {
                if (!spend()) return;
                h[t] = cand;
                bool ok = true;
                for (int q : tet_close[t])
                    if (!tet_ok(q)) {
                        ok = false;
                        break;
                    }
                if (ok) tris(t + 1);
                if (!out.complete) return;
            }
        }
        void edges(std::size_t e) {
            if (!out.complete) return;
            if (e == nv.edges.size()) {
                tris(0);
                return;
            }
            for (int cand = 0; cand < cm.g0.size(); ++cand) {
                if (!spend()) return;
                g[e] = cand;
                bool ok = true;
                for (int tri : tri_close[e]) // prune when the target misses im(d)
                    if (fibers[tri_target(tri)].empty()) {
                        ok = false;
                        break;
                    }
                if (ok) edges(e + 1);
                if (!out.complete) return;
            }
        }
    } en{cm, nv, out, g, h, fibers, tri_close, tet_close, budget};
    en.edges(0);

    auto orbits = orbit_partition(out.cocycles, out.complete, [&](const OneCochain& c, auto&& emit) {
        Witness1 w;
        w.l.assign(V, 0);
        w.k.assign(E, 0);
        for (int v = 0; v < V; ++v) {
            for (int m = 1; m < cm.g0.size(); ++m) {
                w.l[v] = m;
                emit(act1(cm, nv, w, c));
            }
            w.l[v] = 0;
        }
        for (std::size_t e = 0; e < E; ++e) {
            for (int m = 1; m < cm.gm1.size(); ++m) {
                w.k[e] = m;
                emit(act1(cm, nv, w, c));
            }
            w.k[e] = 0;
        }
    });
    out.class_of = std::move(orbits.class_of);
    out.reps = std::move(orbits.reps);
    out.trivial_class = out.cocycles.empty() ? -1 : out.class_of[0];
    attach_group(cm, out.cocycles, out);
    return out;
}

int find_cocycle(const std::vector<ZeroCochain>& list, const ZeroCochain& c) {
    auto it = std::lower_bound(list.begin(), list.end(), c);
    if (it == list.end() || !(*it == c)) return -1;
    return static_cast<int>(it - list.begin());
}

int find_cocycle(const std::vector<OneCochain>& list, const OneCochain& c) {
    auto it = std::lower_bound(list.begin(), list.end(), c);
    if (it == list.end() || !(*it == c)) return -1;
    return static_cast<int>(it - list.begin());
}

} // namespace wkb
