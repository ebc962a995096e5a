#include "wkb/nerve.hpp"

#include <algorithm>

namespace wkb {

int Nerve::edge_index(int i, int j) const {
    std::array<int, 2> key{i, j};
    auto it = std::lower_bound(edges.begin(), edges.end(), key);
    if (it == edges.end() || *it != key) return -1;
    return static_cast<int>(it - edges.begin());
}

int Nerve::triangle_index(int i, int j, int k) const {
    std::array<int, 3> key{i, j, k};
    auto it = std::lower_bound(triangles.begin(), triangles.end(), key);
    if (it == triangles.end() || *it != key) return -1;
    return static_cast<int>(it - triangles.begin());
}

std::vector<std::string> Nerve::validate() const {
    std::vector<std::string> bad;
    if (n_vertices < 1) bad.push_back("nerve needs at least one vertex");

    auto tuple_str = [](const auto& t) {
        std::string s = "(";
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(t[i]);
        }
        return s + ")";
    };
    auto check_list = [&](const auto& list, const char* what) {
        for (std::size_t i = 0; i < list.size(); ++i) {
            const auto& t = list[i];
            for (std::size_t a = 0; a + 1 < t.size(); ++a)
                if (t[a] >= t[a + 1]) {
                    bad.push_back(std::string(what) + " " + tuple_str(t) +
                                  " is not strictly increasing");
                    break;
                }
            if (t.front() < 0 || t.back() >= n_vertices)
                bad.push_back(std::string(what) + " " + tuple_str(t) + " is out of range");
            if (i > 0 && !(list[i - 1] < t))
                bad.push_back(std::string(what) + " list is not sorted without duplicates at " +
                              tuple_str(t));
        }
    };
    check_list(edges, "edge");
    check_list(triangles, "triangle");
    check_list(tetrahedra, "tetrahedron");
    if (!bad.empty()) return bad;

    for (const auto& t : triangles) {
        int need[3][2] = {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}};
        for (auto& e : need)
            if (edge_index(e[0], e[1]) < 0)
                bad.push_back("triangle " + tuple_str(t) + " is missing edge (" +
                              std::to_string(e[0]) + "," + std::to_string(e[1]) + ")");
    }
    for (const auto& t : tetrahedra) {
        int need[4][3] = {{t[0], t[1], t[2]},
                          {t[0], t[1], t[3]},
                          {t[0], t[2], t[3]},
                          {t[1], t[2], t[3]}};
        for (auto& f : need)
            if (triangle_index(f[0], f[1], f[2]) < 0)
                bad.push_back("tetrahedron " + tuple_str(t) + " is missing triangle (" +
                              std::to_string(f[0]) + "," + std::to_string(f[1]) + "," +
                              std::to_string(f[2]) + ")");
    }
    return bad;
}

std::vector<int> Nerve::components() const {
    std::vector<int> comp(n_vertices, -1);
    int next = 0;
    for (int s = 0; s < n_vertices; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& e : edges) {
                int other = -1;
                if (e[0] == v) other = e[1];
                if (e[1] == v) other = e[0];
                if (other >= 0 && comp[other] == -1) {
                    comp[other] = next;
                    stack.push_back(other);
                }
            }
        }
        ++next;
    }
    return comp;
}

Nerve nerve_fixture(const std::string& name) {
    Nerve nv;
    nv.name = name;
    if (name == "point") {
        nv.n_vertices = 1;
        return nv;
    }
    if (name == "interval") {
        nv.n_vertices = 2;
        nv.edges = {{0, 1}};
        return nv;
    }
    if (name == "circle" || name == "disk") {
        nv.n_vertices = 3;
        nv.edges = {{0, 1}, {0, 2}, {1, 2}};
        if (name == "disk") nv.triangles = {{0, 1, 2}};
        return nv;
    }
    if (name == "sphere" || name == "ball") {
        nv.n_vertices = 4;
        nv.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
        nv.triangles = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
        if (name == "ball") nv.tetrahedra = {{0, 1, 2, 3}};
        return nv;
    }
    throw Error("ParseError", "unknown nerve fixture '" + name + "'");
}

} // namespace wkb
