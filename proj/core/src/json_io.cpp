#include "wkb/json_io.hpp"

namespace wkb {

namespace {

const Json& need(const Json& j, const char* key) {
    if (!j.is_object())
        throw Error("ParseError", "expected an object with field '" + std::string(key) + "'");
    auto it = j.find(key);
    if (it == j.end())
        throw Error("ParseError", "missing field '" + std::string(key) + "'");
    return *it;
}

int as_int(const Json& j, const char* what) {
    if (!j.is_number_integer())
        throw Error("ParseError", std::string(what) + " must be an integer");
    return j.get<int>();
}

std::string as_str(const Json& j, const char* what) {
    if (!j.is_string())
        throw Error("ParseError", std::string(what) + " must be a string");
    return j.get<std::string>();
}

std::vector<int> int_vector(const Json& j, const char* what) {
    if (!j.is_array())
        throw Error("ParseError", std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& v : j) out.push_back(as_int(v, what));
    return out;
}

int key_to_int(const std::string& k) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(k, &pos);
        if (pos != k.size()) throw std::invalid_argument(k);
        return v;
    } catch (const std::exception&) {
        throw Error("ParseError", "bad integer key '" + k + "'");
    }
}

Exponents exponents_from_json(const Json& j, std::size_t n) {
    if (!j.is_array() || j.size() != n)
        throw Error("ParseError", "exponent vector must be an array of length n");
    Exponents e;
    for (const auto& v : j) {
        int x = as_int(v, "exponent");
        if (x < 0) throw Error("ParseError", "exponents must be nonnegative");
        e.push_back(static_cast<std::uint32_t>(x));
    }
    return e;
}

Json poly_terms_to_json(const Polynomial& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term;
        term["e"] = e;
        term["c"] = rational_str(c);
        arr.push_back(term);
    }
    return arr;
}

Polynomial poly_terms_from_json(const Json& j, std::size_t n) {
    if (!j.is_array()) throw Error("ParseError", "polynomial must be an array of terms");
    Polynomial p(n);
    for (const auto& term : j) {
        Exponents e = exponents_from_json(need(term, "e"), n);
        Rational c = rational_parse(as_str(need(term, "c"), "coefficient"));
        p += Polynomial::monomial(n, e, c);
    }
    return p;
}

// shared (top, depth) window encoding
template <typename T>
std::pair<Json, int> window_fields(const T& x) {
    if (x.is_exact()) {
        if (x.top().has_value()) return {Json(*x.top()), 0};
        return {Json(nullptr), 0};
    }
    int f = *x.floor();
    int top = x.top().value_or(f);
    return {Json(top), top - f + 1};
}

std::optional<int> window_floor(const Json& top, int depth) {
    if (depth < 0) throw Error("ParseError", "depth must be nonnegative");
    if (depth == 0) return std::nullopt;
    if (!top.is_number_integer())
        throw Error("ParseError", "a truncated element needs an integer top degree");
    return top.get<int>() - depth + 1;
}

} // namespace

Json to_json(const TauSeries& s) {
    auto [top, depth] = window_fields(s);
    Json coeffs = Json::object();
    for (const auto& [k, c] : s.coeffs()) coeffs[std::to_string(k)] = rational_str(c);
    return Json{{"top", top}, {"depth", depth}, {"coeffs", coeffs}};
}

TauSeries tau_series_from_json(const Json& j) {
    const Json& coeffs = need(j, "coeffs");
    if (!coeffs.is_object()) throw Error("ParseError", "coeffs must be an object");
    std::optional<int> floor =
        window_floor(need(j, "top"), as_int(need(j, "depth"), "depth"));
    std::map<int, Rational> c;
    for (auto it = coeffs.begin(); it != coeffs.end(); ++it)
        c[key_to_int(it.key())] = rational_parse(as_str(it.value(), "coefficient"));
    return TauSeries(std::move(c), floor);
}

Json to_json(const RationalFunction& f) {
    return Json{{"n", f.nvars()},
                {"num", poly_terms_to_json(f.num())},
                {"den", poly_terms_to_json(f.den())}};
}

RationalFunction rational_function_from_json(const Json& j) {
    int n = as_int(need(j, "n"), "n");
    if (n < 0) throw Error("ParseError", "n must be nonnegative");
    Polynomial num = poly_terms_from_json(need(j, "num"), static_cast<std::size_t>(n));
    Polynomial den = poly_terms_from_json(need(j, "den"), static_cast<std::size_t>(n));
    return RationalFunction(std::move(num), std::move(den));
}

namespace {

// a coefficient function as a flat list of u-monomials with rational-function coefficients
Json cf_monomials_to_json(const CoefficientFunction& f) {
    Json arr = Json::array();
    for (const auto& [e, rf] : f.terms()) {
        Json term;
        term["u_exps"] = e;
        term["num"] = poly_terms_to_json(rf.num());
        term["den"] = poly_terms_to_json(rf.den());
        arr.push_back(term);
    }
    return arr;
}

CoefficientFunction cf_from_monomials(const Json& j, std::size_t n) {
    if (!j.is_array()) throw Error("ParseError", "coefficient terms must be an array");
    CoefficientFunction f(n);
    for (const auto& term : j) {
        Exponents e = exponents_from_json(need(term, "u_exps"), n);
        Polynomial num = poly_terms_from_json(need(term, "num"), n);
        Polynomial den = poly_terms_from_json(need(term, "den"), n);
        f += CoefficientFunction::u_monomial(e, RationalFunction(std::move(num), std::move(den)));
    }
    return f;
}

} // namespace

Json to_json(const CoefficientFunction& f) {
    return Json{{"n", f.n()}, {"terms", cf_monomials_to_json(f)}};
}

CoefficientFunction coefficient_function_from_json(const Json& j) {
    int ni = as_int(need(j, "n"), "n");
    if (ni < 0) throw Error("ParseError", "n must be nonnegative");
    return cf_from_monomials(need(j, "terms"), static_cast<std::size_t>(ni));
}

Json to_json(const Symbol& p) {
    auto [top, depth] = window_fields(p);
    Json terms = Json::object();
    for (const auto& [k, f] : p.terms()) terms[std::to_string(k)] = cf_monomials_to_json(f);
    return Json{{"n", p.n()}, {"order", top}, {"depth", depth}, {"terms", terms}};
}

Symbol symbol_from_json(const Json& j) {
    int ni = as_int(need(j, "n"), "n");
    if (ni < 0) throw Error("ParseError", "n must be nonnegative");
    std::size_t n = static_cast<std::size_t>(ni);
    std::optional<int> floor =
        window_floor(need(j, "order"), as_int(need(j, "depth"), "depth"));
    const Json& terms = need(j, "terms");
    if (!terms.is_object()) throw Error("ParseError", "terms must be an object");
    std::map<int, CoefficientFunction> t;
    for (auto it = terms.begin(); it != terms.end(); ++it)
        t.emplace(key_to_int(it.key()), cf_from_monomials(it.value(), n));
    return Symbol(n, std::move(t), floor);
}

Json to_json(const HalfFormOperator& h) {
    return Json{{"g", to_json(h.g)}, {"P", to_json(h.P)}};
}

HalfFormOperator half_form_from_json(const Json& j) {
    return HalfFormOperator(rational_function_from_json(need(j, "g")),
                            symbol_from_json(need(j, "P")));
}

Json to_json(const FiniteGroup& g) {
    return Json{{"name", g.name}, {"size", g.size()}, {"table", g.table}, {"names", g.names}};
}

FiniteGroup group_from_json(const Json& j) {
    FiniteGroup g;
    g.name = j.contains("name") ? as_str(j.at("name"), "name") : "";
    const Json& table = need(j, "table");
    if (!table.is_array()) throw Error("ParseError", "table must be an array of rows");
    for (const auto& row : table) g.table.push_back(int_vector(row, "table row"));
    if (j.contains("names")) {
        for (const auto& s : need(j, "names")) g.names.push_back(as_str(s, "element name"));
    } else {
        for (int i = 0; i < g.size(); ++i) g.names.push_back(std::to_string(i));
    }
    if (static_cast<int>(g.names.size()) != g.size())
        throw Error("ParseError", "names must match the group size");
    if (j.contains("size") && as_int(j.at("size"), "size") != g.size())
        throw Error("ParseError", "size does not match the table");
    auto bad = g.validate();
    if (!bad.empty()) throw Error("MalformedTables", g.name + ": " + bad.front());
    return g;
}

Json to_json(const CrossedModule& cm) {
    return Json{{"name", cm.name},
                {"Gm1", to_json(cm.gm1)},
                {"G0", to_json(cm.g0)},
                {"d", cm.d},
                {"act", cm.act}};
}

CrossedModule crossed_module_from_json(const Json& j) {
    CrossedModule cm;
    cm.name = j.contains("name") ? as_str(j.at("name"), "name") : "";
    cm.gm1 = group_from_json(need(j, "Gm1"));
    cm.g0 = group_from_json(need(j, "G0"));
    cm.d = int_vector(need(j, "d"), "d");
    const Json& act = need(j, "act");
    if (!act.is_array()) throw Error("ParseError", "act must be an array of rows");
    for (const auto& row : act) cm.act.push_back(int_vector(row, "act row"));
    auto bad = cm.validate();
    if (!bad.empty()) throw Error("MalformedTables", cm.name + ": " + bad.front());
    return cm;
}

Json to_json(const Nerve& nv) {
    Json edges = Json::array();
    for (const auto& e : nv.edges) edges.push_back(Json{e[0], e[1]});
    Json triangles = Json::array();
    for (const auto& t : nv.triangles) triangles.push_back(Json{t[0], t[1], t[2]});
    Json tetrahedra = Json::array();
    for (const auto& t : nv.tetrahedra) tetrahedra.push_back(Json{t[0], t[1], t[2], t[3]});
    return Json{{"name", nv.name},
                {"vertices", nv.n_vertices},
                {"edges", edges},
                {"triangles", triangles},
                {"tetrahedra", tetrahedra}};
}

Nerve nerve_from_json(const Json& j) {
    Nerve nv;
    nv.name = j.contains("name") ? as_str(j.at("name"), "name") : "";
    nv.n_vertices = as_int(need(j, "vertices"), "vertices");
    for (const auto& e : need(j, "edges")) {
        auto v = int_vector(e, "edge");
        if (v.size() != 2) throw Error("ParseError", "edges must be pairs");
        nv.edges.push_back({v[0], v[1]});
    }
    if (j.contains("triangles"))
        for (const auto& t : j.at("triangles")) {
            auto v = int_vector(t, "triangle");
            if (v.size() != 3) throw Error("ParseError", "triangles must be triples");
            nv.triangles.push_back({v[0], v[1], v[2]});
        }
    if (j.contains("tetrahedra"))
        for (const auto& t : j.at("tetrahedra")) {
            auto v = int_vector(t, "tetrahedron");
            if (v.size() != 4) throw Error("ParseError", "tetrahedra must be quadruples");
            nv.tetrahedra.push_back({v[0], v[1], v[2], v[3]});
        }
    auto bad = nv.validate();
    if (!bad.empty()) throw Error("ParseError", "nerve: " + bad.front());
    return nv;
}

namespace {

std::string edge_key(const std::array<int, 2>& e) {
    return std::to_string(e[0]) + "," + std::to_string(e[1]);
}

std::string tri_key(const std::array<int, 3>& t) {
    return std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
}

// simplex-keyed map of group element indices
template <typename Keys, typename Key>
Json indexed_to_json(const std::vector<int>& v, const Keys& keys, Key key) {
    Json out = Json::object();
    for (std::size_t i = 0; i < v.size(); ++i) out[key(keys[i])] = v[i];
    return out;
}

template <typename Keys, typename Key>
std::vector<int> indexed_from_json(const Json& j, const Keys& keys, Key key, const char* what) {
    if (!j.is_object())
        throw Error("ParseError", std::string(what) + " must be an object keyed by simplices");
    std::vector<int> out;
    out.reserve(keys.size());
    for (const auto& s : keys) {
        std::string k = key(s);
        auto it = j.find(k);
        if (it == j.end())
            throw Error("MissingAssignment",
                        std::string(what) + " has no value on simplex (" + k + ")");
        out.push_back(as_int(*it, what));
    }
    return out;
}

std::vector<std::string> vertex_keys(const Nerve& nv) {
    std::vector<std::string> out;
    for (int v = 0; v < nv.n_vertices; ++v) out.push_back(std::to_string(v));
    return out;
}

const auto kIdKey = [](const std::string& s) { return s; };

} // namespace

Json to_json(const ZeroCochain& c, const Nerve& nv) {
    return Json{{"g", indexed_to_json(c.g, vertex_keys(nv), kIdKey)},
                {"h", indexed_to_json(c.h, nv.edges, edge_key)}};
}

ZeroCochain zero_cochain_from_json(const Json& j, const Nerve& nv) {
    ZeroCochain c;
    c.g = indexed_from_json(need(j, "g"), vertex_keys(nv), kIdKey, "g");
    c.h = indexed_from_json(need(j, "h"), nv.edges, edge_key, "h");
    return c;
}

Json to_json(const OneCochain& c, const Nerve& nv) {
    return Json{{"g", indexed_to_json(c.g, nv.edges, edge_key)},
                {"h", indexed_to_json(c.h, nv.triangles, tri_key)}};
}

OneCochain one_cochain_from_json(const Json& j, const Nerve& nv) {
    OneCochain c;
    c.g = indexed_from_json(need(j, "g"), nv.edges, edge_key, "g");
    c.h = indexed_from_json(need(j, "h"), nv.triangles, tri_key, "h");
    return c;
}

Json to_json(const Witness0& w, const Nerve& nv) {
    return Json{{"k", indexed_to_json(w.k, vertex_keys(nv), kIdKey)}};
}

Witness0 witness0_from_json(const Json& j, const Nerve& nv) {
    Witness0 w;
    w.k = indexed_from_json(need(j, "k"), vertex_keys(nv), kIdKey, "k");
    return w;
}

Json to_json(const Witness1& w, const Nerve& nv) {
    return Json{{"l", indexed_to_json(w.l, vertex_keys(nv), kIdKey)},
                {"k", indexed_to_json(w.k, nv.edges, edge_key)}};
}

Witness1 witness1_from_json(const Json& j, const Nerve& nv) {
    Witness1 w;
    w.l = indexed_from_json(need(j, "l"), vertex_keys(nv), kIdKey, "l");
    w.k = indexed_from_json(need(j, "k"), nv.edges, edge_key, "k");
    return w;
}

Json to_json(const DescentDatum& d) {
    Json q = Json::object();
    for (std::size_t e = 0; e < d.nerve.edges.size(); ++e)
        q[edge_key(d.nerve.edges[e])] = to_json(d.q[e]);
    Json p = Json::object();
    for (std::size_t t = 0; t < d.nerve.triangles.size(); ++t)
        p[tri_key(d.nerve.triangles[t])] = to_json(d.p[t]);
    return Json{{"n", d.n}, {"nerve", to_json(d.nerve)}, {"Q", q}, {"P", p}};
}

DescentDatum descent_from_json(const Json& j) {
    DescentDatum d;
    d.n = as_int(need(j, "n"), "n");
    if (d.n < 1) throw Error("ParseError", "chart dimension must be positive");
    d.nerve = nerve_from_json(need(j, "nerve"));
    const Json& q = need(j, "Q");
    for (const auto& e : d.nerve.edges) {
        std::string key = edge_key(e);
        if (!q.contains(key))
            throw Error("ParseError", "missing transition operator Q[" + key + "]");
        d.q.push_back(symbol_from_json(q.at(key)));
    }
    const Json& p = need(j, "P");
    for (const auto& tr : d.nerve.triangles) {
        std::string key = tri_key(tr);
        if (!p.contains(key))
            throw Error("ParseError", "missing correction operator P[" + key + "]");
        d.p.push_back(half_form_from_json(p.at(key)));
    }
    return d;
}

} // namespace wkb
