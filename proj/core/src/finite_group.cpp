#include "wkb/finite_group.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wkb {

int FiniteGroup::inv(int a) const {
    for (int b = 0; b < size(); ++b)
        if (mul(a, b) == 0 && mul(b, a) == 0) return b;
    throw Error("MalformedTables", "element " + std::to_string(a) + " has no inverse");
}

int FiniteGroup::pow(int a, long long k) const {
    int r = 0;
    int base = a;
    if (k < 0) {
        base = inv(a);
        k = -k;
    }
    for (long long i = 0; i < k; ++i) r = mul(r, base);
    return r;
}

bool FiniteGroup::is_abelian() const {
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b)
            if (mul(a, b) != mul(b, a)) return false;
    return true;
}

std::vector<int> FiniteGroup::center() const {
    std::vector<int> z;
    for (int a = 0; a < size(); ++a) {
        bool central = true;
        for (int b = 0; b < size() && central; ++b)
            if (mul(a, b) != mul(b, a)) central = false;
        if (central) z.push_back(a);
    }
    return z;
}

std::vector<std::string> FiniteGroup::validate() const {
    std::vector<std::string> bad;
    const int n = size();
    if (n == 0) {
        bad.push_back("empty table");
        return bad;
    }
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(table[a].size()) != n) {
            bad.push_back("row " + std::to_string(a) + " has wrong length");
            return bad;
        }
        for (int b = 0; b < n; ++b)
            if (table[a][b] < 0 || table[a][b] >= n) {
                bad.push_back("entry (" + std::to_string(a) + "," + std::to_string(b) +
                              ") out of range");
                return bad;
            }
    }
    for (int a = 0; a < n; ++a) {
        if (mul(0, a) != a || mul(a, 0) != a) {
            bad.push_back("element 0 is not a two-sided identity at " + std::to_string(a));
            break;
        }
    }
    for (int a = 0; a < n; ++a) {
        bool has = false;
        for (int b = 0; b < n; ++b)
            if (mul(a, b) == 0 && mul(b, a) == 0) has = true;
        if (!has) {
            bad.push_back("element " + std::to_string(a) + " has no two-sided inverse");
            break;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
                    bad.push_back("associativity fails at (" + std::to_string(a) + "," +
                                  std::to_string(b) + "," + std::to_string(c) + ")");
                    return bad;
                }
    return bad;
}

namespace groups {

FiniteGroup trivial() {
    FiniteGroup g;
    g.name = "1";
    g.table = {{0}};
    g.names = {"e"};
    return g;
}

FiniteGroup cyclic(int n) {
    if (n < 1) throw Error("ParseError", "cyclic group order must be positive");
    FiniteGroup g;
    g.name = "Z" + std::to_string(n);
    g.table.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
    for (int a = 0; a < n; ++a) g.names.push_back(std::to_string(a));
    return g;
}

FiniteGroup dihedral(int n) {
    if (n < 1) throw Error("ParseError", "dihedral parameter must be positive");
    // elements r^a s^b, index a + n*b; s r s = r^{-1}
    FiniteGroup g;
    g.name = "D" + std::to_string(n);
    const int m = 2 * n;
    g.table.assign(m, std::vector<int>(m));
    auto idx = [n](int a, int b) { return a + n * b; };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < n; ++c)
                for (int d = 0; d < 2; ++d) {
                    int rot = b == 0 ? (a + c) % n : ((a - c) % n + n) % n;
                    g.table[idx(a, b)][idx(c, d)] = idx(rot, b ^ d);
                }
    g.names.assign(m, "");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < 2; ++b)
            g.names[idx(a, b)] = (b == 0 ? "r" + std::to_string(a) : "sr" + std::to_string(a));
    return g;
}

FiniteGroup symmetric3() {
    FiniteGroup g = dihedral(3);
    g.name = "S3";
    return g;
}

FiniteGroup quaternion8() {
    // 0..7 = 1, -1, i, -i, j, -j, k, -k
    FiniteGroup g;
    g.name = "Q8";
    g.names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    auto enc = [](int sign, int axis) { // axis 0=1, 1=i, 2=j, 3=k
        return 2 * axis + (sign < 0 ? 1 : 0);
    };
    auto mulq = [&](int p, int q) {
        int sp = p % 2 == 0 ? 1 : -1, ap = p / 2;
        int sq = q % 2 == 0 ? 1 : -1, aq = q / 2;
        static const int axis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        // quaternion unit products: i*i=-1, i*j=k, j*k=i, k*i=j, j*i=-k, ...
        return enc(sp * sq * sgn[ap][aq], axis[ap][aq]);
    };
    g.table.assign(8, std::vector<int>(8));
    for (int p = 0; p < 8; ++p)
        for (int q = 0; q < 8; ++q) g.table[p][q] = mulq(p, q);
    return g;
}

FiniteGroup klein4() {
    FiniteGroup g = direct_product(cyclic(2), cyclic(2));
    g.name = "V4";
    g.names = {"e", "b", "a", "ab"};
    return g;
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    FiniteGroup g;
    g.name = a.name + "x" + b.name;
    const int n = a.size() * b.size();
    auto idx = [&](int x, int y) { return x * b.size() + y; };
    g.table.assign(n, std::vector<int>(n));
    for (int x1 = 0; x1 < a.size(); ++x1)
        for (int y1 = 0; y1 < b.size(); ++y1)
            for (int x2 = 0; x2 < a.size(); ++x2)
                for (int y2 = 0; y2 < b.size(); ++y2)
                    g.table[idx(x1, y1)][idx(x2, y2)] = idx(a.mul(x1, x2), b.mul(y1, y2));
    for (int x = 0; x < a.size(); ++x)
        for (int y = 0; y < b.size(); ++y)
            g.names.push_back("(" + a.names[x] + "," + b.names[y] + ")");
    return g;
}

} // namespace groups

FiniteGroup subgroup(const FiniteGroup& g, const std::vector<int>& elems) {
    std::vector<int> sorted(elems);
    std::sort(sorted.begin(), sorted.end());
    if (sorted.empty() || sorted[0] != 0)
        throw Error("MalformedTables", "subgroup must contain the identity");
    std::map<int, int> pos;
    for (std::size_t i = 0; i < sorted.size(); ++i) pos[sorted[i]] = static_cast<int>(i);
    FiniteGroup s;
    s.name = g.name + ".sub" + std::to_string(sorted.size());
    const int n = static_cast<int>(sorted.size());
    s.table.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int p = g.mul(sorted[i], sorted[j]);
            auto it = pos.find(p);
            if (it == pos.end())
                throw Error("MalformedTables", "subset is not closed under multiplication");
            s.table[i][j] = it->second;
        }
    for (int i = 0; i < n; ++i) s.names.push_back(g.names[sorted[i]]);
    return s;
}

Quotient quotient_by(const FiniteGroup& g, const std::vector<int>& normal_elems) {
    std::set<int> sub(normal_elems.begin(), normal_elems.end());
    if (!sub.count(0)) throw Error("MalformedTables", "normal subgroup must contain identity");
    std::vector<int> proj(g.size(), -1);
    std::vector<int> rep;
    for (int a = 0; a < g.size(); ++a) {
        if (proj[a] != -1) continue;
        const int c = static_cast<int>(rep.size());
        rep.push_back(a); // least member: scanning ascending
        for (int z : sub) {
            int m = g.mul(a, z);
            if (proj[m] != -1 && proj[m] != c)
                throw Error("MalformedTables", "cosets are not disjoint (subset not a subgroup?)");
            proj[m] = c;
        }
    }
    Quotient out;
    out.proj = std::move(proj);
    out.rep = std::move(rep);
    out.q.name = g.name + "/Z";
    const int n = static_cast<int>(out.rep.size());
    out.q.table.assign(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            out.q.table[i][j] = out.proj[g.mul(out.rep[i], out.rep[j])];
    for (int i = 0; i < n; ++i) out.q.names.push_back("[" + g.names[out.rep[i]] + "]");
    return out;
}

FiniteGroup group_fixture(const std::string& name) {
    if (name == "S3") return groups::symmetric3();
    if (name == "Q8") return groups::quaternion8();
    if (name == "V4") return groups::klein4();
    if (name == "D4") return groups::dihedral(4);
    if (name == "1") return groups::trivial();
    if (name.size() > 1 && name[0] == 'Z') {
        int n = 0;
        for (std::size_t i = 1; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9')
                throw Error("ParseError", "unknown group fixture '" + name + "'");
            n = n * 10 + (name[i] - '0');
        }
        return groups::cyclic(n);
    }
    throw Error("ParseError", "unknown group fixture '" + name + "'");
}

std::vector<long long> abelian_invariant_factors(const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) return {};
    auto mul = [&](int a, int b) { return table[a][b]; };
    auto powmod = [&](int a, long long k) {
        int r = 0;
        for (long long i = 0; i < k; ++i) r = mul(r, a);
        return r;
    };
    // primes dividing |G|
    std::vector<long long> primes;
    long long m = n;
    for (long long p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            primes.push_back(p);
            while (m % p == 0) m /= p;
        }
    if (m > 1) primes.push_back(m);

    // per-prime partition of cyclic factor exponents
    std::map<long long, std::vector<int>> parts;
    for (long long p : primes) {
        std::vector<long long> cnt; // cnt[j] = log_p #{x : x^{p^j} = e}
        cnt.push_back(0);
        long long pj = 1;
        while (true) {
            pj *= p;
            int c = 0;
            for (int x = 0; x < n; ++x)
                if (powmod(x, pj) == 0) ++c;
            long long lg = 0;
            long long t = c;
            while (t > 1) {
                t /= p;
                ++lg;
            }
            cnt.push_back(lg);
            if (cnt[cnt.size() - 1] == cnt[cnt.size() - 2]) break; // stabilized
        }
        std::vector<int>& ex = parts[p];
        for (std::size_t j = 1; j + 1 < cnt.size() + 1; ++j) {
            long long geq_j = cnt[j] - cnt[j - 1]; // factors with exponent >= j
            long long geq_j1 = j + 1 < cnt.size() ? cnt[j + 1] - cnt[j] : 0;
            for (long long t = 0; t < geq_j - geq_j1; ++t) ex.push_back(static_cast<int>(j));
        }
        std::sort(ex.rbegin(), ex.rend());
    }

    std::size_t len = 0;
    for (auto& [p, ex] : parts) len = std::max(len, ex.size());
    std::vector<long long> factors(len, 1);
    for (auto& [p, ex] : parts)
        for (std::size_t i = 0; i < ex.size(); ++i) {
            long long q = 1;
            for (int t = 0; t < ex[i]; ++t) q *= p;
            factors[i] *= q; // descending exponent -> aligned largest-first
        }
    std::sort(factors.begin(), factors.end()); // ascending divisibility d1 | d2 | ...
    return factors;
}

} // namespace wkb
