#pragma once

#include <string>
#include <vector>

#include "wkb/crossed_module.hpp"
#include "wkb/nerve.hpp"

namespace wkb {

// Degree-0 cochain: g_i in G^0 per vertex, h_ij in G^{-1} per edge.
// Cocycle relations: g_i = d(h_ij) g_j on edges, h_ij h_jk = h_ik on triangles.
struct ZeroCochain {
    std::vector<int> g;
    std::vector<int> h;
    bool operator==(const ZeroCochain&) const = default;
    bool operator<(const ZeroCochain& o) const { return g != o.g ? g < o.g : h < o.h; }
};

// Degree-1 cochain: g_ij in G^0 per edge, h_ijk in G^{-1} per triangle.
// Cocycle relations: g_ij g_jk = d(h_ijk) g_ik on triangles,
//                    h_ijk h_ikl = (g_ij . h_jkl) h_ijl on tetrahedra.
struct OneCochain {
    std::vector<int> g;
    std::vector<int> h;
    bool operator==(const OneCochain&) const = default;
    bool operator<(const OneCochain& o) const { return g != o.g ? g < o.g : h < o.h; }
};

struct Witness0 {
    std::vector<int> k; // per vertex, in G^{-1}
};

struct Witness1 {
    std::vector<int> l; // per vertex, in G^0
    std::vector<int> k; // per edge, in G^{-1}
};

// cocycle violations; empty means the relations hold
std::vector<std::string> check0(const CrossedModule& cm, const Nerve& nv, const ZeroCochain& c);
std::vector<std::string> check1(const CrossedModule& cm, const Nerve& nv, const OneCochain& c);

// gauge actions
//   act0: g'_i = d(k_i) g_i,  h'_ij = k_i h_ij k_j^{-1}
//   act1: g'_ij = d(k_ij) l_i g_ij l_j^{-1}
//         h'_ijk = (g'_ij . k_jk) k_ij (l_i . h_ijk) k_ik^{-1}
ZeroCochain act0(const CrossedModule& cm, const Nerve& nv, const Witness0& w,
                 const ZeroCochain& c);
OneCochain act1(const CrossedModule& cm, const Nerve& nv, const Witness1& w, const OneCochain& c);

// w2 after w1, so act(w2, act(w1, c)) = act(compose(w2, w1), c)
Witness0 compose_witness0(const CrossedModule& cm, const Nerve& nv, const Witness0& w2,
                          const Witness0& w1);
Witness1 compose_witness1(const CrossedModule& cm, const Nerve& nv, const Witness1& w2,
                          const Witness1& w1);

enum class SearchStatus { Equivalent, NotEquivalent, BudgetExceeded };
std::string search_status_str(SearchStatus s);

struct Equiv0Result {
    SearchStatus status = SearchStatus::NotEquivalent;
    Witness0 witness;
    long long nodes = 0; // candidates examined
};

struct Equiv1Result {
    SearchStatus status = SearchStatus::NotEquivalent;
    Witness1 witness;
    long long nodes = 0;
};

// decide gauge equivalence of two cocycles and produce a witness
Equiv0Result equiv0(const CrossedModule& cm, const Nerve& nv, const ZeroCochain& a,
                    const ZeroCochain& b);
Equiv1Result equiv1(const CrossedModule& cm, const Nerve& nv, const OneCochain& a,
                    const OneCochain& b, long long budget = 1000000);

inline constexpr long long kDefaultBudget = 1000000;

// full classification: all cocycles in lexicographic order, partitioned into
// gauge classes; reps are lex-least members.  When the node budget runs out
// the enumeration stops and complete=false (classes then refer only to the
// cocycles that were found).
struct ZeroClassification {
    std::vector<ZeroCochain> cocycles;
    std::vector<int> class_of; // per cocycle
    std::vector<int> reps;     // per class: index of its lex-least cocycle
    int trivial_class = -1;    // class of the identity cocycle
    bool complete = true;
    long long nodes = 0;
    // when both groups are abelian and the action is trivial the classes form
    // an abelian group; invariant factors d_1 | d_2 | ... of that group
    bool has_group = false;
    std::vector<long long> invariant_factors;
};

struct OneClassification {
    std::vector<OneCochain> cocycles;
    std::vector<int> class_of;
    std::vector<int> reps;
    int trivial_class = -1;
    bool complete = true;
    long long nodes = 0;
    bool has_group = false;
    std::vector<long long> invariant_factors;
};

ZeroClassification h0(const CrossedModule& cm, const Nerve& nv,
                      long long budget = kDefaultBudget);
OneClassification h1(const CrossedModule& cm, const Nerve& nv, long long budget = kDefaultBudget);

// index of a cocycle in a classification's list, -1 when absent
int find_cocycle(const std::vector<ZeroCochain>& list, const ZeroCochain& c);
int find_cocycle(const std::vector<OneCochain>& list, const OneCochain& c);

} // namespace wkb
