#pragma once

#include <string>
#include <vector>

#include "wkb/errors.hpp"

namespace wkb {

/* Finite group given by its multiplication table. Identity is element 0.
 * Element names are carried along for reports. */
struct FiniteGroup {
    std::string name;
    std::vector<std::vector<int>> table; // table[a][b] = a*b
    std::vector<std::string> names;

    int size() const { return static_cast<int>(table.size()); }
    int mul(int a, int b) const { return table[a][b]; }
    int inv(int a) const;
    int conj(int a, int b) const { return mul(mul(a, b), inv(a)); } // a b a^{-1}
    int pow(int a, long long k) const;

    bool is_abelian() const;
    std::vector<int> center() const;

    // violated table axioms; empty means valid
    std::vector<std::string> validate() const;
};

namespace groups {

FiniteGroup trivial();
FiniteGroup cyclic(int n);      // Z/n
FiniteGroup dihedral(int n);    // order 2n; dihedral(3) is S3
FiniteGroup symmetric3();
FiniteGroup quaternion8();
FiniteGroup klein4();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

} // namespace groups

// subgroup on the given (sorted, identity-containing) element subset
FiniteGroup subgroup(const FiniteGroup& g, const std::vector<int>& elems);

struct Quotient {
    FiniteGroup q;
    std::vector<int> proj; // g -> coset index
    std::vector<int> rep;  // coset index -> least element of the coset
};

// quotient by a central (hence normal) subgroup; cosets are numbered by their
// least member, so the identity coset gets index 0
Quotient quotient_by(const FiniteGroup& g, const std::vector<int>& normal_elems);

// fixture lookup: "Z<n>", "V4", "S3", "D4", "Q8"; throws ParseError
FiniteGroup group_fixture(const std::string& name);

// invariant factors d_1 | d_2 | ... of a finite abelian group given by a
// multiplication table (identity at 0); derived from order statistics
std::vector<long long> abelian_invariant_factors(const std::vector<std::vector<int>>& table);

} // namespace wkb
