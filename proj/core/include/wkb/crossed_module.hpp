#pragma once

#include <string>
#include <vector>

#include "wkb/finite_group.hpp"

namespace wkb {

// Crossed module d : G^{-1} -> G^0 with a left action of G^0 on G^{-1} by
// automorphisms, satisfying
//   equivariance  d(g.h) = g d(h) g^{-1}
//   Peiffer       d(h').h = h' h h'^{-1}
struct CrossedModule {
    std::string name;
    FiniteGroup gm1; // G^{-1}
    FiniteGroup g0;  // G^0
    std::vector<int> d;               // d[h] in G^0
    std::vector<std::vector<int>> act; // act[g][h] in G^{-1}

    int boundary(int h) const { return d[h]; }
    int action(int g, int h) const { return act[g][h]; }

    // returns human-readable axiom violations; empty means valid
    std::vector<std::string> validate() const;
};

CrossedModule make_g0(const FiniteGroup& g);      // [1 -> G]
CrossedModule make_g1(const FiniteGroup& g);      // [G -> 1], requires G abelian
CrossedModule make_central(const FiniteGroup& g); // [G -> G/Z(G)]

// fixture names: "g0:<group>", "g1:<group>", "central:<group>"
CrossedModule cm_fixture(const std::string& name);

// Arrow g -> d(h) g in the one-object 2-group presented by the crossed module.
struct Arrow {
    int src = 0;
    int wit = 0; // h in G^{-1}
};

int arrow_dst(const CrossedModule& cm, const Arrow& a);
Arrow identity_arrow(int g);
Arrow inverse_arrow(const CrossedModule& cm, const Arrow& a);
// vertical composition b after a; throws NotComposable unless dst(a) == src(b)
Arrow compose(const CrossedModule& cm, const Arrow& b, const Arrow& a);
// horizontal (monoidal) composition: src = src(a) src(b)
Arrow tensor(const CrossedModule& cm, const Arrow& a, const Arrow& b);

} // namespace wkb
