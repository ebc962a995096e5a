#pragma once

#include <string>
#include <vector>

#include "wkb/cech.hpp"
#include "wkb/crossed_module.hpp"
#include "wkb/finite_group.hpp"
#include "wkb/nerve.hpp"

namespace wkb {

// Classical Cech cohomology H^p(N; G) of a nerve with coefficients in a
// finite abelian group, p in {0,1,2}, by direct enumeration.  Cochains are
// tuples over the degree-p simplices in nerve order; differentials are
// written multiplicatively:
//   (d0 f)(ij)   = f_j f_i^{-1}
//   (d1 u)(ijk)  = u_jk u_ik^{-1} u_ij
//   (d2 w)(ijkl) = w_jkl w_ikl^{-1} w_ijl w_ijk^{-1}
struct ClassicalCohomology {
    int degree = 0;
    std::vector<std::vector<int>> cocycles;     // Z^p, lex order
    std::vector<std::vector<int>> coboundaries; // B^p, lex order
    std::vector<int> class_of;                  // per cocycle
    std::vector<int> reps;                      // per class: lex-least cocycle index
    std::vector<long long> invariant_factors;   // of H^p = Z^p / B^p
    int classes() const { return static_cast<int>(reps.size()); }
};

ClassicalCohomology classical_cohomology(const FiniteGroup& g, const Nerve& nv, int degree);

// class index of a given p-cocycle; throws InvalidCocycle when it is not one
int classical_class_of(const ClassicalCohomology& coh, const std::vector<int>& cocycle);

// Checks the degree-shift correspondences between crossed-module cohomology
// and classical cohomology with abelian coefficients:
//   h0(g0:G) = H^0   h1(g0:G) = H^1   h0(g1:G) = H^1   h1(g1:G) = H^2
// by constructing the class bijection explicitly in both directions.
// Throws MismatchDetected if any correspondence fails.
struct HyperComparison {
    struct Entry {
        std::string label;
        int classes_cm = 0;
        int classes_classical = 0;
        bool matched = false;
    };
    std::vector<Entry> entries;
    bool ok = false;
};

HyperComparison compare_hyper(const FiniteGroup& g, const Nerve& nv,
                              long long budget = 1000000);

// Central-defect bridge between cocycles for make_central(G) and classical
// 2-cocycles valued in the center Z(G).  ghat denotes the least-index lift
// of a coset of G/Z(G).
//   forward:  z_ijk = ghat_ik ghat_jk^{-1} ghat_ij^{-1} h_ijk
//   backward: g_ij = [e], h_ijk = z_ijk
struct BridgeVerification {
    int classes_cm = 0;
    int classes_classical = 0;
    bool forward_ok = false;  // well-defined + injective + surjective on classes
    bool backward_ok = false; // inverse on classes, forward(backward(z)) = z
    bool complete = true;     // enumeration finished within budget
    long long nodes = 0;
    bool ok() const { return forward_ok && backward_ok && complete; }
};

std::vector<int> bridge_forward(const FiniteGroup& g, const Nerve& nv, const OneCochain& c);
OneCochain bridge_backward(const FiniteGroup& g, const Nerve& nv, const std::vector<int>& z);
BridgeVerification bridge_verify(const FiniteGroup& g, const Nerve& nv,
                                 long long budget = 1000000);

} // namespace wkb
