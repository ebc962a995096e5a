#pragma once

#include <string>
#include <vector>

#include "wkb/half_form.hpp"
#include "wkb/nerve.hpp"

namespace wkb {

// Descent datum over a nerve: an invertible transition operator Q_ij per
// edge (symbols in the plain dx representation) and a *-unitary correction
// P_ijk per triangle, carried as a half-form operator with its chart density.
struct DescentDatum {
    int n = 1;
    Nerve nerve;
    std::vector<Symbol> q;           // per edge
    std::vector<HalfFormOperator> p; // per triangle
};

struct DescentCheck {
    std::string item;
    bool ok = false;
    std::string detail; // nonempty explanation on failure
};

struct DescentReport {
    bool ok = false;
    std::vector<DescentCheck> checks;
};

// Validates, itemized per simplex:
//  - Q_ij invertible (edges)
//  - P_ijk in W^{sqrt v,*} for its own density (triangles)
//  - Ad(Q_ij) Ad(Q_jk) = Ad(P_ijk) Ad(Q_ik) on the generators x_a, u_a tau
//    (triangles; P transported to density 1 first)
//  - P_ijk * P_ikl = Ad(Q_ij)(P_jkl) * P_ijl (tetrahedra)
DescentReport validate_descent(const DescentDatum& d);

// central defect per triangle: c_ijk = (Q_ij * Q_jk) * (P_ijk * Q_ik)^{-1}.
// Throws NonCentralDefect unless every defect is central and lies in k*.
std::vector<TauSeries> extract_class(const DescentDatum& d);

} // namespace wkb
