#pragma once

#include <array>
#include <string>
#include <vector>

#include "wkb/errors.hpp"

namespace wkb {

// Nerve of a finite cover: simplices are strictly increasing index tuples,
// stored in lexicographic order.  Dimension <= 3 is enough for the fixtures.
struct Nerve {
    std::string name;
    int n_vertices = 0;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<int, 4>> tetrahedra;

    // indices into the stored lists; require i<j(<k); -1 when absent
    int edge_index(int i, int j) const;
    int triangle_index(int i, int j, int k) const;

    // returns human-readable problems; empty means valid
    std::vector<std::string> validate() const;

    // vertex partition into connected components of the 1-skeleton
    std::vector<int> components() const;
};

// fixture names: point, interval, circle, disk, sphere, ball
Nerve nerve_fixture(const std::string& name);

} // namespace wkb
