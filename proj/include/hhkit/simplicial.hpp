#pragma once

#include <vector>

#include "hhkit/scalar.hpp"

namespace hhkit {

// Abstract simplicial complex on numbered vertices; simplices stored by
// dimension as sorted vertex lists, closed under taking faces.
struct SimplicialComplex {
    int nverts = 0;
    std::vector<std::vector<std::vector<int>>> simplices;  // simplices[d] = list of (d+1)-subsets

    int dim() const { return static_cast<int>(simplices.size()) - 1; }
    long simplex_count() const;
    bool has_simplex(const std::vector<int>& s) const;  // s sorted
    // From maximal faces; closes under subsets.
    static SimplicialComplex from_facets(int nverts, const std::vector<std::vector<int>>& facets);
    bool is_subcomplex_of(const SimplicialComplex& K) const;
};

// Simplicial cohomology dims of |K| over the field, degrees 0..p_max.
std::vector<int> simplicial_cohomology(const SimplicialComplex& K, Field f, int p_max);
// Relative cohomology of the pair (|K|, |L|): cochains vanishing on L.
std::vector<int> simplicial_cohomology_pair(const SimplicialComplex& K, const SimplicialComplex& L, Field f,
                                            int p_max);

}  // namespace hhkit
