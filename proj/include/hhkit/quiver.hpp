#pragma once

#include <string>
#include <vector>

#include "hhkit/algebra.hpp"

namespace hhkit {

struct Quiver {
    std::vector<std::string> vertices;
    struct Arrow {
        std::string name;
        int src = 0, tgt = 0;
    };
    std::vector<Arrow> arrows;

    int vertex_index(const std::string& label) const;  // UnknownVertex when absent
    int arrow_index(const std::string& name) const;    // MalformedPath when absent
};

// Relations are monomial: paths given as arrow sequences in traversal order
// (first traversed arrow first).  Products compose right to left, so the
// traversal sequence [a, b] denotes the algebra element b·a.
struct QuiverPresentation {
    Field f;
    Quiver quiver;
    std::vector<std::vector<int>> relations;
};

// Drops relations containing another relation as a contiguous subpath.
std::vector<std::vector<int>> minimal_relations(const std::vector<std::vector<int>>& rels);

// Path algebra modulo the monomial ideal of the relations.  Basis: all paths
// containing no relation as a contiguous subpath, vertices first, then by
// length.  Throws InfiniteDimensional when more than `cap` paths survive.
AlgP make_path_algebra_quotient(const QuiverPresentation& pres, int cap = 10000);

// Cyclic quiver on n vertices with all paths of length l = n*m as relations;
// dim = n*l.  The truncation length is a multiple of n so that conjugation by
// the sum of arrows acts trivially, giving the 2-periodic cohomology pattern.
AlgP make_truncated_cycle(Field f, int n, int m, int cap = 10000);

// True when no minimal relation has the vertex strictly inside it.
bool internal_vertex_criterion(const QuiverPresentation& pres, int vertex);
// True when no oriented circuit passes through the vertex.
bool circuit_free_at(const Quiver& q, int vertex);

QuiverPresentation quiver_from_json(const std::string& text);

}  // namespace hhkit
