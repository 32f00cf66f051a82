#pragma once

#include <string>
#include <vector>

#include "hhkit/algebra.hpp"
#include "hhkit/simplicial.hpp"

namespace hhkit {

struct Poset {
    std::vector<std::string> elements;
    std::vector<std::vector<bool>> leq;  // reflexive transitive closure

    int size() const { return static_cast<int>(elements.size()); }
    int index_of(const std::string& label) const;  // UnknownElement when absent
    // Builds the closure of cover pairs (a, b) meaning a < b; rejects cycles.
    static Poset from_covers(const std::vector<std::string>& elements,
                             const std::vector<std::pair<std::string, std::string>>& covers);
};

// Incidence algebra: basis f_{xy} for x <= y, f_{xy} f_{zw} = [y = z] f_{xw}.
AlgP make_incidence(Field f, const Poset& X);

bool is_order_ideal(const Poset& X, const std::vector<int>& Y);

// Poset of nonempty chains ordered by inclusion.
Poset chain_poset(const Poset& X);

// Simplices are the nonempty chains of X.
SimplicialComplex order_complex(const Poset& X);
// Order complex of the restriction to a subset, with vertex numbering of X.
SimplicialComplex order_complex_restricted(const Poset& X, const std::vector<int>& Y);

struct PosetJob {
    Field f;
    Poset poset;
};
PosetJob poset_from_json(const std::string& text);

}  // namespace hhkit
