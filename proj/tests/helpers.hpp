#pragma once

// Shared fixtures for the test suite: small quivers and posets that many
// tests poke at.

#include <hhkit/poset.hpp>
#include <hhkit/quiver.hpp>

namespace fixtures {

using namespace hhkit;

// Oriented triangle 1 -a-> 2 -b-> 3 -c-> 1 with the single relation b·a = 0.
// Dim 9.
inline QuiverPresentation triangle(Field f) {
    QuiverPresentation P;
    P.f = f;
    P.quiver.vertices = {"1", "2", "3"};
    P.quiver.arrows = {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}};
    P.relations = {{0, 1}};
    return P;
}

// 1 -a-> 2, no relations.  Dim 3.
inline QuiverPresentation a2(Field f) {
    QuiverPresentation P;
    P.f = f;
    P.quiver.vertices = {"1", "2"};
    P.quiver.arrows = {{"a", 0, 1}};
    return P;
}

// 1 -a-> 2 -b-> 3 with b·a = 0.  Dim 5.
inline QuiverPresentation a3_zero(Field f) {
    QuiverPresentation P;
    P.f = f;
    P.quiver.vertices = {"1", "2", "3"};
    P.quiver.arrows = {{"a", 0, 1}, {"b", 1, 2}};
    P.relations = {{0, 1}};
    return P;
}

// Two parallel covers: a,b < c,d.  |X| is a circle.
inline Poset circle_poset() {
    return Poset::from_covers({"a", "b", "c", "d"},
                              {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

inline Poset chain(int n) {
    std::vector<std::string> els;
    std::vector<std::pair<std::string, std::string>> cov;
    for (int i = 0; i < n; ++i) els.push_back("x" + std::to_string(i));
    for (int i = 0; i + 1 < n; ++i) cov.push_back({els[i], els[i + 1]});
    return Poset::from_covers(els, cov);
}

inline Poset antichain(int n) {
    std::vector<std::string> els;
    for (int i = 0; i < n; ++i) els.push_back("x" + std::to_string(i));
    return Poset::from_covers(els, {});
}

}  // namespace fixtures
