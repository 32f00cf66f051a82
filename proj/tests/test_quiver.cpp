#include <doctest.h>

#include <hhkit/quiver.hpp>

#include "helpers.hpp"

using namespace hhkit;

TEST_CASE("minimal relations") {
    // {a,b} sits inside {a,b,c}, so the longer one is redundant
    auto rels = minimal_relations({{0, 1}, {0, 1, 2}, {2, 0}});
    CHECK(rels == std::vector<std::vector<int>>{{0, 1}, {2, 0}});
    CHECK(minimal_relations({}).empty());
}

TEST_CASE("truncated cycle algebras") {
    Field Q = Field::Q();
    CHECK(make_truncated_cycle(Q, 2, 2)->dim == 8);
    CHECK(make_truncated_cycle(Q, 3, 1)->dim == 9);
    CHECK(make_truncated_cycle(Q, 2, 1)->dim == 4);
    make_truncated_cycle(Q, 3, 2)->check();
    CHECK_THROWS_AS(make_truncated_cycle(Q, 1, 2), Error);
    CHECK_THROWS_AS(make_truncated_cycle(Q, 2, 0), Error);
}

TEST_CASE("vertex criteria") {
    Field Q = Field::Q();
    auto T = fixtures::triangle(Q);
    // relation b·a has vertex 2 strictly inside
    CHECK(internal_vertex_criterion(T, 0));
    CHECK(!internal_vertex_criterion(T, 1));
    CHECK(internal_vertex_criterion(T, 2));
    // every vertex of the triangle lies on the circuit
    CHECK(!circuit_free_at(T.quiver, 0));

    auto A = fixtures::a2(Q);
    CHECK(circuit_free_at(A.quiver, 0));
    CHECK(circuit_free_at(A.quiver, 1));
}

TEST_CASE("quiver JSON parsing") {
    std::string text = R"({
      "field": "Q",
      "vertices": ["1", "2", "3"],
      "arrows": [
        {"name": "a", "src": "1", "tgt": "2"},
        {"name": "b", "src": "2", "tgt": "3"},
        {"name": "c", "src": "3", "tgt": "1"}
      ],
      "relations": [["a", "b"]]
    })";
    QuiverPresentation P = quiver_from_json(text);
    CHECK(P.f == Field::Q());
    CHECK(P.quiver.vertices.size() == 3);
    CHECK(P.quiver.arrows[0].src == 0);
    CHECK(P.quiver.arrows[0].tgt == 1);
    CHECK(P.relations == std::vector<std::vector<int>>{{0, 1}});
    CHECK(make_path_algebra_quotient(P)->dim == 9);

    // field as {"Fp": p}
    QuiverPresentation P2 = quiver_from_json(R"({"field":{"Fp":5},"vertices":["v"],"arrows":[]})");
    CHECK(P2.f == Field::Fp(5));
}

TEST_CASE("quiver JSON rejects bad input") {
    auto code = [](const std::string& text) {
        try {
            quiver_from_json(text);
        } catch (const Error& e) {
            return e.code();
        }
        return std::string("no error");
    };
    CHECK(code("{oops") == "InputError");
    CHECK(code(R"({"field":"Q","vertices":["1"],"arrows":[{"name":"a","src":"1","tgt":"2"}]})") ==
          "UnknownVertex");
    CHECK(code(R"({"field":"Q","vertices":["1"],"arrows":[],"relations":[["z"]]})") ==
          "MalformedPath");
    CHECK(code(R"({"field":"Q","vertices":["1"],
                   "arrows":[{"name":"a","src":"1","tgt":"1"},{"name":"a","src":"1","tgt":"1"}]})") ==
          "InputError");
    CHECK(code(R"({"field":"R","vertices":["1"],"arrows":[]})") == "BadParameters");
}

TEST_CASE("non composable relation is rejected") {
    Field Q = Field::Q();
    QuiverPresentation P = fixtures::a2(Q);
    P.relations = {{0, 0}};  // a then a again: tgt(a) != src(a)
    CHECK_THROWS_AS(make_path_algebra_quotient(P), Error);
}
