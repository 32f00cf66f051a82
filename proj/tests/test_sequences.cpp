#include <doctest.h>

#include <hhkit/sequences.hpp>

#include "helpers.hpp"

using namespace hhkit;

static Poly P(Field f, const std::string& s) { return Poly::parse(f, s); }

TEST_CASE("exactness consistency forces all the ranks") {
    {
        auto C = exactness_consistency({0, 1, 1, 0});
        CHECK(C.ok);
        CHECK(C.ranks == std::vector<long>{0, 1, 0});
    }
    {
        // a 1 dimensional term cannot inject into a zero one
        auto C = exactness_consistency({0, 1, 0, 1, 0});
        CHECK(!C.ok);
    }
    {
        auto C = exactness_consistency({0, 2, 3, 1, 0});
        CHECK(C.ok);
        CHECK(C.ranks == std::vector<long>{0, 2, 1, 0});
    }
    // the right end only has to vanish when the window is complete
    CHECK(exactness_consistency({0, 1, 2}, true).ok);
    CHECK(!exactness_consistency({0, 1, 2}, false).ok);
    // computed ranks must match the forced ones
    CHECK(exactness_consistency({0, 2, 3, 1, 0}, false, {0, 2, 1, 0}).ok);
    CHECK(!exactness_consistency({0, 2, 3, 1, 0}, false, {0, 2, 2, 0}).ok);
    CHECK(exactness_consistency({0, 2, 3, 1, 0}, false, {-1, -1, 1, -1}).ok);
}

TEST_CASE("coefficient sequence of the triangle at its good vertex") {
    Field Q = Field::Q();
    auto R = happel_report(fixtures::triangle(Q), 0, 4);

    CHECK(R.ideal.proved());
    CHECK(R.center_cap_ideal == 1);
    CHECK(R.h_A_I == std::vector<int>{1, 1, 0, 0, 0});
    CHECK(R.ext_side == std::vector<int>{1, 1, 0, 0, 0});
    CHECK(R.side_table_ok);
    CHECK(R.hh_B == std::vector<int>{1, 0, 0, 0, 0});
    CHECK(R.quotient_match_ok);

    // HH^p(A) sits in the middle slot of each degree block
    CHECK(R.seq.term_dims[1] == 2);
    CHECK(R.seq.term_dims[4] == 1);
    CHECK(R.seq.term_dims[7] == 0);
    CHECK(R.seq.composites_zero);
    CHECK(R.seq.consistency);
    CHECK(R.ok());
    CHECK(!R.text().empty());
}

TEST_CASE("coefficient sequence degenerates when e = 1") {
    Field Q = Field::Q();
    auto R = happel_report(fixtures::triangle(Q), -1, 3);
    CHECK(R.ok());
    CHECK(R.hh_B == std::vector<int>{0, 0, 0, 0});
    CHECK(R.seq.term_dims[1] == 2);  // HH^0(A)
    CHECK(R.seq.term_dims[4] == 1);  // HH^1(A)
    CHECK(R.seq.term_dims[7] == 0);
}

TEST_CASE("coefficient sequence refuses a non homological vertex") {
    Field Q = Field::Q();
    CHECK_THROWS_AS(happel_report(fixtures::triangle(Q), 1, 3), Error);
}

TEST_CASE("one point extensions ride on Ext over the base") {
    Field Q = Field::Q();

    // B = k, M = k: the extension is the path algebra of 1 -> 2
    AlgP k = make_monogenic(Q, P(Q, "X"));
    LeftModule triv{k, 1, {{Vec{Scalar::one(Q)}}}};
    auto R1 = one_point_happel(k, triv, 3);
    CHECK(R1.ok());
    CHECK(R1.hh_A == std::vector<int>{1, 0, 0, 0});
    CHECK(R1.hh_B == std::vector<int>{1, 0, 0, 0});

    // B = k x k, M the simple at the first factor: A2 plus an isolated point
    QuiverPresentation two;
    two.f = Q;
    two.quiver.vertices = {"1", "2"};
    AlgP kk = make_path_algebra_quotient(two);
    LeftModule simple{kk, 1, {{Vec{Scalar::one(Q)}}, {Vec{Scalar::zero(Q)}}}};
    auto R2 = one_point_happel(kk, simple, 3);
    CHECK(R2.ok());
    CHECK(R2.hh_A == std::vector<int>{2, 0, 0, 0});

    // B = k, M = k^2: the Kronecker quiver, with outer derivations in degree 1
    LeftModule k2{k, 2,
                  {{Vec{Scalar::one(Q), Scalar::zero(Q)}, Vec{Scalar::zero(Q), Scalar::one(Q)}}}};
    auto R3 = one_point_happel(k, k2, 3);
    CHECK(R3.ok());
    CHECK(R3.hh_A == std::vector<int>{1, 3, 0, 0});
    CHECK(R3.ext_B == std::vector<int>{4, 0, 0, 0});
}

TEST_CASE("five term sequence of a square zero kernel") {
    Field Q = Field::Q();
    AlgP A = make_monogenic(Q, P(Q, "X^4"));
    Subspace I = ideal_closure(*A, {A->basis_vec(2)});
    AlgebraMap phi = quotient_algebra(A, I, "B");
    CHECK(phi.dst->dim == 2);

    auto R = five_term_report(phi, I, regular_bimodule(phi.dst));
    CHECK(R.seq.term_dims == std::vector<long>{1, 2, 2, 1, 2});
    CHECK(R.seq.map_ranks == std::vector<long>{1, 1, 1, 0});
    CHECK(R.inner_derivations_die);
    CHECK(R.ok());

    // default coefficients are the regular bimodule of the quotient
    auto R2 = five_term_report(phi, I);
    CHECK(R2.seq.term_dims == R.seq.term_dims);
    CHECK(R2.ok());
}

TEST_CASE("five term sequence over an idempotent kernel") {
    Field Q = Field::Q();
    AlgP T = make_path_algebra_quotient(fixtures::triangle(Q));
    Subspace I = idempotent_ideal(*T, T->basis_vec(0));
    AlgebraMap phi = quotient_algebra(T, I, "B");
    auto R = five_term_report(phi, I);
    // I/I^2 = 0 kills the whole obstruction term
    CHECK(R.seq.term_dims[2] == 0);
    CHECK(R.ok());
}

TEST_CASE("long coefficient sequence for a flat ideal") {
    Field Q = Field::Q();

    auto S = flat_ideal_report(fixtures::triangle(Q), 0, 3);
    CHECK(S.ok());
    CHECK(S.truncated);

    auto S2 = flat_ideal_report(fixtures::a2(Q), 0, 3);
    CHECK(S2.ok());

    // vertex -1 means I = 0: restriction is an isomorphism in every degree
    auto S3 = flat_ideal_report(fixtures::triangle(Q), -1, 3);
    CHECK(S3.ok());

    // the middle vertex of the triangle has a non flat corner
    CHECK_THROWS_AS(flat_ideal_report(fixtures::triangle(Q), 1, 3), Error);
}

TEST_CASE("incidence cohomology against the nerve, relative case included") {
    Field Q = Field::Q();
    Poset X = fixtures::circle_poset();

    auto R = pair_report(Q, X, {0, 1}, 3);
    CHECK(R.h_rel == std::vector<int>{0, 2, 0, 0});
    CHECK(R.h_X == std::vector<int>{1, 1, 0, 0});
    CHECK(R.match_X);
    CHECK(R.match_Y);
    CHECK(R.euler_ok);
    CHECK(R.ok());

    // empty ideal: relative = absolute
    auto R0 = pair_report(Q, X, {}, 3);
    CHECK(R0.h_rel == R0.h_X);
    CHECK(R0.ok());

    // full ideal: relative cohomology dies
    auto RX = pair_report(Q, X, {0, 1, 2, 3}, 3);
    CHECK(RX.h_rel == std::vector<int>{0, 0, 0, 0});
    CHECK(RX.ok());

    // a chain rel its bottom: both spaces contractible
    auto RC = pair_report(Q, fixtures::chain(3), {0}, 3);
    CHECK(RC.h_rel == std::vector<int>{0, 0, 0, 0});
    CHECK(RC.ok());

    // {a, c} is not downward closed
    CHECK_THROWS_AS(pair_report(Q, X, {0, 2}, 3), Error);
}

TEST_CASE("truncated cycle cohomology is 2-periodic") {
    Field Q = Field::Q();

    auto C = crown_check(Q, 2, 2, 3);
    CHECK(C.dims == std::vector<int>{2, 2, 2, 2});
    CHECK(C.periodic_ok);
    CHECK(C.h0_h2_ok);
    CHECK(C.odd_cup_ok);
    CHECK(C.ok());
    CHECK(!C.text().empty());

    auto C2 = crown_check(Q, 3, 1, 3);
    CHECK(C2.dims == std::vector<int>{1, 1, 1, 1});
    CHECK(C2.ok());
}
