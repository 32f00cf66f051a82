#include <doctest.h>

#include <hhkit/sparse.hpp>

#include <random>

using namespace hhkit;

TEST_CASE("rank and kernel on small examples") {
    Field Q = Field::Q();

    SparseMatrix id3(Q, 3, 3);
    for (int i = 0; i < 3; ++i) id3.add(i, i, Scalar::one(Q));
    CHECK(id3.rank() == 3);
    CHECK(id3.kernel_basis().empty());

    SparseMatrix zero(Q, 2, 4);
    CHECK(zero.rank() == 0);
    CHECK(zero.kernel_basis().size() == 4);

    Field F2 = Field::Fp(2);
    SparseMatrix ones(F2, 2, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) ones.add(i, j, Scalar::one(F2));
    CHECK(ones.rank() == 1);
    auto ker = ones.kernel_basis();
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] == Scalar::one(F2));
    CHECK(ker[0][1] == Scalar::one(F2));
}

TEST_CASE("kernel vectors are killed and rank + nullity = cols") {
    Field Q = Field::Q();
    std::mt19937 rng(777);
    std::uniform_int_distribution<int> val(-2, 2), dim(1, 8);
    for (int trial = 0; trial < 30; ++trial) {
        int r = dim(rng), c = dim(rng);
        SparseMatrix M(Q, r, c);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) {
                int v = val(rng);
                if (v != 0) M.add(i, j, Scalar(Q, v));
            }
        auto ker = M.kernel_basis();
        CHECK(M.rank() + static_cast<int>(ker.size()) == c);
        for (const auto& k : ker) CHECK(vec_is_zero(M.apply(k)));
    }
}

TEST_CASE("solve") {
    Field Q = Field::Q();
    SparseMatrix M(Q, 2, 2);
    M.add(0, 0, Scalar(Q, 1));
    M.add(0, 1, Scalar(Q, 1));
    M.add(1, 0, Scalar(Q, 1));
    M.add(1, 1, Scalar(Q, 1));

    Vec b = {Scalar(Q, 2), Scalar(Q, 2)};
    auto x = M.solve(b);
    REQUIRE(x.has_value());
    CHECK(M.apply(*x) == b);

    Vec bad = {Scalar(Q, 1), Scalar(Q, 2)};
    CHECK(!M.solve(bad).has_value());
}

TEST_CASE("apply and transpose agree with dense pairing") {
    // <M x, y> == <x, M^T y>
    Field F3 = Field::Fp(3);
    SparseMatrix M(F3, 3, 4);
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> val(0, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) {
            int v = val(rng);
            if (v) M.add(i, j, Scalar(F3, v));
        }
    Vec x = {Scalar(F3, 1), Scalar(F3, 2), Scalar(F3, 0), Scalar(F3, 1)};
    Vec y = {Scalar(F3, 2), Scalar(F3, 1), Scalar(F3, 1)};
    Vec Mx = M.apply(x), Mty = M.apply_transpose(y);
    Scalar lhs = Scalar::zero(F3), rhs = Scalar::zero(F3);
    for (int i = 0; i < 3; ++i) lhs += Mx[i] * y[i];
    for (int j = 0; j < 4; ++j) rhs += x[j] * Mty[j];
    CHECK(lhs == rhs);
}

TEST_CASE("echelon accumulator tracks coordinates") {
    Field Q = Field::Q();
    Echelon E(Q, 3, true);
    Vec v1 = {Scalar(Q, 1), Scalar(Q, 1), Scalar(Q, 0)};
    Vec v2 = {Scalar(Q, 0), Scalar(Q, 1), Scalar(Q, 1)};
    CHECK(E.add(v1));
    CHECK(E.add(v2));
    // v1 + v2 is already in the span
    Vec v3 = {Scalar(Q, 1), Scalar(Q, 2), Scalar(Q, 1)};
    CHECK(!E.add(v3));
    CHECK(E.rank() == 2);
    CHECK(E.contains(v3));

    auto coords = E.coordinates(v3);
    REQUIRE(coords.has_value());
    // reconstruct: coords are over the inserted vectors
    Vec rec = zero_vec(Q, 3);
    vec_axpy(rec, (*coords)[0], v1);
    vec_axpy(rec, (*coords)[1], v2);
    CHECK(rec == v3);

    Vec out = {Scalar(Q, 1), Scalar(Q, 0), Scalar(Q, 0)};
    CHECK(!E.contains(out));
    CHECK(!E.coordinates(out).has_value());
}
