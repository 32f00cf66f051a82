#include <doctest.h>

#include <hhkit/poly.hpp>

#include <random>

using namespace hhkit;

static Poly P(Field f, const std::string& s) { return Poly::parse(f, s); }

TEST_CASE("parse and print") {
    Field Q = Field::Q();
    CHECK(P(Q, "X^2 + 1").degree() == 2);
    CHECK(P(Q, "X^2 + 1").coeff(0) == Scalar(Q, 1));
    CHECK(P(Q, "-X").coeff(1) == Scalar(Q, -1));
    CHECK(P(Q, "1/2*X^4").coeff(4) == Scalar(Q, 1) / Scalar(Q, 2));
    CHECK(P(Q, "0").is_zero());
    CHECK(P(Q, "0").degree() == -1);
    CHECK(P(Q, "X^3 - X^2").str() == "X^3 - X^2");
    CHECK_THROWS_AS(P(Q, "X^"), Error);
    CHECK_THROWS_AS(P(Q, "Y + 1"), Error);

    Field F2 = Field::Fp(2);
    // coefficients reduce mod p
    CHECK(P(F2, "3*X + 2") == P(F2, "X"));
}

TEST_CASE("divmod") {
    Field Q = Field::Q();
    auto [q1, r1] = P(Q, "X^2 + 1").divmod(P(Q, "X"));
    CHECK(q1 == P(Q, "X"));
    CHECK(r1 == P(Q, "1"));

    Poly f = P(Q, "X^3 - X^2");
    auto [q2, r2] = f.divmod(f);
    CHECK(q2 == P(Q, "1"));
    CHECK(r2.is_zero());

    auto [q3, r3] = P(Q, "2*X^3 - 2*X^2").divmod(f);
    CHECK(q3 == P(Q, "2"));
    CHECK(r3.is_zero());

    CHECK_THROWS_AS(f.divmod(Poly::zero(Q)), Error);
}

TEST_CASE("divmod reconstruction on random inputs") {
    Field Q = Field::Q();
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> coeff(-3, 3), deg(0, 6);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Scalar> ac, bc;
        int da = deg(rng), db = deg(rng);
        for (int i = 0; i <= da; ++i) ac.emplace_back(Q, coeff(rng));
        for (int i = 0; i <= db; ++i) bc.emplace_back(Q, coeff(rng));
        Poly a(Q, ac), b(Q, bc);
        if (b.is_zero()) continue;
        auto [q, r] = a.divmod(b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("gcd") {
    Field Q = Field::Q();
    CHECK(gcd_monic(P(Q, "X^3 - 1"), P(Q, "3*X^2")) == P(Q, "1"));
    CHECK(gcd_monic(P(Q, "X^3 - X^2"), P(Q, "3*X^2 - 2*X")) == P(Q, "X"));

    Field F2 = Field::Fp(2);
    // f' = 0 in characteristic 2, gcd with zero is the monic part
    CHECK(gcd_monic(P(F2, "X^2"), Poly::zero(F2)) == P(F2, "X^2"));
    CHECK_THROWS_AS(gcd_monic(Poly::zero(Q), Poly::zero(Q)), Error);
}

TEST_CASE("derivative") {
    Field Q = Field::Q();
    CHECK(P(Q, "X^3 - X^2").derivative() == P(Q, "3*X^2 - 2*X"));
    CHECK(P(Q, "5").derivative().is_zero());
    Field F2 = Field::Fp(2);
    CHECK(P(F2, "X^2").derivative().is_zero());
}
