#include <doctest.h>

#include <hhkit/algebra.hpp>

#include "helpers.hpp"

using namespace hhkit;

static Poly P(Field f, const std::string& s) { return Poly::parse(f, s); }

TEST_CASE("monogenic algebra construction") {
    Field Q = Field::Q();
    AlgP k = make_monogenic(Q, P(Q, "X"));
    CHECK(k->dim == 1);
    k->check();

    AlgP A = make_monogenic(Q, P(Q, "X^2"));
    CHECK(A->dim == 2);
    // x * x = 0
    CHECK(vec_is_zero(A->mulvec(A->basis_vec(1), A->basis_vec(1))));

    AlgP B = make_monogenic(Q, P(Q, "X^3 - 1"));
    CHECK(B->dim == 3);
    // x^2 * x^2 = x^4 = x
    CHECK(B->mulvec(B->basis_vec(2), B->basis_vec(2)) == B->basis_vec(1));
    B->check();

    CHECK_THROWS_AS(make_monogenic(Q, P(Q, "2*X^2")), Error);  // not monic
    CHECK_THROWS_AS(make_monogenic(Q, P(Q, "0")), Error);
}

TEST_CASE("path algebra quotients") {
    Field Q = Field::Q();
    AlgP A2 = make_path_algebra_quotient(fixtures::a2(Q));
    CHECK(A2->dim == 3);
    CHECK(A2->everts.size() == 2);
    A2->check();

    AlgP T = make_path_algebra_quotient(fixtures::triangle(Q));
    CHECK(T->dim == 9);
    T->check();

    // loop with no relations is infinite dimensional
    QuiverPresentation loop;
    loop.f = Q;
    loop.quiver.vertices = {"1"};
    loop.quiver.arrows = {{"x", 0, 0}};
    CHECK_THROWS_AS(make_path_algebra_quotient(loop, 100), Error);

    // loop with x^2 = 0
    loop.relations = {{0, 0}};
    AlgP L = make_path_algebra_quotient(loop);
    CHECK(L->dim == 2);
}

TEST_CASE("one point extensions") {
    Field Q = Field::Q();

    AlgP k = make_monogenic(Q, P(Q, "X"));
    LeftModule triv{k, 1, {{Vec{Scalar::one(Q)}}}};
    triv.check();
    AlgP E1 = make_one_point_extension(k, triv, "w");
    CHECK(E1->dim == 3);
    E1->check();

    // k x k with the simple module at the first vertex
    QuiverPresentation two;
    two.f = Q;
    two.quiver.vertices = {"1", "2"};
    AlgP kk = make_path_algebra_quotient(two);
    LeftModule simple{kk, 1, {{Vec{Scalar::one(Q)}}, {Vec{Scalar::zero(Q)}}}};
    simple.check();
    AlgP E2 = make_one_point_extension(kk, simple, "w");
    CHECK(E2->dim == 4);
    E2->check();

    // k with a 2 dimensional module
    LeftModule k2{k, 2,
                  {{Vec{Scalar::one(Q), Scalar::zero(Q)}, Vec{Scalar::zero(Q), Scalar::one(Q)}}}};
    k2.check();
    AlgP E3 = make_one_point_extension(k, k2, "w");
    CHECK(E3->dim == 4);
    E3->check();
}

TEST_CASE("center") {
    Field Q = Field::Q();
    CHECK(center(*make_monogenic(Q, P(Q, "X^3 - X^2"))).size() == 3);
    CHECK(center(*make_path_algebra_quotient(fixtures::a2(Q))).size() == 1);
    CHECK(center(*make_path_algebra_quotient(fixtures::triangle(Q))).size() == 2);
}

TEST_CASE("idempotent ideals and quotients") {
    Field Q = Field::Q();
    AlgP T = make_path_algebra_quotient(fixtures::triangle(Q));
    Vec e1 = T->basis_vec(0);
    CHECK(T->is_idempotent(e1));

    Subspace I = idempotent_ideal(*T, e1);
    CHECK(I.dim() == 6);
    AlgebraMap phi = quotient_algebra(T, I, "B");
    CHECK(phi.dst->dim == 3);
    phi.dst->check();
    // phi is an algebra map on a sample product
    Vec ab = T->mulvec(T->basis_vec(4), T->basis_vec(3));
    CHECK(phi.apply(ab) == phi.dst->mulvec(phi.apply(T->basis_vec(4)), phi.apply(T->basis_vec(3))));

    // e = 1: I = A, B = 0
    Subspace all = idempotent_ideal(*T, T->unit);
    CHECK(all.dim() == 9);

    // monogenic: I = (x) in k[X]/(X^2)
    AlgP A = make_monogenic(Q, P(Q, "X^2"));
    Subspace J = ideal_closure(*A, {A->basis_vec(1)});
    CHECK(J.dim() == 1);
    AlgebraMap psi = quotient_algebra(A, J, "k");
    CHECK(psi.dst->dim == 1);
}

TEST_CASE("corner modules") {
    Field Q = Field::Q();
    AlgP T = make_path_algebra_quotient(fixtures::triangle(Q));
    Vec e1 = T->basis_vec(0);
    LeftModule Ae = corner_left(T, e1);
    RightModule eA = corner_right(T, e1);
    // paths out of vertex 1: e1, a; paths into it: e1, c, cb
    CHECK(Ae.dim == 2);
    CHECK(eA.dim == 3);
    Ae.check();
    eA.check();
    // projectivity count: dim Ae * dim eA = dim AeA
    CHECK(Ae.dim * eA.dim == idempotent_ideal(*T, e1).dim());
}

TEST_CASE("tensor products over the algebra") {
    Field Q = Field::Q();

    // I = (x) in k[X]/(X^2): I (x)_A I has dim 1 but multiplication kills it
    AlgP A = make_monogenic(Q, P(Q, "X^2"));
    Subspace I = ideal_closure(*A, {A->basis_vec(1)});
    Bimodule IB = sub_bimodule(A, I);
    CHECK(tensor_over_algebra_dim(IB.forget_left(), IB.forget_right()) == 1);
    CHECK(ideal_square_dim(*A, I) == 0);

    // triangle, I = Ae1A: projective, multiplication is bijective
    AlgP T = make_path_algebra_quotient(fixtures::triangle(Q));
    Subspace J = idempotent_ideal(*T, T->basis_vec(0));
    Bimodule JB = sub_bimodule(T, J);
    CHECK(tensor_over_algebra_dim(JB.forget_left(), JB.forget_right()) == 6);
    CHECK(ideal_square_dim(*T, J) == 6);

    // A (x)_A A = A
    Bimodule R = regular_bimodule(T);
    CHECK(tensor_over_algebra_dim(R.forget_left(), R.forget_right()) == T->dim);
}

TEST_CASE("duals") {
    Field Q = Field::Q();
    AlgP T = make_path_algebra_quotient(fixtures::triangle(Q));
    Bimodule R = regular_bimodule(T);
    Bimodule DD = dual_bimodule(dual_bimodule(R));
    CHECK(DD.dim == R.dim);
    CHECK(DD.left == R.left);
    CHECK(DD.right == R.right);

    RightModule eA = corner_right(T, T->basis_vec(0));
    LeftModule DeA = dual_of_right(eA);
    CHECK(DeA.dim == eA.dim);
    DeA.check();
}

TEST_CASE("singular extension cocycle") {
    Field Q = Field::Q();

    // idempotent ideal: I/I^2 = 0, nothing to carry
    AlgP T = make_path_algebra_quotient(fixtures::triangle(Q));
    Subspace J = idempotent_ideal(*T, T->basis_vec(0));
    AlgebraMap phi = quotient_algebra(T, J, "B");
    IdealQuotient IQ = ideal_mod_square(phi, J);
    CHECK(IQ.bim.dim == 0);

    // A = k[X]/(X^2) -> k: alpha(1,1) = 0
    AlgP A = make_monogenic(Q, P(Q, "X^2"));
    Subspace I = ideal_closure(*A, {A->basis_vec(1)});
    AlgebraMap psi = quotient_algebra(A, I, "k");
    IdealQuotient IQ2 = ideal_mod_square(psi, I);
    CHECK(IQ2.bim.dim == 1);
    auto al = singular_extension_cocycle(psi, IQ2);
    CHECK(vec_is_zero(al[0][0]));

    // A = k[X]/(X^4) -> B = k[x]/(x^2): alpha(x, x) = x^2 mod I^2,
    // alpha(1, -) = alpha(-, 1) = 0
    AlgP A4 = make_monogenic(Q, P(Q, "X^4"));
    Subspace I2 = ideal_closure(*A4, {A4->basis_vec(2)});
    CHECK(I2.dim() == 2);
    AlgebraMap rho = quotient_algebra(A4, I2, "B");
    CHECK(rho.dst->dim == 2);
    IdealQuotient IQ3 = ideal_mod_square(rho, I2);
    CHECK(IQ3.bim.dim == 2);
    auto a3 = singular_extension_cocycle(rho, IQ3);
    CHECK(vec_is_zero(a3[0][0]));
    CHECK(vec_is_zero(a3[0][1]));
    CHECK(vec_is_zero(a3[1][0]));
    CHECK(a3[1][1] == IQ3.project(A4->basis_vec(2)));

    // 2-cocycle identity b.al(b',b'') - al(bb',b'') + al(b,b'b'') - al(b,b').b''
    AlgP B = rho.dst;
    for (int i = 0; i < B->dim; ++i)
        for (int j = 0; j < B->dim; ++j)
            for (int k = 0; k < B->dim; ++k) {
                Vec acc = IQ3.bim.apply_left(rho.dst->basis_vec(i), a3[j][k]);
                Scalar minus = -Scalar::one(Q);
                // al(b_i b_j, b_k): expand the product in the basis
                Vec bij = B->mulvec(B->basis_vec(i), B->basis_vec(j));
                Vec bjk = B->mulvec(B->basis_vec(j), B->basis_vec(k));
                for (int m = 0; m < B->dim; ++m) {
                    vec_axpy(acc, minus * bij[m], a3[m][k]);
                    vec_axpy(acc, bjk[m], a3[i][m]);
                }
                vec_axpy(acc, minus, IQ3.bim.apply_right(a3[i][j], rho.dst->basis_vec(k)));
                CHECK(vec_is_zero(acc));
            }
}

TEST_CASE("hom of bimodules") {
    Field Q = Field::Q();
    AlgP A = make_monogenic(Q, P(Q, "X^2"));
    Bimodule R = regular_bimodule(A);
    // bimodule endos of A = center, dim 2 here
    CHECK(hom_bimodule(R, R).size() == 2);
}
