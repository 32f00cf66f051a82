#include "hhkit/algebra.hpp"

namespace hhkit {

Vec LeftModule::apply(int i, const Vec& x) const {
    Vec r = zero_vec(A->f, dim);
    for (int m = 0; m < dim; ++m)
        if (!x[m].is_zero()) vec_axpy(r, x[m], act[i][m]);
    return r;
}

Vec LeftModule::apply(const Vec& a, const Vec& x) const {
    Vec r = zero_vec(A->f, dim);
    for (int i = 0; i < A->dim; ++i)
        if (!a[i].is_zero()) vec_axpy(r, a[i], apply(i, x));
    return r;
}

void LeftModule::check() const {
    Field f = A->f;
    for (int m = 0; m < dim; ++m) {
        Vec em = zero_vec(f, dim);
        em[m] = Scalar::one(f);
        if (apply(A->unit, em) != em) fail("BadBimodule", "unit does not act as identity on left module");
        for (int i = 0; i < A->dim; ++i)
            for (int j = 0; j < A->dim; ++j) {
                Vec lhs = apply(A->mul[i][j], em);
                Vec rhs = apply(i, apply(j, em));
                if (lhs != rhs) fail("BadBimodule", "left action is not associative");
            }
    }
}

Vec RightModule::apply(int i, const Vec& x) const {
    Vec r = zero_vec(A->f, dim);
    for (int m = 0; m < dim; ++m)
        if (!x[m].is_zero()) vec_axpy(r, x[m], act[i][m]);
    return r;
}

Vec RightModule::apply(const Vec& x, const Vec& a) const {
    Vec r = zero_vec(A->f, dim);
    for (int i = 0; i < A->dim; ++i)
        if (!a[i].is_zero()) vec_axpy(r, a[i], apply(i, x));
    return r;
}

void RightModule::check() const {
    Field f = A->f;
    for (int m = 0; m < dim; ++m) {
        Vec em = zero_vec(f, dim);
        em[m] = Scalar::one(f);
        for (int i = 0; i < A->dim; ++i)
            for (int j = 0; j < A->dim; ++j) {
                // e_m · (b_i b_j) = (e_m · b_i) · b_j
                Vec lhs = zero_vec(f, dim);
                for (int k = 0; k < A->dim; ++k)
                    if (!A->mul[i][j][k].is_zero()) vec_axpy(lhs, A->mul[i][j][k], act[k][m]);
                Vec rhs = apply(j, apply(i, em));
                if (lhs != rhs) fail("BadBimodule", "right action is not associative");
            }
    }
}

Vec Bimodule::apply_left(int i, const Vec& x) const {
    Vec r = zero_vec(A->f, dim);
    for (int m = 0; m < dim; ++m)
        if (!x[m].is_zero()) vec_axpy(r, x[m], left[i][m]);
    return r;
}

Vec Bimodule::apply_right(int i, const Vec& x) const {
    Vec r = zero_vec(A->f, dim);
    for (int m = 0; m < dim; ++m)
        if (!x[m].is_zero()) vec_axpy(r, x[m], right[i][m]);
    return r;
}

Vec Bimodule::apply_left(const Vec& a, const Vec& x) const {
    Vec r = zero_vec(A->f, dim);
    for (int i = 0; i < A->dim; ++i)
        if (!a[i].is_zero()) vec_axpy(r, a[i], apply_left(i, x));
    return r;
}

Vec Bimodule::apply_right(const Vec& x, const Vec& a) const {
    Vec r = zero_vec(A->f, dim);
    for (int i = 0; i < A->dim; ++i)
        if (!a[i].is_zero()) vec_axpy(r, a[i], apply_right(i, x));
    return r;
}

LeftModule Bimodule::forget_right() const { return LeftModule{A, dim, left}; }
RightModule Bimodule::forget_left() const { return RightModule{A, dim, right}; }

void Bimodule::check() const {
    forget_right().check();
    forget_left().check();
    Field f = A->f;
    for (int m = 0; m < dim; ++m) {
        Vec em = zero_vec(f, dim);
        em[m] = Scalar::one(f);
        if (apply_right(em, A->unit) != em) fail("BadBimodule", "unit does not act as identity on the right");
        for (int i = 0; i < A->dim; ++i)
            for (int j = 0; j < A->dim; ++j) {
                Vec lhs = apply_right(apply_left(i, em), A->basis_vec(j));
                Vec rhs = apply_left(i, apply_right(em, A->basis_vec(j)));
                if (lhs != rhs) fail("BadBimodule", "left and right actions do not commute");
            }
    }
}

Bimodule regular_bimodule(const AlgP& A) {
    Bimodule M{A, A->dim, {}, {}};
    M.left.resize(A->dim);
    M.right.resize(A->dim);
    for (int i = 0; i < A->dim; ++i) {
        M.left[i].resize(A->dim);
        M.right[i].resize(A->dim);
        for (int m = 0; m < A->dim; ++m) {
            M.left[i][m] = A->mul[i][m];
            M.right[i][m] = A->mul[m][i];
        }
    }
    return M;
}

Bimodule bimodule_via_map(const AlgebraMap& phi) { return pullback_bimodule(phi, regular_bimodule(phi.dst)); }

Bimodule pullback_bimodule(const AlgebraMap& phi, const Bimodule& N) {
    const AlgP& A = phi.src;
    Bimodule M{A, N.dim, {}, {}};
    M.left.resize(A->dim);
    M.right.resize(A->dim);
    for (int i = 0; i < A->dim; ++i) {
        M.left[i].resize(N.dim);
        M.right[i].resize(N.dim);
        for (int m = 0; m < N.dim; ++m) {
            Vec em = zero_vec(N.A->f, N.dim);
            em[m] = Scalar::one(N.A->f);
            M.left[i][m] = N.apply_left(phi.img[i], em);
            M.right[i][m] = N.apply_right(em, phi.img[i]);
        }
    }
    return M;
}

LeftModule left_module_over_enveloping(const AlgP& Aenv, const Bimodule& M) {
    int n = M.A->dim;
    if (Aenv->dim != n * n) fail("BadParameters", "enveloping algebra dimension mismatch");
    LeftModule L{Aenv, M.dim, {}};
    L.act.resize(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto& col = L.act[i * n + j];
            col.resize(M.dim);
            for (int m = 0; m < M.dim; ++m) col[m] = M.apply_left(i, M.right[j][m]);
        }
    return L;
}

Bimodule sub_bimodule(const AlgP& A, const Subspace& S) {
    int d = S.dim();
    Echelon tracked(A->f, A->dim, true);
    for (const auto& b : S.basis) tracked.add(b);
    auto coords = [&](const Vec& v) {
        auto c = tracked.coordinates(v);
        if (!c) fail("BadBimodule", "subspace is not stable under the actions");
        return *c;
    };
    Bimodule M{A, d, {}, {}};
    M.left.resize(A->dim);
    M.right.resize(A->dim);
    for (int i = 0; i < A->dim; ++i) {
        M.left[i].resize(d);
        M.right[i].resize(d);
        for (int m = 0; m < d; ++m) {
            M.left[i][m] = coords(A->mulvec(A->basis_vec(i), S.basis[m]));
            M.right[i][m] = coords(A->mulvec(S.basis[m], A->basis_vec(i)));
        }
    }
    return M;
}

Vec IdealQuotient::project(const Vec& a) const {
    auto c = tracked.coordinates(a);
    if (!c) fail("BadBimodule", "vector escapes the ideal");
    int d = static_cast<int>(reps.size());
    Vec r = zero_vec(bim.A->f, d);
    for (int t = 0; t < d; ++t) r[t] = (*c)[off + t];
    return r;
}

IdealQuotient ideal_mod_square(const AlgebraMap& phi, const Subspace& ideal) {
    const AlgP& A = phi.src;
    const AlgP& B = phi.dst;
    Field f = A->f;
    std::vector<Vec> sq;
    for (const auto& u : ideal.basis)
        for (const auto& v : ideal.basis) sq.push_back(A->mulvec(u, v));
    Subspace I2 = Subspace::span(f, A->dim, sq);
    // representatives: ideal basis vectors extending I^2
    Echelon acc(f, A->dim);
    for (const auto& v : I2.basis) acc.add(v);
    std::vector<Vec> reps;
    for (const auto& v : ideal.basis)
        if (acc.add(v)) reps.push_back(v);
    int d = static_cast<int>(reps.size());
    Echelon tracked(f, A->dim, true);
    for (const auto& v : I2.basis) tracked.add(v);
    for (const auto& r : reps) tracked.add(r);
    IdealQuotient Q{Bimodule{B, d, {}, {}}, reps, std::move(tracked), static_cast<int>(I2.basis.size())};
    // B acts through any lift: different lifts differ by I, and I·I = I^2 dies
    Bimodule& M = Q.bim;
    M.left.resize(B->dim);
    M.right.resize(B->dim);
    for (int i = 0; i < B->dim; ++i) {
        M.left[i].resize(d);
        M.right[i].resize(d);
        const Vec& lift = phi.section[i];
        for (int m = 0; m < d; ++m) {
            M.left[i][m] = Q.project(A->mulvec(lift, Q.reps[m]));
            M.right[i][m] = Q.project(A->mulvec(Q.reps[m], lift));
        }
    }
    return Q;
}

Bimodule dual_bimodule(const Bimodule& M) {
    Bimodule D{M.A, M.dim, {}, {}};
    D.left.resize(M.A->dim);
    D.right.resize(M.A->dim);
    for (int i = 0; i < M.A->dim; ++i) {
        D.left[i].assign(M.dim, zero_vec(M.A->f, M.dim));
        D.right[i].assign(M.dim, zero_vec(M.A->f, M.dim));
        for (int m = 0; m < M.dim; ++m)
            for (int k = 0; k < M.dim; ++k) {
                // (a·θ)(m) = θ(m·a), (θ·a)(m) = θ(a·m)
                D.left[i][m][k] = M.right[i][k][m];
                D.right[i][m][k] = M.left[i][k][m];
            }
    }
    return D;
}

LeftModule dual_of_right(const RightModule& M) {
    LeftModule D{M.A, M.dim, {}};
    D.act.resize(M.A->dim);
    for (int i = 0; i < M.A->dim; ++i) {
        D.act[i].assign(M.dim, zero_vec(M.A->f, M.dim));
        for (int m = 0; m < M.dim; ++m)
            for (int k = 0; k < M.dim; ++k) D.act[i][m][k] = M.act[i][k][m];
    }
    return D;
}

LeftModule corner_left(const AlgP& A, const Vec& e) {
    if (!A->is_idempotent(e)) fail("NotIdempotent", "corner module needs an idempotent");
    std::vector<Vec> gens;
    for (int i = 0; i < A->dim; ++i) gens.push_back(A->mulvec(A->basis_vec(i), e));
    Subspace S = Subspace::span(A->f, A->dim, gens);
    Echelon tracked(A->f, A->dim, true);
    for (const auto& b : S.basis) tracked.add(b);
    LeftModule M{A, S.dim(), {}};
    M.act.resize(A->dim);
    for (int i = 0; i < A->dim; ++i) {
        M.act[i].resize(S.dim());
        for (int m = 0; m < S.dim(); ++m) {
            auto c = tracked.coordinates(A->mulvec(A->basis_vec(i), S.basis[m]));
            if (!c) fail("BadBimodule", "corner module is not closed");
            M.act[i][m] = *c;
        }
    }
    return M;
}

RightModule corner_right(const AlgP& A, const Vec& e) {
    if (!A->is_idempotent(e)) fail("NotIdempotent", "corner module needs an idempotent");
    std::vector<Vec> gens;
    for (int i = 0; i < A->dim; ++i) gens.push_back(A->mulvec(e, A->basis_vec(i)));
    Subspace S = Subspace::span(A->f, A->dim, gens);
    Echelon tracked(A->f, A->dim, true);
    for (const auto& b : S.basis) tracked.add(b);
    RightModule M{A, S.dim(), {}};
    M.act.resize(A->dim);
    for (int i = 0; i < A->dim; ++i) {
        M.act[i].resize(S.dim());
        for (int m = 0; m < S.dim(); ++m) {
            auto c = tracked.coordinates(A->mulvec(S.basis[m], A->basis_vec(i)));
            if (!c) fail("BadBimodule", "corner module is not closed");
            M.act[i][m] = *c;
        }
    }
    return M;
}

int tensor_over_algebra_dim(const RightModule& X, const LeftModule& Y) {
    Field f = X.A->f;
    int nx = X.dim, ny = Y.dim, na = X.A->dim;
    SparseMatrix R(f, nx * na * ny, nx * ny);
    int row = 0;
    for (int m = 0; m < nx; ++m) {
        Vec em = zero_vec(f, nx);
        em[m] = Scalar::one(f);
        for (int i = 0; i < na; ++i) {
            Vec xa = X.apply(i, em);
            for (int n = 0; n < ny; ++n) {
                Vec en = zero_vec(f, ny);
                en[n] = Scalar::one(f);
                Vec ay = Y.apply(i, en);
                // xa ⊗ e_n - e_m ⊗ ay
                for (int k = 0; k < nx; ++k)
                    if (!xa[k].is_zero()) R.add(row, k * ny + n, xa[k]);
                for (int k = 0; k < ny; ++k)
                    if (!ay[k].is_zero()) R.add(row, m * ny + k, -ay[k]);
                ++row;
            }
        }
    }
    return nx * ny - R.rank();
}

int ideal_square_dim(const Algebra& A, const Subspace& I) {
    std::vector<Vec> prods;
    for (const auto& u : I.basis)
        for (const auto& v : I.basis) prods.push_back(A.mulvec(u, v));
    return Subspace::span(A.f, A.dim, prods).dim();
}

std::vector<std::vector<Vec>> hom_bimodule(const Bimodule& M, const Bimodule& N) {
    Field f = M.A->f;
    int na = M.A->dim, dm = M.dim, dn = N.dim;
    // unknowns: theta[k][m] = entry k of theta(e_m), column index k*dm+m
    SparseMatrix S(f, 2 * na * dn * dm, dn * dm);
    int row = 0;
    for (int i = 0; i < na; ++i)
        for (int m = 0; m < dm; ++m) {
            // theta(b_i · e_m) = b_i · theta(e_m)
            const Vec& lm = M.left[i][m];
            for (int k = 0; k < dn; ++k) {
                for (int t = 0; t < dm; ++t)
                    if (!lm[t].is_zero()) S.add(row, k * dm + t, lm[t]);
                for (int s = 0; s < dn; ++s)
                    if (!N.left[i][s][k].is_zero()) S.add(row, s * dm + m, -N.left[i][s][k]);
                ++row;
            }
            const Vec& rm = M.right[i][m];
            for (int k = 0; k < dn; ++k) {
                for (int t = 0; t < dm; ++t)
                    if (!rm[t].is_zero()) S.add(row, k * dm + t, rm[t]);
                for (int s = 0; s < dn; ++s)
                    if (!N.right[i][s][k].is_zero()) S.add(row, s * dm + m, -N.right[i][s][k]);
                ++row;
            }
        }
    std::vector<std::vector<Vec>> maps;
    for (const auto& k : S.kernel_basis()) {
        std::vector<Vec> theta(dm, zero_vec(f, dn));
        for (int kk = 0; kk < dn; ++kk)
            for (int m = 0; m < dm; ++m) theta[m][kk] = k[kk * dm + m];
        maps.push_back(std::move(theta));
    }
    return maps;
}

std::vector<std::vector<Vec>> singular_extension_cocycle(const AlgebraMap& phi, const IdealQuotient& IQ) {
    const AlgP& A = phi.src;
    const AlgP& B = phi.dst;
    Scalar minus = Scalar(A->f, -1);
    std::vector<std::vector<Vec>> alpha(B->dim, std::vector<Vec>(B->dim));
    for (int i = 0; i < B->dim; ++i)
        for (int j = 0; j < B->dim; ++j) {
            Vec prod = A->mulvec(phi.lift(B->basis_vec(i)), phi.lift(B->basis_vec(j)));
            vec_axpy(prod, minus, phi.lift(B->mulvec(B->basis_vec(i), B->basis_vec(j))));
            alpha[i][j] = IQ.project(prod);
        }
    return alpha;
}

}  // namespace hhkit
