#include "hhkit/algebra.hpp"

#include <sstream>

namespace hhkit {

Vec Algebra::basis_vec(int i) const {
    Vec v = zero_vec(f, dim);
    v[i] = Scalar::one(f);
    return v;
}

Vec Algebra::mulvec(const Vec& a, const Vec& b) const {
    Vec r = zero_vec(f, dim);
    for (int i = 0; i < dim; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < dim; ++j) {
            if (b[j].is_zero()) continue;
            vec_axpy(r, a[i] * b[j], mul[i][j]);
        }
    }
    return r;
}

bool Algebra::is_idempotent(const Vec& e) const { return mulvec(e, e) == e; }

void Algebra::check() const {
    if (static_cast<int>(mul.size()) != dim) fail("BadParameters", "structure constant table size mismatch");
    for (int i = 0; i < dim; ++i) {
        Vec bi = basis_vec(i);
        if (mulvec(unit, bi) != bi || mulvec(bi, unit) != bi)
            fail("BadParameters", "unit law fails at basis " + std::to_string(i) + " of " + name);
    }
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            // (b_i b_j) b_k vs b_i (b_j b_k), expanded through the table
            const Vec& ij = mul[i][j];
            for (int k = 0; k < dim; ++k) {
                Vec lhs = zero_vec(f, dim);
                for (int m = 0; m < dim; ++m)
                    if (!ij[m].is_zero()) vec_axpy(lhs, ij[m], mul[m][k]);
                Vec rhs = zero_vec(f, dim);
                const Vec& jk = mul[j][k];
                for (int m = 0; m < dim; ++m)
                    if (!jk[m].is_zero()) vec_axpy(rhs, jk[m], mul[i][m]);
                if (lhs != rhs)
                    fail("BadParameters", "associativity fails at basis triple (" + std::to_string(i) + "," +
                                              std::to_string(j) + "," + std::to_string(k) + ") of " + name);
            }
        }
    if (!everts.empty()) {
        Vec sum = zero_vec(f, dim);
        for (int v : everts) {
            Vec ev = basis_vec(v);
            if (!is_idempotent(ev)) fail("BadParameters", "marked vertex is not idempotent in " + name);
            vec_axpy(sum, Scalar::one(f), ev);
        }
        if (sum != unit) fail("BadParameters", "marked idempotents do not sum to the unit in " + name);
        for (int v : everts)
            for (int w : everts)
                if (v != w && !vec_is_zero(mulvec(basis_vec(v), basis_vec(w))))
                    fail("BadParameters", "marked idempotents are not orthogonal in " + name);
    }
}

std::string Algebra::show(const Vec& v) const {
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < dim; ++i) {
        if (v[i].is_zero()) continue;
        if (!first) out << " + ";
        if (!v[i].is_one()) out << v[i].str() << "*";
        out << labels[i];
        first = false;
    }
    return first ? "0" : out.str();
}

bool Subspace::contains(const Vec& v) const {
    Echelon e(f, ambient);
    for (const auto& b : basis) e.add(b);
    return e.contains(v);
}

std::optional<Vec> Subspace::coords(const Vec& v) const {
    Echelon e(f, ambient, true);
    for (const auto& b : basis) e.add(b);
    return e.coordinates(v);
}

Vec Subspace::embed(const Vec& c) const {
    Vec v = zero_vec(f, ambient);
    for (size_t i = 0; i < basis.size(); ++i) vec_axpy(v, c[i], basis[i]);
    return v;
}

Subspace Subspace::span(Field f, int ambient, const std::vector<Vec>& gens) {
    Echelon e(f, ambient);
    for (const auto& g : gens) e.add(g);
    return Subspace{f, ambient, e.basis()};
}

Vec AlgebraMap::apply(const Vec& a) const {
    Vec r = zero_vec(dst->f, dst->dim);
    for (size_t i = 0; i < img.size(); ++i)
        if (!a[i].is_zero()) vec_axpy(r, a[i], img[i]);
    return r;
}

Vec AlgebraMap::lift(const Vec& b) const {
    Vec r = zero_vec(src->f, src->dim);
    for (size_t m = 0; m < section.size(); ++m)
        if (!b[m].is_zero()) vec_axpy(r, b[m], section[m]);
    return r;
}

AlgP make_monogenic(Field f, const Poly& fp) {
    if (fp.is_zero() || !fp.is_monic()) fail("NotMonic", "defining polynomial must be monic");
    int n = fp.degree();
    if (n < 1) fail("BadParameters", "defining polynomial must have positive degree");
    auto A = std::make_shared<Algebra>();
    A->f = f;
    A->dim = n;
    A->name = "k[X]/(" + fp.str() + ")";
    for (int i = 0; i < n; ++i) A->labels.push_back(i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i)));
    A->mul.assign(n, std::vector<Vec>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Poly r = Poly::monomial(f, i + j, Scalar::one(f)).divmod(fp).second;
            Vec v = zero_vec(f, n);
            for (int k = 0; k < n; ++k) v[k] = r.coeff(k);
            A->mul[i][j] = v;
        }
    A->unit = A->basis_vec(0);
    A->check();
    return A;
}

AlgP make_one_point_extension(const AlgP& B, const LeftModule& M, const std::string& new_vertex) {
    Field f = B->f;
    int nb = B->dim, nm = M.dim;
    int n = nb + nm + 1;
    int ecol = n - 1;
    auto A = std::make_shared<Algebra>();
    A->f = f;
    A->dim = n;
    A->name = B->name + "[" + new_vertex + "]";
    for (int i = 0; i < nb; ++i) A->labels.push_back(B->labels[i]);
    for (int m = 0; m < nm; ++m) A->labels.push_back("m" + std::to_string(m));
    A->labels.push_back(new_vertex);
    auto zero = zero_vec(f, n);
    A->mul.assign(n, std::vector<Vec>(n, zero));
    auto embB = [&](const Vec& v) {
        Vec r = zero_vec(f, n);
        for (int i = 0; i < nb; ++i) r[i] = v[i];
        return r;
    };
    auto embM = [&](const Vec& v) {
        Vec r = zero_vec(f, n);
        for (int m = 0; m < nm; ++m) r[nb + m] = v[m];
        return r;
    };
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) A->mul[i][j] = embB(B->mul[i][j]);
    for (int i = 0; i < nb; ++i)
        for (int m = 0; m < nm; ++m) A->mul[i][nb + m] = embM(M.act[i][m]);
    for (int m = 0; m < nm; ++m) {
        Vec em = zero_vec(f, n);
        em[nb + m] = Scalar::one(f);
        A->mul[nb + m][ecol] = em;
    }
    {
        Vec ee = zero_vec(f, n);
        ee[ecol] = Scalar::one(f);
        A->mul[ecol][ecol] = ee;
    }
    A->unit = embB(B->unit);
    A->unit[ecol] = Scalar::one(f);
    if (!B->everts.empty()) {
        A->everts = B->everts;
    } else {
        // need 1_B to be a basis vector to mark it as a vertex
        int u = -1;
        for (int i = 0; i < nb; ++i)
            if (B->unit[i].is_one()) {
                Vec probe = zero_vec(f, nb);
                probe[i] = Scalar::one(f);
                if (probe == B->unit) u = i;
            }
        if (u < 0) fail("BadParameters", "base algebra unit must be a basis vector or carry marked vertices");
        A->everts = {u};
    }
    A->everts.push_back(ecol);
    A->check();
    return A;
}

AlgP make_enveloping(const AlgP& A0) {
    const Algebra& A = *A0;
    int n = A.dim;
    auto E = std::make_shared<Algebra>();
    E->f = A.f;
    E->dim = n * n;
    E->name = A.name + "^e";
    E->labels.resize(n * n);
    E->mul.assign(n * n, std::vector<Vec>(n * n));
    auto id = [&](int i, int j) { return i * n + j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) E->labels[id(i, j)] = A.labels[i] + "(x)" + A.labels[j];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    // (a (x) b)(c (x) d) = ac (x) db, second factor taken opposite
                    Vec prod = zero_vec(A.f, n * n);
                    const Vec& ik = A.mul[i][k];
                    const Vec& lj = A.mul[l][j];
                    for (int p = 0; p < n; ++p) {
                        if (ik[p].is_zero()) continue;
                        for (int q = 0; q < n; ++q)
                            if (!lj[q].is_zero()) prod[id(p, q)] += ik[p] * lj[q];
                    }
                    E->mul[id(i, j)][id(k, l)] = prod;
                }
    E->unit = zero_vec(A.f, n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) E->unit[id(i, j)] = A.unit[i] * A.unit[j];
    if (!A.everts.empty())
        for (int v : A.everts)
            for (int w : A.everts) E->everts.push_back(id(v, w));
    E->check();
    return E;
}

std::vector<Vec> center(const Algebra& A) {
    int n = A.dim;
    SparseMatrix S(A.f, n * n, n);
    for (int i = 0; i < n; ++i)
        for (int m = 0; m < n; ++m) {
            // row (i, k): coefficient of b_k in b_i b_m - b_m b_i, unknown x_m
            const Vec& lm = A.mul[i][m];
            const Vec& rm = A.mul[m][i];
            for (int k = 0; k < n; ++k) {
                Scalar c = lm[k] - rm[k];
                if (!c.is_zero()) S.add(i * n + k, m, c);
            }
        }
    return S.kernel_basis();
}

Subspace idempotent_ideal(const Algebra& A, const Vec& e) {
    if (!A.is_idempotent(e)) fail("NotIdempotent", "ideal generator must be idempotent");
    std::vector<Vec> gens;
    for (int i = 0; i < A.dim; ++i) {
        Vec bie = A.mulvec(A.basis_vec(i), e);
        if (vec_is_zero(bie)) continue;
        for (int j = 0; j < A.dim; ++j) gens.push_back(A.mulvec(bie, A.basis_vec(j)));
    }
    return Subspace::span(A.f, A.dim, gens);
}

Subspace ideal_closure(const Algebra& A, const std::vector<Vec>& gens) {
    Echelon e(A.f, A.dim);
    std::vector<Vec> frontier;
    for (const auto& g : gens)
        if (e.add(g)) frontier.push_back(g);
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const auto& v : frontier)
            for (int i = 0; i < A.dim; ++i) {
                Vec l = A.mulvec(A.basis_vec(i), v);
                if (e.add(l)) next.push_back(l);
                Vec r = A.mulvec(v, A.basis_vec(i));
                if (e.add(r)) next.push_back(r);
            }
        frontier = std::move(next);
    }
    return Subspace{A.f, A.dim, e.basis()};
}

AlgebraMap quotient_algebra(const AlgP& A, const Subspace& ideal, const std::string& name) {
    Field f = A->f;
    int n = A->dim;
    for (const auto& v : ideal.basis)
        for (int i = 0; i < n; ++i)
            if (!ideal.contains(A->mulvec(A->basis_vec(i), v)) || !ideal.contains(A->mulvec(v, A->basis_vec(i))))
                fail("NotAnIdeal", "subspace is not a two sided ideal");
    // complement basis among standard basis vectors, in index order
    Echelon acc(f, n);
    for (const auto& v : ideal.basis) acc.add(v);
    std::vector<int> keep;
    for (int i = 0; i < n; ++i)
        if (acc.add(A->basis_vec(i))) keep.push_back(i);
    int m = static_cast<int>(keep.size());
    // projection: express a over (ideal basis, kept basis vectors), read the tail
    Echelon tracked(f, n, true);
    for (const auto& v : ideal.basis) tracked.add(v);
    for (int i : keep) tracked.add(A->basis_vec(i));
    int off = static_cast<int>(ideal.basis.size());
    auto project = [&](const Vec& a) {
        auto c = tracked.coordinates(a);
        if (!c) fail("BadParameters", "projection failed");
        Vec r = zero_vec(f, m);
        for (int t = 0; t < m; ++t) r[t] = (*c)[off + t];
        return r;
    };
    auto B = std::make_shared<Algebra>();
    B->f = f;
    B->dim = m;
    B->name = name;
    for (int i : keep) B->labels.push_back(A->labels[i]);
    B->mul.assign(m, std::vector<Vec>(m));
    for (int s = 0; s < m; ++s)
        for (int t = 0; t < m; ++t) B->mul[s][t] = project(A->mul[keep[s]][keep[t]]);
    B->unit = project(A->unit);
    for (int v : A->everts) {
        Vec img = project(A->basis_vec(v));
        int hits = 0, where = -1;
        for (int t = 0; t < m; ++t)
            if (!img[t].is_zero()) {
                ++hits;
                where = img[t].is_one() ? t : -1;
            }
        if (hits == 1 && where >= 0) B->everts.push_back(where);
        else if (hits != 0) {
            B->everts.clear();
            break;
        }
    }
    B->check();
    AlgebraMap phi;
    phi.src = A;
    phi.dst = B;
    for (int i = 0; i < n; ++i) phi.img.push_back(project(A->basis_vec(i)));
    for (int t = 0; t < m; ++t) phi.section.push_back(A->basis_vec(keep[t]));
    return phi;
}

std::vector<Vec> intersect_spans(Field f, int ambient, const std::vector<Vec>& U, const std::vector<Vec>& V) {
    int nu = static_cast<int>(U.size()), nv = static_cast<int>(V.size());
    SparseMatrix S(f, ambient, nu + nv);
    for (int j = 0; j < nu; ++j)
        for (int i = 0; i < ambient; ++i)
            if (!U[j][i].is_zero()) S.add(i, j, U[j][i]);
    for (int j = 0; j < nv; ++j)
        for (int i = 0; i < ambient; ++i)
            if (!V[j][i].is_zero()) S.add(i, nu + j, -V[j][i]);
    Echelon acc(f, ambient);
    std::vector<Vec> out;
    for (const auto& k : S.kernel_basis()) {
        Vec w = zero_vec(f, ambient);
        for (int j = 0; j < nu; ++j) vec_axpy(w, k[j], U[j]);
        if (!vec_is_zero(w) && acc.add(w)) out.push_back(w);
    }
    return out;
}

}  // namespace hhkit
