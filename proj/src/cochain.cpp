#include "hhkit/cochain.hpp"

#include <algorithm>

namespace hhkit {

// ---------------------------------------------------------------- Frame

Frame Frame::build(const AlgP& A, bool vertex_mode) {
    Frame F;
    F.A = A;
    F.vertex_mode = vertex_mode;
    F.ech_ = Echelon(A->f, A->dim, true);
    if (vertex_mode) {
        if (A->everts.empty()) fail("NoVertices", "algebra has no marked idempotents");
        for (int v : A->everts) F.idems.push_back(A->basis_vec(v));
    } else {
        F.idems.push_back(A->unit);
    }
    for (const auto& e : F.idems)
        if (!F.ech_.add(e)) fail("InternalError", "idempotents are dependent");
    int na = F.nidem();
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < na; ++b)
            for (int j = 0; j < A->dim; ++j) {
                Vec v = A->mulvec(A->mulvec(F.idems[a], A->basis_vec(j)), F.idems[b]);
                if (vec_is_zero(v) || F.ech_.contains(v)) continue;
                F.ech_.add(v);
                F.rbasis.push_back(std::move(v));
                F.rl.push_back(a);
                F.rr.push_back(b);
            }
    if (F.ech_.rank() != A->dim) fail("InternalError", "corner elements do not span the algebra");
    int nr = F.rdim();
    F.rprod_.assign(nr, std::vector<std::vector<std::pair<int, Scalar>>>(nr));
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nr; ++j) {
            if (F.rr[i] != F.rl[j]) continue;
            Vec c = F.pi_r(A->mulvec(F.rbasis[i], F.rbasis[j]));
            for (int k = 0; k < nr; ++k)
                if (!c[k].is_zero()) F.rprod_[i][j].push_back({k, c[k]});
        }
    return F;
}

Vec Frame::pi_r(const Vec& a) const {
    auto co = ech_.coordinates(a);
    if (!co) fail("InternalError", "element outside the algebra span");
    Vec r(co->begin() + nidem(), co->end());
    r.resize(rdim(), Scalar::zero(A->f));
    return r;
}

// ---------------------------------------------------------------- corners

BiCorners BiCorners::build(const Bimodule& M, const std::vector<Vec>& idems) {
    BiCorners C;
    C.f = M.A->f;
    C.ambient = M.dim;
    int na = static_cast<int>(idems.size());
    C.basis.assign(na, std::vector<std::vector<Vec>>(na));
    C.offset.assign(na, std::vector<int>(na, 0));
    C.ech_ = Echelon(C.f, M.dim, true);
    int at = 0;
    for (int a = 0; a < na; ++a)
        for (int b = 0; b < na; ++b) {
            C.offset[a][b] = at;
            for (int j = 0; j < M.dim; ++j) {
                Vec ej = zero_vec(C.f, M.dim);
                ej[j] = Scalar::one(C.f);
                Vec v = M.apply_left(idems[a], M.apply_right(ej, idems[b]));
                if (vec_is_zero(v) || C.ech_.contains(v)) continue;
                C.ech_.add(v);
                C.basis[a][b].push_back(std::move(v));
                ++at;
            }
        }
    if (C.ech_.rank() != M.dim) fail("InternalError", "corner decomposition does not span");
    return C;
}

Vec BiCorners::coords(int a, int b, const Vec& v) const {
    auto co = ech_.coordinates(v);
    if (!co) fail("InternalError", "vector outside module span");
    Vec r(co->begin() + offset[a][b], co->begin() + offset[a][b] + dim(a, b));
    return r;
}

std::optional<Vec> BiCorners::coords_exact(int a, int b, const Vec& v) const {
    auto co = ech_.coordinates(v);
    if (!co) return std::nullopt;
    for (int i = 0; i < (int)co->size(); ++i)
        if (!(*co)[i].is_zero() && (i < offset[a][b] || i >= offset[a][b] + dim(a, b))) return std::nullopt;
    Vec r(co->begin() + offset[a][b], co->begin() + offset[a][b] + dim(a, b));
    return r;
}

namespace {

SideCorners side_build(Field f, int dim, int na, const std::function<Vec(int a, const Vec&)>& corner_of) {
    SideCorners S;
    S.f = f;
    S.ambient = dim;
    S.basis.assign(na, {});
    S.offset.assign(na, 0);
    Echelon ech(f, dim, true);
    int at = 0;
    for (int a = 0; a < na; ++a) {
        S.offset[a] = at;
        for (int j = 0; j < dim; ++j) {
            Vec ej = zero_vec(f, dim);
            ej[j] = Scalar::one(f);
            Vec v = corner_of(a, ej);
            if (vec_is_zero(v) || ech.contains(v)) continue;
            ech.add(v);
            S.basis[a].push_back(std::move(v));
            ++at;
        }
    }
    if (ech.rank() != dim) fail("InternalError", "corner decomposition does not span");
    S.set_echelon(std::move(ech));
    return S;
}

}  // namespace

void SideCorners::set_echelon(Echelon e) { ech_ = std::move(e); }

SideCorners SideCorners::left(const LeftModule& M, const std::vector<Vec>& idems) {
    return side_build(M.A->f, M.dim, static_cast<int>(idems.size()),
                      [&](int a, const Vec& v) { return M.apply(idems[a], v); });
}

SideCorners SideCorners::right(const RightModule& M, const std::vector<Vec>& idems) {
    return side_build(M.A->f, M.dim, static_cast<int>(idems.size()),
                      [&](int a, const Vec& v) { return M.apply(v, idems[a]); });
}

Vec SideCorners::coords(int a, const Vec& v) const {
    auto co = ech_.coordinates(v);
    if (!co) fail("InternalError", "vector outside module span");
    Vec r(co->begin() + offset[a], co->begin() + offset[a] + dim(a));
    return r;
}

// ------------------------------------------------------ cochain complex

CochainComplex::CochainComplex(Bimodule M, bool vertex_mode, long coord_cap)
    : A_(M.A), M_(std::move(M)), cap_(coord_cap) {
    F_ = Frame::build(A_, vertex_mode);
    C_ = BiCorners::build(M_, F_.idems);
}

CochainComplex CochainComplex::hochschild(const AlgP& A, bool vertex_mode, long coord_cap) {
    CochainComplex cx(regular_bimodule(A), vertex_mode, coord_cap);
    cx.regular_ = true;
    return cx;
}

void CochainComplex::ensure_level(int p) {
    while ((int)levels_.size() <= p) {
        int q = static_cast<int>(levels_.size());
        Level L;
        long total = 0;
        auto push = [&](std::vector<int> walk, int cl, int cr) {
            L.cl.push_back(cl);
            L.cr.push_back(cr);
            L.offset.push_back(static_cast<int>(total));
            total += C_.dim(cl, cr);
            if (q >= 1) L.index[walk] = static_cast<int>(L.walks.size());
            L.walks.push_back(std::move(walk));
        };
        if (q == 0) {
            for (int a = 0; a < F_.nidem(); ++a) push({}, a, a);
        } else if (q == 1) {
            for (int r = 0; r < F_.rdim(); ++r) push({r}, F_.rl[r], F_.rr[r]);
        } else {
            const Level& P = levels_[q - 1];
            for (size_t t = 0; t < P.walks.size(); ++t)
                for (int r = 0; r < F_.rdim(); ++r) {
                    if (F_.rl[r] != P.cr[t]) continue;
                    auto walk = P.walks[t];
                    walk.push_back(r);
                    push(std::move(walk), P.cl[t], F_.rr[r]);
                }
        }
        if (total > cap_) fail("DimensionCap", "cochain space in degree " + std::to_string(q) + " exceeds " +
                                                   std::to_string(cap_) + " coordinates");
        L.total = static_cast<int>(total);
        levels_.push_back(std::move(L));
    }
}

int CochainComplex::chain_count(int p) {
    ensure_level(p);
    return static_cast<int>(levels_[p].walks.size());
}

const std::vector<int>& CochainComplex::chain_walk(int p, int t) {
    ensure_level(p);
    return levels_[p].walks[t];
}

std::pair<int, int> CochainComplex::chain_corner(int p, int t) {
    ensure_level(p);
    return {levels_[p].cl[t], levels_[p].cr[t]};
}

int CochainComplex::chain_offset(int p, int t) {
    ensure_level(p);
    return levels_[p].offset[t];
}

int CochainComplex::chain_index(int p, const std::vector<int>& walk) {
    ensure_level(p);
    if (p == 0) return F_.nidem() == 1 ? 0 : -1;
    auto it = levels_[p].index.find(walk);
    return it == levels_[p].index.end() ? -1 : it->second;
}

int CochainComplex::cochain_dim(int p) {
    ensure_level(p);
    return levels_[p].total;
}

void CochainComplex::ensure_diff(int p) {
    if ((int)diff_.size() <= p) diff_.resize(p + 1);
    if (diff_[p]) return;
    ensure_level(p + 1);
    const Level& rowsL = levels_[p + 1];
    const Level& colsL = levels_[p];
    SparseMatrix d(A_->f, rowsL.total, colsL.total);

    // r acting on corner bases, expressed in corner coordinates again
    std::map<std::pair<int, int>, std::vector<Vec>> lact, ract;
    auto left_action = [&](int r, int b) -> const std::vector<Vec>& {
        auto key = std::make_pair(r, b);
        auto it = lact.find(key);
        if (it != lact.end()) return it->second;
        std::vector<Vec> out;
        int a_in = F_.rr[r], a_out = F_.rl[r];
        for (int k = 0; k < C_.dim(a_in, b); ++k)
            out.push_back(C_.coords(a_out, b, M_.apply_left(F_.rbasis[r], C_.vec(a_in, b, k))));
        return lact.emplace(key, std::move(out)).first->second;
    };
    auto right_action = [&](int a, int r) -> const std::vector<Vec>& {
        auto key = std::make_pair(a, r);
        auto it = ract.find(key);
        if (it != ract.end()) return it->second;
        std::vector<Vec> out;
        int b_in = F_.rl[r], b_out = F_.rr[r];
        for (int k = 0; k < C_.dim(a, b_in); ++k)
            out.push_back(C_.coords(a, b_out, M_.apply_right(C_.vec(a, b_in, k), F_.rbasis[r])));
        return ract.emplace(key, std::move(out)).first->second;
    };

    for (size_t s = 0; s < rowsL.walks.size(); ++s) {
        const auto& w = rowsL.walks[s];
        int a = rowsL.cl[s], b = rowsL.cr[s];
        int dout = C_.dim(a, b);
        if (dout == 0) continue;
        int roff = rowsL.offset[s];
        if (p == 0) {
            int r = w[0];
            {  // r · m, m in the diagonal block at rr[r]
                int blk = F_.rr[r];
                const auto& act = left_action(r, blk);
                for (int k = 0; k < (int)act.size(); ++k)
                    for (int i = 0; i < dout; ++i)
                        if (!act[k][i].is_zero()) d.add(roff + i, colsL.offset[blk] + k, act[k][i]);
            }
            {  // -(m · r), m in the diagonal block at rl[r]
                int blk = F_.rl[r];
                const auto& act = right_action(blk, r);
                for (int k = 0; k < (int)act.size(); ++k)
                    for (int i = 0; i < dout; ++i)
                        if (!act[k][i].is_zero()) d.add(roff + i, colsL.offset[blk] + k, -act[k][i]);
            }
            continue;
        }
        // first: r_1 · c(r_2 ... r_{p+1})
        {
            std::vector<int> child(w.begin() + 1, w.end());
            int t = chain_index(p, child);
            if (t >= 0 && C_.dim(colsL.cl[t], colsL.cr[t]) > 0) {
                const auto& act = left_action(w[0], b);
                for (int k = 0; k < (int)act.size(); ++k)
                    for (int i = 0; i < dout; ++i)
                        if (!act[k][i].is_zero()) d.add(roff + i, colsL.offset[t] + k, act[k][i]);
            }
        }
        // middle: (-1)^i c(..., pi_r(r_i r_{i+1}), ...)
        for (int i = 1; i <= p; ++i) {
            bool neg = i % 2 == 1;
            for (const auto& [k, lam] : F_.rprod(w[i - 1], w[i])) {
                std::vector<int> child;
                child.reserve(p);
                child.insert(child.end(), w.begin(), w.begin() + (i - 1));
                child.push_back(k);
                child.insert(child.end(), w.begin() + (i + 1), w.end());
                int t = chain_index(p, child);
                if (t < 0) continue;
                Scalar c = neg ? -lam : lam;
                for (int m = 0; m < dout; ++m) d.add(roff + m, colsL.offset[t] + m, c);
            }
        }
        // last: (-1)^{p+1} c(r_1 ... r_p) · r_{p+1}
        {
            std::vector<int> child(w.begin(), w.end() - 1);
            int t = chain_index(p, child);
            if (t >= 0 && C_.dim(colsL.cl[t], colsL.cr[t]) > 0) {
                bool neg = (p + 1) % 2 == 1;
                const auto& act = right_action(a, w[p]);
                for (int k = 0; k < (int)act.size(); ++k)
                    for (int i = 0; i < dout; ++i)
                        if (!act[k][i].is_zero()) d.add(roff + i, colsL.offset[t] + k, neg ? -act[k][i] : act[k][i]);
            }
        }
    }
    diff_[p] = std::move(d);
}

const SparseMatrix& CochainComplex::differential(int p) {
    ensure_diff(p);
    return *diff_[p];
}

bool CochainComplex::square_is_zero(int p) {
    auto lo = differential(p).col_lists();
    auto hi = differential(p + 1).col_lists();
    for (const auto& col : lo) {
        std::map<int, Scalar> acc;
        for (const auto& [i, v] : col)
            for (const auto& [i2, v2] : hi[i]) {
                auto it = acc.find(i2);
                if (it == acc.end())
                    acc.emplace(i2, v * v2);
                else
                    it->second += v * v2;
            }
        for (const auto& [_, v] : acc)
            if (!v.is_zero()) return false;
    }
    return true;
}

void CochainComplex::ensure_cohomology(int p) {
    if ((int)hdim_.size() <= p) hdim_.resize(p + 1);
    if (hdim_[p]) return;
    int dimc = cochain_dim(p);
    int r1 = differential(p).rank();
    int r0 = p == 0 ? 0 : differential(p - 1).rank();
    hdim_[p] = dimc - r1 - r0;
}

int CochainComplex::cohomology_dim(int p) {
    ensure_cohomology(p);
    return *hdim_[p];
}

std::vector<int> CochainComplex::cohomology_dims(int p_max) {
    std::vector<int> out;
    for (int p = 0; p <= p_max; ++p) out.push_back(cohomology_dim(p));
    return out;
}

void CochainComplex::ensure_reps(int p) {
    if ((int)reps_.size() <= p) {
        reps_.resize(p + 1);
        repech_.resize(p + 1);
    }
    if (reps_[p]) return;
    int dimc = cochain_dim(p);
    Echelon ech(A_->f, dimc, true);
    if (p > 0) {
        const auto& prev = differential(p - 1);
        auto cols = prev.col_lists();
        for (const auto& col : cols) {
            Vec v = zero_vec(A_->f, dimc);
            for (const auto& [i, val] : col) v[i] = val;
            ech.add(v);
        }
    }
    // every image column is add()-ed first, so representative j sits at
    // inserted position (#image columns + j) for coordinate slicing
    std::vector<Vec> reps;
    for (const auto& k : differential(p).kernel_basis()) {
        if (ech.contains(k)) continue;
        ech.add(k);
        reps.push_back(k);
    }
    reps_[p] = std::move(reps);
    repech_[p] = std::move(ech);
}

const std::vector<Vec>& CochainComplex::representatives(int p) {
    ensure_reps(p);
    return *reps_[p];
}

bool CochainComplex::is_cocycle(int p, const Vec& c) { return vec_is_zero(differential(p).apply(c)); }

std::optional<Vec> CochainComplex::class_coordinates(int p, const Vec& c) {
    if (!is_cocycle(p, c)) return std::nullopt;
    ensure_reps(p);
    auto co = repech_[p]->coordinates(c);
    if (!co) fail("InternalError", "cocycle outside kernel span");
    // inserted order: image columns (possibly dependent), then representatives
    int nim = 0;
    if (p > 0) nim = differential(p - 1).cols();
    Vec out;
    for (size_t j = 0; j < reps_[p]->size(); ++j) out.push_back((*co)[nim + j]);
    return out;
}

std::optional<Vec> CochainComplex::coboundary_witness(int p, const Vec& c) {
    if (p == 0) {
        if (vec_is_zero(c)) return Vec{};
        return std::nullopt;
    }
    return differential(p - 1).solve(c);
}

Vec CochainComplex::make_cochain(int p, const std::function<Vec(const std::vector<int>&, int, int)>& value) {
    ensure_level(p);
    const Level& L = levels_[p];
    Vec out = zero_vec(A_->f, L.total);
    for (size_t t = 0; t < L.walks.size(); ++t) {
        int a = L.cl[t], b = L.cr[t];
        if (C_.dim(a, b) == 0) continue;
        Vec v = value(L.walks[t], a, b);
        if ((int)v.size() != M_.dim) fail("InternalError", "cochain value has wrong dimension");
        if (vec_is_zero(v)) continue;
        auto co = C_.coords_exact(a, b, v);
        if (!co) fail("ValueOutsideCorner", "cochain value escapes its corner");
        for (int k = 0; k < (int)co->size(); ++k) out[L.offset[t] + k] = (*co)[k];
    }
    return out;
}

Vec CochainComplex::value_at(int p, const Vec& c, int t) {
    ensure_level(p);
    const Level& L = levels_[p];
    int a = L.cl[t], b = L.cr[t];
    Vec v = zero_vec(A_->f, M_.dim);
    for (int k = 0; k < C_.dim(a, b); ++k) vec_axpy(v, c[L.offset[t] + k], C_.vec(a, b, k));
    return v;
}

Vec CochainComplex::value_at_block(const Vec& c, int a) { return value_at(0, c, a); }

Vec CochainComplex::evaluate(int p, const Vec& c, const std::vector<Vec>& args) {
    if ((int)args.size() != p) fail("InternalError", "evaluate arity mismatch");
    ensure_level(p);
    Vec out = zero_vec(A_->f, M_.dim);
    if (p == 0) {
        for (int a = 0; a < F_.nidem(); ++a) vec_axpy(out, Scalar::one(A_->f), value_at(0, c, a));
        return out;
    }
    std::vector<Vec> co;
    for (const auto& x : args) co.push_back(F_.pi_r(x));
    std::vector<int> walk(p);
    std::function<void(int, const Scalar&)> rec = [&](int at, const Scalar& coeff) {
        if (at == p) {
            int t = chain_index(p, walk);
            if (t >= 0) vec_axpy(out, coeff, value_at(p, c, t));
            return;
        }
        for (int r = 0; r < F_.rdim(); ++r) {
            if (co[at][r].is_zero()) continue;
            if (at > 0 && F_.rl[r] != F_.rr[walk[at - 1]]) continue;
            walk[at] = r;
            rec(at + 1, coeff * co[at][r]);
        }
    };
    rec(0, Scalar::one(A_->f));
    return out;
}

Vec CochainComplex::cup(int p, const Vec& cf, int q, const Vec& cg) {
    if (!regular_) fail("NeedsRegularCoefficients", "cup product needs coefficients in the algebra");
    ensure_level(p + q);
    const Level& L = levels_[p + q];
    Vec out = zero_vec(A_->f, L.total);
    for (size_t s = 0; s < L.walks.size(); ++s) {
        int a = L.cl[s], b = L.cr[s];
        if (C_.dim(a, b) == 0) continue;
        const auto& w = L.walks[s];
        Vec vf, vg;
        if (p == 0) {
            vf = value_at(0, cf, a);
        } else {
            std::vector<int> pre(w.begin(), w.begin() + p);
            int t = chain_index(p, pre);
            if (t < 0) continue;
            vf = value_at(p, cf, t);
        }
        if (vec_is_zero(vf)) continue;
        if (q == 0) {
            vg = value_at(0, cg, b);
        } else {
            std::vector<int> suf(w.begin() + p, w.end());
            int t = chain_index(q, suf);
            if (t < 0) continue;
            vg = value_at(q, cg, t);
        }
        if (vec_is_zero(vg)) continue;
        Vec prod = A_->mulvec(vf, vg);
        if (vec_is_zero(prod)) continue;
        Vec co = C_.coords(a, b, prod);
        for (int k = 0; k < (int)co.size(); ++k) out[L.offset[s] + k] += co[k];
    }
    return out;
}

Vec CochainComplex::circ(int p, const Vec& cf, int q, const Vec& cg) {
    if (!regular_) fail("NeedsRegularCoefficients", "composition needs coefficients in the algebra");
    if (F_.vertex_mode) fail("NeedsUnitFrame", "Gerstenhaber operations use the frame relative to the unit");
    int n = p + q - 1;
    if (n < 0) fail("BadDegree", "composition of two degree 0 cochains");
    ensure_level(n);
    const Level& L = levels_[n];
    Vec out = zero_vec(A_->f, L.total);
    if (p == 0) return out;
    for (size_t s = 0; s < L.walks.size(); ++s) {
        const auto& w = L.walks[s];
        Vec acc = zero_vec(A_->f, M_.dim);
        for (int i = 1; i <= p; ++i) {
            Vec vg;
            if (q == 0) {
                vg = value_at(0, cg, 0);
            } else {
                std::vector<int> inner(w.begin() + (i - 1), w.begin() + (i - 1 + q));
                int tg = chain_index(q, inner);
                if (tg < 0) continue;
                vg = value_at(q, cg, tg);
            }
            if (vec_is_zero(vg)) continue;
            Vec gco = F_.pi_r(vg);
            bool neg = ((i - 1) * (q - 1)) % 2 == 1;
            for (int k = 0; k < F_.rdim(); ++k) {
                if (gco[k].is_zero()) continue;
                std::vector<int> outer;
                outer.reserve(p);
                outer.insert(outer.end(), w.begin(), w.begin() + (i - 1));
                outer.push_back(k);
                outer.insert(outer.end(), w.begin() + (i - 1 + q), w.end());
                int tf = chain_index(p, outer);
                if (tf < 0) continue;
                Vec vf = value_at(p, cf, tf);
                vec_axpy(acc, neg ? -gco[k] : gco[k], vf);
            }
        }
        if (vec_is_zero(acc)) continue;
        Vec co = C_.coords(L.cl[s], L.cr[s], acc);
        for (int k = 0; k < (int)co.size(); ++k) out[L.offset[s] + k] += co[k];
    }
    return out;
}

Vec CochainComplex::bracket(int p, const Vec& cf, int q, const Vec& cg) {
    Vec fg = circ(p, cf, q, cg);
    Vec gf = circ(q, cg, p, cf);
    bool neg = ((p - 1) * (q - 1)) % 2 == 1;
    if (neg)
        vec_axpy(fg, Scalar::one(A_->f), gf);
    else
        vec_axpy(fg, -Scalar::one(A_->f), gf);
    return fg;
}

// ------------------------------------------------------ chain level maps

SparseMatrix inflation_matrix(CochainComplex& from_vertex, CochainComplex& to_unit, int p) {
    const Frame& FV = from_vertex.frame();
    const Frame& FU = to_unit.frame();
    if (!FV.vertex_mode || FU.vertex_mode) fail("InternalError", "inflation goes from the vertex frame to the unit frame");
    SparseMatrix T(FV.A->f, to_unit.cochain_dim(p), from_vertex.cochain_dim(p));
    if (p == 0) {
        for (int a = 0; a < FV.nidem(); ++a) {
            for (int k = 0; k < from_vertex.corners().dim(a, a); ++k) {
                Vec v = from_vertex.corners().vec(a, a, k);
                Vec co = to_unit.corners().coords(0, 0, v);
                for (int i = 0; i < (int)co.size(); ++i)
                    if (!co[i].is_zero())
                        T.add(to_unit.chain_offset(0, 0) + i, from_vertex.chain_offset(0, a) + k, co[i]);
            }
        }
        return T;
    }
    int nc = to_unit.chain_count(p);
    std::vector<Vec> slotco(p);
    for (int s = 0; s < nc; ++s) {
        const auto& w = to_unit.chain_walk(p, s);
        for (int i = 0; i < p; ++i) slotco[i] = FV.pi_r(FU.rbasis[w[i]]);
        std::vector<int> walk(p);
        std::function<void(int, const Scalar&)> rec = [&](int at, const Scalar& coeff) {
            if (at == p) {
                int t = from_vertex.chain_index(p, walk);
                if (t < 0) return;
                auto [a, b] = from_vertex.chain_corner(p, t);
                for (int k = 0; k < from_vertex.corners().dim(a, b); ++k) {
                    Vec co = to_unit.corners().coords(0, 0, from_vertex.corners().vec(a, b, k));
                    for (int i = 0; i < (int)co.size(); ++i)
                        if (!co[i].is_zero())
                            T.add(to_unit.chain_offset(p, s) + i, from_vertex.chain_offset(p, t) + k,
                                  coeff * co[i]);
                }
                return;
            }
            for (int r = 0; r < FV.rdim(); ++r) {
                if (slotco[at][r].is_zero()) continue;
                if (at > 0 && FV.rl[r] != FV.rr[walk[at - 1]]) continue;
                walk[at] = r;
                rec(at + 1, coeff * slotco[at][r]);
            }
        };
        rec(0, Scalar::one(FV.A->f));
    }
    return T;
}

SparseMatrix coefficient_matrix(CochainComplex& from, CochainComplex& to, const std::vector<Vec>& mmap, int p) {
    if (from.chain_count(p) != to.chain_count(p)) fail("InternalError", "coefficient map across different frames");
    Field f = from.algebra()->f;
    SparseMatrix T(f, to.cochain_dim(p), from.cochain_dim(p));
    for (int t = 0; t < from.chain_count(p); ++t) {
        auto [a, b] = from.chain_corner(p, t);
        for (int k = 0; k < from.corners().dim(a, b); ++k) {
            const Vec& v = from.corners().vec(a, b, k);
            Vec img = zero_vec(f, to.coefficients().dim);
            for (int j = 0; j < (int)v.size(); ++j)
                if (!v[j].is_zero()) vec_axpy(img, v[j], mmap[j]);
            if (vec_is_zero(img)) continue;
            Vec co = to.corners().coords(a, b, img);
            for (int i = 0; i < (int)co.size(); ++i)
                if (!co[i].is_zero()) T.add(to.chain_offset(p, t) + i, from.chain_offset(p, t) + k, co[i]);
        }
    }
    return T;
}

SparseMatrix pullback_matrix(const AlgebraMap& phi, CochainComplex& on_dst, CochainComplex& on_src, int p) {
    const Frame& FB = on_dst.frame();
    const Frame& FA = on_src.frame();
    if (FB.vertex_mode || FA.vertex_mode) fail("InternalError", "pullback uses unit frames");
    Field f = phi.src->f;
    SparseMatrix T(f, on_src.cochain_dim(p), on_dst.cochain_dim(p));
    if (p == 0) {
        for (int k = 0; k < on_dst.corners().dim(0, 0); ++k) {
            Vec co = on_src.corners().coords(0, 0, on_dst.corners().vec(0, 0, k));
            for (int i = 0; i < (int)co.size(); ++i)
                if (!co[i].is_zero()) T.add(on_src.chain_offset(0, 0) + i, on_dst.chain_offset(0, 0) + k, co[i]);
        }
        return T;
    }
    int nc = on_src.chain_count(p);
    std::vector<Vec> slotco(p);
    for (int s = 0; s < nc; ++s) {
        const auto& w = on_src.chain_walk(p, s);
        for (int i = 0; i < p; ++i) slotco[i] = FB.pi_r(phi.apply(FA.rbasis[w[i]]));
        std::vector<int> walk(p);
        std::function<void(int, const Scalar&)> rec = [&](int at, const Scalar& coeff) {
            if (at == p) {
                int t = on_dst.chain_index(p, walk);
                if (t < 0) return;
                for (int k = 0; k < on_dst.corners().dim(0, 0); ++k) {
                    Vec co = on_src.corners().coords(0, 0, on_dst.corners().vec(0, 0, k));
                    for (int i = 0; i < (int)co.size(); ++i)
                        if (!co[i].is_zero())
                            T.add(on_src.chain_offset(p, s) + i, on_dst.chain_offset(p, t) + k, coeff * co[i]);
                }
                return;
            }
            for (int r = 0; r < FB.rdim(); ++r) {
                if (slotco[at][r].is_zero()) continue;
                walk[at] = r;
                rec(at + 1, coeff * slotco[at][r]);
            }
        };
        rec(0, Scalar::one(f));
    }
    return T;
}

// ------------------------------------------------------------- tor / ext

namespace {

struct FlatLevel {
    std::vector<std::vector<int>> walks;
    std::vector<int> offset;
    std::map<std::vector<int>, int> index;
    int total = 0;
};

// Walk levels shared by the tor and ext complexes.  bdim(walk, a) is the
// block dimension; a is the idem index for the empty walk, -1 otherwise.
std::vector<FlatLevel> walk_levels(const Frame& F, int degmax, long cap,
                                   const std::function<int(const std::vector<int>&, int)>& bdim) {
    std::vector<FlatLevel> levels;
    for (int q = 0; q <= degmax; ++q) {
        FlatLevel L;
        long total = 0;
        auto push = [&](std::vector<int> walk, int a) {
            L.offset.push_back(static_cast<int>(total));
            total += bdim(walk, a);
            if (q >= 1) L.index[walk] = static_cast<int>(L.walks.size());
            L.walks.push_back(std::move(walk));
        };
        if (q == 0) {
            for (int a = 0; a < F.nidem(); ++a) push({}, a);
        } else if (q == 1) {
            for (int r = 0; r < F.rdim(); ++r) push({r}, -1);
        } else {
            const FlatLevel& P = levels[q - 1];
            for (size_t t = 0; t < P.walks.size(); ++t)
                for (int r = 0; r < F.rdim(); ++r) {
                    if (F.rl[r] != F.rr[P.walks[t].back()]) continue;
                    auto walk = P.walks[t];
                    walk.push_back(r);
                    push(std::move(walk), -1);
                }
        }
        if (total > cap) fail("DimensionCap", "chain space in degree " + std::to_string(q) + " exceeds cap");
        L.total = static_cast<int>(total);
        levels.push_back(std::move(L));
    }
    return levels;
}

}  // namespace

std::vector<int> tor_dims(const AlgP& A, const RightModule& X, const LeftModule& Y, int q_max, bool vertex_mode,
                          long coord_cap) {
    Frame F = Frame::build(A, vertex_mode);
    SideCorners SX = SideCorners::right(X, F.idems);
    SideCorners SY = SideCorners::left(Y, F.idems);
    auto bdim = [&](const std::vector<int>& w, int a) -> int {
        if (w.empty()) return SX.dim(a) * SY.dim(a);
        return SX.dim(F.rl[w.front()]) * SY.dim(F.rr[w.back()]);
    };
    auto levels = walk_levels(F, q_max + 1, coord_cap, bdim);
    Field f = A->f;
    std::vector<int> ranks(q_max + 2, 0);  // ranks[q] = rank of d_q: T_q -> T_{q-1}
    for (int q = 1; q <= q_max + 1; ++q) {
        const FlatLevel& rows = levels[q - 1];
        const FlatLevel& cols = levels[q];
        SparseMatrix d(f, rows.total, cols.total);
        for (size_t s = 0; s < cols.walks.size(); ++s) {
            const auto& w = cols.walks[s];
            int ax = F.rl[w.front()], ay = F.rr[w.back()];
            int dx = SX.dim(ax), dy = SY.dim(ay);
            if (dx == 0 || dy == 0) continue;
            int coff = cols.offset[s];
            // x r_1 | drop first
            {
                int axm = F.rr[w.front()];
                int t;
                if (q == 1) {
                    t = axm;  // level 0 block = idem index
                } else {
                    std::vector<int> child(w.begin() + 1, w.end());
                    auto it = rows.index.find(child);
                    t = it == rows.index.end() ? -1 : it->second;
                }
                if (t >= 0) {
                    int dxm = SX.dim(axm);
                    for (int i = 0; i < dx; ++i) {
                        Vec u = X.apply(SX.vec(ax, i), F.rbasis[w.front()]);
                        if (vec_is_zero(u)) continue;
                        Vec co = SX.coords(axm, u);
                        for (int i2 = 0; i2 < dxm; ++i2)
                            if (!co[i2].is_zero())
                                for (int j = 0; j < dy; ++j)
                                    d.add(rows.offset[t] + i2 * dy + j, coff + i * dy + j, co[i2]);
                    }
                }
            }
            // middle contractions
            for (int i = 1; i <= q - 1; ++i) {
                bool neg = i % 2 == 1;
                for (const auto& [k, lam] : F.rprod(w[i - 1], w[i])) {
                    std::vector<int> child;
                    child.insert(child.end(), w.begin(), w.begin() + (i - 1));
                    child.push_back(k);
                    child.insert(child.end(), w.begin() + (i + 1), w.end());
                    auto it = rows.index.find(child);
                    if (it == rows.index.end()) continue;
                    Scalar c = neg ? -lam : lam;
                    for (int m = 0; m < dx * dy; ++m) d.add(rows.offset[it->second] + m, coff + m, c);
                }
            }
            // r_q y | drop last
            {
                int aym = F.rl[w.back()];
                std::vector<int> child(w.begin(), w.end() - 1);
                int t;
                if (q == 1)
                    t = aym;  // level 0 block = idem index
                else {
                    auto it = rows.index.find(child);
                    t = it == rows.index.end() ? -1 : it->second;
                }
                if (t >= 0) {
                    bool neg = q % 2 == 1;
                    int dym = SY.dim(aym);
                    for (int j = 0; j < dy; ++j) {
                        Vec u = Y.apply(F.rbasis[w.back()], SY.vec(ay, j));
                        if (vec_is_zero(u)) continue;
                        Vec co = SY.coords(aym, u);
                        for (int j2 = 0; j2 < dym; ++j2)
                            if (!co[j2].is_zero())
                                for (int i = 0; i < dx; ++i)
                                    d.add(rows.offset[t] + i * dym + j2, coff + i * dy + j,
                                          neg ? -co[j2] : co[j2]);
                    }
                }
            }
        }
        ranks[q] = d.rank();
    }
    std::vector<int> dims;
    for (int q = 0; q <= q_max; ++q) dims.push_back(levels[q].total - ranks[q] - ranks[q + 1]);
    return dims;
}

std::vector<int> ext_dims(const AlgP& A, const LeftModule& M, const LeftModule& N, int p_max, bool vertex_mode,
                          long coord_cap) {
    Frame F = Frame::build(A, vertex_mode);
    SideCorners SM = SideCorners::left(M, F.idems);
    SideCorners SN = SideCorners::left(N, F.idems);
    auto bdim = [&](const std::vector<int>& w, int a) -> int {
        if (w.empty()) return SM.dim(a) * SN.dim(a);
        return SM.dim(F.rr[w.back()]) * SN.dim(F.rl[w.front()]);
    };
    auto levels = walk_levels(F, p_max + 1, coord_cap, bdim);
    Field f = A->f;
    std::vector<int> ranks(p_max + 2, 0);  // ranks[p] = rank of delta^p: C^p -> C^{p+1}
    for (int p = 0; p <= p_max; ++p) {
        const FlatLevel& rows = levels[p + 1];
        const FlatLevel& cols = levels[p];
        SparseMatrix d(f, rows.total, cols.total);
        for (size_t s = 0; s < rows.walks.size(); ++s) {
            const auto& w = rows.walks[s];
            int am = F.rr[w.back()], an = F.rl[w.front()];
            int dm = SM.dim(am), dn = SN.dim(an);
            if (dm == 0 || dn == 0) continue;
            int roff = rows.offset[s];
            // r_1 · c(r_2,...; m)
            {
                int t, anc;
                if (p == 0) {
                    t = F.rr[w.front()];
                    anc = t;
                } else {
                    std::vector<int> child(w.begin() + 1, w.end());
                    auto it = cols.index.find(child);
                    t = it == cols.index.end() ? -1 : it->second;
                    anc = F.rl[w[1]];
                }
                if (t >= 0) {
                    int dnc = SN.dim(anc);
                    for (int i2 = 0; i2 < dnc; ++i2) {
                        Vec u = N.apply(F.rbasis[w.front()], SN.vec(anc, i2));
                        if (vec_is_zero(u)) continue;
                        Vec co = SN.coords(an, u);
                        for (int i = 0; i < dn; ++i)
                            if (!co[i].is_zero())
                                for (int j = 0; j < dm; ++j)
                                    d.add(roff + j * dn + i, cols.offset[t] + j * dnc + i2, co[i]);
                    }
                }
            }
            // middle contractions
            for (int i = 1; i <= p; ++i) {
                bool neg = i % 2 == 1;
                for (const auto& [k, lam] : F.rprod(w[i - 1], w[i])) {
                    std::vector<int> child;
                    child.insert(child.end(), w.begin(), w.begin() + (i - 1));
                    child.push_back(k);
                    child.insert(child.end(), w.begin() + (i + 1), w.end());
                    auto it = cols.index.find(child);
                    if (it == cols.index.end()) continue;
                    Scalar c = neg ? -lam : lam;
                    for (int m = 0; m < dm * dn; ++m) d.add(roff + m, cols.offset[it->second] + m, c);
                }
            }
            // (-1)^{p+1} c(r_1,...,r_p; r_{p+1} m)
            {
                int t, amc;
                if (p == 0) {
                    t = F.rl[w.back()];
                    amc = t;
                } else {
                    std::vector<int> child(w.begin(), w.end() - 1);
                    auto it = cols.index.find(child);
                    t = it == cols.index.end() ? -1 : it->second;
                    amc = F.rr[w[p - 1]];
                }
                if (t >= 0) {
                    bool neg = (p + 1) % 2 == 1;
                    int dmc = SM.dim(amc);
                    for (int j = 0; j < dm; ++j) {
                        Vec u = M.apply(F.rbasis[w.back()], SM.vec(am, j));
                        if (vec_is_zero(u)) continue;
                        Vec co = SM.coords(amc, u);
                        for (int j2 = 0; j2 < dmc; ++j2)
                            if (!co[j2].is_zero())
                                for (int i = 0; i < dn; ++i)
                                    d.add(roff + j * dn + i, cols.offset[t] + j2 * dn + i,
                                          neg ? -co[j2] : co[j2]);
                    }
                }
            }
        }
        ranks[p] = d.rank();
    }
    std::vector<int> dims;
    for (int p = 0; p <= p_max; ++p) dims.push_back(levels[p].total - ranks[p] - (p == 0 ? 0 : ranks[p - 1]));
    return dims;
}

}  // namespace hhkit
