#include "hhkit/monogenic.hpp"

#include <array>
#include <sstream>

namespace hhkit {

namespace {

Poly reduce_mod(const Poly& a, const Poly& m) {
    if (m.degree() <= 0) return Poly::zero(a.field());
    return a.divmod(m).second;
}

}  // namespace

MonogenicPresentation presentation(const Poly& f) {
    if (f.is_zero() || !f.is_monic()) fail("NotMonic", "defining polynomial must be monic");
    if (f.degree() < 1) fail("NotMonic", "defining polynomial must have positive degree");
    Field k = f.field();
    MonogenicPresentation P;
    P.field = k;
    P.f = f;
    Poly fp = f.derivative();
    P.d = fp.is_zero() ? f : gcd_monic(f, fp);
    P.q = f.divmod(P.d).first;
    int n = f.degree();
    // u = q² Σ αᵢ i(i-1)/2 X^{i-2}, the integer coefficient taken in Z
    Poly s = Poly::zero(k);
    for (int i = 2; i <= n; ++i) {
        long bin = static_cast<long>(i) * (i - 1) / 2;
        Scalar c = f.coeff(i) * Scalar(k, bin);
        if (!c.is_zero()) s = s + Poly::monomial(k, i - 2, c);
    }
    P.u = reduce_mod(P.q * P.q * s, P.d);
    // w = Σᵢ αᵢ Σ_{s+t+1=i} quot_f((s+1) X^s q) X^t
    Poly wsum = Poly::zero(k);
    for (int i = 1; i <= n; ++i) {
        if (f.coeff(i).is_zero()) continue;
        Poly inner = Poly::zero(k);
        for (int sdeg = 0; sdeg < i; ++sdeg) {
            int t = i - 1 - sdeg;
            Poly num = Poly::monomial(k, sdeg, Scalar(k, sdeg + 1)) * P.q;
            Poly quo = num.divmod(f).first;
            inner = inner + quo * Poly::monomial(k, t, Scalar::one(k));
        }
        wsum = wsum + inner * f.coeff(i);
    }
    P.w = reduce_mod(wsum, P.d);
    return P;
}

int hh_dim(const MonogenicPresentation& P, int n) { return n == 0 ? P.f.degree() : std::max(P.d.degree(), 0); }

std::vector<int> hh_dims(const MonogenicPresentation& P, int p_max) {
    std::vector<int> out;
    for (int p = 0; p <= p_max; ++p) out.push_back(hh_dim(P, p));
    return out;
}

HHElement normal_form(const MonogenicPresentation& P, const HHElement& a) {
    if (a.degree < 0) fail("BadDegree", "negative cohomological degree");
    return {a.degree, reduce_mod(a.coeff, a.degree == 0 ? P.f : P.d)};
}

HHElement cup_normal_form(const MonogenicPresentation& P, const HHElement& a, const HHElement& b) {
    int n = a.degree + b.degree;
    Poly prod = a.coeff * b.coeff;
    if (a.degree % 2 == 1 && b.degree % 2 == 1) prod = prod * P.u;
    return normal_form(P, {n, prod});
}

HHElement bracket_normal_form(const MonogenicPresentation& P, const HHElement& a, const HHElement& b) {
    Field k = P.field;
    int n = a.degree + b.degree - 1;
    if (n < 0) n = 0;
    bool aodd = a.degree % 2 == 1, bodd = b.degree % 2 == 1;
    const Poly &A = a.coeff, &B = b.coeff;
    if (!aodd && !bodd) return normal_form(P, {n, Poly::zero(k)});
    if (aodd && bodd) {
        // ((A B' - A' B) q + (i-j) A B w) tau zeta^{i+j}
        int i = (a.degree - 1) / 2, j = (b.degree - 1) / 2;
        Poly c = (A * B.derivative() - A.derivative() * B) * P.q + A * B * P.w * Scalar(k, i - j);
        return normal_form(P, {n, c});
    }
    if (!aodd) {
        // (i A B w - A' B q) zeta^{i+j}
        int i = a.degree / 2;
        Poly c = A * B * P.w * Scalar(k, i) - A.derivative() * B * P.q;
        return normal_form(P, {n, c});
    }
    // (A B' q - j A B w) zeta^{i+j}
    int j = b.degree / 2;
    Poly c = A * B.derivative() * P.q - A * B * P.w * Scalar(k, j);
    return normal_form(P, {n, c});
}

std::string show_element(const HHElement& a) {
    std::string coeff = a.coeff.is_zero() ? "0" : "(" + a.coeff.str() + ")";
    if (a.coeff.is_zero()) return "0";
    if (a.degree == 0) return coeff;
    std::string tail;
    if (a.degree % 2 == 1) {
        tail = "tau";
        int j = (a.degree - 1) / 2;
        if (j == 1) tail += "*zeta";
        if (j > 1) tail += "*zeta^" + std::to_string(j);
    } else {
        int j = a.degree / 2;
        tail = j == 1 ? "zeta" : "zeta^" + std::to_string(j);
    }
    return coeff + "*" + tail;
}

std::vector<std::array<std::string, 3>> generator_bracket_table(const MonogenicPresentation& P) {
    Field k = P.field;
    HHElement x{0, Poly::X(k)}, tau{1, Poly::constant(Scalar::one(k))}, zeta{2, Poly::constant(Scalar::one(k))};
    std::vector<std::pair<std::string, HHElement>> gens = {{"x", x}, {"tau", tau}, {"zeta", zeta}};
    std::vector<std::array<std::string, 3>> rows;
    for (const auto& [la, ea] : gens)
        for (const auto& [lb, eb] : gens)
            rows.push_back({la, lb, show_element(bracket_normal_form(P, ea, eb))});
    return rows;
}

// ------------------------------------------------------- coefficient side

namespace {

Vec mat_apply(const DenseMat& T, const Vec& v) {
    Field k = v.empty() ? Field::Q() : v[0].field();
    Vec r = zero_vec(k, static_cast<int>(T.size()));
    for (size_t j = 0; j < T.size(); ++j)
        if (!v[j].is_zero()) vec_axpy(r, v[j], T[j]);
    return r;
}

DenseMat mat_mul(const DenseMat& S, const DenseMat& T) {
    DenseMat r;
    for (const auto& col : T) r.push_back(mat_apply(S, col));
    return r;
}

DenseMat mat_identity(Field k, int n) {
    DenseMat r;
    for (int j = 0; j < n; ++j) {
        Vec c = zero_vec(k, n);
        c[j] = Scalar::one(k);
        r.push_back(c);
    }
    return r;
}

DenseMat mat_add_scaled(DenseMat S, const Scalar& c, const DenseMat& T) {
    for (size_t j = 0; j < S.size(); ++j) vec_axpy(S[j], c, T[j]);
    return S;
}

bool mat_is_zero(const DenseMat& T) {
    for (const auto& c : T)
        if (!vec_is_zero(c)) return false;
    return true;
}

int mat_rank(Field k, const DenseMat& T) {
    int n = T.empty() ? 0 : static_cast<int>(T[0].size());
    SparseMatrix m(k, n, static_cast<int>(T.size()));
    for (int j = 0; j < (int)T.size(); ++j)
        for (int i = 0; i < n; ++i)
            if (!T[j][i].is_zero()) m.add(i, j, T[j][i]);
    return m.rank();
}

DenseMat poly_at(const Poly& f, const DenseMat& T, Field k) {
    int n = static_cast<int>(T.size());
    DenseMat acc(n, zero_vec(k, n));
    DenseMat power = mat_identity(k, n);
    for (int i = 0; i <= f.degree(); ++i) {
        if (!f.coeff(i).is_zero()) acc = mat_add_scaled(std::move(acc), f.coeff(i), power);
        if (i < f.degree()) power = mat_mul(T, power);
    }
    return acc;
}

struct TwoMaps {
    DenseMat delta, ebar;
    int dim = 0;
};

TwoMaps collapse_maps(const Poly& f, const DenseMat& XL, const DenseMat& XR) {
    Field k = f.field();
    int m = static_cast<int>(XL.size());
    if ((int)XR.size() != m) fail("BadBimodule", "XL and XR act on different spaces");
    if (!mat_is_zero(mat_add_scaled(mat_mul(XL, XR), -Scalar::one(k), mat_mul(XR, XL))))
        fail("BadBimodule", "XL and XR do not commute");
    if (!mat_is_zero(poly_at(f, XL, k)) || !mat_is_zero(poly_at(f, XR, k)))
        fail("BadBimodule", "f does not annihilate the actions");
    TwoMaps out;
    out.dim = m;
    out.delta = mat_add_scaled(XL, -Scalar::one(k), XR);
    DenseMat acc(m, zero_vec(k, m));
    std::vector<DenseMat> lp = {mat_identity(k, m)}, rp = {mat_identity(k, m)};
    for (int i = 1; i <= f.degree(); ++i) {
        lp.push_back(mat_mul(XL, lp.back()));
        rp.push_back(mat_mul(XR, rp.back()));
    }
    for (int i = 1; i <= f.degree(); ++i) {
        if (f.coeff(i).is_zero()) continue;
        for (int s = 0; s + 1 <= i; ++s) acc = mat_add_scaled(std::move(acc), f.coeff(i), mat_mul(lp[s], rp[i - 1 - s]));
    }
    out.ebar = std::move(acc);
    return out;
}

}  // namespace

DenseMat companion_matrix(const Poly& f) {
    Field k = f.field();
    int n = f.degree();
    DenseMat T;
    for (int j = 0; j < n; ++j) {
        Vec c = zero_vec(k, n);
        if (j + 1 < n)
            c[j + 1] = Scalar::one(k);
        else
            for (int i = 0; i < n; ++i) c[i] = -f.coeff(i);
        T.push_back(c);
    }
    return T;
}

std::vector<int> hh_with_coefficients(const Poly& f, const DenseMat& XL, const DenseMat& XR, int p_max) {
    auto maps = collapse_maps(f, XL, XR);
    Field k = f.field();
    int rd = mat_rank(k, maps.delta), re = mat_rank(k, maps.ebar);
    int h0 = maps.dim - rd;
    int h12 = maps.dim - rd - re;
    std::vector<int> out;
    for (int p = 0; p <= p_max; ++p) out.push_back(p == 0 ? h0 : h12);
    return out;
}

std::vector<int> periodic_complex_dims(const Poly& f, const DenseMat& XL, const DenseMat& XR, int p_max) {
    auto maps = collapse_maps(f, XL, XR);
    Field k = f.field();
    // M --delta--> M --ebar--> M --delta--> ...
    std::vector<int> rank_out(p_max + 1, 0);
    for (int p = 0; p <= p_max; ++p) rank_out[p] = mat_rank(k, p % 2 == 0 ? maps.delta : maps.ebar);
    std::vector<int> out;
    for (int p = 0; p <= p_max; ++p) {
        int rin = p == 0 ? 0 : rank_out[p - 1];
        out.push_back(maps.dim - rank_out[p] - rin);
    }
    return out;
}

// -------------------------------------------------------- representatives

namespace {

// monomial exponent of an rbasis element of the normalized bar frame of
// k[X]/(f): each representative is a power of x
int monomial_power(const Frame& F, int r) {
    const Vec& v = F.rbasis[r];
    int hit = -1;
    for (int i = 0; i < (int)v.size(); ++i)
        if (!v[i].is_zero()) {
            if (hit >= 0) fail("InternalError", "monogenic frame element is not a monomial");
            hit = i;
        }
    if (hit < 0 || !v[hit].is_one()) fail("InternalError", "monogenic frame element is not a monomial");
    return hit;
}

Vec poly_to_vec(const Poly& a, Field k, int n) {
    Vec v = zero_vec(k, n);
    for (int i = 0; i <= a.degree() && i < n; ++i) v[i] = a.coeff(i);
    return v;
}

}  // namespace

Vec tau_representative(const MonogenicPresentation& P, CochainComplex& cx) {
    Field k = P.field;
    int n = P.f.degree();
    const Frame& F = cx.frame();
    return cx.make_cochain(1, [&](const std::vector<int>& w, int, int) {
        int i = monomial_power(F, w[0]);
        // t(x^i) = i x^{i-1} q
        Poly val = Poly::monomial(k, i - 1, Scalar(k, i)) * P.q;
        return poly_to_vec(reduce_mod(val, P.f), k, n);
    });
}

Vec zeta_representative(const MonogenicPresentation& P, CochainComplex& cx) {
    Field k = P.field;
    int n = P.f.degree();
    const Frame& F = cx.frame();
    return cx.make_cochain(2, [&](const std::vector<int>& w, int, int) {
        int i = monomial_power(F, w[0]), j = monomial_power(F, w[1]);
        // z(x^i, x^j) = -quot_f(X^{i+j})
        Poly quo = Poly::monomial(k, i + j, Scalar::one(k)).divmod(P.f).first;
        return poly_to_vec(-quo, k, n);
    });
}

bool MonogenicVerifyReport::ok() const {
    bool u_ok = pres.field.characteristic() == 2 || u_zero_mod_d;
    return dims_ok && u_ok && tau_squared_ok && bracket_sign != 0 && tau_tau_zero && zeta_zeta_ok;
}

std::string MonogenicVerifyReport::text() const {
    std::ostringstream os;
    auto dims = [](const std::vector<int>& v) {
        std::string s;
        for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s;
    };
    os << "f = " << pres.f.str() << " over " << pres.field.name() << "\n";
    os << "d = " << pres.d.str() << ", q = " << pres.q.str() << ", u = " << pres.u.str()
       << ", w = " << pres.w.str() << "\n";
    os << "closed-form dims:   " << dims(closed_dims) << "\n";
    os << "cochain dims:       " << dims(oracle_dims) << "\n";
    os << "periodic dims:      " << dims(periodic_dims) << "\n";
    os << "dims agree:         " << (dims_ok ? "yes" : "NO") << "\n";
    if (pres.field.characteristic() != 2) os << "u = 0 mod d:        " << (u_zero_mod_d ? "yes" : "NO") << "\n";
    os << "t cup t = u*z:      " << (tau_squared_ok ? "yes" : "NO") << "\n";
    os << "[z,t] = (sign)w*z:  "
       << (bracket_sign == 0 ? "NO" : bracket_sign > 0 ? "yes (sign +1)" : "yes (sign -1)") << "\n";
    os << "[t,t] = 0:          " << (tau_tau_zero ? "yes" : "NO") << "\n";
    os << "[z,z] ~ 0:          " << (zeta_zeta_ok ? "yes" : "NO") << "\n";
    os << "verdict:            " << (ok() ? "PASS" : "FAIL") << "\n";
    return os.str();
}

MonogenicVerifyReport verify_presentation_in_oracle(const Poly& f, int p_max, long coord_cap) {
    MonogenicVerifyReport rep;
    rep.pres = presentation(f);
    const auto& P = rep.pres;
    Field k = P.field;
    int n = f.degree();
    rep.closed_dims = hh_dims(P, p_max);
    auto A = make_monogenic(k, f);
    auto cx = CochainComplex::hochschild(A, false, coord_cap);
    rep.oracle_dims = cx.cohomology_dims(p_max);
    auto comp = companion_matrix(f);
    rep.periodic_dims = periodic_complex_dims(f, comp, comp, p_max);
    rep.dims_ok = rep.closed_dims == rep.oracle_dims && rep.closed_dims == rep.periodic_dims;
    rep.u_zero_mod_d = P.u.is_zero();

    Vec t = tau_representative(P, cx);
    Vec z = zeta_representative(P, cx);
    if (!cx.is_cocycle(1, t) || !cx.is_cocycle(2, z)) fail("InternalError", "generator representatives fail to be cocycles");

    // u as a degree 0 cochain, so u·z = u ⌣ z
    Vec ucoch = cx.make_cochain(0, [&](const std::vector<int>&, int, int) { return poly_to_vec(P.u, k, n); });
    Vec tt = cx.cup(1, t, 1, t);
    Vec uz = cx.cup(0, ucoch, 2, z);
    Vec diff = tt;
    vec_axpy(diff, -Scalar::one(k), uz);
    rep.tau_squared_ok = cx.coboundary_witness(2, diff).has_value();

    Vec wz = cx.make_cochain(2, [&](const std::vector<int>& w, int, int) {
        int i = monomial_power(cx.frame(), w[0]), j = monomial_power(cx.frame(), w[1]);
        Poly quo = Poly::monomial(k, i + j, Scalar::one(k)).divmod(P.f).first;
        return poly_to_vec(reduce_mod(P.w * -quo, P.f), k, n);
    });
    Vec zt = cx.bracket(2, z, 1, t);
    Vec d1 = zt, d2 = zt;
    vec_axpy(d1, -Scalar::one(k), wz);
    vec_axpy(d2, Scalar::one(k), wz);
    if (cx.coboundary_witness(2, d1))
        rep.bracket_sign = 1;
    else if (cx.coboundary_witness(2, d2))
        rep.bracket_sign = -1;

    rep.tau_tau_zero = vec_is_zero(cx.bracket(1, t, 1, t));
    Vec zz = cx.bracket(2, z, 2, z);
    rep.zeta_zeta_ok = cx.coboundary_witness(3, zz).has_value();
    return rep;
}

}  // namespace hhkit
