#pragma once

#include <array>
#include <string>
#include <vector>

#include "hhkit/cochain.hpp"
#include "hhkit/poly.hpp"

namespace hhkit {

// Closed-form data for A = k[X]/(f): HH*(A) = k[x, tau, zeta]/(f, tau·d,
// zeta·f', tau² - u·zeta) with |tau| = 1, |zeta| = 2; u and w are reduced mod
// d and control the odd products and the bracket.
struct MonogenicPresentation {
    Field field;
    Poly f, d, q, u, w;
    MonogenicPresentation() : field(Field::Q()), f(field), d(field), q(field), u(field), w(field) {}
};

MonogenicPresentation presentation(const Poly& f);

// a·1 when degree 0 (coeff mod f); b·tau·zeta^{(n-1)/2} when odd and
// b·zeta^{n/2} when even >= 2 (coeff mod d).
struct HHElement {
    int degree = 0;
    Poly coeff;
    HHElement() : coeff(Field::Q()) {}
    HHElement(int n, Poly c) : degree(n), coeff(std::move(c)) {}
};

int hh_dim(const MonogenicPresentation& P, int n);
std::vector<int> hh_dims(const MonogenicPresentation& P, int p_max);

HHElement normal_form(const MonogenicPresentation& P, const HHElement& a);
HHElement cup_normal_form(const MonogenicPresentation& P, const HHElement& a, const HHElement& b);
HHElement bracket_normal_form(const MonogenicPresentation& P, const HHElement& a, const HHElement& b);
std::string show_element(const HHElement& a);
// Rows [lhs, rhs, bracket string] for the generators x, tau, zeta.
std::vector<std::array<std::string, 3>> generator_bracket_table(const MonogenicPresentation& P);

// Dense matrices as column lists.
using DenseMat = std::vector<Vec>;
DenseMat companion_matrix(const Poly& f);

// H^p(A, M) for the bimodule M given by commuting matrices XL, XR with
// f(XL) = f(XR) = 0, via kernel/cokernel of Delta = XL - XR and the edge map
// Ebar = sum_i alpha_i sum_{s+t+1=i} XL^s XR^t.
std::vector<int> hh_with_coefficients(const Poly& f, const DenseMat& XL, const DenseMat& XR, int p_max);
// Same dims as the cohomology of the 2-periodic complex M -> M -> M -> ...,
// computed literally from its alternating differentials.
std::vector<int> periodic_complex_dims(const Poly& f, const DenseMat& XL, const DenseMat& XR, int p_max);

// Bar-complex representatives of the generators tau and zeta over the
// normalized complex of A relative to k·1.
Vec tau_representative(const MonogenicPresentation& P, CochainComplex& cx);
Vec zeta_representative(const MonogenicPresentation& P, CochainComplex& cx);

struct MonogenicVerifyReport {
    MonogenicPresentation pres;
    std::vector<int> closed_dims, oracle_dims, periodic_dims;
    bool dims_ok = false;
    bool u_zero_mod_d = false;    // required when char != 2
    bool tau_squared_ok = false;  // t⌣t - u·z is a coboundary
    int bracket_sign = 0;         // +1: [z,t] ~ w·z; -1: [z,t] ~ -w·z; 0: neither
    bool tau_tau_zero = false;    // [t,t] vanishes identically
    bool zeta_zeta_ok = false;    // [z,z] is a coboundary
    bool ok() const;
    std::string text() const;
};

MonogenicVerifyReport verify_presentation_in_oracle(const Poly& f, int p_max, long coord_cap = kCoordCap);

}  // namespace hhkit
