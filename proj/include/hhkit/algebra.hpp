#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hhkit/poly.hpp"
#include "hhkit/sparse.hpp"

namespace hhkit {

// Finite dimensional associative unital algebra given by structure constants
// on a fixed basis.  When the basis contains a complete family of orthogonal
// idempotents (the "vertices" of a quiver-like algebra) their indices are
// recorded in `everts`; the cochain engine can then work relative to the
// separable subalgebra they span instead of relative to k·1.
struct Algebra {
    Field f;
    int dim = 0;
    std::string name;
    std::vector<std::string> labels;
    std::vector<std::vector<Vec>> mul;  // mul[i][j] = coordinates of b_i * b_j
    Vec unit;
    std::vector<int> everts;

    Vec basis_vec(int i) const;
    Vec mulvec(const Vec& a, const Vec& b) const;
    // Validates associativity on basis triples, the unit law, and that the
    // marked idempotents are orthogonal and sum to the unit.
    void check() const;
    bool is_idempotent(const Vec& e) const;
    std::string show(const Vec& v) const;
};

using AlgP = std::shared_ptr<const Algebra>;

struct LeftModule {
    AlgP A;
    int dim = 0;
    // act[i][m] = coordinates of b_i · e_m
    std::vector<std::vector<Vec>> act;
    Vec apply(int i, const Vec& x) const;
    Vec apply(const Vec& a, const Vec& x) const;
    void check() const;
};

struct RightModule {
    AlgP A;
    int dim = 0;
    std::vector<std::vector<Vec>> act;  // act[i][m] = e_m · b_i
    Vec apply(int i, const Vec& x) const;
    Vec apply(const Vec& x, const Vec& a) const;
    void check() const;
};

struct Bimodule {
    AlgP A;
    int dim = 0;
    std::vector<std::vector<Vec>> left, right;
    Vec apply_left(int i, const Vec& x) const;
    Vec apply_right(int i, const Vec& x) const;
    Vec apply_left(const Vec& a, const Vec& x) const;
    Vec apply_right(const Vec& x, const Vec& a) const;
    void check() const;
    LeftModule forget_right() const;
    RightModule forget_left() const;
};

// A subspace of an ambient space with a canonical echelon basis and
// coordinate lookup.
struct Subspace {
    Field f;
    int ambient = 0;
    std::vector<Vec> basis;
    int dim() const { return static_cast<int>(basis.size()); }
    bool contains(const Vec& v) const;
    std::optional<Vec> coords(const Vec& v) const;  // over the echelon basis
    Vec embed(const Vec& c) const;
    static Subspace span(Field f, int ambient, const std::vector<Vec>& gens);
};

// Surjection A -> B with a recorded section of the chosen basis complement.
struct AlgebraMap {
    AlgP src, dst;
    std::vector<Vec> img;      // img[i] = image of i-th basis vector of src
    std::vector<Vec> section;  // section[m] = fixed preimage of m-th basis vector of dst
    Vec apply(const Vec& a) const;
    Vec lift(const Vec& b) const;
};

Bimodule regular_bimodule(const AlgP& A);
// B-bimodule structures seen as A-bimodules along phi: A -> B.
Bimodule bimodule_via_map(const AlgebraMap& phi);

AlgP make_monogenic(Field f, const Poly& fpoly);
// One point extension of B by a left module M: matrix algebra (B M; 0 k).
AlgP make_one_point_extension(const AlgP& B, const LeftModule& M, const std::string& new_vertex);
AlgP make_enveloping(const AlgP& A);
LeftModule left_module_over_enveloping(const AlgP& Aenv, const Bimodule& M);

std::vector<Vec> center(const Algebra& A);
// Two sided ideal generated by an idempotent element: span of all b_i e b_j.
Subspace idempotent_ideal(const Algebra& A, const Vec& e);
Subspace ideal_closure(const Algebra& A, const std::vector<Vec>& gens);
// Quotient by a two sided ideal, with basis the complement of the ideal among
// standard basis vectors (requires the ideal to be spanned by basis vectors,
// which holds for monomial ideals of path-like algebras).
AlgebraMap quotient_algebra(const AlgP& A, const Subspace& ideal, const std::string& name);

// Sub-bimodule of the regular bimodule on the given subspace.
Bimodule sub_bimodule(const AlgP& A, const Subspace& S);

// I/I^2 as a bimodule over B = A/I, together with the chosen representatives
// of its basis and the projection I -> I/I^2 in those coordinates.
struct IdealQuotient {
    Bimodule bim;
    std::vector<Vec> reps;  // elements of I representing the quotient basis
    Echelon tracked;        // I^2 basis first, then reps
    int off = 0;
    Vec project(const Vec& a) const;  // class coordinates; a must lie in I
};
IdealQuotient ideal_mod_square(const AlgebraMap& phi, const Subspace& ideal);

// alpha[i][j] = class of sigma(b_i)sigma(b_j) - sigma(b_i b_j) in I/I^2 for
// the basis-lift section sigma = phi.lift: the Hochschild 2-cocycle of the
// singular extension 0 -> I/I^2 -> A/I^2 -> B -> 0.
std::vector<std::vector<Vec>> singular_extension_cocycle(const AlgebraMap& phi, const IdealQuotient& IQ);

// A bimodule over the target of phi, restricted along phi to the source.
Bimodule pullback_bimodule(const AlgebraMap& phi, const Bimodule& M);
Bimodule dual_bimodule(const Bimodule& M);
LeftModule dual_of_right(const RightModule& M);

// Corner modules of an idempotent: Ae as a left module, eA as a right module.
LeftModule corner_left(const AlgP& A, const Vec& e);
RightModule corner_right(const AlgP& A, const Vec& e);

// dim of X ⊗_A Y for a right module X and left module Y.
int tensor_over_algebra_dim(const RightModule& X, const LeftModule& Y);
// dim of the image of the multiplication map I ⊗_A I -> I.
int ideal_square_dim(const Algebra& A, const Subspace& I);

std::vector<Vec> intersect_spans(Field f, int ambient, const std::vector<Vec>& U, const std::vector<Vec>& V);

// Basis of bimodule maps M -> N (equivariant for both actions).
std::vector<std::vector<Vec>> hom_bimodule(const Bimodule& M, const Bimodule& N);

}  // namespace hhkit
