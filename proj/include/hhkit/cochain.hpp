#pragma once

#include <functional>
#include <map>
#include <optional>

#include "hhkit/algebra.hpp"

namespace hhkit {

// Splitting A = E ⊕ R.  E is spanned by the marked idempotents (vertex mode)
// or by the unit (unit mode); R is spanned by corner homogeneous elements
// e_a b_i e_b, and pi_r projects onto R along E.  Cochains relative to E are
// determined by their values on composable tuples of R representatives.
struct Frame {
    AlgP A;
    bool vertex_mode = false;
    std::vector<Vec> idems;
    std::vector<Vec> rbasis;
    std::vector<int> rl, rr;  // idem corner of each R representative

    int nidem() const { return static_cast<int>(idems.size()); }
    int rdim() const { return static_cast<int>(rbasis.size()); }
    Vec pi_r(const Vec& a) const;  // coordinates over rbasis
    const std::vector<std::pair<int, Scalar>>& rprod(int i, int j) const { return rprod_[i][j]; }
    static Frame build(const AlgP& A, bool vertex_mode);

  private:
    Echelon ech_{Field::Q(), 0, true};
    std::vector<std::vector<std::vector<std::pair<int, Scalar>>>> rprod_;  // pi_r(r_i r_j)
};

// Corner decomposition e_a V e_b of a bimodule over the idempotents of a
// frame, with a tracked echelon so components can be read off in block
// coordinates.
struct BiCorners {
    Field f;
    int ambient = 0;
    std::vector<std::vector<std::vector<Vec>>> basis;  // [a][b][k]
    std::vector<std::vector<int>> offset;              // insertion offset of block (a,b)
    int dim(int a, int b) const { return static_cast<int>(basis[a][b].size()); }
    const Vec& vec(int a, int b, int k) const { return basis[a][b][k]; }
    // Block coordinates of the (a,b) component of v.
    Vec coords(int a, int b, const Vec& v) const;
    // Like coords, but nullopt when v has components outside block (a,b).
    std::optional<Vec> coords_exact(int a, int b, const Vec& v) const;
    static BiCorners build(const Bimodule& M, const std::vector<Vec>& idems);

  private:
    Echelon ech_{Field::Q(), 0, true};
};

// One sided corner decomposition: e_a V for a left module, V e_a for a right
// module.
struct SideCorners {
    Field f;
    int ambient = 0;
    std::vector<std::vector<Vec>> basis;  // [a][k]
    std::vector<int> offset;
    int dim(int a) const { return static_cast<int>(basis[a].size()); }
    const Vec& vec(int a, int k) const { return basis[a][k]; }
    Vec coords(int a, const Vec& v) const;
    void set_echelon(Echelon e);
    static SideCorners left(const LeftModule& M, const std::vector<Vec>& idems);
    static SideCorners right(const RightModule& M, const std::vector<Vec>& idems);

  private:
    Echelon ech_{Field::Q(), 0, true};
};

inline constexpr long kCoordCap = 2000000;

// Relative bar complex computing H^p(A, M) for a bimodule M, with cup
// product and Gerstenhaber bracket when the coefficients are the algebra
// itself.  Degree p cochains are stored as coordinate vectors: one block per
// composable R chain, block coordinates in the corner e_{cl} M e_{cr}.
class CochainComplex {
  public:
    explicit CochainComplex(Bimodule M, bool vertex_mode, long coord_cap = kCoordCap);
    static CochainComplex hochschild(const AlgP& A, bool vertex_mode, long coord_cap = kCoordCap);

    const AlgP& algebra() const { return A_; }
    const Bimodule& coefficients() const { return M_; }
    const Frame& frame() const { return F_; }
    const BiCorners& corners() const { return C_; }
    bool regular_coefficients() const { return regular_; }

    int chain_count(int p);
    const std::vector<int>& chain_walk(int p, int t);
    std::pair<int, int> chain_corner(int p, int t);
    int chain_offset(int p, int t);
    int chain_index(int p, const std::vector<int>& walk);  // -1 when absent
    int cochain_dim(int p);

    const SparseMatrix& differential(int p);  // C^p -> C^{p+1}
    bool square_is_zero(int p);               // differential(p+1) ∘ differential(p) == 0
    int cohomology_dim(int p);
    std::vector<int> cohomology_dims(int p_max);
    const std::vector<Vec>& representatives(int p);
    bool is_cocycle(int p, const Vec& c);
    std::optional<Vec> class_coordinates(int p, const Vec& c);   // over representatives(p)
    std::optional<Vec> coboundary_witness(int p, const Vec& c);  // x with d x = c

    // Assembly and evaluation.
    Vec zero_cochain(int p) { return zero_vec(A_->f, cochain_dim(p)); }
    Vec make_cochain(int p, const std::function<Vec(const std::vector<int>&, int, int)>& value);
    Vec value_at(int p, const Vec& c, int t);                          // element of M
    Vec value_at_block(const Vec& c, int a);                           // degree 0 block a
    Vec evaluate(int p, const Vec& c, const std::vector<Vec>& args);   // multilinear via pi_r

    // Structure maps (regular coefficients).
    Vec cup(int p, const Vec& cf, int q, const Vec& cg);
    Vec circ(int p, const Vec& cf, int q, const Vec& cg);     // Gerstenhaber composition, unit mode
    Vec bracket(int p, const Vec& cf, int q, const Vec& cg);  // f∘g - (-1)^{(p-1)(q-1)} g∘f

  private:
    struct Level {
        std::vector<std::vector<int>> walks;
        std::vector<int> cl, cr, offset;
        std::map<std::vector<int>, int> index;
        int total = 0;
    };
    void ensure_level(int p);
    void ensure_diff(int p);
    void ensure_cohomology(int p);
    void ensure_reps(int p);

    AlgP A_;
    Bimodule M_;
    bool regular_ = false;
    long cap_;
    Frame F_;
    BiCorners C_;
    std::vector<Level> levels_;
    std::vector<std::optional<SparseMatrix>> diff_;
    std::vector<std::optional<int>> hdim_;
    std::vector<std::optional<std::vector<Vec>>> reps_;
    std::vector<std::optional<Echelon>> repech_;  // image columns then representatives
};

// Inflation of cochains relative to the vertex idempotents to cochains
// relative to the unit, slotwise through the vertex frame's pi_r.  Chain
// level maps commuting with the differentials; an iso on cohomology.
SparseMatrix inflation_matrix(CochainComplex& from_vertex, CochainComplex& to_unit, int p);

// Map C^p(A, M) -> C^p(A, N) induced by a bimodule map given on coordinates.
SparseMatrix coefficient_matrix(CochainComplex& from, CochainComplex& to, const std::vector<Vec>& mmap, int p);

// Pullback along an algebra map phi: A -> B of cochains on B with
// coefficients in a B-bimodule, landing in cochains on A with the same
// coefficients seen through phi.  Both complexes in unit mode.
SparseMatrix pullback_matrix(const AlgebraMap& phi, CochainComplex& on_dst, CochainComplex& on_src, int p);

// Relative Tor/Ext over the same frames; equal to the absolute ones since E
// is separable.
std::vector<int> tor_dims(const AlgP& A, const RightModule& X, const LeftModule& Y, int q_max,
                          bool vertex_mode = true, long coord_cap = kCoordCap);
std::vector<int> ext_dims(const AlgP& A, const LeftModule& M, const LeftModule& N, int p_max,
                          bool vertex_mode = true, long coord_cap = kCoordCap);

}  // namespace hhkit
