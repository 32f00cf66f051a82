#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hhkit/cochain.hpp"
#include "hhkit/homological.hpp"
#include "hhkit/poset.hpp"
#include "hhkit/quiver.hpp"

namespace hhkit {

// Exactness of 0 -> T_0 -> T_1 -> ... with unknown maps forces the rank of
// every map: r_i = dim T_i - r_{i-1}.  The sequence is exact iff the forced
// ranks are feasible, agree with the computed ones where present, and (unless
// the window is truncated on the right) the final forced rank is zero.
struct ConsistencyCheck {
    bool ok = false;
    std::vector<long> ranks;  // forced rank of T_i -> T_{i+1}
    std::string why;
};
ConsistencyCheck exactness_consistency(const std::vector<long>& dims, bool truncated_right = false,
                                       const std::vector<long>& known_ranks = {});

struct ExactSequenceReport {
    std::string title;
    std::vector<std::string> term_names;
    std::vector<long> term_dims;
    // class-level matrices T_i -> T_{i+1} where computable, parallel ranks
    std::vector<std::optional<SparseMatrix>> maps;
    std::vector<long> map_ranks;  // -1 when the map was not computed
    std::vector<int> exact_at;    // positions whose adjacent maps are both known
    std::vector<bool> exact_ok;   // rank ker == rank im there
    bool composites_zero = true;
    bool consistency = false;
    std::vector<long> forced_ranks;
    bool truncated = true;
    std::vector<std::pair<std::string, bool>> checks;

    bool ok() const;
    std::string text() const;
};

// Coefficient long exact sequence of 0 -> I -> A -> B -> 0 for I = AeA over
// the vertex frame, with the one sided Ext side table.  vertex = -1 takes
// e = 1, so I = A and the sequence degenerates to isomorphisms.
struct HappelReport {
    HomologicalIdealReport ideal;
    ExactSequenceReport seq;
    long center_cap_ideal = 0;   // dim Z(A) cap I = dim H^0(A,I)
    std::vector<int> h_A_I;      // dim H^p(A,I)
    std::vector<int> ext_side;   // dim Ext_A^p(D(eA), Ae)
    std::vector<int> h_A_B;      // dim H^p(A,B)
    std::vector<int> hh_B;       // dim HH^p(B), computed over B itself
    bool side_table_ok = false;
    bool quotient_match_ok = false;

    bool ok() const;
    std::string text() const;
};
HappelReport happel_report(const QuiverPresentation& pres, int vertex, int p_max,
                           long coord_cap = kCoordCap);

// Happel's sequence for the one point extension A = (B M; 0 k), assembled
// from Ext_B(M,M), with the dimension identifications checked one by one.
struct OnePointHappelReport {
    ExactSequenceReport seq;
    std::vector<int> hh_A, hh_B;
    std::vector<int> ext_B;        // Ext_B^p(M,M)
    std::vector<int> ext_DeA_Ae;   // Ext_A^p(D(eA), Ae)
    std::vector<int> ext_M_Ae;     // Ext_A^p(M, Ae)
    long hom_M_Ae = 0;

    bool ok() const;
    std::string text() const;
};
OnePointHappelReport one_point_happel(const AlgP& B, const LeftModule& M, int p_max,
                                      long coord_cap = kCoordCap);

// 0 -> H^1(B,M) -> H^1(A,M) -> hom_{B-B}(I/I^2, M) -> H^2(B,M) -> H^2(A,M)
// for a surjection phi: A -> B with kernel spanned by `ideal` and a
// B-bimodule M; all four maps are computed, the connecting one through the
// singular extension cocycle of the section.
struct FiveTermReport {
    ExactSequenceReport seq;
    bool inner_derivations_die = false;

    bool ok() const;
    std::string text() const;
};
FiveTermReport five_term_report(const AlgebraMap& phi, const Subspace& ideal, const Bimodule& M,
                                long coord_cap = kCoordCap);
FiveTermReport five_term_report(const AlgebraMap& phi, const Subspace& ideal,
                                long coord_cap = kCoordCap);  // M = B

// ... -> H^p(B,M) -> H^p(A,M) -> Ext_{B-B}^{p-1}(I/I^2,M) -> H^{p+1}(B,M) -> ...
// Only the restriction maps are computed; the rest is rank consistency.
// The quiver front end certifies flatness of I = AeA by the corner dimension
// count and refuses otherwise; vertex = -1 takes I = 0.
ExactSequenceReport flat_ideal_sequence(const AlgebraMap& phi, const Subspace& ideal,
                                        const Bimodule& M, int p_max, long coord_cap = kCoordCap);
ExactSequenceReport flat_ideal_report(const QuiverPresentation& pres, int vertex, int p_max,
                                      long coord_cap = kCoordCap);

// Cohomology of the pair of geometric realizations against the cochain dims
// of the two incidence algebras, with the pair sequence consistency.
struct PairReport {
    ExactSequenceReport seq;
    std::vector<int> hh_X, hh_Y;         // incidence algebra cochain dims
    std::vector<int> h_X, h_Y, h_rel;    // simplicial dims
    bool match_X = false, match_Y = false;
    bool euler_ok = false;

    bool ok() const;
    std::string text() const;
};
PairReport pair_report(Field f, const Poset& X, const std::vector<int>& Y, int p_max,
                       long coord_cap = kCoordCap);

// Truncated cycle algebra checks: 2-periodicity of the dims from degree 1 on,
// dim HH^0 = dim HH^2, and vanishing of products of odd classes.
struct CrownReport {
    int n = 0, m = 0;
    std::vector<int> dims;
    bool periodic_ok = false;
    bool h0_h2_ok = false;
    bool odd_cup_ok = false;

    bool ok() const;
    std::string text() const;
};
CrownReport crown_check(Field f, int n, int m, int p_max, long coord_cap = kCoordCap);

}  // namespace hhkit
