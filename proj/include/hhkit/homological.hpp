#pragma once

#include <string>
#include <vector>

#include "hhkit/cochain.hpp"
#include "hhkit/quiver.hpp"

namespace hhkit {

// Tor_q^A(B,B) for the quotient map phi: A -> B, computed from the relative
// bar complex of A with B as coefficients on both sides.
std::vector<int> tor_for_quotient(const AlgP& A, const AlgebraMap& phi, int q_max,
                                  bool vertex_mode = true, long coord_cap = kCoordCap);

// Diagnostics for the ideal I = AeA of a vertex idempotent.  The three
// sufficient criteria are checked independently; the Tor column of B = A/I is
// always reported.  Tor_1(B,B) = I/I^2, so a non idempotent ideal is refuted
// outright; otherwise a failed criterion only downgrades the verdict to the
// bounded one.
struct HomologicalIdealReport {
    std::string vertex;
    long dim_A = 0, dim_Ae = 0, dim_eA = 0, dim_I = 0;
    bool internal_vertex_ok = false;
    bool circuit_free = false;
    bool projective_test = false;  // dim Ae * dim eA == dim AeA
    long dim_I_tensor_I = 0;       // dim I (x)_A I
    bool mu_iso = false;           // multiplication I (x)_A I -> I bijective
    long dim_I_mod_I2 = 0;
    std::vector<int> tor;  // Tor_q^A(B,B) for q = 0..q_max

    enum class Verdict { Proved, VanishesUpToBound, NotHomological };
    Verdict verdict = Verdict::NotHomological;
    std::string reason;

    bool proved() const { return verdict == Verdict::Proved; }
    bool positive() const { return verdict != Verdict::NotHomological; }
    std::string text() const;
};

HomologicalIdealReport homological_ideal_report(const QuiverPresentation& pres, int vertex,
                                                int q_max, long coord_cap = kCoordCap);

}  // namespace hhkit
