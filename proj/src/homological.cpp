#include "hhkit/homological.hpp"

#include <sstream>

namespace hhkit {

std::vector<int> tor_for_quotient(const AlgP& A, const AlgebraMap& phi, int q_max,
                                  bool vertex_mode, long coord_cap) {
    Bimodule B = bimodule_via_map(phi);
    return tor_dims(A, B.forget_left(), B.forget_right(), q_max, vertex_mode, coord_cap);
}

HomologicalIdealReport homological_ideal_report(const QuiverPresentation& pres, int vertex,
                                                int q_max, long coord_cap) {
    if (vertex < 0 || vertex >= static_cast<int>(pres.quiver.vertices.size()))
        fail("UnknownVertex", "no vertex #" + std::to_string(vertex));

    AlgP A = make_path_algebra_quotient(pres);
    Vec e = A->basis_vec(A->everts[vertex]);

    HomologicalIdealReport R;
    R.vertex = pres.quiver.vertices[vertex];
    R.dim_A = A->dim;
    R.dim_Ae = corner_left(A, e).dim;
    R.dim_eA = corner_right(A, e).dim;

    Subspace I = idempotent_ideal(*A, e);
    R.dim_I = I.dim();
    R.internal_vertex_ok = internal_vertex_criterion(pres, vertex);
    R.circuit_free = circuit_free_at(pres.quiver, vertex);
    R.projective_test = (R.dim_Ae * R.dim_eA == R.dim_I);

    Bimodule Ibim = sub_bimodule(A, I);
    R.dim_I_tensor_I = tensor_over_algebra_dim(Ibim.forget_left(), Ibim.forget_right());
    R.mu_iso = (R.dim_I_tensor_I == R.dim_I);
    R.dim_I_mod_I2 = R.dim_I - ideal_square_dim(*A, I);

    AlgebraMap phi = quotient_algebra(A, I, A->name + "/I");
    R.tor = tor_for_quotient(A, phi, q_max, true, coord_cap);

    if (R.internal_vertex_ok) {
        R.verdict = HomologicalIdealReport::Verdict::Proved;
        R.reason = "no minimal relation has the vertex internal";
    } else if (R.projective_test) {
        R.verdict = HomologicalIdealReport::Verdict::Proved;
        R.reason = "multiplication Ae (x) eA -> AeA is bijective";
    } else if (R.circuit_free && R.mu_iso) {
        R.verdict = HomologicalIdealReport::Verdict::Proved;
        R.reason = "circuit free at the vertex and I (x)_A I -> I is an isomorphism";
    } else {
        int bad = 0;
        for (int qd = 1; qd < static_cast<int>(R.tor.size()); ++qd)
            if (R.tor[qd] != 0) {
                bad = qd;
                break;
            }
        if (bad == 0) {
            R.verdict = HomologicalIdealReport::Verdict::VanishesUpToBound;
            R.reason = "no criterion applies; Tor(B,B) vanishes in degrees 1.." + std::to_string(q_max);
        } else {
            R.verdict = HomologicalIdealReport::Verdict::NotHomological;
            R.reason = "Tor_" + std::to_string(bad) + "(B,B) != 0";
        }
    }
    return R;
}

std::string HomologicalIdealReport::text() const {
    std::ostringstream os;
    os << "ideal I = A e A at vertex " << vertex << "\n";
    os << "dim A = " << dim_A << ", dim Ae = " << dim_Ae << ", dim eA = " << dim_eA
       << ", dim I = " << dim_I << "\n";
    os << "internal-vertex criterion:  " << (internal_vertex_ok ? "passes" : "fails") << "\n";
    os << "circuit free at vertex:     " << (circuit_free ? "yes" : "no") << "\n";
    os << "Ae (x) eA -> AeA bijective: " << (projective_test ? "yes" : "no") << " ("
       << dim_Ae * dim_eA << " vs " << dim_I << ")\n";
    os << "I (x)_A I -> I bijective:   " << (mu_iso ? "yes" : "no") << " (" << dim_I_tensor_I
       << " vs " << dim_I << ")\n";
    os << "dim I/I^2 = " << dim_I_mod_I2 << "\n";
    os << "Tor_q(B,B), q = 0..:        ";
    for (size_t i = 0; i < tor.size(); ++i) os << (i ? "," : "") << tor[i];
    os << "\n";
    os << "verdict: ";
    switch (verdict) {
        case Verdict::Proved: os << "homological (proved): " << reason; break;
        case Verdict::VanishesUpToBound: os << "bounded: " << reason; break;
        case Verdict::NotHomological: os << "not homological: " << reason; break;
    }
    os << "\n";
    return os.str();
}

}  // namespace hhkit
