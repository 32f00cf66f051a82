#include "hhkit/jobs.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "hhkit/monogenic.hpp"
#include "hhkit/sequences.hpp"

namespace hhkit {

namespace {

using njson = nlohmann::ordered_json;

njson dims_object(const std::vector<int>& dims) {
    njson o = njson::object();
    for (size_t p = 0; p < dims.size(); ++p) o[std::to_string(p)] = dims[p];
    return o;
}

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

int get_int(const njson& spec, const char* key, int dflt) {
    if (!spec.contains(key) || spec[key].is_null()) return dflt;
    if (!spec[key].is_number_integer()) fail("BadParameters", std::string(key) + " must be an integer");
    return spec[key].get<int>();
}

bool get_bool(const njson& spec, const char* key) {
    if (!spec.contains(key) || spec[key].is_null()) return false;
    if (!spec[key].is_boolean()) fail("BadParameters", std::string(key) + " must be a boolean");
    return spec[key].get<bool>();
}

std::string get_string(const njson& spec, const char* key, const std::string& dflt) {
    if (!spec.contains(key) || spec[key].is_null()) return dflt;
    if (!spec[key].is_string()) fail("BadParameters", std::string(key) + " must be a string");
    return spec[key].get<std::string>();
}

int get_pmax(const njson& spec, const char* key) {
    int p = get_int(spec, key, 4);
    if (p < 0 || p > 16) fail("BadParameters", std::string(key) + " must lie in 0..16");
    return p;
}

std::string require_input(const njson& spec) {
    if (!spec.contains("input") || !spec["input"].is_object())
        fail("BadParameters", "missing input document");
    return spec["input"].dump();
}

njson seq_json(const ExactSequenceReport& S) {
    njson o = njson::object();
    o["title"] = S.title;
    o["term_names"] = S.term_names;
    o["term_dims"] = S.term_dims;
    o["map_ranks"] = S.map_ranks;  // -1 = not computed
    o["exact_at"] = S.exact_at;
    njson eo = njson::array();
    for (bool b : S.exact_ok) eo.push_back(b);
    o["exact_ok"] = eo;
    o["composites_zero"] = S.composites_zero;
    o["consistency"] = S.consistency;
    o["forced_ranks"] = S.forced_ranks;
    o["truncated"] = S.truncated;
    njson checks = njson::array();
    for (const auto& [name, okv] : S.checks) checks.push_back(njson{{"name", name}, {"ok", okv}});
    o["checks"] = checks;
    o["ok"] = S.ok();
    return o;
}

njson ideal_json(const HomologicalIdealReport& R) {
    njson o = njson::object();
    o["vertex"] = R.vertex;
    o["dim_A"] = R.dim_A;
    o["dim_Ae"] = R.dim_Ae;
    o["dim_eA"] = R.dim_eA;
    o["dim_I"] = R.dim_I;
    o["internal_vertex"] = R.internal_vertex_ok;
    o["circuit_free"] = R.circuit_free;
    o["projective_test"] = R.projective_test;
    o["dim_I_tensor_I"] = R.dim_I_tensor_I;
    o["mu_iso"] = R.mu_iso;
    o["dim_I_mod_I2"] = R.dim_I_mod_I2;
    o["tor"] = R.tor;
    o["verdict"] = R.verdict == HomologicalIdealReport::Verdict::Proved ? "proved"
                   : R.verdict == HomologicalIdealReport::Verdict::VanishesUpToBound
                       ? "vanishes-up-to-bound"
                       : "not-homological";
    o["reason"] = R.reason;
    return o;
}

JobResult job_monogenic(const njson& spec) {
    Field k = Field::parse(get_string(spec, "field", "Q"));
    std::string ptext = get_string(spec, "poly", "");
    if (ptext.empty()) fail("BadParameters", "monogenic needs --poly");
    int p_max = get_pmax(spec, "pmax");
    Poly f = Poly::parse(k, ptext);
    MonogenicPresentation P = presentation(f);
    std::vector<int> dims = hh_dims(P, p_max);

    std::ostringstream os;
    os << "k[X]/(f) over " << k.name() << "\n";
    os << "  f = " << P.f.str() << "\n";
    os << "  d = " << P.d.str() << "\n";
    os << "  q = " << P.q.str() << "\n";
    os << "  u = " << P.u.str() << "\n";
    os << "  w = " << P.w.str() << "\n";
    os << "HH dims, p = 0.." << p_max << ": " << join_ints(dims) << "\n";

    njson doc = njson::object();
    doc["dims"] = dims_object(dims);
    doc["presentation"] = njson{{"field", k.name()}, {"f", P.f.str()}, {"d", P.d.str()},
                                {"q", P.q.str()},    {"u", P.u.str()}, {"w", P.w.str()}};

    if (get_bool(spec, "bracket_table")) {
        njson table = njson::array();
        os << "generator brackets:\n";
        for (const auto& row : generator_bracket_table(P)) {
            os << "  [" << row[0] << ", " << row[1] << "] = " << row[2] << "\n";
            table.push_back(njson::array({row[0], row[1], row[2]}));
        }
        doc["bracket_table"] = table;
    }

    int status = 0;
    if (get_bool(spec, "verify")) {
        MonogenicVerifyReport V = verify_presentation_in_oracle(f, p_max);
        os << V.text();
        doc["report"] = njson{{"oracle_dims", V.oracle_dims},
                              {"periodic_dims", V.periodic_dims},
                              {"dims_match", V.dims_ok},
                              {"u_zero_mod_d", V.u_zero_mod_d},
                              {"tau_squared_ok", V.tau_squared_ok},
                              {"bracket_sign", V.bracket_sign},
                              {"tau_tau_zero", V.tau_tau_zero},
                              {"zeta_zeta_ok", V.zeta_zeta_ok},
                              {"ok", V.ok()}};
        if (!V.ok()) status = 3;
    }
    return {status, os.str(), doc.dump(2) + "\n"};
}

JobResult job_algebra_hh(const njson& spec) {
    QuiverPresentation pres = quiver_from_json(require_input(spec));
    int p_max = get_pmax(spec, "pmax");
    AlgP A = make_path_algebra_quotient(pres);
    CochainComplex C = CochainComplex::hochschild(A, !A->everts.empty());
    std::vector<int> dims = C.cohomology_dims(p_max);

    std::ostringstream os;
    os << A->name << " over " << pres.f.name() << ", dim = " << A->dim << "\n";
    os << "HH dims, p = 0.." << p_max << ": " << join_ints(dims) << "\n";
    njson doc = njson::object();
    doc["dims"] = dims_object(dims);
    return {0, os.str(), doc.dump(2) + "\n"};
}

JobResult job_homological(const njson& spec) {
    QuiverPresentation pres = quiver_from_json(require_input(spec));
    std::string vlabel = get_string(spec, "vertex", "");
    if (vlabel.empty()) fail("BadParameters", "homological needs --vertex");
    int v = pres.quiver.vertex_index(vlabel);
    int q_max = get_pmax(spec, "qmax");
    HomologicalIdealReport R = homological_ideal_report(pres, v, q_max);

    njson doc = njson::object();
    doc["dims"] = dims_object(R.tor);
    doc["report"] = ideal_json(R);
    return {0, R.text(), doc.dump(2) + "\n"};
}

JobResult job_happel(const njson& spec) {
    QuiverPresentation pres = quiver_from_json(require_input(spec));
    std::string vlabel = get_string(spec, "vertex", "");
    int v = vlabel.empty() ? -1 : pres.quiver.vertex_index(vlabel);
    int p_max = get_pmax(spec, "pmax");
    HappelReport R = happel_report(pres, v, p_max);

    std::vector<int> hh_A;
    for (int p = 0; p <= p_max; ++p) hh_A.push_back(static_cast<int>(R.seq.term_dims[3 * p + 1]));

    njson doc = njson::object();
    doc["dims"] = dims_object(hh_A);
    doc["hh_A"] = hh_A;
    doc["hh_B"] = R.hh_B;
    njson rep = njson::object();
    rep["ideal"] = ideal_json(R.ideal);
    rep["center_cap_ideal"] = R.center_cap_ideal;
    rep["sequence"] = seq_json(R.seq);
    rep["h_A_I"] = R.h_A_I;
    rep["ext_side"] = R.ext_side;
    rep["h_A_B"] = R.h_A_B;
    rep["side_table_ok"] = R.side_table_ok;
    rep["quotient_match_ok"] = R.quotient_match_ok;
    rep["ok"] = R.ok();
    doc["report"] = rep;
    return {R.ok() ? 0 : 3, R.text(), doc.dump(2) + "\n"};
}

std::vector<int> ideal_indices(const njson& spec, const Poset& X) {
    std::vector<int> Y;
    if (!spec.contains("ideal") || spec["ideal"].is_null()) return Y;
    if (!spec["ideal"].is_array()) fail("BadParameters", "ideal must be an array of element names");
    for (const auto& e : spec["ideal"]) {
        if (!e.is_string()) fail("BadParameters", "ideal entries must be element names");
        Y.push_back(X.index_of(e.get<std::string>()));
    }
    return Y;
}

JobResult job_poset(const njson& spec) {
    PosetJob in = poset_from_json(require_input(spec));
    int p_max = get_pmax(spec, "pmax");
    std::string action = get_string(spec, "action", "cohomology");
    njson doc = njson::object();
    std::ostringstream os;

    if (action == "cohomology") {
        SimplicialComplex K = order_complex(in.poset);
        if (spec.contains("ideal") && !spec["ideal"].is_null()) {
            std::vector<int> Y = ideal_indices(spec, in.poset);
            if (!is_order_ideal(in.poset, Y)) fail("NotAnOrderIdeal", "the subset is not downward closed");
            SimplicialComplex L = order_complex_restricted(in.poset, Y);
            std::vector<int> dims = simplicial_cohomology_pair(K, L, in.f, p_max);
            os << "H^p(|X|,|Y|) over " << in.f.name() << ", p = 0.." << p_max << ": "
               << join_ints(dims) << "\n";
            doc["dims"] = dims_object(dims);
        } else {
            std::vector<int> dims = simplicial_cohomology(K, in.f, p_max);
            os << "H^p(|X|) over " << in.f.name() << ", p = 0.." << p_max << ": " << join_ints(dims)
               << "\n";
            doc["dims"] = dims_object(dims);
        }
        return {0, os.str(), doc.dump(2) + "\n"};
    }

    if (action == "hh") {
        AlgP A = make_incidence(in.f, in.poset);
        CochainComplex C = CochainComplex::hochschild(A, true);
        std::vector<int> hh = C.cohomology_dims(p_max);
        std::vector<int> simp = simplicial_cohomology(order_complex(in.poset), in.f, p_max);
        bool match = (hh == simp);
        os << "incidence algebra, dim = " << A->dim << " over " << in.f.name() << "\n";
        os << "HH^p(kX), p = 0.." << p_max << ":  " << join_ints(hh) << "\n";
        os << "H^p(|X|), p = 0.." << p_max << ":  " << join_ints(simp) << "\n";
        os << "agree: " << (match ? "yes" : "NO") << "\n";
        doc["dims"] = dims_object(hh);
        doc["report"] = njson{{"simplicial", simp}, {"match", match}};
        return {match ? 0 : 3, os.str(), doc.dump(2) + "\n"};
    }

    if (action == "pair") {
        std::vector<int> Y = ideal_indices(spec, in.poset);
        PairReport R = pair_report(in.f, in.poset, Y, p_max);
        doc["dims"] = dims_object(R.h_rel);
        njson rep = njson::object();
        rep["sequence"] = seq_json(R.seq);
        rep["hh_X"] = R.hh_X;
        rep["hh_Y"] = R.hh_Y;
        rep["h_X"] = R.h_X;
        rep["h_Y"] = R.h_Y;
        rep["h_rel"] = R.h_rel;
        rep["match_X"] = R.match_X;
        rep["match_Y"] = R.match_Y;
        rep["euler_ok"] = R.euler_ok;
        rep["ok"] = R.ok();
        doc["report"] = rep;
        return {R.ok() ? 0 : 3, R.text(), doc.dump(2) + "\n"};
    }

    fail("BadParameters", "unknown poset action " + action);
}

JobResult job_crown(const njson& spec) {
    Field k = Field::parse(get_string(spec, "field", "Q"));
    int n = get_int(spec, "n", 0), m = get_int(spec, "m", 0);
    if (n <= 0 || m <= 0) fail("BadParameters", "crown needs --n and --m");
    int p_max = get_pmax(spec, "pmax");
    CrownReport R = crown_check(k, n, m, p_max);

    njson doc = njson::object();
    doc["dims"] = dims_object(R.dims);
    doc["report"] = njson{{"n", R.n},
                          {"m", R.m},
                          {"periodic_ok", R.periodic_ok},
                          {"h0_h2_ok", R.h0_h2_ok},
                          {"odd_cup_ok", R.odd_cup_ok},
                          {"ok", R.ok()}};
    return {R.ok() ? 0 : 3, R.text(), doc.dump(2) + "\n"};
}

QuiverPresentation triangle_presentation(Field k) {
    QuiverPresentation P;
    P.f = k;
    P.quiver.vertices = {"1", "2", "3"};
    P.quiver.arrows = {{"a", 0, 1}, {"b", 1, 2}, {"c", 2, 0}};
    P.relations = {{0, 1}};
    return P;
}

JobResult job_verify(const njson& spec) {
    Field Q = Field::Q();
    int p_max = get_pmax(spec, "pmax");
    std::vector<std::pair<std::string, bool>> checks;

    {
        auto V = verify_presentation_in_oracle(Poly::parse(Q, "X^3 - X^2"), std::max(p_max, 4));
        checks.push_back({"monogenic X^3 - X^2 over Q", V.ok()});
    }
    {
        auto V = verify_presentation_in_oracle(Poly::parse(Field::Fp(2), "X^2"), std::max(p_max, 4));
        checks.push_back({"monogenic X^2 over F2", V.ok()});
    }
    {
        auto R = happel_report(triangle_presentation(Q), 0, 4);
        std::vector<long> want = {2, 1, 0, 0, 0};
        bool dims_ok = true;
        for (int p = 0; p <= 4; ++p) dims_ok = dims_ok && R.seq.term_dims[3 * p + 1] == want[p];
        checks.push_back({"triangle Happel sequence at vertex 1", R.ok() && dims_ok});
    }
    {
        AlgP A = make_monogenic(Q, Poly::parse(Q, "X^4"));
        Vec x2 = zero_vec(Q, 4);
        x2[2] = Scalar::one(Q);
        Subspace I = ideal_closure(*A, {x2});
        auto R = five_term_report(quotient_algebra(A, I, "B"), I);
        checks.push_back({"five term sequence k[X]/(X^4) -> k[X]/(X^2)", R.ok()});
    }
    {
        Poset X = Poset::from_covers({"a", "b", "c", "d"},
                                     {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
        auto R = pair_report(Q, X, {0, 1}, 3);
        bool rel_ok = R.h_rel.size() >= 3 && R.h_rel[0] == 0 && R.h_rel[1] == 2 && R.h_rel[2] == 0;
        checks.push_back({"circle poset pair (X, {a,b})", R.ok() && rel_ok});
    }
    {
        auto R = crown_check(Q, 2, 2, 3);
        checks.push_back({"crown (2,2)", R.ok()});
    }

    bool all = true;
    std::ostringstream os;
    njson jchecks = njson::array();
    for (const auto& [name, okv] : checks) {
        all = all && okv;
        os << (okv ? "PASS" : "FAIL") << "  " << name << "\n";
        jchecks.push_back(njson{{"name", name}, {"ok", okv}});
    }
    os << "self test: " << (all ? "PASS" : "FAIL") << "\n";

    njson doc = njson::object();
    doc["dims"] = njson::object();
    doc["report"] = njson{{"checks", jchecks}, {"ok", all}};
    return {all ? 0 : 3, os.str(), doc.dump(2) + "\n"};
}

}  // namespace

JobResult run_job(const std::string& spec_json) {
    try {
        njson spec = njson::parse(spec_json, nullptr, true, true);
        if (!spec.is_object()) fail("BadParameters", "job must be a JSON object");
        std::string cmd = get_string(spec, "command", "");
        if (cmd == "monogenic") return job_monogenic(spec);
        if (cmd == "algebra-hh") return job_algebra_hh(spec);
        if (cmd == "homological") return job_homological(spec);
        if (cmd == "happel") return job_happel(spec);
        if (cmd == "poset") return job_poset(spec);
        if (cmd == "crown") return job_crown(spec);
        if (cmd == "verify") return job_verify(spec);
        fail("BadParameters", "unknown command " + (cmd.empty() ? std::string("(none)") : cmd));
    } catch (const Error& e) {
        return {2, std::string("error: ") + e.what() + "\n",
                njson{{"error", e.what()}}.dump(2) + "\n"};
    } catch (const njson::exception& e) {
        return {2, std::string("error: BadInput: ") + e.what() + "\n",
                njson{{"error", e.what()}}.dump(2) + "\n"};
    }
}

}  // namespace hhkit
