#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "hhkit/hhkit.h"

namespace {

using njson = nlohmann::ordered_json;

njson read_input_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::fprintf(stderr, "error: cannot open %s\n", path.c_str());
        std::exit(2);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return njson::parse(buf.str(), nullptr, true, true);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s: %s\n", path.c_str(), e.what());
        std::exit(2);
    }
}

int run_spec(const njson& spec, bool as_json) {
    std::string text = spec.dump();
    hhk_job* job = nullptr;
    if (hhk_job_parse(text.c_str(), &job) != HHK_OK) {
        std::fprintf(stderr, "error: %s\n", hhk_last_error());
        return 2;
    }
    hhk_report* report = nullptr;
    if (hhk_job_run(job, &report) == HHK_INPUT_ERROR && !report) {
        std::fprintf(stderr, "error: %s\n", hhk_last_error());
        hhk_job_free(job);
        return 2;
    }
    int status = hhk_report_status(report);
    if (status == HHK_INPUT_ERROR)
        std::fputs(hhk_report_text(report), stderr);
    else
        std::fputs(as_json ? hhk_report_json(report) : hhk_report_text(report), stdout);
    hhk_report_free(report);
    hhk_job_free(job);
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hochschild cohomology toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", hhk_version());

    std::string field = "Q", poly, vertex, file, action;
    std::vector<std::string> ideal;
    int pmax = 4, qmax = 4, crown_n = 0, crown_m = 0;
    bool as_json = false, verify = false, bracket_table = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_flag("--json", as_json, "machine readable output");
        cmd->add_option("--pmax", pmax, "top cohomological degree")->check(CLI::Range(0, 16));
    };

    CLI::App* mono = app.add_subcommand("monogenic", "HH*(k[X]/(f)) with cup and bracket");
    mono->add_option("--field", field, "Q or F<p>");
    mono->add_option("--poly", poly, "monic polynomial, e.g. \"X^3 - X^2\"")->required();
    mono->add_flag("--verify", verify, "check the closed form against the cochain engine");
    mono->add_flag("--bracket-table", bracket_table, "print the generator bracket table");
    add_common(mono);

    CLI::App* alg = app.add_subcommand("algebra", "quiver algebra jobs from a JSON file");
    alg->add_option("file", file, "quiver presentation document")->required();
    alg->add_option("action", action, "hh | happel | homological")->required();
    alg->add_option("--vertex", vertex, "vertex label for the idempotent ideal");
    alg->add_option("--qmax", qmax, "top Tor degree")->check(CLI::Range(0, 16));
    add_common(alg);

    CLI::App* pos = app.add_subcommand("poset", "incidence algebra and order complex jobs");
    pos->add_option("file", file, "poset document")->required();
    pos->add_option("action", action, "cohomology | pair | hh")->required();
    pos->add_option("--ideal", ideal, "order ideal, as element names");
    add_common(pos);

    CLI::App* crown = app.add_subcommand("crown", "truncated cycle algebra checks");
    crown->add_option("--field", field, "Q or F<p>");
    crown->add_option("--n", crown_n, "number of vertices")->required();
    crown->add_option("--m", crown_m, "truncation multiple, l = n*m")->required();
    add_common(crown);

    CLI::App* ver = app.add_subcommand("verify", "run the built-in cross checks");
    add_common(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    njson spec = njson::object();
    if (mono->parsed()) {
        spec["command"] = "monogenic";
        spec["field"] = field;
        spec["poly"] = poly;
        spec["pmax"] = pmax;
        if (verify) spec["verify"] = true;
        if (bracket_table) spec["bracket_table"] = true;
    } else if (alg->parsed()) {
        if (action == "hh")
            spec["command"] = "algebra-hh";
        else if (action == "happel" || action == "homological")
            spec["command"] = action;
        else {
            std::fprintf(stderr, "error: unknown algebra action %s\n", action.c_str());
            return 2;
        }
        spec["input"] = read_input_file(file);
        if (!vertex.empty()) spec["vertex"] = vertex;
        spec["pmax"] = pmax;
        spec["qmax"] = qmax;
    } else if (pos->parsed()) {
        if (action != "cohomology" && action != "pair" && action != "hh") {
            std::fprintf(stderr, "error: unknown poset action %s\n", action.c_str());
            return 2;
        }
        spec["command"] = "poset";
        spec["action"] = action;
        spec["input"] = read_input_file(file);
        if (!ideal.empty() || action == "pair") spec["ideal"] = ideal;
        spec["pmax"] = pmax;
    } else if (crown->parsed()) {
        spec["command"] = "crown";
        spec["field"] = field;
        spec["n"] = crown_n;
        spec["m"] = crown_m;
        spec["pmax"] = pmax;
    } else {
        spec["command"] = "verify";
        spec["pmax"] = pmax;
    }
    return run_spec(spec, as_json);
}
