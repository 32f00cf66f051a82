#include "hhkit/hhkit.h"

#include <nlohmann/json.hpp>
#include <string>

#include "hhkit/jobs.hpp"

struct hhk_job {
    std::string spec;
};

struct hhk_report {
    hhkit::JobResult result;
};

namespace {
thread_local std::string g_last_error;
}

extern "C" {

hhk_status hhk_job_parse(const char* spec_json, hhk_job** out) {
    if (out) *out = nullptr;
    if (!spec_json || !out) {
        g_last_error = "null argument";
        return HHK_INPUT_ERROR;
    }
    try {
        auto parsed = nlohmann::ordered_json::parse(spec_json, nullptr, true, true);
        if (!parsed.is_object()) {
            g_last_error = "job must be a JSON object";
            return HHK_INPUT_ERROR;
        }
        *out = new hhk_job{spec_json};
        g_last_error.clear();
        return HHK_OK;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return HHK_INPUT_ERROR;
    }
}

hhk_status hhk_job_run(const hhk_job* job, hhk_report** out) {
    if (out) *out = nullptr;
    if (!job || !out) {
        g_last_error = "null argument";
        return HHK_INPUT_ERROR;
    }
    try {
        auto* rep = new hhk_report{hhkit::run_job(job->spec)};
        *out = rep;
        g_last_error.clear();
        return static_cast<hhk_status>(rep->result.status);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return HHK_INPUT_ERROR;
    }
}

hhk_status hhk_report_status(const hhk_report* report) {
    return report ? static_cast<hhk_status>(report->result.status) : HHK_INPUT_ERROR;
}

const char* hhk_report_text(const hhk_report* report) {
    return report ? report->result.text.c_str() : "";
}

const char* hhk_report_json(const hhk_report* report) {
    return report ? report->result.json.c_str() : "";
}

void hhk_job_free(hhk_job* job) { delete job; }

void hhk_report_free(hhk_report* report) { delete report; }

const char* hhk_last_error(void) { return g_last_error.c_str(); }

const char* hhk_version(void) { return "0.1.0"; }

}  // extern "C"
