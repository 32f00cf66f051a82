#include <doctest.h>

#include <hhkit/hhkit.h>

#include <cstring>
#include <string>

TEST_CASE("version string") {
    REQUIRE(hhk_version() != nullptr);
    CHECK(std::string(hhk_version()) == "0.1.0");
}

TEST_CASE("parse rejects junk and null") {
    hhk_job* job = nullptr;
    CHECK(hhk_job_parse("{not json", &job) == HHK_INPUT_ERROR);
    CHECK(job == nullptr);
    CHECK(std::strlen(hhk_last_error()) > 0);

    CHECK(hhk_job_parse("[1,2,3]", &job) == HHK_INPUT_ERROR);
    CHECK(job == nullptr);

    CHECK(hhk_job_parse(nullptr, &job) == HHK_INPUT_ERROR);
    CHECK(hhk_job_parse("{}", nullptr) == HHK_INPUT_ERROR);
}

TEST_CASE("run a monogenic job end to end") {
    const char* spec = R"({"command":"monogenic","field":"Q","poly":"X^3 - X^2","pmax":4})";
    hhk_job* job = nullptr;
    REQUIRE(hhk_job_parse(spec, &job) == HHK_OK);
    REQUIRE(job != nullptr);

    hhk_report* rep = nullptr;
    CHECK(hhk_job_run(job, &rep) == HHK_OK);
    REQUIRE(rep != nullptr);
    CHECK(hhk_report_status(rep) == HHK_OK);

    std::string text = hhk_report_text(rep);
    CHECK(text.find("HH dims") != std::string::npos);
    CHECK(text.find("3,1,1,1,1") != std::string::npos);

    std::string json = hhk_report_json(rep);
    CHECK(json.find("\"dims\"") != std::string::npos);
    CHECK(json.find("\"presentation\"") != std::string::npos);

    // rerunning the same job reproduces the bytes
    hhk_report* rep2 = nullptr;
    CHECK(hhk_job_run(job, &rep2) == HHK_OK);
    CHECK(json == hhk_report_json(rep2));

    hhk_report_free(rep2);
    hhk_report_free(rep);
    hhk_job_free(job);
}

TEST_CASE("unknown command comes back as an input error report") {
    hhk_job* job = nullptr;
    REQUIRE(hhk_job_parse(R"({"command":"frobnicate"})", &job) == HHK_OK);
    hhk_report* rep = nullptr;
    CHECK(hhk_job_run(job, &rep) == HHK_INPUT_ERROR);
    REQUIRE(rep != nullptr);
    CHECK(hhk_report_status(rep) == HHK_INPUT_ERROR);
    CHECK(std::string(hhk_report_text(rep)).find("error") != std::string::npos);
    hhk_report_free(rep);
    hhk_job_free(job);
}

TEST_CASE("bad math input surfaces with status 2") {
    hhk_job* job = nullptr;
    REQUIRE(hhk_job_parse(R"({"command":"monogenic","field":"Q","poly":"2*X^2"})", &job) == HHK_OK);
    hhk_report* rep = nullptr;
    CHECK(hhk_job_run(job, &rep) == HHK_INPUT_ERROR);
    REQUIRE(rep != nullptr);
    CHECK(std::string(hhk_report_text(rep)).find("NotMonic") != std::string::npos);
    hhk_report_free(rep);
    hhk_job_free(job);
}

TEST_CASE("accessors tolerate null") {
    CHECK(hhk_report_status(nullptr) == HHK_INPUT_ERROR);
    CHECK(std::string(hhk_report_text(nullptr)).empty());
    CHECK(std::string(hhk_report_json(nullptr)).empty());
    hhk_report_free(nullptr);
    hhk_job_free(nullptr);
}
