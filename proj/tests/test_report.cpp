#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "ffrt/report.hpp"
#include "ffrt/summand_catalog.hpp"

using namespace ffrt;

TEST_CASE("empty catalog serializes to an empty entry list") {
    std::string s = emit_catalog_report("catalog-s-invariants", {}, 4, 3, 2, ReportFormat::Json);
    auto j = nlohmann::json::parse(s);
    CHECK(j["entries"].is_array());
    CHECK(j["entries"].empty());
}

TEST_CASE("the r = 2 catalog has three entries in JSON") {
    auto entries = catalog_S_Gr(4, 3, 2);
    std::string s = emit_catalog_report("catalog-s-invariants", entries, 4, 3, 2, ReportFormat::Json);
    auto j = nlohmann::json::parse(s);
    CHECK(j["entries"].size() == 3);
    CHECK(j["consistent"] == true);
    for (const auto& e : j["entries"]) {
        CHECK(e.contains("kind"));
        CHECK(e.contains("indices"));
        CHECK(e.contains("frobenius_level"));
        CHECK(e.contains("twist"));
        CHECK(e.contains("multiplicity"));
        CHECK(e.contains("flag"));
        CHECK(e["twist"].is_null());
    }
}

TEST_CASE("JSON output round-trips byte-identically") {
    auto entries = catalog_S_Gr(5, 3, 1);
    std::string s = emit_catalog_report("catalog-s-invariants", entries, 5, 3, 1, ReportFormat::Json);
    auto j = nlohmann::json::parse(s);
    CHECK(j.dump(2) + "\n" == s);

    VerifyReport rep;
    rep.scenario = Scenario::S_Gr;
    rep.consistent = false;
    rep.status = "inconsistent";
    rep.first_failure = {{7, 2}};
    rep.detail = "no assignment explains the target";
    std::string v = emit_verify_report(rep, ReportFormat::Json);
    auto jv = nlohmann::json::parse(v);
    CHECK(jv.dump(2) + "\n" == v);
    CHECK(jv["consistent"] == false);
    CHECK(jv["first_failure"]["degree"] == 7);
}

TEST_CASE("text table lists every entry") {
    auto entries = catalog_S_Gr(4, 3, 1);
    std::string s = emit_catalog_report("catalog-s-invariants", entries, 4, 3, 1, ReportFormat::Text);
    CHECK(s.find("TiltFree") != std::string::npos);
    CHECK(s.find("K") != std::string::npos);
    CHECK(s.find("3 entries") != std::string::npos);
}
