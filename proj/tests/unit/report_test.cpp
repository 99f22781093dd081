#include "support.hpp"

#include <doctest.h>
#include <json.hpp>
#include <restcheck/report.hpp>
#include <restcheck/tableau.hpp>
#include <restcheck/translator.hpp>

using namespace restcheck;
using namespace restcheck::test;
using nlohmann::json;

namespace {

CheckReport reportFor(const fs::path &p)
{
    auto m = loadModel(p);
    auto t = translateModels(m.resources, &*m.behavior);
    auto verdicts = dl::classifyAll(dl::compileTBox(t.ontology));
    return buildReport(m.resources.name, verdicts, t.iris, t.diagnostics);
}

/// Keys, types and enumerations of the versioned report schema.
void checkSchema(const json &j)
{
    REQUIRE(j.is_object());
    CHECK(j.size() == 5);
    CHECK(j.at("schemaVersion") == 1);
    CHECK(j.at("model").is_string());
    auto overall = j.at("overall").get<std::string>();
    CHECK((overall == "consistent" || overall == "inconsistent" || overall == "invalid"));
    for (const auto &c : j.at("concepts")) {
        CHECK(c.size() == 5);
        CHECK(c.at("element").is_string());
        auto kind = c.at("kind").get<std::string>();
        CHECK((kind == "resource" || kind == "state"));
        auto status = c.at("status").get<std::string>();
        CHECK((status == "sat" || status == "unsat"));
        CHECK(c.at("line").is_number_integer());
        CHECK(c.at("col").is_number_integer());
    }
    for (const auto &d : j.at("diagnostics")) {
        CHECK(d.size() == 5);
        CHECK(d.at("severity").is_string());
        CHECK(d.at("code").is_string());
        CHECK(d.at("message").is_string());
        CHECK(d.at("line").is_number_integer());
        CHECK(d.at("col").is_number_integer());
    }
}

} // namespace

TEST_SUITE("report")
{
    TEST_CASE("consistent hotel booking")
    {
        auto r = reportFor(modelsDir() / "hotel_booking.model");
        CHECK((r.overall == Overall::Consistent));
        CHECK(renderText(r) == "CONSISTENT: 6 resources, 6 states, all satisfiable\n");
        auto j = json::parse(renderJson(r));
        checkSchema(j);
        CHECK(j["concepts"].size() == 12);
        CHECK(j["diagnostics"].empty());
    }

    TEST_CASE("M1 names the unsatisfiable state once")
    {
        auto r = reportFor(modelsDir() / "hb_mutated_m1.model");
        CHECK((r.overall == Overall::Inconsistent));
        REQUIRE(r.diagnostics.size() == 1);
        CHECK((r.diagnostics[0].code == DiagCode::UnsatState));
        CHECK(r.diagnostics[0].element.name == "processingPayment");
        CHECK(r.diagnostics[0].element.span.startLine == 35);
        auto text = renderText(r);
        CHECK(text.find("INCONSISTENT: 1 of 12 concepts unsatisfiable\n") == 0);
        CHECK(text.find("error[UNSAT_STATE] state 'processingPayment' can never be active\n") != std::string::npos);
        auto j = json::parse(renderJson(r));
        checkSchema(j);
        CHECK(j["overall"] == "inconsistent");
        CHECK(j["diagnostics"][0]["line"] == 35);
    }

    TEST_CASE("structural problems invalidate")
    {
        Diagnostics d{Diagnostic::make(DiagCode::Parse, {}, "bad")};
        std::vector<dl::SatVerdict> none;
        auto r = buildReport("X", none, IriMap{}, d);
        CHECK((r.overall == Overall::Invalid));
        CHECK(r.verdicts.empty());
        CHECK(renderText(r) == "INVALID: 1 problem\nerror[PARSE] bad\n");
    }

    TEST_CASE("empty report")
    {
        auto r = invalidReport("E", {});
        auto j = json::parse(renderJson(r));
        checkSchema(j);
        CHECK(j["concepts"].is_array());
        CHECK(j["diagnostics"].is_array());
    }

    TEST_CASE("unmapped verdict is an internal error")
    {
        std::vector<dl::SatVerdict> v{{"Ghost", dl::SatStatus::Sat, 1}};
        CHECK_THROWS_AS(buildReport("X", v, IriMap{}, {}), UnmappedIri);
    }
}
