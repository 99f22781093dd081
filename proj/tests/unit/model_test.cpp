#include "support.hpp"

#include <doctest.h>
#include <restcheck/model.hpp>

using namespace restcheck;
using namespace restcheck::test;

namespace {

std::vector<DiagCode> codes(const Diagnostics &d)
{
    std::vector<DiagCode> out;
    for (const auto &x : d)
        out.push_back(x.code);
    return out;
}

} // namespace

TEST_SUITE("model")
{
    TEST_CASE("hotel booking is structurally RESTful")
    {
        auto m = loadModel(modelsDir() / "hotel_booking.model");
        CHECK(validateResourceModel(m.resources).empty());
        REQUIRE(m.behavior);
        CHECK(validateBehavioralModel(*m.behavior, m.resources).empty());
    }

    TEST_CASE("each fault model yields its one code")
    {
        const std::vector<std::pair<std::string, DiagCode>> cases{
            {"isolated", DiagCode::Connectivity},
            {"duplicate_label", DiagCode::DuplicateLabel},
            {"collection_attr", DiagCode::CollectionHasAttr},
            {"normal_no_attr", DiagCode::NormalNoAttr},
            {"bad_cardinality", DiagCode::BadCardinality},
        };
        for (const auto &[name, code] : cases) {
            CAPTURE(name);
            auto m = loadModel(dataDir() / "faults" / (name + ".model"));
            CHECK(codes(validateResourceModel(m.resources)) == std::vector<DiagCode>{code});
        }
    }

    TEST_CASE("connectivity names the isolated resource")
    {
        auto m = loadModel(dataDir() / "faults" / "isolated.model");
        auto d = validateResourceModel(m.resources);
        REQUIRE(d.size() == 1);
        CHECK(d[0].element.name == "Archive");
        CHECK(d[0].element.span.startLine == 10);
    }

    TEST_CASE("subresources inherit reachability and attributes")
    {
        auto m = loadModel(goldenDir() / "snippet.model");
        CHECK(validateResourceModel(m.resources).empty());
    }

    TEST_CASE("root count and hierarchy cycles")
    {
        auto m = parseModelFile(R"(resources X {
    resource A { attr a: string }
    resource B extends C { attr b: string }
    resource C extends B { attr c: string }
})");
        auto d = validateResourceModel(m.resources);
        CHECK((hasCode(d, DiagCode::RootCount)));
        CHECK((hasCode(d, DiagCode::HierarchyCycle)));
    }

    TEST_CASE("unresolved invariant path")
    {
        auto m = loadModel(modelsDir() / "hotel_booking.model");
        auto &bm = *m.behavior;
        bm.states[2].invariant = parseOcl("self.foo = 1");
        auto d = validateBehavioralModel(bm, m.resources);
        REQUIRE(d.size() == 1);
        CHECK((d[0].code == DiagCode::UnresolvedPath));
    }

    TEST_CASE("navigation paths")
    {
        auto m = loadModel(modelsDir() / "hotel_booking.model");
        CHECK(navigationPath(m.resources, "Payment") == "/{bookingId}/payment");
        CHECK(navigationPath(m.resources, "Booking") == "/{bookingId}/");
        CHECK(navigationPath(m.resources, "Room") == "/{bookingId}/rooms/room");

        auto iso = loadModel(dataDir() / "faults" / "isolated.model");
        CHECK_THROWS_AS(navigationPath(iso.resources, "Archive"), NoPathError);
    }
}
