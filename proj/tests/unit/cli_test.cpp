#include "support.hpp"

#include <cli.hpp>
#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace restcheck;
using namespace restcheck::test;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "restcheck");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string model(const char *name) { return (modelsDir() / name).string(); }

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("oracle spec")
    {
        CHECK(cli::parseOracleSpec("bounded:3") == 3);
        CHECK_THROWS_AS(cli::parseOracleSpec("bounded:5"), std::invalid_argument);
        CHECK_THROWS_AS(cli::parseOracleSpec("bounded:0"), std::invalid_argument);
        CHECK_THROWS_AS(cli::parseOracleSpec("bounded:x"), std::invalid_argument);
        CHECK_THROWS_AS(cli::parseOracleSpec("exact:2"), std::invalid_argument);
    }

    TEST_CASE("check")
    {
        auto ok = invoke({"check", model("hotel_booking.model"), "--oracle", "bounded:3"});
        CHECK(ok.code == 0);
        CHECK(ok.out == "CONSISTENT: 6 resources, 6 states, all satisfiable\n");

        auto bad = invoke({"check", model("hb_mutated_m1.model"), "--format", "json"});
        CHECK(bad.code == 1);
        auto j = nlohmann::json::parse(bad.out);
        CHECK(j["overall"] == "inconsistent");
        int unsat = 0;
        for (const auto &c : j["concepts"])
            unsat += c["status"] == "unsat";
        CHECK(unsat == 1);
        CHECK(bad.err.find("error[UNSAT_STATE]") != std::string::npos);
    }

    TEST_CASE("a bound too small to hold a model is a disagreement")
    {
        auto r = invoke({"check", model("hotel_booking.model"), "--oracle", "bounded:2"});
        CHECK(r.code == 4);
        CHECK(r.err.find("State_processingPayment") != std::string::npos);
    }

    TEST_CASE("validate")
    {
        CHECK(invoke({"validate", model("hotel_booking.model")}).code == 0);
        auto r = invoke({"validate", (dataDir() / "faults" / "isolated.model").string()});
        CHECK(r.code == 2);
        CHECK(r.err.find("error[CONNECTIVITY]") != std::string::npos);
    }

    TEST_CASE("translate")
    {
        auto a = invoke({"translate", model("hotel_booking.model")});
        CHECK(a.code == 0);
        CHECK(a.out == slurp(goldenDir() / "hotel_booking.ofn"));
        auto custom = invoke({"translate", model("hotel_booking.model"), "--base-iri", "http://h.example/x/"});
        CHECK(custom.out.rfind("Prefix(:=<http://h.example/x/>)\n", 0) == 0);
        CHECK(custom.out.find("Ontology(<http://h.example/x>\n") != std::string::npos);

        auto out = fs::temp_directory_path() / "restcheck_cli_test.ofn";
        CHECK(invoke({"translate", model("hotel_booking.model"), "-o", out.string()}).code == 0);
        auto first = slurp(out);
        CHECK(invoke({"translate", model("hotel_booking.model"), "-o", out.string()}).code == 0);
        CHECK(slurp(out) == first);
        fs::remove(out);
    }

    TEST_CASE("usage and I/O errors")
    {
        CHECK(invoke({}).code == 2);
        CHECK(invoke({"frobnicate"}).code == 2);
        CHECK(invoke({"check", model("hotel_booking.model"), "--oracle", "bounded:9"}).code == 2);
        CHECK(invoke({"validate", model("hotel_booking.model"), "--oracle", "bounded:2"}).code == 2);
        CHECK(invoke({"check", model("hotel_booking.model"), "-o", "x.ofn"}).code == 2);
        CHECK(invoke({"translate", model("hotel_booking.model"), "--base-iri", "http://no-separator"}).code == 2);
        CHECK(invoke({"check", model("hotel_booking.model"), "--format", "xml"}).code == 2);
        CHECK(invoke({"check", "/nonexistent/dir/x.model"}).code == 3);
        CHECK(invoke({"translate", model("hotel_booking.model"), "-o", "/nonexistent/dir/x.ofn"}).code == 3);
        CHECK(invoke({"--help"}).code == 0);
    }

    TEST_CASE("exit code follows the overall field")
    {
        for (const auto &p : {modelsDir() / "hotel_booking.model", modelsDir() / "hb_mutated_m1.model",
                              dataDir() / "faults" / "duplicate_label.model",
                              dataDir() / "faults" / "get_trigger.model"}) {
            auto r = invoke({"check", p.string(), "--format", "json"});
            auto overall = nlohmann::json::parse(r.out)["overall"].get<std::string>();
            int expected = overall == "consistent" ? 0 : overall == "inconsistent" ? 1 : 2;
            CHECK(r.code == expected);
        }
    }
}
