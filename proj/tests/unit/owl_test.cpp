#include "support.hpp"

#include <doctest.h>
#include <restcheck/owl.hpp>

using namespace restcheck;
using namespace restcheck::owl;
using namespace restcheck::test;

namespace {

std::string wrap(const std::string &body)
{
    return "Prefix(:=<http://x.example/o#>)\nPrefix(xsd:=<http://www.w3.org/2001/XMLSchema#>)\n"
           "Ontology(<http://x.example/o>\n" +
           body + "\n)\n";
}

} // namespace

TEST_SUITE("owl")
{
    TEST_CASE("axiom rendering")
    {
        CHECK(serialize(Axiom{DeclareClass{"Booking"}}) == "Declaration(Class(:Booking))");
        CHECK(serialize(Axiom{DisjointClasses{{named("S1"), named("S2"), named("S3")}}}) ==
              "DisjointClasses(:S1 :S2 :S3)");
        CHECK(serialize(dataHasValue("waiting", "true", DataType::Boolean)) ==
              "DataHasValue(:waiting \"true\"^^xsd:boolean)");
        CHECK((serialize(Axiom{DataPropertyRange{"n", DataType::Decimal}}) == "DataPropertyRange(:n xsd:decimal)"));
        CHECK(serialize(unionOf({named("A"), complementOf(named("B"))})) ==
              "ObjectUnionOf(:A ObjectComplementOf(:B))");
    }

    TEST_CASE("header and wrapper")
    {
        Ontology o;
        o.axioms.emplace_back(DeclareClass{"A"});
        CHECK(serialize(o) == "Prefix(:=<http://restcheck.example/models#>)\n"
                              "Prefix(xsd:=<http://www.w3.org/2001/XMLSchema#>)\n"
                              "Ontology(<http://restcheck.example/models>\n"
                              "Declaration(Class(:A))\n"
                              ")\n");
    }

    TEST_CASE("parsing")
    {
        auto o = parseFunctionalSyntax(wrap("SubClassOf(:A :B)"));
        CHECK(o.baseIri == "http://x.example/o#");
        REQUIRE(o.axioms.size() == 1);
        CHECK(o.axioms[0] == Axiom{SubClassOf{named("A"), named("B")}});

        auto full = parseFunctionalSyntax(wrap("SubClassOf( <http://x.example/o#A>  :B ) # trailing"));
        CHECK(full.axioms[0] == Axiom{SubClassOf{named("A"), named("B")}});
    }

    TEST_CASE("unsupported constructs")
    {
        CHECK_THROWS_AS(parseFunctionalSyntax(wrap("SubClassOf(:A ObjectHasSelf(:p))")), UnsupportedAxiom);
        CHECK_THROWS_AS(parseFunctionalSyntax(wrap("SubClassOf(:A ObjectMinCardinality(1 :p :B))")),
                        UnsupportedAxiom);
        CHECK_THROWS_AS(parseFunctionalSyntax(wrap("TransitiveObjectProperty(:p)")), UnsupportedAxiom);
    }

    TEST_CASE("malformed input")
    {
        CHECK_THROWS_AS(parseFunctionalSyntax(wrap("SubClassOf(:A")), ParseError);
        CHECK_THROWS_AS(parseFunctionalSyntax("Ontology("), ParseError);
        CHECK_THROWS_AS(parseFunctionalSyntax(wrap("SubClassOf(:A DataHasValue(:d \"x\"^^xsd:integer))")),
                        ParseError);
    }

    TEST_CASE("golden files are fixed points")
    {
        for (const auto &p : filesIn(goldenDir(), ".ofn")) {
            CAPTURE(p);
            auto text = slurp(p);
            CHECK(serialize(parseFunctionalSyntax(text, p.string())) == text);
        }
    }
}
