#include "support.hpp"

#include <doctest.h>
#include <restcheck/ocl.hpp>

using namespace restcheck;
using namespace restcheck::test;

TEST_SUITE("ocl")
{
    TEST_CASE("processingPayment invariant")
    {
        auto e = parseOcl("self.payment->size()=1 and payment.waiting = True");
        auto expected = OclExpr::andOf({OclExpr::sizeCmp({{"payment"}}, CmpOp::Eq, 1),
                                        OclExpr::attrEq({{"payment", "waiting"}}, {DataType::Boolean, "True"})});
        CHECK(e == expected);
        CHECK(printOcl(e) == "self.payment->size() = 1 and self.payment.waiting = True");
    }

    TEST_CASE("and binds tighter than or")
    {
        auto e = parseOcl("a = 1 or b = 2 and c = 3");
        auto one = [](const char *p, const char *v) { return OclExpr::attrEq({{p}}, {DataType::Integer, v}); };
        CHECK(e == OclExpr::orOf({one("a", "1"), OclExpr::andOf({one("b", "2"), one("c", "3")})}));
        CHECK(printOcl(parseOcl("(a = 1 or b = 2) and c = 3")) == "(self.a = 1 or self.b = 2) and self.c = 3");
    }

    TEST_CASE("errors point at the offending token")
    {
        try {
            parseOcl("self.x->size()~2");
            FAIL("no error");
        } catch (const ParseError &e) {
            CHECK(e.span().startCol == 15);
        }
        CHECK_THROWS_AS(parseOcl(""), ParseError);
        CHECK_THROWS_AS(parseOcl("a = "), ParseError);
        CHECK_THROWS_AS(parseOcl("a->size() = -1"), ParseError);
    }

    TEST_CASE("literals")
    {
        auto lit = [](const char *text) { return std::get<AttrEq>(parseOcl(text).node).value; };
        CHECK(lit("a = 'it\\'s'").lexical == "it's");
        CHECK((lit("a = \"x\"").kind == DataType::String));
        CHECK((lit("a = -4").kind == DataType::Integer));
        CHECK((lit("a = 2.50").kind == DataType::Decimal));
        CHECK((lit("a = False").kind == DataType::Boolean));
    }

    TEST_CASE("path resolution against the hotel model")
    {
        auto m = loadModel(modelsDir() / "hotel_booking.model");
        auto r = resolvePath(m.resources, "Booking", {{"payment", "waiting"}}, PathUse::Attribute);
        auto &p = std::get<ResolvedPath>(r);
        CHECK(p.attributeOwner == "Payment");
        CHECK(p.attributeName == "waiting");
        CHECK((p.attributeType == DataType::Boolean));

        auto a = resolvePath(m.resources, "Booking", {{"payment"}}, PathUse::Association);
        auto &q = std::get<ResolvedPath>(a);
        REQUIRE(q.hops.size() == 1);
        CHECK(q.hops[0].target == "Payment");

        auto bad = resolvePath(m.resources, "Booking", {{"nosuch"}}, PathUse::Attribute);
        REQUIRE(std::holds_alternative<Diagnostic>(bad));
        CHECK((std::get<Diagnostic>(bad).code == DiagCode::UnresolvedPath));
        CHECK(std::get<Diagnostic>(bad).message.find("nosuch") != std::string::npos);
    }
}
