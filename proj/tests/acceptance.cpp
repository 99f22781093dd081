// Acceptance suite: one PASS/FAIL line per criterion, exit 1 if any fails.

#include "differential.hpp"
#include "support.hpp"

#include <cli.hpp>
#include <json.hpp>
#include <restcheck/bounded_search.hpp>
#include <restcheck/tableau.hpp>
#include <restcheck/translator.hpp>

#include <fmt/format.h>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace restcheck;
using namespace restcheck::test;
using Clock = std::chrono::steady_clock;
using nlohmann::json;

namespace {

struct Verdict {
    bool ok = true;
    std::string detail;
};

/// Collects failed expectations for one criterion.
class Gate {
public:
    void expect(bool cond, const std::string &what)
    {
        if (!cond) {
            ok_ = false;
            failures_.push_back(what);
        }
    }
    void note(std::string s) { notes_.push_back(std::move(s)); }

    Verdict verdict() const
    {
        const auto &parts = ok_ ? notes_ : failures_;
        return {ok_, fmt::format("{}", fmt::join(parts, "; "))};
    }

private:
    bool ok_ = true;
    std::vector<std::string> failures_, notes_;
};

struct CliRun {
    int code;
    std::string out, err;
    double seconds;
};

CliRun invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "restcheck");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    auto start = Clock::now();
    int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str(), std::chrono::duration<double>(Clock::now() - start).count()};
}

double secondsSince(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

owl::Ontology ofn(const std::string &body)
{
    return owl::parseFunctionalSyntax("Prefix(:=<http://x.example/o#>)\n"
                                      "Prefix(xsd:=<http://www.w3.org/2001/XMLSchema#>)\n"
                                      "Ontology(<http://x.example/o>\n" +
                                      body + "\n)\n");
}

owl::Ontology translatedFile(const fs::path &p)
{
    auto m = loadModel(p);
    return translateModels(m.resources, m.behavior ? &*m.behavior : nullptr).ontology;
}

std::vector<std::string> lines(const std::string &text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);)
        out.push_back(l);
    return out;
}

// ---------------------------------------------------------------------------

Verdict corpusConsistency()
{
    Gate g;
    const auto hb = (modelsDir() / "hotel_booking.model").string();
    auto plain = invoke({"check", hb, "--format", "json"});
    g.expect(plain.code == 0, fmt::format("exit {} instead of 0", plain.code));
    g.expect(plain.seconds < 1.0, fmt::format("took {:.3f}s", plain.seconds));
    if (plain.code == 0) {
        auto j = json::parse(plain.out);
        std::size_t sat = 0;
        for (const auto &c : j["concepts"])
            sat += c["status"] == "sat";
        g.expect(sat == j["concepts"].size() && sat == 12, fmt::format("{} of {} SAT", sat, j["concepts"].size()));
        g.note(fmt::format("{} concepts SAT in {:.3f}s", sat, plain.seconds));
    }
    auto oracle = invoke({"check", hb, "--oracle", "bounded:3"});
    g.expect(oracle.code == 0, fmt::format("with oracle: exit {} ({})", oracle.code, oracle.err));
    g.note(fmt::format("oracle bound 3 agrees ({:.3f}s)", oracle.seconds));
    return g.verdict();
}

Verdict mutationM1()
{
    Gate g;
    const auto path = modelsDir() / "hb_mutated_m1.model";
    auto r = invoke({"check", path.string(), "--format", "json"});
    g.expect(r.code == 1, fmt::format("exit {} instead of 1", r.code));
    if (r.code == 1) {
        auto j = json::parse(r.out);
        std::vector<std::string> unsat;
        for (const auto &c : j["concepts"])
            if (c["status"] == "unsat")
                unsat.push_back(c["element"]);
        g.expect(unsat == std::vector<std::string>{"processingPayment"},
                 fmt::format("unsat set is [{}]", fmt::join(unsat, ", ")));
    }
    auto o = translatedFile(path);
    auto start = Clock::now();
    auto res = dl::boundedModelSearch(o, "State_processingPayment", 4);
    g.expect(!res.found(), "oracle found a model at bound 4");
    g.note(fmt::format("processingPayment UNSAT, exit 1, oracle NO_MODEL at bound 4 ({:.3f}s)", secondsSince(start)));
    return g.verdict();
}

Verdict translatorGolden()
{
    Gate g;
    auto r = invoke({"translate", (goldenDir() / "snippet.model").string()});
    g.expect(r.code == 0, fmt::format("translate exit {}", r.code));
    auto golden = slurp(goldenDir() / "snippet.ofn");
    g.expect(r.out == golden, "output differs from snippet.ofn");
    auto got = lines(r.out);
    const std::vector<std::string> templates{
        "SubClassOf(:Outlet :Shop)",
        "DisjointClasses(:Shop :items)",
        "SubClassOf(:Shop DataExactCardinality(1 :title))",
        "SubClassOf(:Shop ObjectMinCardinality(1 :stock))",
        "SubClassOf(:Shop ObjectMaxCardinality(3 :stock))",
        "SubClassOf(:State_open :Shop)",
        "SubClassOf(:State_closed :Shop)",
        "DisjointClasses(:State_open :State_closed)",
        "EquivalentClasses(:State_open ObjectIntersectionOf(:Shop ObjectMaxCardinality(2 :stock)))",
        "EquivalentClasses(:State_closed ObjectIntersectionOf(:Shop ObjectExactCardinality(3 :stock)))",
    };
    for (const auto &t : templates)
        g.expect(std::find(got.begin(), got.end(), t) != got.end(), "missing line " + t);
    g.note(fmt::format("byte-equal to golden, {} template lines present", templates.size()));
    return g.verdict();
}

Verdict reasonerGate()
{
    Gate g;
    auto status = [](const std::string &body, const std::string &q) {
        return dl::isSatisfiable(dl::compileTBox(ofn(body)), q).status;
    };
    using dl::SatStatus;
    g.expect(status("Declaration(Class(:A))\nSubClassOf(:A ObjectIntersectionOf(ObjectMinCardinality(2 :r) "
                    "ObjectMaxCardinality(1 :r)))",
                    "A") == SatStatus::Unsat,
             ">=2r and <=1r not UNSAT");
    g.expect(status("Declaration(Class(:A))\nDeclaration(Class(:B))\nDeclaration(Class(:S))\n"
                    "DisjointClasses(:A :B)\nEquivalentClasses(:S ObjectIntersectionOf(:A :B))",
                    "S") == SatStatus::Unsat,
             "S = A and B with A, B disjoint not UNSAT");
    g.expect(status("Declaration(Class(:A))", "A") == SatStatus::Sat, "lone class not SAT");
    auto start = Clock::now();
    auto cyc = status("Declaration(Class(:A))\nSubClassOf(:A ObjectSomeValuesFrom(:r :A))", "A");
    double ms = secondsSince(start) * 1000;
    g.expect(cyc == SatStatus::Sat, "A <= some r.A not SAT");
    g.expect(ms < 100, fmt::format("cycle took {:.1f} ms", ms));
    g.expect(status("Declaration(Class(:C))\nSubClassOf(:C DataExactCardinality(1 :d))\n"
                    "SubClassOf(:C ObjectIntersectionOf(DataHasValue(:d \"true\"^^xsd:boolean) "
                    "DataHasValue(:d \"false\"^^xsd:boolean)))",
                    "C") == SatStatus::Unsat,
             "functional data property with true and false not UNSAT");
    g.note(fmt::format("5 cases, cycle decided in {:.2f} ms", ms));
    return g.verdict();
}

Verdict differential()
{
    Gate g;
    auto start = Clock::now();
    auto run = runDifferential(1, 500, 4);
    double s = secondsSince(start);
    g.expect(run.cases >= 500, "fewer than 500 cases");
    for (const auto &d : run.disagreements)
        g.expect(false, fmt::format("seed {} query {}: tableau {}", d.seed, d.conceptIri,
                                    d.tableauSat ? "SAT" : "UNSAT"));
    g.expect(s < 60, fmt::format("took {:.1f}s", s));
    g.note(fmt::format("{} cases ({} SAT), full agreement at bound 4 in {:.2f}s", run.cases, run.sat, s));
    return g.verdict();
}

Verdict structuralGate()
{
    Gate g;
    const std::vector<std::pair<std::string, std::string>> cases{
        {"isolated", "CONNECTIVITY"},           {"duplicate_label", "DUPLICATE_LABEL"},
        {"collection_attr", "COLLECTION_HAS_ATTR"}, {"normal_no_attr", "NORMAL_NO_ATTR"},
        {"bad_cardinality", "BAD_CARDINALITY"}, {"get_trigger", "PARSE"},
    };
    for (const auto &[file, code] : cases) {
        auto r = invoke({"check", (dataDir() / "faults" / (file + ".model")).string(), "--format", "json"});
        g.expect(r.code == 2, fmt::format("{}: exit {}", file, r.code));
        std::vector<std::string> codes;
        auto j = json::parse(r.out);
        for (const auto &d : j["diagnostics"])
            codes.push_back(d["code"]);
        g.expect(codes == std::vector<std::string>{code},
                 fmt::format("{}: codes [{}] instead of [{}]", file, fmt::join(codes, ", "), code));
    }
    g.note(fmt::format("{} fault models, each exactly its code with exit 2", cases.size()));
    return g.verdict();
}

Verdict roundTrips()
{
    Gate g;
    std::vector<fs::path> corpus;
    for (const auto &dir : {modelsDir(), goldenDir(), dataDir() / "faults"})
        for (const auto &p : filesIn(dir, ".model"))
            corpus.push_back(p);

    std::size_t dsl = 0, ofnCount = 0, ocl = 0;
    auto checkDsl = [&](const ModelFile &m, const std::string &name) {
        auto text = formatModel(m);
        auto back = parseModelFile(text);
        bool same = sameStructure(m.resources, back.resources) && m.behavior.has_value() == back.behavior.has_value() &&
                    (!m.behavior || sameStructure(*m.behavior, *back.behavior));
        g.expect(same && formatModel(back) == text, "DSL round trip: " + name);
        ++dsl;
    };
    auto checkOfn = [&](const owl::Ontology &o, const std::string &name) {
        auto text = owl::serialize(o);
        auto back = owl::parseFunctionalSyntax(text);
        g.expect(back == o && owl::serialize(back) == text, ".ofn round trip: " + name);
        ++ofnCount;
    };
    auto checkOcl = [&](const OclExpr &e, const std::string &name) {
        auto text = printOcl(e);
        auto back = parseOcl(text);
        g.expect(printOcl(back) == text && parseOcl(printOcl(back)) == back, "uOCL round trip: " + name);
        ++ocl;
    };

    for (const auto &p : corpus) {
        ModelFile m;
        try {
            m = loadModel(p);
        } catch (const ParseError &) {
            continue; // deliberately malformed fault input
        }
        checkDsl(m, p.filename().string());
        if (validateResourceModel(m.resources).empty())
            checkOfn(translatedFile(p), p.filename().string());
        if (m.behavior)
            for (const auto &s : m.behavior->states)
                if (s.invariant)
                    checkOcl(*s.invariant, p.filename().string() + ":" + s.name);
    }
    for (const auto &p : filesIn(goldenDir(), ".ofn")) {
        auto text = slurp(p);
        g.expect(owl::serialize(owl::parseFunctionalSyntax(text)) == text, ".ofn golden: " + p.filename().string());
        ++ofnCount;
    }
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        Gen gm(seed);
        checkDsl(randomModel(gm), fmt::format("generated model {}", seed));
        Gen go(seed);
        OntologyGen og(go, {4, 2, 2, 2, 8, 3});
        checkOfn(og.ontology(), fmt::format("generated ontology {}", seed));
        Gen gx(seed);
        checkOcl(randomOcl(gx, 3), fmt::format("generated invariant {}", seed));
    }
    g.note(fmt::format("{} DSL, {} .ofn, {} uOCL instances", dsl, ofnCount, ocl));
    return g.verdict();
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"corpus consistency", corpusConsistency},
        {"mutation M1", mutationM1},
        {"translator golden", translatorGolden},
        {"reasoner gate", reasonerGate},
        {"differential suite", differential},
        {"structural validation", structuralGate},
        {"round trips", roundTrips},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception &e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        failed += !v.ok;
        std::cout << fmt::format("{} {} {}: {}", v.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail)
                  << std::endl;
    }
    return failed ? 1 : 0;
}
