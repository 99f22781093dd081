#include "restcheck/report.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <tuple>

namespace restcheck {

std::string_view toString(Overall o)
{
    switch (o) {
    case Overall::Consistent:
        return "consistent";
    case Overall::Inconsistent:
        return "inconsistent";
    case Overall::Invalid:
        return "invalid";
    }
    return "invalid";
}

std::size_t CheckReport::count(ElementKind kind) const
{
    return static_cast<std::size_t>(
        std::count_if(verdicts.begin(), verdicts.end(), [kind](const auto &v) { return v.element.kind == kind; }));
}

UnmappedIri::UnmappedIri(const std::string &iri)
    : std::runtime_error(fmt::format("UNMAPPED_IRI: no model element behind ':{}'", iri))
{
}

namespace {

Overall overallOf(const CheckReport &r)
{
    bool structural = std::any_of(r.diagnostics.begin(), r.diagnostics.end(),
                                  [](const Diagnostic &d) { return isStructural(d.code); });
    if (structural)
        return Overall::Invalid;
    bool unsat = std::any_of(r.verdicts.begin(), r.verdicts.end(),
                             [](const ConceptVerdict &v) { return v.status == dl::SatStatus::Unsat; });
    return unsat || !r.diagnostics.empty() ? Overall::Inconsistent : Overall::Consistent;
}

} // namespace

CheckReport buildReport(std::string modelName, const std::vector<dl::SatVerdict> &verdicts, const IriMap &map,
                        Diagnostics diags)
{
    CheckReport r;
    r.modelName = std::move(modelName);
    r.diagnostics = std::move(diags);
    for (const auto &v : verdicts) {
        const auto *el = map.classElement(v.conceptIri);
        if (!el)
            throw UnmappedIri(v.conceptIri);
        ElementRef ref{el->kind, el->name, el->span};
        if (v.status == dl::SatStatus::Unsat) {
            bool isState = el->kind == ElementKind::State;
            r.diagnostics.push_back(Diagnostic::make(
                isState ? DiagCode::UnsatState : DiagCode::UnsatResource, ref,
                isState ? fmt::format("state '{}' can never be active", el->name)
                        : fmt::format("resource '{}' can never be instantiated", el->name)));
        }
        r.verdicts.push_back({std::move(ref), v.status});
    }
    r.overall = overallOf(r);
    if (r.overall == Overall::Invalid)
        r.verdicts.clear();
    return r;
}

CheckReport invalidReport(std::string modelName, Diagnostics diags)
{
    CheckReport r;
    r.modelName = std::move(modelName);
    r.diagnostics = std::move(diags);
    r.overall = Overall::Invalid;
    return r;
}

namespace {

std::vector<const Diagnostic *> ordered(const Diagnostics &diags)
{
    std::vector<const Diagnostic *> out;
    for (const auto &d : diags)
        out.push_back(&d);
    std::stable_sort(out.begin(), out.end(), [](const Diagnostic *a, const Diagnostic *b) {
        const auto &sa = a->element.span;
        const auto &sb = b->element.span;
        return std::tuple(a->severity, sa.startLine, sa.startCol) <
               std::tuple(b->severity, sb.startLine, sb.startCol);
    });
    return out;
}

std::string plural(std::size_t n, std::string_view word)
{
    return fmt::format("{} {}{}", n, word, n == 1 ? "" : "s");
}

} // namespace

std::string renderText(const CheckReport &report)
{
    std::string out;
    const auto resources = report.count(ElementKind::Resource);
    const auto states = report.count(ElementKind::State);
    switch (report.overall) {
    case Overall::Consistent:
        out += fmt::format("CONSISTENT: {}, {}, all satisfiable\n", plural(resources, "resource"),
                           plural(states, "state"));
        break;
    case Overall::Inconsistent: {
        auto unsat = std::count_if(report.verdicts.begin(), report.verdicts.end(),
                                   [](const auto &v) { return v.status == dl::SatStatus::Unsat; });
        out += fmt::format("INCONSISTENT: {} of {} unsatisfiable\n", unsat,
                           plural(report.verdicts.size(), "concept"));
        break;
    }
    case Overall::Invalid: {
        out += fmt::format("INVALID: {}\n", plural(report.diagnostics.size(), "problem"));
        break;
    }
    }
    return out + renderDiagnostics(report.diagnostics);
}

std::string renderDiagnostics(const Diagnostics &diags)
{
    std::string out;
    for (const auto *d : ordered(diags)) {
        out += fmt::format("{}[{}] {}\n", toString(d->severity), toString(d->code), d->message);
        if (d->element.span.known())
            out += fmt::format("  --> {}\n", d->element.span.location());
    }
    return out;
}

std::string renderJson(const CheckReport &report)
{
    using nlohmann::ordered_json;
    ordered_json j;
    j["schemaVersion"] = kReportSchemaVersion;
    j["model"] = report.modelName;
    j["overall"] = toString(report.overall);
    j["concepts"] = ordered_json::array();
    for (const auto &v : report.verdicts) {
        ordered_json c;
        c["element"] = v.element.name;
        c["kind"] = v.element.kind == ElementKind::State ? "state" : "resource";
        c["status"] = v.status == dl::SatStatus::Sat ? "sat" : "unsat";
        c["line"] = v.element.span.startLine;
        c["col"] = v.element.span.startCol;
        j["concepts"].push_back(std::move(c));
    }
    j["diagnostics"] = ordered_json::array();
    for (const auto *d : ordered(report.diagnostics)) {
        ordered_json o;
        o["severity"] = toString(d->severity);
        o["code"] = toString(d->code);
        o["message"] = d->message;
        o["line"] = d->element.span.startLine;
        o["col"] = d->element.span.startCol;
        j["diagnostics"].push_back(std::move(o));
    }
    return j.dump(2) + "\n";
}

} // namespace restcheck
