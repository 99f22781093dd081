#pragma once

#include "restcheck/diagnostic.hpp"
#include "restcheck/tableau.hpp"
#include "restcheck/translator.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace restcheck {

enum class Overall { Consistent, Inconsistent, Invalid };

std::string_view toString(Overall o);

struct ConceptVerdict {
    ElementRef element; // Resource or State
    dl::SatStatus status = dl::SatStatus::Sat;
};

struct CheckReport {
    std::string modelName;
    std::vector<ConceptVerdict> verdicts;
    Diagnostics diagnostics;
    Overall overall = Overall::Consistent;

    [[nodiscard]] std::size_t count(ElementKind kind) const;
};

/// Internal invariant breach: a verdict names an IRI the map does not know.
class UnmappedIri : public std::runtime_error {
public:
    explicit UnmappedIri(const std::string &iri);
};

/// UNSAT verdicts become UNSAT_RESOURCE / UNSAT_STATE diagnostics at the
/// element's source span. Structural diagnostics make the report invalid
/// and drop the verdicts.
CheckReport buildReport(std::string modelName, const std::vector<dl::SatVerdict> &verdicts,
                        const IriMap &map, Diagnostics diags);

/// Report for input that never reached reasoning.
CheckReport invalidReport(std::string modelName, Diagnostics diags);

/// Diagnostics grouped by severity, then source order.
std::string renderText(const CheckReport &report);

/// Just the diagnostic lines of renderText.
std::string renderDiagnostics(const Diagnostics &diags);

/// Stable key order; "schemaVersion": 1.
std::string renderJson(const CheckReport &report);

inline constexpr int kReportSchemaVersion = 1;

} // namespace restcheck
