#pragma once

#include "restcheck/source_span.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace restcheck {

enum class Severity { Error, Warning };

enum class DiagCode {
    Connectivity,
    DuplicateLabel,
    CollectionHasAttr,
    NormalNoAttr,
    BadCardinality,
    UnresolvedPath,
    NoPath,
    Parse,
    UnsatResource,
    UnsatState,
    NegativeBound,
    // Structural checks beyond the core RESTfulness rules.
    RootCount,
    DuplicateName,
    HierarchyCycle,
    UnresolvedRef,
    InitialCount,
    BadState,
    LiteralType,
};

/// Upper-snake spelling used in reports, e.g. "UNSAT_STATE".
std::string_view toString(DiagCode code);
std::string_view toString(Severity severity);
/// Every code is currently an error.
Severity severityOf(DiagCode code);

/// True for codes that make a model structurally invalid (no reasoning
/// attempted). Reasoning outcomes (UNSAT_*, NEGATIVE_BOUND) are not.
bool isStructural(DiagCode code);

enum class ElementKind { Model, Resource, Attribute, Association, Behavior, State, Transition };

std::string_view toString(ElementKind kind);

struct ElementRef {
    ElementKind kind = ElementKind::Model;
    std::string name;
    SourceSpan span;
};

struct Diagnostic {
    Severity severity = Severity::Error;
    DiagCode code = DiagCode::Parse;
    ElementRef element;
    std::string message;

    static Diagnostic make(DiagCode code, ElementRef element, std::string message)
    {
        return {severityOf(code), code, std::move(element), std::move(message)};
    }
};

using Diagnostics = std::vector<Diagnostic>;

bool hasCode(const Diagnostics &diags, DiagCode code);

} // namespace restcheck
