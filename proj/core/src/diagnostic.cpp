#include "restcheck/diagnostic.hpp"

#include <algorithm>

namespace restcheck {

std::string_view toString(DiagCode code)
{
    switch (code) {
    case DiagCode::Connectivity:
        return "CONNECTIVITY";
    case DiagCode::DuplicateLabel:
        return "DUPLICATE_LABEL";
    case DiagCode::CollectionHasAttr:
        return "COLLECTION_HAS_ATTR";
    case DiagCode::NormalNoAttr:
        return "NORMAL_NO_ATTR";
    case DiagCode::BadCardinality:
        return "BAD_CARDINALITY";
    case DiagCode::UnresolvedPath:
        return "UNRESOLVED_PATH";
    case DiagCode::NoPath:
        return "NO_PATH";
    case DiagCode::Parse:
        return "PARSE";
    case DiagCode::UnsatResource:
        return "UNSAT_RESOURCE";
    case DiagCode::UnsatState:
        return "UNSAT_STATE";
    case DiagCode::NegativeBound:
        return "NEGATIVE_BOUND";
    case DiagCode::RootCount:
        return "ROOT_COUNT";
    case DiagCode::DuplicateName:
        return "DUPLICATE_NAME";
    case DiagCode::HierarchyCycle:
        return "HIERARCHY_CYCLE";
    case DiagCode::UnresolvedRef:
        return "UNRESOLVED_REF";
    case DiagCode::InitialCount:
        return "INITIAL_COUNT";
    case DiagCode::BadState:
        return "BAD_STATE";
    case DiagCode::LiteralType:
        return "LITERAL_TYPE";
    }
    return "PARSE";
}

std::string_view toString(Severity severity)
{
    return severity == Severity::Error ? "error" : "warning";
}

Severity severityOf(DiagCode)
{
    return Severity::Error;
}

bool isStructural(DiagCode code)
{
    switch (code) {
    case DiagCode::UnsatResource:
    case DiagCode::UnsatState:
    case DiagCode::NegativeBound:
        return false;
    default:
        return true;
    }
}

std::string_view toString(ElementKind kind)
{
    switch (kind) {
    case ElementKind::Model:
        return "model";
    case ElementKind::Resource:
        return "resource";
    case ElementKind::Attribute:
        return "attribute";
    case ElementKind::Association:
        return "association";
    case ElementKind::Behavior:
        return "behavior";
    case ElementKind::State:
        return "state";
    case ElementKind::Transition:
        return "transition";
    }
    return "model";
}

bool hasCode(const Diagnostics &diags, DiagCode code)
{
    return std::any_of(diags.begin(), diags.end(), [code](const Diagnostic &d) { return d.code == code; });
}

} // namespace restcheck
