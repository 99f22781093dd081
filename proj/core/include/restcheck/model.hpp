#pragma once

#include "restcheck/datatype.hpp"
#include "restcheck/diagnostic.hpp"
#include "restcheck/ocl.hpp"
#include "restcheck/source_span.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace restcheck {

// ---------------------------------------------------------------------------
// Resource model

enum class ResourceKind { Collection, Normal };

struct AttributeDef {
    std::string name;
    DataType type = DataType::String;
    SourceSpan span;
};

struct ResourceDef {
    std::string name;
    ResourceKind kind = ResourceKind::Normal;
    std::vector<AttributeDef> attributes;
    /// Super-resource, if this is a subresource.
    std::optional<std::string> parent;
    bool isRoot = false;
    SourceSpan span;

    [[nodiscard]] const AttributeDef *findAttribute(std::string_view attr) const;
};

struct Association {
    std::string label;
    std::string source;
    std::string target;
    std::uint32_t min = 0;
    /// nullopt means unbounded ("*").
    std::optional<std::uint32_t> max;
    SourceSpan span;
};

struct ResourceModel {
    std::string name;
    std::vector<ResourceDef> resources;
    std::vector<Association> associations;
    SourceSpan span;

    [[nodiscard]] const ResourceDef *find(std::string_view resource) const;
    [[nodiscard]] const Association *findAssociation(std::string_view label) const;
    /// The unique root, or nullptr when there is not exactly one.
    [[nodiscard]] const ResourceDef *root() const;
    /// `resource` followed by its super-resources, nearest first. Stops on
    /// cycles and unknown names.
    [[nodiscard]] std::vector<const ResourceDef *> lineage(std::string_view resource) const;
};

// ---------------------------------------------------------------------------
// Behavioral model

enum class StateKind { Simple, Composite, Initial, Final };

enum class Method { Put, Post, Delete };

std::string_view toString(Method m);

struct State {
    std::string name;
    StateKind kind = StateKind::Simple;
    std::optional<std::string> parent;
    std::uint32_t region = 0;
    std::optional<OclExpr> invariant;
    SourceSpan span;

    [[nodiscard]] bool isPseudo() const { return kind == StateKind::Initial; }
};

struct Transition {
    std::string source;
    std::string target;
    Method trigger = Method::Put;
    std::optional<std::string> targetResource;
    /// Guard and postcondition are kept verbatim and never interpreted.
    std::string guardText;
    std::string postText;
    SourceSpan span;
};

struct BehavioralModel {
    std::string name;
    std::string forResource;
    std::vector<State> states;
    std::vector<Transition> transitions;
    SourceSpan span;

    [[nodiscard]] const State *find(std::string_view state) const;
};

/// Structural equality ignoring source spans.
bool sameStructure(const ResourceModel &a, const ResourceModel &b);
bool sameStructure(const BehavioralModel &a, const BehavioralModel &b);

// ---------------------------------------------------------------------------
// Structural validation

/// One diagnostic per violation of connectivity, label injectivity,
/// collection/normal attribute rules, min <= max and the single-root rule
/// (plus duplicate names and hierarchy cycles). Empty means structurally
/// RESTful.
Diagnostics validateResourceModel(const ResourceModel &rm);

/// Diagnostics for unresolved references, invariant paths that do not
/// resolve, duplicate state names, misplaced regions and initial states.
Diagnostics validateBehavioralModel(const BehavioralModel &bm, const ResourceModel &rm);

class NoPathError : public std::runtime_error {
public:
    explicit NoPathError(const std::string &target);
};

/// Relative URI template of `target`: "/{<root>Id}/" followed by the labels
/// of the shortest directed path from the root, "/"-joined. Ties go to the
/// lexicographically smallest label sequence. A subresource is addressed
/// through its super-resource. Throws NoPathError when unreachable.
std::string navigationPath(const ResourceModel &rm, std::string_view target);

} // namespace restcheck
