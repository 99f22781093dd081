#pragma once

#include "restcheck/diagnostic.hpp"
#include "restcheck/model.hpp"
#include "restcheck/owl.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace restcheck {

enum class IriCategory { Class, ObjectProperty, DataProperty };

/// Model element behind an IRI. `owner` is set for attributes only.
struct ModelElement {
    ElementKind kind = ElementKind::Resource;
    std::string name;
    std::string owner;
    SourceSpan span;

    friend bool operator==(const ModelElement &a, const ModelElement &b)
    {
        return a.kind == b.kind && a.name == b.name && a.owner == b.owner;
    }
};

/// Bidirectional element <-> IRI fragment map. Injective within each OWL
/// entity category; a class and an object property may share a fragment
/// (OWL 2 punning), e.g. collection "rooms" and association "rooms".
class IriMap {
public:
    /// Assigns `preferred` if free in the element's category, otherwise
    /// the first of "<owner>_<preferred>", then numbered suffixes.
    owl::Iri assign(const ModelElement &element, std::string preferred);

    [[nodiscard]] std::optional<owl::Iri> iriOf(ElementKind kind, std::string_view name,
                                                std::string_view owner = {}) const;
    [[nodiscard]] const ModelElement *elementOf(IriCategory category, std::string_view iri) const;
    /// Convenience: class IRIs name resources and states.
    [[nodiscard]] const ModelElement *classElement(std::string_view iri) const
    {
        return elementOf(IriCategory::Class, iri);
    }

    [[nodiscard]] std::size_t size() const { return byIri_.size(); }

private:
    static IriCategory categoryOf(ElementKind kind);
    static std::string keyOf(ElementKind kind, std::string_view name, std::string_view owner);

    std::map<std::pair<IriCategory, owl::Iri>, ModelElement> byIri_;
    std::map<std::string, owl::Iri> byElement_;
};

struct Translation {
    owl::Ontology ontology;
    IriMap iris;
    /// Non-structural findings raised while translating (NEGATIVE_BOUND).
    Diagnostics diagnostics;
};

/// Thrown when a translator is handed a model that fails validation.
class PreconditionViolated : public std::runtime_error {
public:
    explicit PreconditionViolated(Diagnostics diags);
    [[nodiscard]] const Diagnostics &diagnostics() const { return diags_; }

private:
    Diagnostics diags_;
};

Translation translateResourceModel(const ResourceModel &rm,
                                   std::string baseIri = std::string(owl::kDefaultBaseIri));

/// Appends the behavioral axioms to `base`, which must hold rm's translation.
Translation translateBehavioralModel(const BehavioralModel &bm, const ResourceModel &rm,
                                     Translation base);

/// Maps an invariant to a class expression evaluated at `context`
/// instances. A "size() < 0" comparison yields an unsatisfiable expression
/// and a NEGATIVE_BOUND diagnostic appended to `diags`.
owl::ClassExpr translateOcl(const OclExpr &expr, const ResourceModel &rm, std::string_view context,
                            const IriMap &iris, Diagnostics &diags);

/// Both models in one ontology.
Translation translateModels(const ResourceModel &rm, const BehavioralModel *bm,
                            std::string baseIri = std::string(owl::kDefaultBaseIri));

} // namespace restcheck
