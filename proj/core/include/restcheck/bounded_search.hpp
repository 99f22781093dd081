#pragma once

// Finite-model oracle. Grounds the ontology over a fixed domain and decides
// the resulting propositional problem by exhaustive DPLL search. Shares no
// code with the tableau beyond the OWL AST and literal canonicalization.

#include "restcheck/datatype.hpp"
#include "restcheck/owl.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace restcheck::dl {

struct FiniteModel {
    std::size_t domainSize = 0;
    std::map<owl::Iri, std::vector<std::size_t>> classes;
    std::map<owl::Iri, std::vector<std::pair<std::size_t, std::size_t>>> roles;
    std::map<owl::Iri, std::vector<std::pair<std::size_t, LiteralValue>>> data;

    /// Deterministic text rendering, one relation per line.
    [[nodiscard]] std::string toString() const;
};

struct SearchBudget {
    std::size_t maxDomain = 6;
    /// Upper limit on grounded clauses for a single domain size.
    std::size_t maxClauses = 2'000'000;
};

class BoundTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BoundedResult {
    /// Set when some interpretation with 1..maxDomain elements satisfies
    /// every axiom and gives the concept a nonempty extent.
    std::optional<FiniteModel> model;

    [[nodiscard]] bool found() const { return model.has_value(); }
};

/// Literal universe: every literal in the ontology, both booleans, and
/// max(1, largest DataExactCardinality) fresh values per infinite datatype. Throws BoundTooLarge when maxDomain or the grounding exceeds
/// the budget, std::invalid_argument when maxDomain is 0.
BoundedResult boundedModelSearch(const owl::Ontology &ontology, const owl::Iri &conceptIri,
                                 std::size_t maxDomain, const SearchBudget &budget = {});

/// Direct evaluation of every axiom over a finite interpretation.
bool satisfies(const owl::Ontology &ontology, const FiniteModel &model);

} // namespace restcheck::dl
