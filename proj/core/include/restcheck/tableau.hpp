#pragma once

// Tableau satisfiability for the translator's fragment: ALC with unqualified
// number restrictions, general concept inclusions and data properties with
// literal values. No inverse roles and no nominals.

#include "restcheck/datatype.hpp"
#include "restcheck/owl.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace restcheck::dl {

using ConceptId = std::uint32_t;
using Symbol = std::uint32_t;

/// Concepts are kept in negation normal form; negation only appears on
/// atoms and data values.
enum class ConceptOp {
    Top,
    Bottom,
    Atom,
    NotAtom,
    And,
    Or,
    Some,
    All,
    AtLeast,
    AtMost,
    DataValue,
    NotDataValue,
    DataAtLeast,
    DataAtMost,
};

struct Concept {
    ConceptOp op = ConceptOp::Top;
    /// Atom, role or data property symbol, depending on op.
    Symbol symbol = 0;
    std::uint32_t n = 0;
    /// Sorted, duplicate-free operands for And/Or; single filler for Some/All.
    std::vector<ConceptId> args;
    LiteralValue value;

    friend bool operator==(const Concept &, const Concept &) = default;
};

/// Hash-consed concept store. Structurally equal concepts share one id.
class ConceptPool {
public:
    ConceptPool();

    ConceptId top() const { return top_; }
    ConceptId bottom() const { return bottom_; }

    ConceptId atom(Symbol a, bool negated = false);
    ConceptId conj(std::vector<ConceptId> operands);
    ConceptId disj(std::vector<ConceptId> operands);
    ConceptId some(Symbol role, ConceptId filler);
    ConceptId all(Symbol role, ConceptId filler);
    /// n == 0 collapses to Top.
    ConceptId atLeast(std::uint32_t n, Symbol role);
    /// n < 0 collapses to Bottom.
    ConceptId atMost(std::int64_t n, Symbol role);
    ConceptId dataValue(Symbol property, LiteralValue value, bool negated = false);
    ConceptId dataAtLeast(std::uint32_t n, Symbol property);
    ConceptId dataAtMost(std::int64_t n, Symbol property);

    /// NNF of the complement.
    ConceptId negate(ConceptId c);

    const Concept &operator[](ConceptId c) const { return concepts_[c]; }
    std::size_t size() const { return concepts_.size(); }

private:
    ConceptId intern(Concept c);

    struct Hash {
        std::size_t operator()(const Concept &c) const;
    };

    std::vector<Concept> concepts_;
    std::unordered_map<Concept, ConceptId, Hash> index_;
    ConceptId top_ = 0;
    ConceptId bottom_ = 0;
};

/// sub ⊑ sup, both in NNF.
struct Inclusion {
    ConceptId sub = 0;
    ConceptId sup = 0;
};

/// Construct outside the supported fragment.
class UnsupportedConstruct : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class TBox {
public:
    [[nodiscard]] const ConceptPool &concepts() const { return pool_; }
    /// Every axiom as NNF inclusions, in ontology order.
    [[nodiscard]] const std::vector<Inclusion> &inclusions() const { return inclusions_; }
    /// Declared named classes, in declaration order.
    [[nodiscard]] const std::vector<owl::Iri> &namedClasses() const { return classOrder_; }

    [[nodiscard]] std::optional<Symbol> classSymbol(std::string_view iri) const;
    /// The atomic concept of a class symbol.
    [[nodiscard]] ConceptId classConcept(Symbol a) const { return atoms_.at(a); }

    /// Human-readable DL rendering, e.g. "∃payment.⊤" or "¬A ⊔ B".
    [[nodiscard]] std::string describe(ConceptId c) const;
    [[nodiscard]] std::string describe(const Inclusion &inc) const;

    // Absorbed form consumed by the tableau.

    /// A ⊑ C with atomic A: C is added when A enters a label.
    [[nodiscard]] const std::vector<ConceptId> &unfolding(Symbol atom) const;
    /// Object property domains, added to a node when it gains a successor.
    [[nodiscard]] const std::vector<ConceptId> &roleDomain(Symbol role) const;
    /// Data property domains, added when a node carries a value.
    [[nodiscard]] const std::vector<ConceptId> &dataDomain(Symbol property) const;
    /// Admissible datatypes of a data property; empty means unrestricted.
    [[nodiscard]] const std::vector<DataType> &dataRange(Symbol property) const;
    /// NNF complement of a concept occurring as a disjunct.
    [[nodiscard]] ConceptId complement(ConceptId c) const;
    /// Conjunction of all remaining inclusions; holds at every node.
    [[nodiscard]] ConceptId globalConstraint() const { return global_; }

    [[nodiscard]] std::string roleName(Symbol r) const { return roleNames_.at(r); }
    [[nodiscard]] std::string dataPropertyName(Symbol d) const { return dataNames_.at(d); }
    [[nodiscard]] std::string className(Symbol a) const { return classNames_.at(a); }

private:
    friend TBox compileTBox(const owl::Ontology &ontology);
    friend class TBoxBuilder;

    ConceptPool pool_;
    std::vector<Inclusion> inclusions_;
    std::vector<owl::Iri> classOrder_;

    std::vector<std::string> classNames_;
    std::vector<std::string> roleNames_;
    std::vector<std::string> dataNames_;
    std::map<std::string, Symbol, std::less<>> classIds_;

    std::vector<ConceptId> atoms_;
    std::vector<std::vector<ConceptId>> unfold_;
    std::vector<std::vector<ConceptId>> roleDomain_;
    std::vector<std::vector<ConceptId>> dataDomain_;
    std::vector<std::vector<DataType>> dataRange_;
    ConceptId global_ = 0;
    std::map<ConceptId, ConceptId> complement_;
};

/// EquivalentClasses(A, C) -> A ⊑ C and C ⊑ A; ObjectPropertyDomain(p, C)
/// -> ∃p.⊤ ⊑ C; ObjectPropertyRange(p, C) -> ⊤ ⊑ ∀p.C; DisjointClasses over
/// n classes -> pairwise Ci ⊓ Cj ⊑ ⊥. Inclusions with an atomic left-hand
/// side and domain inclusions are absorbed; the rest are internalized into
/// the global constraint.
TBox compileTBox(const owl::Ontology &ontology);

enum class SatStatus { Sat, Unsat };

std::string_view toString(SatStatus s);

struct SatVerdict {
    owl::Iri conceptIri;
    SatStatus status = SatStatus::Unsat;
    /// Nodes in the completed clash-free tableau; absent when unsatisfiable.
    std::optional<std::size_t> witnessSize;
};

/// Throws std::invalid_argument if `concept` is not a declared class.
SatVerdict isSatisfiable(const TBox &tbox, std::string_view conceptIri);

/// One verdict per declared class, in declaration order.
std::vector<SatVerdict> classifyAll(const TBox &tbox);

} // namespace restcheck::dl
