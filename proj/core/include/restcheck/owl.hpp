#pragma once

// OWL 2 functional-syntax fragment: the class expressions and axioms the
// translator emits, with a canonical serializer and a matching parser.

#include "restcheck/datatype.hpp"
#include "restcheck/source_span.hpp"

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace restcheck::owl {

inline constexpr std::string_view kDefaultBaseIri = "http://restcheck.example/models#";

/// Deep-copying owning pointer, for recursive value types.
template <typename T>
class Box {
public:
    Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
    Box(const Box &other) : ptr_(std::make_unique<T>(*other.ptr_)) {}
    Box(Box &&) noexcept = default;
    Box &operator=(const Box &other)
    {
        if (this != &other)
            ptr_ = std::make_unique<T>(*other.ptr_);
        return *this;
    }
    Box &operator=(Box &&) noexcept = default;

    const T &operator*() const { return *ptr_; }
    const T *operator->() const { return ptr_.get(); }

    friend bool operator==(const Box &a, const Box &b) { return *a.ptr_ == *b.ptr_; }

private:
    std::unique_ptr<T> ptr_;
};

/// Entity names are IRI fragments relative to the ontology base ("Booking"
/// serializes as ":Booking").
using Iri = std::string;

struct ClassExpr;

struct Named {
    Iri iri;
    friend bool operator==(const Named &, const Named &) = default;
};
struct IntersectionOf {
    std::vector<ClassExpr> operands;
    friend bool operator==(const IntersectionOf &, const IntersectionOf &) = default;
};
struct UnionOf {
    std::vector<ClassExpr> operands;
    friend bool operator==(const UnionOf &, const UnionOf &) = default;
};
struct ComplementOf {
    Box<ClassExpr> operand;
    friend bool operator==(const ComplementOf &, const ComplementOf &) = default;
};
struct SomeValuesFrom {
    Iri property;
    Box<ClassExpr> filler;
    friend bool operator==(const SomeValuesFrom &, const SomeValuesFrom &) = default;
};
struct MinCardinality {
    std::uint32_t n = 0;
    Iri property;
    friend bool operator==(const MinCardinality &, const MinCardinality &) = default;
};
struct MaxCardinality {
    std::uint32_t n = 0;
    Iri property;
    friend bool operator==(const MaxCardinality &, const MaxCardinality &) = default;
};
struct ExactCardinality {
    std::uint32_t n = 0;
    Iri property;
    friend bool operator==(const ExactCardinality &, const ExactCardinality &) = default;
};
struct DataHasValue {
    Iri property;
    /// Lexical form as written; equality in reasoning uses canonical forms.
    std::string lexical;
    DataType datatype = DataType::String;
    friend bool operator==(const DataHasValue &, const DataHasValue &) = default;
};
struct DataExactCardinality {
    std::uint32_t n = 0;
    Iri property;
    friend bool operator==(const DataExactCardinality &, const DataExactCardinality &) = default;
};

struct ClassExpr {
    std::variant<Named, IntersectionOf, UnionOf, ComplementOf, SomeValuesFrom, MinCardinality,
                 MaxCardinality, ExactCardinality, DataHasValue, DataExactCardinality>
        node;

    friend bool operator==(const ClassExpr &, const ClassExpr &) = default;
};

ClassExpr named(Iri iri);
ClassExpr intersectionOf(std::vector<ClassExpr> operands);
ClassExpr unionOf(std::vector<ClassExpr> operands);
ClassExpr complementOf(ClassExpr operand);
ClassExpr someValuesFrom(Iri property, ClassExpr filler);
ClassExpr minCardinality(std::uint32_t n, Iri property);
ClassExpr maxCardinality(std::uint32_t n, Iri property);
ClassExpr exactCardinality(std::uint32_t n, Iri property);
ClassExpr dataHasValue(Iri property, std::string lexical, DataType datatype);
ClassExpr dataExactCardinality(std::uint32_t n, Iri property);

struct DeclareClass {
    Iri iri;
    friend bool operator==(const DeclareClass &, const DeclareClass &) = default;
};
struct DeclareObjectProperty {
    Iri iri;
    friend bool operator==(const DeclareObjectProperty &, const DeclareObjectProperty &) = default;
};
struct DeclareDataProperty {
    Iri iri;
    friend bool operator==(const DeclareDataProperty &, const DeclareDataProperty &) = default;
};
struct SubClassOf {
    ClassExpr sub;
    ClassExpr super;
    friend bool operator==(const SubClassOf &, const SubClassOf &) = default;
};
struct EquivalentClasses {
    ClassExpr first;
    ClassExpr second;
    friend bool operator==(const EquivalentClasses &, const EquivalentClasses &) = default;
};
struct DisjointClasses {
    std::vector<ClassExpr> classes;
    friend bool operator==(const DisjointClasses &, const DisjointClasses &) = default;
};
struct ObjectPropertyDomain {
    Iri property;
    ClassExpr domain;
    friend bool operator==(const ObjectPropertyDomain &, const ObjectPropertyDomain &) = default;
};
struct ObjectPropertyRange {
    Iri property;
    ClassExpr range;
    friend bool operator==(const ObjectPropertyRange &, const ObjectPropertyRange &) = default;
};
struct DataPropertyDomain {
    Iri property;
    ClassExpr domain;
    friend bool operator==(const DataPropertyDomain &, const DataPropertyDomain &) = default;
};
struct DataPropertyRange {
    Iri property;
    DataType range = DataType::String;
    friend bool operator==(const DataPropertyRange &, const DataPropertyRange &) = default;
};

using Axiom = std::variant<DeclareClass, DeclareObjectProperty, DeclareDataProperty, SubClassOf,
                           EquivalentClasses, DisjointClasses, ObjectPropertyDomain,
                           ObjectPropertyRange, DataPropertyDomain, DataPropertyRange>;

struct Ontology {
    std::string baseIri{kDefaultBaseIri};
    std::vector<Axiom> axioms;

    friend bool operator==(const Ontology &, const Ontology &) = default;

    /// Named classes in declaration order.
    [[nodiscard]] std::vector<Iri> declaredClasses() const;
};

std::string serialize(const ClassExpr &expr);
std::string serialize(const Axiom &axiom);

/// Prefix header, Ontology(...) wrapper, one axiom per line, LF endings.
std::string serialize(const Ontology &ontology);

/// A well-formed OWL construct outside the supported fragment.
class UnsupportedAxiom : public std::runtime_error {
public:
    UnsupportedAxiom(SourceSpan span, std::string construct);

    [[nodiscard]] const SourceSpan &span() const { return span_; }
    [[nodiscard]] const std::string &construct() const { return construct_; }

private:
    SourceSpan span_;
    std::string construct_;
};

/// Inverse of serialize on the supported fragment. Throws ParseError on
/// malformed input and UnsupportedAxiom for constructs such as ObjectHasSelf.
Ontology parseFunctionalSyntax(std::string_view input, const std::string &fileName = "<input>");

} // namespace restcheck::owl
