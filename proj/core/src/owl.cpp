#include "restcheck/owl.hpp"

#include <fmt/format.h>

#include <cctype>
#include <map>
#include <set>

namespace restcheck::owl {

ClassExpr named(Iri iri) { return {Named{std::move(iri)}}; }
ClassExpr intersectionOf(std::vector<ClassExpr> operands) { return {IntersectionOf{std::move(operands)}}; }
ClassExpr unionOf(std::vector<ClassExpr> operands) { return {UnionOf{std::move(operands)}}; }
ClassExpr complementOf(ClassExpr operand) { return {ComplementOf{std::move(operand)}}; }
ClassExpr someValuesFrom(Iri property, ClassExpr filler)
{
    return {SomeValuesFrom{std::move(property), std::move(filler)}};
}
ClassExpr minCardinality(std::uint32_t n, Iri property) { return {MinCardinality{n, std::move(property)}}; }
ClassExpr maxCardinality(std::uint32_t n, Iri property) { return {MaxCardinality{n, std::move(property)}}; }
ClassExpr exactCardinality(std::uint32_t n, Iri property) { return {ExactCardinality{n, std::move(property)}}; }
ClassExpr dataHasValue(Iri property, std::string lexical, DataType datatype)
{
    return {DataHasValue{std::move(property), std::move(lexical), datatype}};
}
ClassExpr dataExactCardinality(std::uint32_t n, Iri property)
{
    return {DataExactCardinality{n, std::move(property)}};
}

std::vector<Iri> Ontology::declaredClasses() const
{
    std::vector<Iri> out;
    std::set<Iri> seen;
    for (const auto &ax : axioms)
        if (const auto *d = std::get_if<DeclareClass>(&ax))
            if (seen.insert(d->iri).second)
                out.push_back(d->iri);
    return out;
}

// ---------------------------------------------------------------------------
// Serializer

namespace {

constexpr std::string_view kXsdNamespace = "http://www.w3.org/2001/XMLSchema#";

std::string ref(const Iri &iri) { return ":" + iri; }

std::string quoteLiteral(const std::string &lexical)
{
    std::string out = "\"";
    for (char c : lexical) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string joinExprs(const std::vector<ClassExpr> &exprs)
{
    std::string out;
    for (const auto &e : exprs) {
        if (!out.empty())
            out += ' ';
        out += serialize(e);
    }
    return out;
}

std::string ontologyIri(const std::string &base)
{
    if (!base.empty() && (base.back() == '#' || base.back() == '/'))
        return base.substr(0, base.size() - 1);
    return base;
}

} // namespace

std::string serialize(const ClassExpr &expr)
{
    return std::visit(
        [](const auto &n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, Named>)
                return ref(n.iri);
            else if constexpr (std::is_same_v<T, IntersectionOf>)
                return "ObjectIntersectionOf(" + joinExprs(n.operands) + ")";
            else if constexpr (std::is_same_v<T, UnionOf>)
                return "ObjectUnionOf(" + joinExprs(n.operands) + ")";
            else if constexpr (std::is_same_v<T, ComplementOf>)
                return "ObjectComplementOf(" + serialize(*n.operand) + ")";
            else if constexpr (std::is_same_v<T, SomeValuesFrom>)
                return fmt::format("ObjectSomeValuesFrom({} {})", ref(n.property), serialize(*n.filler));
            else if constexpr (std::is_same_v<T, MinCardinality>)
                return fmt::format("ObjectMinCardinality({} {})", n.n, ref(n.property));
            else if constexpr (std::is_same_v<T, MaxCardinality>)
                return fmt::format("ObjectMaxCardinality({} {})", n.n, ref(n.property));
            else if constexpr (std::is_same_v<T, ExactCardinality>)
                return fmt::format("ObjectExactCardinality({} {})", n.n, ref(n.property));
            else if constexpr (std::is_same_v<T, DataHasValue>)
                return fmt::format("DataHasValue({} {}^^{})", ref(n.property), quoteLiteral(n.lexical),
                                   xsdName(n.datatype));
            else
                return fmt::format("DataExactCardinality({} {})", n.n, ref(n.property));
        },
        expr.node);
}

std::string serialize(const Axiom &axiom)
{
    return std::visit(
        [](const auto &a) -> std::string {
            using T = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<T, DeclareClass>)
                return fmt::format("Declaration(Class({}))", ref(a.iri));
            else if constexpr (std::is_same_v<T, DeclareObjectProperty>)
                return fmt::format("Declaration(ObjectProperty({}))", ref(a.iri));
            else if constexpr (std::is_same_v<T, DeclareDataProperty>)
                return fmt::format("Declaration(DataProperty({}))", ref(a.iri));
            else if constexpr (std::is_same_v<T, SubClassOf>)
                return fmt::format("SubClassOf({} {})", serialize(a.sub), serialize(a.super));
            else if constexpr (std::is_same_v<T, EquivalentClasses>)
                return fmt::format("EquivalentClasses({} {})", serialize(a.first), serialize(a.second));
            else if constexpr (std::is_same_v<T, DisjointClasses>)
                return "DisjointClasses(" + joinExprs(a.classes) + ")";
            else if constexpr (std::is_same_v<T, ObjectPropertyDomain>)
                return fmt::format("ObjectPropertyDomain({} {})", ref(a.property), serialize(a.domain));
            else if constexpr (std::is_same_v<T, ObjectPropertyRange>)
                return fmt::format("ObjectPropertyRange({} {})", ref(a.property), serialize(a.range));
            else if constexpr (std::is_same_v<T, DataPropertyDomain>)
                return fmt::format("DataPropertyDomain({} {})", ref(a.property), serialize(a.domain));
            else
                return fmt::format("DataPropertyRange({} {})", ref(a.property), xsdName(a.range));
        },
        axiom);
}

std::string serialize(const Ontology &ontology)
{
    std::string out = fmt::format("Prefix(:=<{}>)\nPrefix(xsd:=<{}>)\nOntology(<{}>\n", ontology.baseIri,
                                  kXsdNamespace, ontologyIri(ontology.baseIri));
    for (const auto &ax : ontology.axioms) {
        out += serialize(ax);
        out += '\n';
    }
    out += ")\n";
    return out;
}

// ---------------------------------------------------------------------------
// Parser

UnsupportedAxiom::UnsupportedAxiom(SourceSpan span, std::string construct)
    : std::runtime_error(fmt::format("{}: UNSUPPORTED_AXIOM: {} is outside the supported fragment",
                                     span.location(), construct)),
      span_(std::move(span)), construct_(std::move(construct))
{
}

namespace {

// Functional-syntax keywords that are valid OWL 2 but not part of the fragment.
const std::set<std::string, std::less<>> kOtherOwlKeywords = {
    "Import", "Annotation", "AnnotationAssertion", "SubAnnotationPropertyOf", "AnnotationPropertyDomain",
    "AnnotationPropertyRange", "NamedIndividual", "Datatype", "AnnotationProperty", "DisjointUnion",
    "SubObjectPropertyOf", "ObjectPropertyChain", "EquivalentObjectProperties", "DisjointObjectProperties",
    "InverseObjectProperties", "ObjectInverseOf", "FunctionalObjectProperty", "InverseFunctionalObjectProperty",
    "ReflexiveObjectProperty", "IrreflexiveObjectProperty", "SymmetricObjectProperty",
    "AsymmetricObjectProperty", "TransitiveObjectProperty", "SubDataPropertyOf", "EquivalentDataProperties",
    "DisjointDataProperties", "FunctionalDataProperty", "DatatypeDefinition", "HasKey", "SameIndividual",
    "DifferentIndividuals", "ClassAssertion", "ObjectPropertyAssertion", "NegativeObjectPropertyAssertion",
    "DataPropertyAssertion", "NegativeDataPropertyAssertion", "ObjectOneOf", "ObjectAllValuesFrom",
    "ObjectHasValue", "ObjectHasSelf", "DataSomeValuesFrom", "DataAllValuesFrom", "DataMinCardinality",
    "DataMaxCardinality", "DataIntersectionOf", "DataUnionOf", "DataComplementOf", "DataOneOf",
    "DatatypeRestriction",
};

enum class Tok { Word, Prefixed, FullIri, String, Number, LParen, RParen, Equals, Caret, At, End, Invalid };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    unsigned line = 1;
    unsigned col = 1;
};

bool nameChar(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.';
}

class Lexer {
public:
    Lexer(std::string_view in, std::string file) : in_(in), file_(std::move(file)) {}

    Token next()
    {
        skipTrivia();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= in_.size())
            return t;
        char c = peek();
        if (c == '<') {
            advance();
            while (pos_ < in_.size() && peek() != '>')
                t.text += advance();
            if (pos_ >= in_.size())
                throw ParseError(SourceSpan::at(file_, t.line, t.col), "'>'", "end of input");
            advance();
            t.kind = Tok::FullIri;
        } else if (c == '"') {
            advance();
            for (;;) {
                if (pos_ >= in_.size())
                    throw ParseError(SourceSpan::at(file_, t.line, t.col), "closing '\"'", "end of input");
                char ch = advance();
                if (ch == '"')
                    break;
                if (ch == '\\' && pos_ < in_.size())
                    ch = advance();
                t.text += ch;
            }
            t.kind = Tok::String;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            while (std::isdigit(static_cast<unsigned char>(peek())))
                t.text += advance();
            t.kind = Tok::Number;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == ':' || c == '_') {
            while (nameChar(peek()))
                t.text += advance();
            t.kind = Tok::Word;
            if (peek() == ':') {
                t.text += advance();
                while (nameChar(peek()))
                    t.text += advance();
                t.kind = Tok::Prefixed;
            }
        } else if (c == '^' && peekAt(1) == '^') {
            advance();
            advance();
            t.text = "^^";
            t.kind = Tok::Caret;
        } else {
            t.text = std::string(1, advance());
            t.kind = c == '(' ? Tok::LParen : c == ')' ? Tok::RParen : c == '=' ? Tok::Equals : c == '@' ? Tok::At : Tok::Invalid;
        }
        return t;
    }

    const std::string &file() const { return file_; }

private:
    char peek() const { return peekAt(0); }
    char peekAt(std::size_t off) const { return pos_ + off < in_.size() ? in_[pos_ + off] : '\0'; }

    char advance()
    {
        char c = in_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skipTrivia()
    {
        while (pos_ < in_.size()) {
            char c = peek();
            if (c == '#') {
                while (pos_ < in_.size() && peek() != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                return;
            }
        }
    }

    std::string_view in_;
    std::string file_;
    std::size_t pos_ = 0;
    unsigned line_ = 1;
    unsigned col_ = 1;
};

std::string describe(const Token &t)
{
    switch (t.kind) {
    case Tok::End:
        return "end of input";
    case Tok::FullIri:
        return fmt::format("'<{}>'", t.text);
    case Tok::String:
        return fmt::format("string \"{}\"", t.text);
    default:
        return fmt::format("'{}'", t.text);
    }
}

class Parser {
public:
    explicit Parser(Lexer &lex) : lex_(lex) { cur_ = lex_.next(); }

    Ontology parseDocument()
    {
        Ontology o;
        o.baseIri.clear();
        while (isWord("Prefix"))
            parsePrefix(o);
        if (!isWord("Ontology"))
            fail("'Prefix' or 'Ontology'");
        take();
        expect(Tok::LParen, "'('");
        if (cur_.kind == Tok::FullIri) {
            auto iri = take().text;
            if (o.baseIri.empty())
                o.baseIri = iri + "#";
            if (cur_.kind == Tok::FullIri)
                take(); // version IRI
        }
        if (o.baseIri.empty())
            o.baseIri = std::string(kDefaultBaseIri);
        base_ = o.baseIri;
        while (cur_.kind != Tok::RParen) {
            if (cur_.kind == Tok::End)
                fail("axiom or ')'");
            o.axioms.push_back(parseAxiom());
        }
        take();
        if (cur_.kind != Tok::End)
            fail("end of input");
        return o;
    }

private:
    bool isWord(std::string_view w) const { return cur_.kind == Tok::Word && cur_.text == w; }

    SourceSpan here() const { return SourceSpan::at(lex_.file(), cur_.line, cur_.col); }

    [[noreturn]] void fail(const std::string &expected) const { throw ParseError(here(), expected, describe(cur_)); }

    Token take()
    {
        Token t = cur_;
        cur_ = lex_.next();
        return t;
    }

    Token expect(Tok kind, const std::string &expected)
    {
        if (cur_.kind != kind)
            fail(expected);
        return take();
    }

    void parsePrefix(Ontology &o)
    {
        take();
        expect(Tok::LParen, "'('");
        if (cur_.kind != Tok::Prefixed || cur_.text.back() != ':')
            fail("prefix name");
        std::string name = take().text;
        expect(Tok::Equals, "'='");
        std::string iri = expect(Tok::FullIri, "IRI").text;
        expect(Tok::RParen, "')'");
        if (name == ":")
            o.baseIri = iri;
        prefixes_[name] = iri;
    }

    [[noreturn]] void unsupported(const std::string &construct) const { throw UnsupportedAxiom(here(), construct); }

    /// Entity IRI relative to the base.
    Iri entity(const std::string &what)
    {
        if (cur_.kind == Tok::Prefixed) {
            auto colon = cur_.text.find(':');
            auto prefix = cur_.text.substr(0, colon + 1);
            if (prefix == ":")
                return take().text.substr(1);
            auto it = prefixes_.find(prefix);
            if (it == prefixes_.end())
                fail(fmt::format("{} (prefix '{}' is not declared)", what, prefix));
            auto full = it->second + cur_.text.substr(colon + 1);
            if (full.rfind(base_, 0) == 0 && full.size() > base_.size()) {
                take();
                return full.substr(base_.size());
            }
            unsupported(fmt::format("entity '{}' outside the ontology namespace", cur_.text));
        }
        if (cur_.kind == Tok::FullIri) {
            if (cur_.text.rfind(base_, 0) == 0 && cur_.text.size() > base_.size())
                return take().text.substr(base_.size());
            unsupported(fmt::format("entity '<{}>' outside the ontology namespace", cur_.text));
        }
        fail(what);
    }

    DataType datatype()
    {
        if (cur_.kind == Tok::Prefixed) {
            std::string full = cur_.text;
            auto colon = full.find(':');
            auto it = prefixes_.find(full.substr(0, colon + 1));
            if (it != prefixes_.end() && it->second == kXsdNamespace)
                full = "xsd:" + full.substr(colon + 1);
            if (auto t = dataTypeFromXsd(full)) {
                take();
                return *t;
            }
            unsupported(fmt::format("datatype '{}'", cur_.text));
        }
        if (cur_.kind == Tok::FullIri && cur_.text.rfind(kXsdNamespace, 0) == 0) {
            if (auto t = dataTypeFromXsd("xsd:" + cur_.text.substr(kXsdNamespace.size()))) {
                take();
                return *t;
            }
            unsupported(fmt::format("datatype '<{}>'", cur_.text));
        }
        fail("datatype");
    }

    std::uint32_t number()
    {
        Token t = expect(Tok::Number, "cardinality");
        try {
            auto v = std::stoull(t.text);
            if (v <= UINT32_MAX)
                return static_cast<std::uint32_t>(v);
        } catch (const std::out_of_range &) {
        }
        throw ParseError(SourceSpan::at(lex_.file(), t.line, t.col), "cardinality below 2^32", describe(t));
    }

    Axiom parseAxiom()
    {
        if (cur_.kind != Tok::Word)
            fail("axiom");
        const std::string kw = cur_.text;
        if (kOtherOwlKeywords.count(kw))
            unsupported(kw);
        Axiom ax;
        if (kw == "Declaration") {
            take();
            expect(Tok::LParen, "'('");
            if (cur_.kind != Tok::Word)
                fail("entity kind");
            std::string kind = cur_.text;
            if (kind != "Class" && kind != "ObjectProperty" && kind != "DataProperty") {
                if (kOtherOwlKeywords.count(kind))
                    unsupported("Declaration(" + kind + ")");
                fail("'Class', 'ObjectProperty' or 'DataProperty'");
            }
            take();
            expect(Tok::LParen, "'('");
            Iri iri = entity("entity IRI");
            expect(Tok::RParen, "')'");
            if (kind == "Class")
                ax = DeclareClass{iri};
            else if (kind == "ObjectProperty")
                ax = DeclareObjectProperty{iri};
            else
                ax = DeclareDataProperty{iri};
        } else if (kw == "SubClassOf") {
            take();
            expect(Tok::LParen, "'('");
            auto sub = parseClassExpr();
            auto sup = parseClassExpr();
            ax = SubClassOf{std::move(sub), std::move(sup)};
        } else if (kw == "EquivalentClasses") {
            take();
            expect(Tok::LParen, "'('");
            auto a = parseClassExpr();
            auto b = parseClassExpr();
            if (cur_.kind != Tok::RParen)
                unsupported("EquivalentClasses with more than two operands");
            ax = EquivalentClasses{std::move(a), std::move(b)};
        } else if (kw == "DisjointClasses") {
            take();
            expect(Tok::LParen, "'('");
            DisjointClasses d;
            d.classes.push_back(parseClassExpr());
            do
                d.classes.push_back(parseClassExpr());
            while (cur_.kind != Tok::RParen);
            ax = std::move(d);
        } else if (kw == "ObjectPropertyDomain" || kw == "ObjectPropertyRange" || kw == "DataPropertyDomain") {
            take();
            expect(Tok::LParen, "'('");
            Iri p = entity("property IRI");
            auto c = parseClassExpr();
            if (kw == "ObjectPropertyDomain")
                ax = ObjectPropertyDomain{p, std::move(c)};
            else if (kw == "ObjectPropertyRange")
                ax = ObjectPropertyRange{p, std::move(c)};
            else
                ax = DataPropertyDomain{p, std::move(c)};
        } else if (kw == "DataPropertyRange") {
            take();
            expect(Tok::LParen, "'('");
            Iri p = entity("data property IRI");
            ax = DataPropertyRange{p, datatype()};
        } else {
            fail("axiom");
        }
        expect(Tok::RParen, "')'");
        return ax;
    }

    std::vector<ClassExpr> operands(std::size_t minimum)
    {
        std::vector<ClassExpr> out;
        while (cur_.kind != Tok::RParen || out.size() < minimum)
            out.push_back(parseClassExpr());
        return out;
    }

    ClassExpr parseClassExpr()
    {
        if (cur_.kind == Tok::Prefixed || cur_.kind == Tok::FullIri)
            return named(entity("class IRI"));
        if (cur_.kind != Tok::Word)
            fail("class expression");
        const std::string kw = cur_.text;
        if (kOtherOwlKeywords.count(kw))
            unsupported(kw);
        ClassExpr out;
        if (kw == "ObjectIntersectionOf") {
            take();
            expect(Tok::LParen, "'('");
            out = intersectionOf(operands(2));
        } else if (kw == "ObjectUnionOf") {
            take();
            expect(Tok::LParen, "'('");
            out = unionOf(operands(2));
        } else if (kw == "ObjectComplementOf") {
            take();
            expect(Tok::LParen, "'('");
            out = complementOf(parseClassExpr());
        } else if (kw == "ObjectSomeValuesFrom") {
            take();
            expect(Tok::LParen, "'('");
            Iri p = entity("object property IRI");
            out = someValuesFrom(p, parseClassExpr());
        } else if (kw == "ObjectMinCardinality" || kw == "ObjectMaxCardinality" ||
                   kw == "ObjectExactCardinality" || kw == "DataExactCardinality") {
            take();
            expect(Tok::LParen, "'('");
            auto n = number();
            Iri p = entity("property IRI");
            if (cur_.kind != Tok::RParen)
                unsupported("qualified " + kw);
            if (kw == "ObjectMinCardinality")
                out = minCardinality(n, p);
            else if (kw == "ObjectMaxCardinality")
                out = maxCardinality(n, p);
            else if (kw == "ObjectExactCardinality")
                out = exactCardinality(n, p);
            else
                out = dataExactCardinality(n, p);
        } else if (kw == "DataHasValue") {
            take();
            expect(Tok::LParen, "'('");
            Iri p = entity("data property IRI");
            Token lit = expect(Tok::String, "literal");
            DataType t = DataType::String;
            if (cur_.kind == Tok::At)
                unsupported("language-tagged literal");
            if (cur_.kind == Tok::Caret) {
                take();
                t = datatype();
            }
            if (!validLexical(t, lit.text))
                throw ParseError(SourceSpan::at(lex_.file(), lit.line, lit.col),
                                 fmt::format("{} literal", xsdName(t)), describe(lit));
            out = dataHasValue(p, lit.text, t);
        } else {
            fail("class expression");
        }
        expect(Tok::RParen, "')'");
        return out;
    }

    Lexer &lex_;
    Token cur_;
    std::string base_;
    std::map<std::string, std::string> prefixes_;
};

} // namespace

Ontology parseFunctionalSyntax(std::string_view input, const std::string &fileName)
{
    Lexer lex(input, fileName);
    return Parser(lex).parseDocument();
}

} // namespace restcheck::owl
