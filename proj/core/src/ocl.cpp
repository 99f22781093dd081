#include "restcheck/ocl.hpp"

#include "restcheck/model.hpp"

#include <fmt/format.h>

#include <cctype>

namespace restcheck {

std::string_view toString(CmpOp op)
{
    switch (op) {
    case CmpOp::Eq:
        return "=";
    case CmpOp::Ge:
        return ">=";
    case CmpOp::Le:
        return "<=";
    case CmpOp::Gt:
        return ">";
    case CmpOp::Lt:
        return "<";
    }
    return "=";
}

bool operator==(const OclExpr &a, const OclExpr &b) { return a.node == b.node; }
bool operator==(const OclOr &a, const OclOr &b) { return a.operands == b.operands; }
bool operator==(const OclAnd &a, const OclAnd &b) { return a.operands == b.operands; }
bool operator==(const AttrEq &a, const AttrEq &b) { return a.path == b.path && a.value == b.value; }
bool operator==(const SizeCmp &a, const SizeCmp &b)
{
    return a.path == b.path && a.op == b.op && a.bound == b.bound;
}

namespace {

enum class Tok {
    Ident,
    Nat,
    Decimal,
    String,
    LParen,
    RParen,
    Dot,
    Arrow,
    Minus,
    Eq,
    Ge,
    Le,
    Gt,
    Lt,
    End,
    Invalid,
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    unsigned line = 1;
    unsigned col = 1;
    unsigned endLine = 1;
    unsigned endCol = 1;
};

class Lexer {
public:
    Lexer(std::string_view input, const TextOrigin &origin)
        : in_(input), file_(origin.file), line_(origin.line), col_(origin.col)
    {
    }

    std::vector<Token> run()
    {
        std::vector<Token> out;
        for (;;) {
            skipSpace();
            Token t;
            t.line = line_;
            t.col = col_;
            if (pos_ >= in_.size()) {
                t.kind = Tok::End;
                t.endLine = line_;
                t.endCol = col_;
                out.push_back(t);
                return out;
            }
            lexOne(t);
            t.endLine = line_;
            t.endCol = col_ > 1 ? col_ - 1 : col_;
            out.push_back(std::move(t));
        }
    }

    const std::string &file() const { return file_; }

private:
    char peek(std::size_t off = 0) const { return pos_ + off < in_.size() ? in_[pos_ + off] : '\0'; }

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

    void skipSpace()
    {
        while (pos_ < in_.size()) {
            char c = peek();
            if (c == '#') {
                while (pos_ < in_.size() && peek() != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    void lexOne(Token &t)
    {
        char c = peek();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            t.kind = Tok::Ident;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
                t.text += advance();
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Tok::Nat;
            while (std::isdigit(static_cast<unsigned char>(peek())))
                t.text += advance();
            if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
                t.kind = Tok::Decimal;
                t.text += advance();
                while (std::isdigit(static_cast<unsigned char>(peek())))
                    t.text += advance();
            }
            return;
        }
        if (c == '\'' || c == '"') {
            lexString(t, c);
            return;
        }
        t.text = std::string(1, advance());
        switch (c) {
        case '(':
            t.kind = Tok::LParen;
            return;
        case ')':
            t.kind = Tok::RParen;
            return;
        case '.':
            t.kind = Tok::Dot;
            return;
        case '=':
            t.kind = Tok::Eq;
            return;
        case '-':
            if (peek() == '>') {
                t.text += advance();
                t.kind = Tok::Arrow;
            } else {
                t.kind = Tok::Minus;
            }
            return;
        case '>':
        case '<':
            if (peek() == '=') {
                t.text += advance();
                t.kind = c == '>' ? Tok::Ge : Tok::Le;
            } else {
                t.kind = c == '>' ? Tok::Gt : Tok::Lt;
            }
            return;
        default:
            t.kind = Tok::Invalid;
            return;
        }
    }

    void lexString(Token &t, char quote)
    {
        unsigned line = line_, col = col_;
        advance();
        for (;;) {
            if (pos_ >= in_.size())
                throw ParseError(SourceSpan::at(file_, line, col), "closing quote", "end of input");
            char c = advance();
            if (c == quote)
                break;
            if (c == '\\' && pos_ < in_.size())
                c = advance();
            t.text += c;
        }
        t.kind = Tok::String;
    }

    std::string_view in_;
    std::string file_;
    std::size_t pos_ = 0;
    unsigned line_;
    unsigned col_;
};

std::string describe(const Token &t)
{
    switch (t.kind) {
    case Tok::End:
        return "end of input";
    case Tok::Ident:
        return fmt::format("'{}'", t.text);
    case Tok::String:
        return fmt::format("string '{}'", t.text);
    default:
        return fmt::format("'{}'", t.text);
    }
}

bool isReserved(const std::string &s)
{
    return s == "and" || s == "or" || s == "self" || s == "True" || s == "False";
}

class Parser {
public:
    Parser(std::vector<Token> toks, std::string file) : toks_(std::move(toks)), file_(std::move(file)) {}

    OclExpr parseAll()
    {
        auto e = parseOr();
        if (cur().kind != Tok::End)
            fail("'and', 'or' or end of invariant");
        return e;
    }

private:
    const Token &cur() const { return toks_[pos_]; }
    const Token &prev() const { return toks_[pos_ - 1]; }
    bool isWord(std::string_view w) const { return cur().kind == Tok::Ident && cur().text == w; }

    [[noreturn]] void fail(const std::string &expected) const
    {
        throw ParseError(SourceSpan::at(file_, cur().line, cur().col), expected, describe(cur()));
    }

    const Token &expect(Tok kind, const std::string &expected)
    {
        if (cur().kind != kind)
            fail(expected);
        return toks_[pos_++];
    }

    SourceSpan spanFrom(const Token &start) const
    {
        return {file_, start.line, start.col, prev().endLine, prev().endCol};
    }

    OclExpr parseOr()
    {
        const Token &start = cur();
        std::vector<OclExpr> ops;
        ops.push_back(parseAnd());
        while (isWord("or")) {
            ++pos_;
            ops.push_back(parseAnd());
        }
        if (ops.size() == 1)
            return std::move(ops.front());
        auto e = OclExpr::orOf(std::move(ops));
        e.span = spanFrom(start);
        return e;
    }

    OclExpr parseAnd()
    {
        const Token &start = cur();
        std::vector<OclExpr> ops;
        ops.push_back(parsePrimary());
        while (isWord("and")) {
            ++pos_;
            ops.push_back(parsePrimary());
        }
        if (ops.size() == 1)
            return std::move(ops.front());
        auto e = OclExpr::andOf(std::move(ops));
        e.span = spanFrom(start);
        return e;
    }

    OclExpr parsePrimary()
    {
        const Token &start = cur();
        if (cur().kind == Tok::LParen) {
            ++pos_;
            auto inner = parseOr();
            expect(Tok::RParen, "')'");
            return inner;
        }
        NavPath path = parsePath();
        OclExpr e;
        if (cur().kind == Tok::Arrow) {
            ++pos_;
            if (!isWord("size"))
                fail("'size'");
            ++pos_;
            expect(Tok::LParen, "'('");
            expect(Tok::RParen, "')'");
            CmpOp op = parseCmp();
            const Token &n = expect(Tok::Nat, "natural number");
            e = OclExpr::sizeCmp(std::move(path), op, parseBound(n));
        } else if (cur().kind == Tok::Eq) {
            ++pos_;
            e = OclExpr::attrEq(std::move(path), parseLiteral());
        } else {
            fail("'->' or '='");
        }
        e.span = spanFrom(start);
        return e;
    }

    std::uint32_t parseBound(const Token &n) const
    {
        try {
            auto v = std::stoull(n.text);
            if (v <= UINT32_MAX)
                return static_cast<std::uint32_t>(v);
        } catch (const std::out_of_range &) {
        }
        throw ParseError(SourceSpan::at(file_, n.line, n.col), "bound below 2^32", describe(n));
    }

    NavPath parsePath()
    {
        NavPath path;
        if (isWord("self")) {
            ++pos_;
            expect(Tok::Dot, "'.'");
        }
        path.segments.push_back(parseSegment());
        while (cur().kind == Tok::Dot) {
            ++pos_;
            path.segments.push_back(parseSegment());
        }
        return path;
    }

    std::string parseSegment()
    {
        if (cur().kind != Tok::Ident || isReserved(cur().text))
            fail("navigation identifier");
        return toks_[pos_++].text;
    }

    CmpOp parseCmp()
    {
        CmpOp op;
        switch (cur().kind) {
        case Tok::Eq:
            op = CmpOp::Eq;
            break;
        case Tok::Ge:
            op = CmpOp::Ge;
            break;
        case Tok::Le:
            op = CmpOp::Le;
            break;
        case Tok::Gt:
            op = CmpOp::Gt;
            break;
        case Tok::Lt:
            op = CmpOp::Lt;
            break;
        default:
            fail("comparison operator (=, >=, <=, >, <)");
        }
        ++pos_;
        return op;
    }

    Literal parseLiteral()
    {
        const Token &t = cur();
        switch (t.kind) {
        case Tok::Ident:
            if (t.text == "True" || t.text == "False") {
                ++pos_;
                return {DataType::Boolean, t.text};
            }
            break;
        case Tok::Nat:
            ++pos_;
            return {DataType::Integer, t.text};
        case Tok::Decimal:
            ++pos_;
            return {DataType::Decimal, t.text};
        case Tok::String:
            ++pos_;
            return {DataType::String, t.text};
        case Tok::Minus: {
            ++pos_;
            if (cur().kind != Tok::Nat && cur().kind != Tok::Decimal)
                fail("number after '-'");
            const Token &n = toks_[pos_++];
            return {n.kind == Tok::Nat ? DataType::Integer : DataType::Decimal, "-" + n.text};
        }
        default:
            break;
        }
        fail("literal (True, False, number or string)");
    }

    std::vector<Token> toks_;
    std::string file_;
    std::size_t pos_ = 0;
};

std::string printLiteral(const Literal &lit)
{
    switch (lit.kind) {
    case DataType::Boolean:
        return canonicalLexical(DataType::Boolean, lit.lexical) == "true" ? "True" : "False";
    case DataType::String: {
        std::string out = "'";
        for (char c : lit.lexical) {
            if (c == '\'' || c == '\\')
                out += '\\';
            out += c;
        }
        return out + "'";
    }
    default:
        return lit.lexical;
    }
}

std::string printPath(const NavPath &path)
{
    return "self." + fmt::format("{}", fmt::join(path.segments, "."));
}

enum class Prec { Or = 1, And = 2, Atom = 3 };

std::string print(const OclExpr &e, Prec context);

template <typename Node>
std::string printJunction(const Node &node, const char *word, Prec self, Prec context)
{
    std::vector<std::string> parts;
    for (const auto &op : node.operands)
        parts.push_back(print(op, static_cast<Prec>(static_cast<int>(self) + 1)));
    auto text = fmt::format("{}", fmt::join(parts, word));
    return context > self ? "(" + text + ")" : text;
}

std::string print(const OclExpr &e, Prec context)
{
    return std::visit(
        [&](const auto &n) -> std::string {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, OclOr>)
                return printJunction(n, " or ", Prec::Or, context);
            else if constexpr (std::is_same_v<T, OclAnd>)
                return printJunction(n, " and ", Prec::And, context);
            else if constexpr (std::is_same_v<T, AttrEq>)
                return printPath(n.path) + " = " + printLiteral(n.value);
            else
                return fmt::format("{}->size() {} {}", printPath(n.path), toString(n.op), n.bound);
        },
        e.node);
}

const Association *findNavigable(const ResourceModel &rm, const std::string &from, const std::string &label)
{
    const Association *a = rm.findAssociation(label);
    if (!a)
        return nullptr;
    for (const ResourceDef *r : rm.lineage(from))
        if (r->name == a->source)
            return a;
    return nullptr;
}

Diagnostic unresolved(const std::string &segment, std::string message)
{
    return Diagnostic::make(DiagCode::UnresolvedPath, {ElementKind::Model, segment, {}}, std::move(message));
}

} // namespace

OclExpr parseOcl(std::string_view input, const TextOrigin &origin)
{
    Lexer lexer(input, origin);
    auto toks = lexer.run();
    return Parser(std::move(toks), origin.file).parseAll();
}

std::string printOcl(const OclExpr &expr)
{
    return print(expr, Prec::Or);
}

PathResolution resolvePath(const ResourceModel &rm, std::string_view context, const NavPath &path,
                           PathUse use)
{
    ResolvedPath out;
    std::string current(context);
    if (path.segments.empty())
        return unresolved("", "empty navigation path");
    std::size_t hopCount = use == PathUse::Attribute ? path.segments.size() - 1 : path.segments.size();
    for (std::size_t i = 0; i < hopCount; ++i) {
        const auto &seg = path.segments[i];
        const Association *a = findNavigable(rm, current, seg);
        if (!a)
            return unresolved(seg, fmt::format("no association '{}' navigable from '{}'", seg, current));
        out.hops.push_back({a->label, a->source, a->target});
        current = a->target;
    }
    if (use == PathUse::Association)
        return out;
    const auto &attr = path.segments.back();
    for (const ResourceDef *r : rm.lineage(current)) {
        if (const AttributeDef *def = r->findAttribute(attr)) {
            out.attributeOwner = r->name;
            out.attributeName = def->name;
            out.attributeType = def->type;
            return out;
        }
    }
    return unresolved(attr, fmt::format("'{}' has no attribute '{}'", current, attr));
}

} // namespace restcheck
