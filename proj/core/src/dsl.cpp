#include "restcheck/dsl.hpp"

#include <fmt/format.h>

#include <cctype>
#include <set>

namespace restcheck {

namespace {

enum class Tok { Ident, Nat, String, LBrace, RBrace, Colon, Arrow, LBracket, RBracket, DotDot, Star, End, Invalid };

struct Token {
    Tok kind = Tok::End;
    std::string text;
    unsigned line = 1;
    unsigned col = 1;
    unsigned endLine = 1;
    unsigned endCol = 1;
};

const std::set<std::string, std::less<>> kKeywords = {
    "resources", "resource", "collection", "root",  "extends", "attr",       "association",
    "behavior",  "for",      "state",      "in",    "region",  "inv",        "initial",
    "final",     "transition", "on",       "guard", "post",    "PUT",        "POST",
    "DELETE",
};

class Lexer {
public:
    Lexer(std::string_view input, std::string file) : in_(input), file_(std::move(file)) {}

    const std::string &file() const { return file_; }

    Token next()
    {
        skipTrivia();
        Token t;
        t.line = line_;
        t.col = col_;
        if (pos_ >= in_.size()) {
            t.endLine = line_;
            t.endCol = col_;
            return t;
        }
        char c = peek();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            t.kind = Tok::Ident;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
                t.text += advance();
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Tok::Nat;
            while (std::isdigit(static_cast<unsigned char>(peek())))
                t.text += advance();
        } else if (c == '"') {
            lexString(t);
        } else {
            t.text = std::string(1, advance());
            switch (c) {
            case '{':
                t.kind = Tok::LBrace;
                break;
            case '}':
                t.kind = Tok::RBrace;
                break;
            case ':':
                t.kind = Tok::Colon;
                break;
            case '[':
                t.kind = Tok::LBracket;
                break;
            case ']':
                t.kind = Tok::RBracket;
                break;
            case '*':
                t.kind = Tok::Star;
                break;
            case '-':
                if (peek() == '>') {
                    t.text += advance();
                    t.kind = Tok::Arrow;
                } else {
                    t.kind = Tok::Invalid;
                }
                break;
            case '.':
                if (peek() == '.') {
                    t.text += advance();
                    t.kind = Tok::DotDot;
                } else {
                    t.kind = Tok::Invalid;
                }
                break;
            default:
                t.kind = Tok::Invalid;
                break;
            }
        }
        t.endLine = line_;
        t.endCol = col_ > 1 ? col_ - 1 : col_;
        return t;
    }

    /// Raw invariant text up to (not including) the closing '}' at nesting
    /// depth zero, skipping quoted strings and comments.
    std::string rawUntilBrace(TextOrigin &origin)
    {
        while (pos_ < in_.size() && (peek() == ' ' || peek() == '\t'))
            advance();
        origin = {file_, line_, col_};
        std::size_t start = pos_;
        while (pos_ < in_.size()) {
            char c = peek();
            if (c == '}')
                break;
            if (c == '\'' || c == '"') {
                advance();
                while (pos_ < in_.size() && peek() != c) {
                    if (peek() == '\\')
                        advance();
                    if (pos_ < in_.size())
                        advance();
                }
                if (pos_ < in_.size())
                    advance();
                continue;
            }
            if (c == '#') {
                while (pos_ < in_.size() && peek() != '\n')
                    advance();
                continue;
            }
            advance();
        }
        return std::string(in_.substr(start, pos_ - start));
    }

private:
    char peek() const { return pos_ < in_.size() ? in_[pos_] : '\0'; }

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

    void lexString(Token &t)
    {
        unsigned line = line_, col = col_;
        advance();
        for (;;) {
            if (pos_ >= in_.size())
                throw ParseError(SourceSpan::at(file_, line, col), "closing '\"'", "end of input");
            char c = advance();
            if (c == '"')
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
    unsigned line_ = 1;
    unsigned col_ = 1;
};

std::string describe(const Token &t)
{
    switch (t.kind) {
    case Tok::End:
        return "end of input";
    case Tok::String:
        return fmt::format("string \"{}\"", t.text);
    default:
        return fmt::format("'{}'", t.text);
    }
}

class Parser {
public:
    explicit Parser(Lexer &lexer) : lex_(lexer) { cur_ = lex_.next(); }

    ModelFile parseFile()
    {
        ModelFile file;
        file.resources = parseResources();
        if (isWord("behavior"))
            file.behavior = parseBehavior();
        if (cur_.kind != Tok::End)
            fail(file.behavior ? "end of input" : "'behavior' or end of input");
        return file;
    }

private:
    bool isWord(std::string_view w) const { return cur_.kind == Tok::Ident && cur_.text == w; }

    [[noreturn]] void fail(const std::string &expected, std::string hint = {}) const
    {
        throw ParseError(SourceSpan::at(lex_.file(), cur_.line, cur_.col), expected, describe(cur_),
                         std::move(hint));
    }

    Token take()
    {
        prev_ = cur_;
        cur_ = lex_.next();
        return prev_;
    }

    void expectWord(std::string_view w)
    {
        if (!isWord(w))
            fail(fmt::format("'{}'", w));
        take();
    }

    Token expect(Tok kind, const std::string &expected)
    {
        if (cur_.kind != kind)
            fail(expected);
        return take();
    }

    std::string identifier(const std::string &what)
    {
        if (cur_.kind != Tok::Ident || kKeywords.count(cur_.text))
            fail(what);
        return take().text;
    }

    std::uint32_t natural()
    {
        if (cur_.kind != Tok::Nat)
            fail("natural number");
        try {
            auto v = std::stoull(cur_.text);
            if (v <= UINT32_MAX) {
                take();
                return static_cast<std::uint32_t>(v);
            }
        } catch (const std::out_of_range &) {
        }
        fail("natural number below 2^32");
    }

    SourceSpan spanFrom(const Token &start) const
    {
        return {lex_.file(), start.line, start.col, prev_.endLine, prev_.endCol};
    }

    ResourceModel parseResources()
    {
        Token start = cur_;
        expectWord("resources");
        ResourceModel rm;
        rm.name = identifier("resource model name");
        expect(Tok::LBrace, "'{'");
        while (isWord("root") || isWord("resource") || isWord("collection"))
            rm.resources.push_back(parseResource());
        while (isWord("association"))
            rm.associations.push_back(parseAssociation());
        if (cur_.kind != Tok::RBrace)
            fail(rm.associations.empty() ? "'resource', 'collection', 'association' or '}'" : "'association' or '}'");
        take();
        rm.span = spanFrom(start);
        return rm;
    }

    ResourceDef parseResource()
    {
        Token start = cur_;
        ResourceDef r;
        if (isWord("root")) {
            take();
            r.isRoot = true;
        }
        if (isWord("resource"))
            r.kind = ResourceKind::Normal;
        else if (isWord("collection"))
            r.kind = ResourceKind::Collection;
        else
            fail("'resource' or 'collection'");
        take();
        r.name = identifier("resource name");
        if (isWord("extends")) {
            take();
            r.parent = identifier("super-resource name");
        }
        if (cur_.kind == Tok::LBrace) {
            take();
            while (isWord("attr"))
                r.attributes.push_back(parseAttribute());
            expect(Tok::RBrace, "'attr' or '}'");
        }
        r.span = spanFrom(start);
        return r;
    }

    AttributeDef parseAttribute()
    {
        Token start = take();
        AttributeDef a;
        a.name = identifier("attribute name");
        expect(Tok::Colon, "':'");
        auto type = cur_.kind == Tok::Ident ? dataTypeFromName(cur_.text) : std::nullopt;
        if (!type)
            fail("'string', 'boolean', 'integer' or 'decimal'");
        take();
        a.type = *type;
        a.span = spanFrom(start);
        return a;
    }

    Association parseAssociation()
    {
        Token start = take();
        Association a;
        a.label = identifier("association label");
        expect(Tok::Colon, "':'");
        a.source = identifier("source resource name");
        expect(Tok::Arrow, "'->'");
        a.target = identifier("target resource name");
        expect(Tok::LBracket, "'['");
        a.min = natural();
        expect(Tok::DotDot, "'..'");
        if (cur_.kind == Tok::Star)
            take();
        else
            a.max = natural();
        expect(Tok::RBracket, "']'");
        a.span = spanFrom(start);
        return a;
    }

    BehavioralModel parseBehavior()
    {
        Token start = take();
        BehavioralModel bm;
        bm.name = identifier("behavior name");
        expectWord("for");
        bm.forResource = identifier("resource name");
        expect(Tok::LBrace, "'{'");
        while (isWord("state") || isWord("initial") || isWord("final"))
            bm.states.push_back(parseState());
        while (isWord("transition"))
            bm.transitions.push_back(parseTransition());
        if (cur_.kind != Tok::RBrace)
            fail(bm.transitions.empty() ? "'state', 'initial', 'final', 'transition' or '}'" : "'transition' or '}'");
        take();
        bm.span = spanFrom(start);
        return bm;
    }

    State parseState()
    {
        Token start = take();
        State s;
        s.kind = start.text == "initial" ? StateKind::Initial
                 : start.text == "final" ? StateKind::Final
                                          : StateKind::Simple;
        s.name = identifier("state name");
        if (isWord("in")) {
            take();
            s.parent = identifier("parent state name");
            if (isWord("region")) {
                take();
                s.region = natural();
            }
        }
        if (s.kind == StateKind::Simple && cur_.kind == Tok::LBrace) {
            take();
            if (isWord("inv")) {
                take();
                if (cur_.kind != Tok::Colon)
                    fail("':'");
                // The colon token is current; the invariant text starts right after it.
                TextOrigin origin;
                std::string text = lex_.rawUntilBrace(origin);
                s.invariant = parseOcl(text, origin);
                prev_ = cur_;
                cur_ = lex_.next();
            }
            expect(Tok::RBrace, s.invariant ? "'}'" : "'inv' or '}'");
        }
        s.span = spanFrom(start);
        return s;
    }

    Method parseMethod()
    {
        if (cur_.kind == Tok::Ident) {
            if (cur_.text == "PUT" || cur_.text == "POST" || cur_.text == "DELETE") {
                Method m = cur_.text == "PUT" ? Method::Put : cur_.text == "POST" ? Method::Post : Method::Delete;
                take();
                return m;
            }
            if (cur_.text == "GET")
                fail("'PUT', 'POST' or 'DELETE'",
                     "GET has no side effects and cannot trigger a state change; only PUT, POST and DELETE can");
        }
        fail("'PUT', 'POST' or 'DELETE'");
    }

    Transition parseTransition()
    {
        Token start = take();
        Transition t;
        t.source = identifier("source state name");
        expect(Tok::Arrow, "'->'");
        t.target = identifier("target state name");
        expectWord("on");
        t.trigger = parseMethod();
        if (cur_.kind == Tok::Ident && !kKeywords.count(cur_.text))
            t.targetResource = take().text;
        if (isWord("guard")) {
            take();
            t.guardText = expect(Tok::String, "guard string").text;
        }
        if (isWord("post")) {
            take();
            t.postText = expect(Tok::String, "postcondition string").text;
        }
        t.span = spanFrom(start);
        return t;
    }

    Lexer &lex_;
    Token cur_;
    Token prev_;
};

void markComposites(BehavioralModel &bm)
{
    std::set<std::string> parents;
    for (const auto &s : bm.states)
        if (s.parent)
            parents.insert(*s.parent);
    for (auto &s : bm.states)
        if (s.kind == StateKind::Simple && parents.count(s.name))
            s.kind = StateKind::Composite;
}

void resolve(const ModelFile &file)
{
    std::vector<UnboundName> unbound;
    const auto &rm = file.resources;
    auto needResource = [&](const std::string &name, const SourceSpan &span) {
        if (!rm.find(name))
            unbound.push_back({name, "resource", span});
    };
    for (const auto &r : rm.resources)
        if (r.parent)
            needResource(*r.parent, r.span);
    for (const auto &a : rm.associations) {
        needResource(a.source, a.span);
        needResource(a.target, a.span);
    }
    if (file.behavior) {
        const auto &bm = *file.behavior;
        needResource(bm.forResource, bm.span);
        auto needState = [&](const std::string &name, const SourceSpan &span) {
            if (!bm.find(name))
                unbound.push_back({name, "state", span});
        };
        for (const auto &s : bm.states)
            if (s.parent)
                needState(*s.parent, s.span);
        for (const auto &t : bm.transitions) {
            needState(t.source, t.span);
            needState(t.target, t.span);
            if (t.targetResource)
                needResource(*t.targetResource, t.span);
        }
    }
    if (!unbound.empty())
        throw ResolveError(std::move(unbound));
}

std::string quoted(const std::string &s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string cardinality(const Association &a)
{
    return fmt::format("[{}..{}]", a.min, a.max ? std::to_string(*a.max) : std::string("*"));
}

void formatResources(const ResourceModel &rm, std::string &out)
{
    out += fmt::format("resources {} {{\n", rm.name);
    for (const auto &r : rm.resources) {
        out += fmt::format("    {}{} {}", r.isRoot ? "root " : "",
                           r.kind == ResourceKind::Collection ? "collection" : "resource", r.name);
        if (r.parent)
            out += " extends " + *r.parent;
        if (!r.attributes.empty()) {
            out += " {\n";
            for (const auto &a : r.attributes)
                out += fmt::format("        attr {}: {}\n", a.name, toString(a.type));
            out += "    }";
        }
        out += "\n";
    }
    for (const auto &a : rm.associations)
        out += fmt::format("    association {}: {} -> {} {}\n", a.label, a.source, a.target, cardinality(a));
    out += "}\n";
}

void formatBehavior(const BehavioralModel &bm, std::string &out)
{
    out += fmt::format("\nbehavior {} for {} {{\n", bm.name, bm.forResource);
    for (const auto &s : bm.states) {
        const char *keyword = s.kind == StateKind::Initial ? "initial" : s.kind == StateKind::Final ? "final" : "state";
        out += fmt::format("    {} {}", keyword, s.name);
        if (s.parent) {
            out += " in " + *s.parent;
            if (s.region != 0)
                out += fmt::format(" region {}", s.region);
        }
        if (s.invariant)
            out += fmt::format(" {{\n        inv: {}\n    }}", printOcl(*s.invariant));
        out += "\n";
    }
    for (const auto &t : bm.transitions) {
        out += fmt::format("    transition {} -> {} on {}", t.source, t.target, toString(t.trigger));
        if (t.targetResource)
            out += " " + *t.targetResource;
        if (!t.guardText.empty())
            out += " guard " + quoted(t.guardText);
        if (!t.postText.empty())
            out += " post " + quoted(t.postText);
        out += "\n";
    }
    out += "}\n";
}

} // namespace

ModelFile parseModelFile(std::string_view input, const std::string &fileName)
{
    Lexer lexer(input, fileName);
    ModelFile file = Parser(lexer).parseFile();
    if (file.behavior)
        markComposites(*file.behavior);
    resolve(file);
    return file;
}

std::string formatModel(const ResourceModel &rm, const BehavioralModel *bm)
{
    std::string out;
    formatResources(rm, out);
    if (bm)
        formatBehavior(*bm, out);
    return out;
}

std::string formatModel(const ModelFile &file)
{
    return formatModel(file.resources, file.behavior ? &*file.behavior : nullptr);
}

} // namespace restcheck
