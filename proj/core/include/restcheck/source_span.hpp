#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace restcheck {

/// 1-based source region inside a model file.
struct SourceSpan {
    std::string file;
    unsigned startLine = 0;
    unsigned startCol = 0;
    unsigned endLine = 0;
    unsigned endCol = 0;

    [[nodiscard]] bool known() const { return startLine != 0; }
    [[nodiscard]] std::string location() const;

    static SourceSpan at(std::string file, unsigned line, unsigned col)
    {
        return {std::move(file), line, col, line, col};
    }
};

/// Positioned syntax error. what() is
/// "<file>:<line>:<col>: expected <expected>, found <found>".
class ParseError : public std::runtime_error {
public:
    ParseError(SourceSpan span, std::string expected, std::string found, std::string hint = {});

    [[nodiscard]] const SourceSpan &span() const { return span_; }
    [[nodiscard]] const std::string &expected() const { return expected_; }
    [[nodiscard]] const std::string &found() const { return found_; }
    /// Optional extra advice, e.g. why GET may not trigger a transition.
    [[nodiscard]] const std::string &hint() const { return hint_; }

private:
    SourceSpan span_;
    std::string expected_;
    std::string found_;
    std::string hint_;
};

struct UnboundName {
    std::string name;
    std::string kind; // "resource", "state"
    SourceSpan span;
};

/// Raised after a syntactically valid parse when identifiers do not resolve.
class ResolveError : public std::runtime_error {
public:
    explicit ResolveError(std::vector<UnboundName> unbound);

    [[nodiscard]] const std::vector<UnboundName> &unbound() const { return unbound_; }

private:
    std::vector<UnboundName> unbound_;
};

} // namespace restcheck
