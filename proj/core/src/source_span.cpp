#include "restcheck/source_span.hpp"

#include <fmt/format.h>

namespace restcheck {

std::string SourceSpan::location() const
{
    return fmt::format("{}:{}:{}", file, startLine, startCol);
}

ParseError::ParseError(SourceSpan span, std::string expected, std::string found, std::string hint)
    : std::runtime_error(fmt::format("{}: expected {}, found {}", span.location(), expected, found)),
      span_(std::move(span)), expected_(std::move(expected)), found_(std::move(found)),
      hint_(std::move(hint))
{
}

namespace {

std::string describeUnbound(const std::vector<UnboundName> &unbound)
{
    std::string msg = "unbound identifiers:";
    for (const auto &u : unbound)
        msg += fmt::format(" {} '{}' at {};", u.kind, u.name, u.span.location());
    if (!unbound.empty())
        msg.pop_back();
    return msg;
}

} // namespace

ResolveError::ResolveError(std::vector<UnboundName> unbound)
    : std::runtime_error(describeUnbound(unbound)), unbound_(std::move(unbound))
{
}

} // namespace restcheck
