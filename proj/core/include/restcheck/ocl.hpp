#pragma once

// µOCL: the state-invariant fragment. Attribute equality, size() comparisons
// over associations, and/or.

#include "restcheck/datatype.hpp"
#include "restcheck/diagnostic.hpp"
#include "restcheck/source_span.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace restcheck {

struct ResourceModel;

/// Navigation path with any leading "self." stripped.
struct NavPath {
    std::vector<std::string> segments;

    friend bool operator==(const NavPath &, const NavPath &) = default;
};

struct Literal {
    DataType kind = DataType::String;
    /// Source text without quotes; booleans keep their "True"/"False" spelling.
    std::string lexical;

    friend bool operator==(const Literal &, const Literal &) = default;
};

enum class CmpOp { Eq, Ge, Le, Gt, Lt };

std::string_view toString(CmpOp op);

struct OclExpr;

struct OclOr {
    std::vector<OclExpr> operands;
};

struct OclAnd {
    std::vector<OclExpr> operands;
};

struct AttrEq {
    NavPath path;
    Literal value;
};

struct SizeCmp {
    NavPath path;
    CmpOp op = CmpOp::Eq;
    std::uint32_t bound = 0;
};

struct OclExpr {
    std::variant<OclOr, OclAnd, AttrEq, SizeCmp> node;
    SourceSpan span;

    static OclExpr orOf(std::vector<OclExpr> operands) { return {OclOr{std::move(operands)}, {}}; }
    static OclExpr andOf(std::vector<OclExpr> operands) { return {OclAnd{std::move(operands)}, {}}; }
    static OclExpr attrEq(NavPath path, Literal value) { return {AttrEq{std::move(path), std::move(value)}, {}}; }
    static OclExpr sizeCmp(NavPath path, CmpOp op, std::uint32_t bound)
    {
        return {SizeCmp{std::move(path), op, bound}, {}};
    }
};

/// Structural equality; spans are ignored.
bool operator==(const OclExpr &a, const OclExpr &b);
bool operator==(const OclOr &a, const OclOr &b);
bool operator==(const OclAnd &a, const OclAnd &b);
bool operator==(const AttrEq &a, const AttrEq &b);
bool operator==(const SizeCmp &a, const SizeCmp &b);

/// Where a µOCL snippet sits inside a larger file; used to report positions
/// relative to the enclosing model file.
struct TextOrigin {
    std::string file;
    unsigned line = 1;
    unsigned col = 1;
};

/// Parses an invariant. "and" binds tighter than "or"; chains of the same
/// operator are flattened. Throws ParseError.
OclExpr parseOcl(std::string_view input, const TextOrigin &origin = {});

/// Canonical printer: every path is written with "self.", single spaces
/// around operators, parentheses only where precedence demands.
std::string printOcl(const OclExpr &expr);

enum class PathUse { Attribute, Association };

struct ResolvedAssociation {
    std::string label;
    std::string source;
    std::string target;
};

struct ResolvedPath {
    /// Associations traversed, in order. For PathUse::Association the last
    /// entry is the terminal association.
    std::vector<ResolvedAssociation> hops;
    /// Attribute use only: declaring resource, attribute name and type.
    std::string attributeOwner;
    std::string attributeName;
    DataType attributeType = DataType::String;
};

/// Either a resolution or an UNRESOLVED_PATH diagnostic naming the first
/// failing segment.
using PathResolution = std::variant<ResolvedPath, Diagnostic>;

/// Walks `path` from `context` through association labels. Associations and
/// attributes declared on a super-resource are visible from subresources.
PathResolution resolvePath(const ResourceModel &rm, std::string_view context, const NavPath &path,
                           PathUse use);

} // namespace restcheck
