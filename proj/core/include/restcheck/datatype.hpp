#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace restcheck {

enum class DataType { String, Boolean, Integer, Decimal };

/// DSL spelling: "string", "boolean", "integer", "decimal".
std::string_view toString(DataType t);
std::optional<DataType> dataTypeFromName(std::string_view name);

/// Prefixed datatype IRI, e.g. "xsd:boolean".
std::string_view xsdName(DataType t);
std::optional<DataType> dataTypeFromXsd(std::string_view prefixed);

/// Whether `lexical` is in the lexical space of `t`. Booleans accept
/// true/false in any letter case.
bool validLexical(DataType t, std::string_view lexical);

/// Canonical form used for literal equality: lower-case booleans, integers
/// without sign noise or leading zeros, decimals without trailing zeros.
/// Strings are returned unchanged. Precondition: validLexical(t, lexical).
std::string canonicalLexical(DataType t, std::string_view lexical);

/// A typed literal value in canonical form. Two values are equal iff they
/// share datatype and canonical lexical form.
struct LiteralValue {
    DataType type = DataType::String;
    std::string lexical;

    static LiteralValue make(DataType t, std::string_view lexical)
    {
        return {t, canonicalLexical(t, lexical)};
    }

    friend bool operator==(const LiteralValue &, const LiteralValue &) = default;
    friend auto operator<=>(const LiteralValue &, const LiteralValue &) = default;
};

} // namespace restcheck
