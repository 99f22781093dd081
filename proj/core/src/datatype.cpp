#include "restcheck/datatype.hpp"

#include <algorithm>
#include <cctype>

namespace restcheck {

namespace {

bool allDigits(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string lower(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::string_view stripSign(std::string_view s, bool &negative)
{
    negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    return s;
}

std::string_view stripLeadingZeros(std::string_view digits)
{
    while (digits.size() > 1 && digits.front() == '0')
        digits.remove_prefix(1);
    return digits;
}

} // namespace

std::string_view toString(DataType t)
{
    switch (t) {
    case DataType::String:
        return "string";
    case DataType::Boolean:
        return "boolean";
    case DataType::Integer:
        return "integer";
    case DataType::Decimal:
        return "decimal";
    }
    return "string";
}

std::optional<DataType> dataTypeFromName(std::string_view name)
{
    for (auto t : {DataType::String, DataType::Boolean, DataType::Integer, DataType::Decimal})
        if (toString(t) == name)
            return t;
    return std::nullopt;
}

std::string_view xsdName(DataType t)
{
    switch (t) {
    case DataType::String:
        return "xsd:string";
    case DataType::Boolean:
        return "xsd:boolean";
    case DataType::Integer:
        return "xsd:integer";
    case DataType::Decimal:
        return "xsd:decimal";
    }
    return "xsd:string";
}

std::optional<DataType> dataTypeFromXsd(std::string_view prefixed)
{
    for (auto t : {DataType::String, DataType::Boolean, DataType::Integer, DataType::Decimal})
        if (xsdName(t) == prefixed)
            return t;
    return std::nullopt;
}

bool validLexical(DataType t, std::string_view lexical)
{
    bool negative = false;
    switch (t) {
    case DataType::String:
        return true;
    case DataType::Boolean: {
        auto l = lower(lexical);
        return l == "true" || l == "false";
    }
    case DataType::Integer:
        return allDigits(stripSign(lexical, negative));
    case DataType::Decimal: {
        auto body = stripSign(lexical, negative);
        auto dot = body.find('.');
        if (dot == std::string_view::npos)
            return allDigits(body);
        auto whole = body.substr(0, dot);
        auto frac = body.substr(dot + 1);
        return (whole.empty() || allDigits(whole)) && (frac.empty() || allDigits(frac)) &&
               !(whole.empty() && frac.empty());
    }
    }
    return false;
}

std::string canonicalLexical(DataType t, std::string_view lexical)
{
    bool negative = false;
    switch (t) {
    case DataType::String:
        return std::string(lexical);
    case DataType::Boolean:
        return lower(lexical);
    case DataType::Integer: {
        auto digits = stripLeadingZeros(stripSign(lexical, negative));
        if (digits == "0")
            negative = false;
        return (negative ? "-" : "") + std::string(digits);
    }
    case DataType::Decimal: {
        auto body = stripSign(lexical, negative);
        auto dot = body.find('.');
        std::string_view whole = body.substr(0, dot);
        std::string_view frac = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
        whole = whole.empty() ? std::string_view("0") : stripLeadingZeros(whole);
        while (!frac.empty() && frac.back() == '0')
            frac.remove_suffix(1);
        if (whole == "0" && frac.empty())
            negative = false;
        std::string out = (negative ? "-" : "") + std::string(whole);
        if (!frac.empty())
            out += "." + std::string(frac);
        return out;
    }
    }
    return std::string(lexical);
}

} // namespace restcheck
