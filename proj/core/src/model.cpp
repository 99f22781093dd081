#include "restcheck/model.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace restcheck {

const AttributeDef *ResourceDef::findAttribute(std::string_view attr) const
{
    for (const auto &a : attributes)
        if (a.name == attr)
            return &a;
    return nullptr;
}

const ResourceDef *ResourceModel::find(std::string_view resource) const
{
    for (const auto &r : resources)
        if (r.name == resource)
            return &r;
    return nullptr;
}

const Association *ResourceModel::findAssociation(std::string_view label) const
{
    for (const auto &a : associations)
        if (a.label == label)
            return &a;
    return nullptr;
}

const ResourceDef *ResourceModel::root() const
{
    const ResourceDef *found = nullptr;
    for (const auto &r : resources) {
        if (!r.isRoot)
            continue;
        if (found)
            return nullptr;
        found = &r;
    }
    return found;
}

std::vector<const ResourceDef *> ResourceModel::lineage(std::string_view resource) const
{
    std::vector<const ResourceDef *> chain;
    const ResourceDef *r = find(resource);
    while (r && std::find(chain.begin(), chain.end(), r) == chain.end()) {
        chain.push_back(r);
        r = r->parent ? find(*r->parent) : nullptr;
    }
    return chain;
}

const State *BehavioralModel::find(std::string_view state) const
{
    for (const auto &s : states)
        if (s.name == state)
            return &s;
    return nullptr;
}

std::string_view toString(Method m)
{
    switch (m) {
    case Method::Put:
        return "PUT";
    case Method::Post:
        return "POST";
    case Method::Delete:
        return "DELETE";
    }
    return "PUT";
}

// ---------------------------------------------------------------------------
// Structural equality

namespace {

template <typename T, typename Eq>
bool sameList(const std::vector<T> &a, const std::vector<T> &b, Eq eq)
{
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), eq);
}

bool sameAttr(const AttributeDef &a, const AttributeDef &b)
{
    return a.name == b.name && a.type == b.type;
}

bool sameResource(const ResourceDef &a, const ResourceDef &b)
{
    return a.name == b.name && a.kind == b.kind && a.parent == b.parent && a.isRoot == b.isRoot &&
           sameList(a.attributes, b.attributes, sameAttr);
}

bool sameAssoc(const Association &a, const Association &b)
{
    return a.label == b.label && a.source == b.source && a.target == b.target && a.min == b.min &&
           a.max == b.max;
}

bool sameState(const State &a, const State &b)
{
    return a.name == b.name && a.kind == b.kind && a.parent == b.parent && a.region == b.region &&
           a.invariant == b.invariant;
}

bool sameTransition(const Transition &a, const Transition &b)
{
    return a.source == b.source && a.target == b.target && a.trigger == b.trigger &&
           a.targetResource == b.targetResource && a.guardText == b.guardText && a.postText == b.postText;
}

} // namespace

bool sameStructure(const ResourceModel &a, const ResourceModel &b)
{
    return a.name == b.name && sameList(a.resources, b.resources, sameResource) &&
           sameList(a.associations, b.associations, sameAssoc);
}

bool sameStructure(const BehavioralModel &a, const BehavioralModel &b)
{
    return a.name == b.name && a.forResource == b.forResource && sameList(a.states, b.states, sameState) &&
           sameList(a.transitions, b.transitions, sameTransition);
}

// ---------------------------------------------------------------------------
// Resource model validation

namespace {

ElementRef refOf(const ResourceDef &r) { return {ElementKind::Resource, r.name, r.span}; }
ElementRef refOf(const Association &a) { return {ElementKind::Association, a.label, a.span}; }
ElementRef refOf(const State &s) { return {ElementKind::State, s.name, s.span}; }
ElementRef refOf(const Transition &t)
{
    return {ElementKind::Transition, fmt::format("{} -> {}", t.source, t.target), t.span};
}

/// Resources reachable from `root` along association and subresource edges.
std::set<std::string> reachableFrom(const ResourceModel &rm, const std::string &root)
{
    std::multimap<std::string, std::string> edges;
    for (const auto &a : rm.associations)
        edges.emplace(a.source, a.target);
    for (const auto &r : rm.resources)
        if (r.parent)
            edges.emplace(*r.parent, r.name);

    std::set<std::string> seen{root};
    std::vector<std::string> work{root};
    while (!work.empty()) {
        auto node = work.back();
        work.pop_back();
        auto [lo, hi] = edges.equal_range(node);
        for (auto it = lo; it != hi; ++it)
            if (seen.insert(it->second).second)
                work.push_back(it->second);
    }
    return seen;
}

bool hasAnyAttribute(const ResourceModel &rm, const ResourceDef &r)
{
    for (const ResourceDef *ancestor : rm.lineage(r.name))
        if (!ancestor->attributes.empty())
            return true;
    return false;
}

bool inCycle(const ResourceModel &rm, const ResourceDef &r)
{
    std::set<std::string> seen{r.name};
    const ResourceDef *cur = &r;
    while (cur->parent) {
        if (*cur->parent == r.name)
            return true;
        if (!seen.insert(*cur->parent).second)
            return false; // cycle above r, reported on its members
        cur = rm.find(*cur->parent);
        if (!cur)
            return false;
    }
    return false;
}

} // namespace

Diagnostics validateResourceModel(const ResourceModel &rm)
{
    Diagnostics out;
    std::set<std::string> names;
    for (const auto &r : rm.resources)
        if (!names.insert(r.name).second)
            out.push_back(Diagnostic::make(DiagCode::DuplicateName, refOf(r),
                                           fmt::format("resource '{}' is defined more than once", r.name)));

    std::size_t roots = std::count_if(rm.resources.begin(), rm.resources.end(),
                                      [](const ResourceDef &r) { return r.isRoot; });
    if (roots == 0) {
        out.push_back(Diagnostic::make(DiagCode::RootCount, {ElementKind::Model, rm.name, rm.span},
                                       fmt::format("resource model '{}' has no root resource", rm.name)));
    } else if (roots > 1) {
        bool first = true;
        for (const auto &r : rm.resources) {
            if (!r.isRoot)
                continue;
            if (!first)
                out.push_back(Diagnostic::make(DiagCode::RootCount, refOf(r),
                                               fmt::format("'{}' is a second root resource", r.name)));
            first = false;
        }
    }

    for (const auto &r : rm.resources) {
        if (r.parent && !rm.find(*r.parent))
            out.push_back(Diagnostic::make(DiagCode::UnresolvedRef, refOf(r),
                                           fmt::format("super-resource '{}' of '{}' is not defined", *r.parent, r.name)));
        else if (r.parent && inCycle(rm, r))
            out.push_back(Diagnostic::make(DiagCode::HierarchyCycle, refOf(r),
                                           fmt::format("resource '{}' is its own super-resource", r.name)));

        if (r.kind == ResourceKind::Collection && !r.attributes.empty())
            out.push_back(Diagnostic::make(DiagCode::CollectionHasAttr, refOf(r),
                                           fmt::format("collection resource '{}' declares attributes", r.name)));
        if (r.kind == ResourceKind::Normal && !hasAnyAttribute(rm, r))
            out.push_back(Diagnostic::make(DiagCode::NormalNoAttr, refOf(r),
                                           fmt::format("normal resource '{}' has no attribute", r.name)));

        std::set<std::string> attrs;
        for (const auto &a : r.attributes)
            if (!attrs.insert(a.name).second)
                out.push_back(Diagnostic::make(DiagCode::DuplicateName, {ElementKind::Attribute, a.name, a.span},
                                               fmt::format("attribute '{}' is declared twice in '{}'", a.name, r.name)));
    }

    std::set<std::string> labels;
    for (const auto &a : rm.associations) {
        if (!labels.insert(a.label).second)
            out.push_back(Diagnostic::make(DiagCode::DuplicateLabel, refOf(a),
                                           fmt::format("association label '{}' is used more than once", a.label)));
        for (const auto *end : {&a.source, &a.target})
            if (!rm.find(*end))
                out.push_back(Diagnostic::make(DiagCode::UnresolvedRef, refOf(a),
                                               fmt::format("association '{}' refers to undefined resource '{}'", a.label, *end)));
        if (a.max && a.min > *a.max)
            out.push_back(Diagnostic::make(DiagCode::BadCardinality, refOf(a),
                                           fmt::format("association '{}' has min {} above max {}", a.label, a.min, *a.max)));
    }

    if (const ResourceDef *root = rm.root()) {
        auto reached = reachableFrom(rm, root->name);
        for (const auto &r : rm.resources)
            if (!reached.count(r.name))
                out.push_back(Diagnostic::make(DiagCode::Connectivity, refOf(r),
                                               fmt::format("resource '{}' is not reachable from root '{}'", r.name, root->name)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Behavioral model validation

namespace {

void collectPaths(const OclExpr &e, std::vector<const OclExpr *> &leaves)
{
    std::visit(
        [&](const auto &n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, OclOr> || std::is_same_v<T, OclAnd>) {
                for (const auto &op : n.operands)
                    collectPaths(op, leaves);
            } else {
                leaves.push_back(&e);
            }
        },
        e.node);
}

bool literalFits(DataType attr, const Literal &lit)
{
    if (attr == lit.kind)
        return validLexical(attr, lit.lexical);
    return attr == DataType::Decimal && lit.kind == DataType::Integer;
}

void checkInvariant(const State &s, const BehavioralModel &bm, const ResourceModel &rm, Diagnostics &out)
{
    std::vector<const OclExpr *> leaves;
    collectPaths(*s.invariant, leaves);
    for (const OclExpr *leaf : leaves) {
        const SourceSpan &span = leaf->span.known() ? leaf->span : s.span;
        const NavPath &path = std::holds_alternative<AttrEq>(leaf->node) ? std::get<AttrEq>(leaf->node).path
                                                                         : std::get<SizeCmp>(leaf->node).path;
        PathUse use = std::holds_alternative<AttrEq>(leaf->node) ? PathUse::Attribute : PathUse::Association;
        auto res = resolvePath(rm, bm.forResource, path, use);
        if (auto *d = std::get_if<Diagnostic>(&res)) {
            out.push_back(Diagnostic::make(DiagCode::UnresolvedPath, {ElementKind::State, s.name, span},
                                           fmt::format("invariant of state '{}': {}", s.name, d->message)));
            continue;
        }
        if (const auto *eq = std::get_if<AttrEq>(&leaf->node)) {
            const auto &resolved = std::get<ResolvedPath>(res);
            if (!literalFits(resolved.attributeType, eq->value))
                out.push_back(Diagnostic::make(
                    DiagCode::LiteralType, {ElementKind::State, s.name, span},
                    fmt::format("invariant of state '{}': {} literal '{}' does not fit {} attribute '{}'", s.name,
                                toString(eq->value.kind), eq->value.lexical, toString(resolved.attributeType),
                                resolved.attributeName)));
        }
    }
}

} // namespace

Diagnostics validateBehavioralModel(const BehavioralModel &bm, const ResourceModel &rm)
{
    Diagnostics out;
    const ElementRef self{ElementKind::Behavior, bm.name, bm.span};
    if (!rm.find(bm.forResource))
        out.push_back(Diagnostic::make(DiagCode::UnresolvedRef, self,
                                       fmt::format("behavior '{}' is for undefined resource '{}'", bm.name, bm.forResource)));

    std::set<std::string> names;
    for (const auto &s : bm.states)
        if (!names.insert(s.name).second)
            out.push_back(Diagnostic::make(DiagCode::DuplicateName, refOf(s),
                                           fmt::format("state '{}' is defined more than once", s.name)));

    // (parent, region) -> number of initial states
    std::map<std::pair<std::string, std::uint32_t>, int> initials;
    for (const auto &s : bm.states) {
        if (s.parent) {
            const State *p = bm.find(*s.parent);
            if (!p) {
                out.push_back(Diagnostic::make(DiagCode::UnresolvedRef, refOf(s),
                                               fmt::format("parent state '{}' of '{}' is not defined", *s.parent, s.name)));
            } else if (p->kind == StateKind::Initial || p->kind == StateKind::Final) {
                out.push_back(Diagnostic::make(DiagCode::BadState, refOf(s),
                                               fmt::format("state '{}' is placed inside pseudo or final state '{}'", s.name, p->name)));
            } else {
                std::set<std::string> seen{s.name};
                for (const State *cur = p; cur; cur = cur->parent ? bm.find(*cur->parent) : nullptr) {
                    if (cur->name == s.name) {
                        out.push_back(Diagnostic::make(DiagCode::HierarchyCycle, refOf(s),
                                                       fmt::format("state '{}' is nested inside itself", s.name)));
                        break;
                    }
                    if (!seen.insert(cur->name).second)
                        break;
                }
            }
        } else if (s.region != 0) {
            out.push_back(Diagnostic::make(DiagCode::BadState, refOf(s),
                                           fmt::format("top-level state '{}' cannot name region {}", s.name, s.region)));
        }
        if ((s.kind == StateKind::Initial || s.kind == StateKind::Final) && s.invariant)
            out.push_back(Diagnostic::make(DiagCode::BadState, refOf(s),
                                           fmt::format("initial or final state '{}' cannot carry an invariant", s.name)));
        if (s.kind == StateKind::Initial)
            ++initials[{s.parent.value_or(""), s.region}];
    }
    if (initials[{"", 0}] != 1)
        out.push_back(Diagnostic::make(DiagCode::InitialCount, self,
                                       fmt::format("behavior '{}' needs exactly one top-level initial state, found {}",
                                                   bm.name, initials[{"", 0}])));
    for (const auto &[key, n] : initials)
        if (!key.first.empty() && n > 1)
            out.push_back(Diagnostic::make(DiagCode::InitialCount, self,
                                           fmt::format("region {} of state '{}' has {} initial states", key.second,
                                                       key.first, n)));

    for (const auto &t : bm.transitions) {
        for (const auto *end : {&t.source, &t.target})
            if (!bm.find(*end))
                out.push_back(Diagnostic::make(DiagCode::UnresolvedRef, refOf(t),
                                               fmt::format("transition refers to undefined state '{}'", *end)));
        if (t.targetResource && !rm.find(*t.targetResource))
            out.push_back(Diagnostic::make(DiagCode::UnresolvedRef, refOf(t),
                                           fmt::format("transition targets undefined resource '{}'", *t.targetResource)));
    }

    if (rm.find(bm.forResource))
        for (const auto &s : bm.states)
            if (s.invariant)
                checkInvariant(s, bm, rm, out);
    return out;
}

// ---------------------------------------------------------------------------
// Addressability

NoPathError::NoPathError(const std::string &target)
    : std::runtime_error(fmt::format("NO_PATH: resource '{}' is not reachable from the root", target))
{
}

namespace {

/// Shortest label sequence first, then lexicographic.
bool betterPath(const std::vector<std::string> &a, const std::vector<std::string> &b)
{
    if (a.size() != b.size())
        return a.size() < b.size();
    return a < b;
}

} // namespace

std::string navigationPath(const ResourceModel &rm, std::string_view target)
{
    const ResourceDef *root = rm.root();
    if (!root || !rm.find(target))
        throw NoPathError(std::string(target));

    // Bellman-Ford style relaxation; subresource edges carry no label.
    std::map<std::string, std::vector<std::string>> best{{root->name, {}}};
    for (bool changed = true; changed;) {
        changed = false;
        auto relax = [&](const std::string &from, const std::string &to, const std::string *label) {
            auto it = best.find(from);
            if (it == best.end())
                return;
            auto candidate = it->second;
            if (label)
                candidate.push_back(*label);
            auto cur = best.find(to);
            if (cur == best.end() || betterPath(candidate, cur->second)) {
                best[to] = std::move(candidate);
                changed = true;
            }
        };
        for (const auto &a : rm.associations)
            relax(a.source, a.target, &a.label);
        for (const auto &r : rm.resources)
            if (r.parent)
                relax(*r.parent, r.name, nullptr);
    }

    auto it = best.find(std::string(target));
    if (it == best.end())
        throw NoPathError(std::string(target));
    std::string rootVar = root->name;
    rootVar[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(rootVar[0])));
    return fmt::format("/{{{}Id}}/{}", rootVar, fmt::join(it->second, "/"));
}

} // namespace restcheck
