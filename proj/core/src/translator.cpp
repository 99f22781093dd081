#include "restcheck/translator.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace restcheck {

using namespace owl;

// ---------------------------------------------------------------------------
// IriMap

IriCategory IriMap::categoryOf(ElementKind kind)
{
    switch (kind) {
    case ElementKind::Association:
        return IriCategory::ObjectProperty;
    case ElementKind::Attribute:
        return IriCategory::DataProperty;
    default:
        return IriCategory::Class;
    }
}

std::string IriMap::keyOf(ElementKind kind, std::string_view name, std::string_view owner)
{
    return fmt::format("{}|{}|{}", static_cast<int>(kind), owner, name);
}

Iri IriMap::assign(const ModelElement &element, std::string preferred)
{
    auto key = keyOf(element.kind, element.name, element.owner);
    if (auto it = byElement_.find(key); it != byElement_.end())
        return it->second;
    const auto cat = categoryOf(element.kind);
    auto isFree = [&](const Iri &iri) { return !byIri_.count({cat, iri}); };

    Iri chosen = preferred;
    if (!isFree(chosen) && !element.owner.empty())
        chosen = element.owner + "_" + preferred;
    for (unsigned i = 2; !isFree(chosen); ++i)
        chosen = fmt::format("{}_{}", preferred, i);

    byIri_.emplace(std::pair{cat, chosen}, element);
    byElement_.emplace(std::move(key), chosen);
    return chosen;
}

std::optional<Iri> IriMap::iriOf(ElementKind kind, std::string_view name, std::string_view owner) const
{
    if (auto it = byElement_.find(keyOf(kind, name, owner)); it != byElement_.end())
        return it->second;
    return std::nullopt;
}

const ModelElement *IriMap::elementOf(IriCategory category, std::string_view iri) const
{
    auto it = byIri_.find({category, Iri(iri)});
    return it == byIri_.end() ? nullptr : &it->second;
}

PreconditionViolated::PreconditionViolated(Diagnostics diags)
    : std::runtime_error(fmt::format("model is not valid ({} diagnostic{})", diags.size(),
                                     diags.size() == 1 ? "" : "s")),
      diags_(std::move(diags))
{
}

// ---------------------------------------------------------------------------
// Resource model

namespace {

Iri mustIri(const IriMap &iris, ElementKind kind, std::string_view name, std::string_view owner = {})
{
    auto iri = iris.iriOf(kind, name, owner);
    if (!iri)
        throw std::logic_error(fmt::format("no IRI assigned to {} '{}'", toString(kind), name));
    return *iri;
}

void addDisjoint(Ontology &o, const std::vector<Iri> &group)
{
    if (group.size() < 2)
        return;
    DisjointClasses d;
    for (const auto &iri : group)
        d.classes.push_back(named(iri));
    o.axioms.emplace_back(std::move(d));
}

} // namespace

Translation translateResourceModel(const ResourceModel &rm, std::string baseIri)
{
    if (auto diags = validateResourceModel(rm); !diags.empty())
        throw PreconditionViolated(std::move(diags));

    Translation t;
    t.ontology.baseIri = std::move(baseIri);
    auto &ax = t.ontology.axioms;

    for (const auto &r : rm.resources) {
        auto iri = t.iris.assign({ElementKind::Resource, r.name, {}, r.span}, r.name);
        ax.emplace_back(DeclareClass{iri});
    }
    auto cls = [&](const std::string &name) { return mustIri(t.iris, ElementKind::Resource, name); };

    for (const auto &r : rm.resources)
        if (r.parent)
            ax.emplace_back(SubClassOf{named(cls(r.name)), named(cls(*r.parent))});

    std::vector<Iri> top;
    for (const auto &r : rm.resources)
        if (!r.parent)
            top.push_back(cls(r.name));
    addDisjoint(t.ontology, top);
    for (const auto &p : rm.resources) {
        std::vector<Iri> children;
        for (const auto &r : rm.resources)
            if (r.parent == p.name)
                children.push_back(cls(r.name));
        addDisjoint(t.ontology, children);
    }

    for (const auto &r : rm.resources) {
        if (r.kind != ResourceKind::Normal)
            continue;
        for (const auto &a : r.attributes) {
            auto iri = t.iris.assign({ElementKind::Attribute, a.name, r.name, a.span}, a.name);
            ax.emplace_back(DeclareDataProperty{iri});
            ax.emplace_back(SubClassOf{named(cls(r.name)), dataExactCardinality(1, iri)});
            ax.emplace_back(DataPropertyDomain{iri, named(cls(r.name))});
            ax.emplace_back(DataPropertyRange{iri, a.type});
        }
    }

    for (const auto &a : rm.associations) {
        auto iri = t.iris.assign({ElementKind::Association, a.label, {}, a.span}, a.label);
        ax.emplace_back(DeclareObjectProperty{iri});
        ax.emplace_back(ObjectPropertyDomain{iri, named(cls(a.source))});
        ax.emplace_back(ObjectPropertyRange{iri, named(cls(a.target))});
        if (a.min > 0)
            ax.emplace_back(SubClassOf{named(cls(a.source)), minCardinality(a.min, iri)});
        if (a.max)
            ax.emplace_back(SubClassOf{named(cls(a.source)), maxCardinality(*a.max, iri)});
    }
    return t;
}

// ---------------------------------------------------------------------------
// Invariants

namespace {

ClassExpr nest(const std::vector<ResolvedAssociation> &hops, std::size_t count, const IriMap &iris,
               ClassExpr inner)
{
    for (std::size_t i = count; i-- > 0;)
        inner = someValuesFrom(mustIri(iris, ElementKind::Association, hops[i].label), std::move(inner));
    return inner;
}

void flattenInto(std::vector<ClassExpr> &out, ClassExpr e, bool intersection)
{
    if (intersection) {
        if (auto *n = std::get_if<IntersectionOf>(&e.node)) {
            for (auto &op : n->operands)
                out.push_back(std::move(op));
            return;
        }
    } else if (auto *n = std::get_if<UnionOf>(&e.node)) {
        for (auto &op : n->operands)
            out.push_back(std::move(op));
        return;
    }
    out.push_back(std::move(e));
}

const ResolvedPath &resolved(const PathResolution &r)
{
    if (const auto *d = std::get_if<Diagnostic>(&r))
        throw PreconditionViolated({*d});
    return std::get<ResolvedPath>(r);
}

} // namespace

ClassExpr translateOcl(const OclExpr &expr, const ResourceModel &rm, std::string_view context,
                       const IriMap &iris, Diagnostics &diags)
{
    return std::visit(
        [&](const auto &n) -> ClassExpr {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, OclAnd> || std::is_same_v<T, OclOr>) {
                constexpr bool isAnd = std::is_same_v<T, OclAnd>;
                std::vector<ClassExpr> ops;
                for (const auto &op : n.operands)
                    flattenInto(ops, translateOcl(op, rm, context, iris, diags), isAnd);
                if (ops.size() == 1)
                    return std::move(ops.front());
                return isAnd ? intersectionOf(std::move(ops)) : unionOf(std::move(ops));
            } else if constexpr (std::is_same_v<T, AttrEq>) {
                auto res = resolvePath(rm, context, n.path, PathUse::Attribute);
                const auto &path = resolved(res);
                auto att = mustIri(iris, ElementKind::Attribute, path.attributeName, path.attributeOwner);
                DataType type = path.attributeType;
                // An integer literal against a decimal attribute denotes the same number.
                std::string lexical = canonicalLexical(type, n.value.lexical);
                return nest(path.hops, path.hops.size(), iris, dataHasValue(att, lexical, type));
            } else {
                auto res = resolvePath(rm, context, n.path, PathUse::Association);
                const auto &path = resolved(res);
                auto a = mustIri(iris, ElementKind::Association, path.hops.back().label);
                ClassExpr card;
                switch (n.op) {
                case CmpOp::Eq:
                    card = exactCardinality(n.bound, a);
                    break;
                case CmpOp::Ge:
                    card = minCardinality(n.bound, a);
                    break;
                case CmpOp::Gt:
                    card = minCardinality(n.bound + 1, a);
                    break;
                case CmpOp::Le:
                    card = maxCardinality(n.bound, a);
                    break;
                case CmpOp::Lt:
                    if (n.bound == 0) {
                        diags.push_back(Diagnostic::make(
                            DiagCode::NegativeBound, {ElementKind::Model, std::string(context), expr.span},
                            fmt::format("'{}' can never hold", printOcl(expr))));
                        card = intersectionOf({minCardinality(1, a), maxCardinality(0, a)});
                    } else {
                        card = maxCardinality(n.bound - 1, a);
                    }
                    break;
                }
                return nest(path.hops, path.hops.size() - 1, iris, std::move(card));
            }
        },
        expr.node);
}

// ---------------------------------------------------------------------------
// Behavioral model

Translation translateBehavioralModel(const BehavioralModel &bm, const ResourceModel &rm, Translation base)
{
    if (auto diags = validateBehavioralModel(bm, rm); !diags.empty())
        throw PreconditionViolated(std::move(diags));

    Translation t = std::move(base);
    auto &ax = t.ontology.axioms;
    const auto owner = mustIri(t.iris, ElementKind::Resource, bm.forResource);

    std::vector<const State *> states;
    for (const auto &s : bm.states)
        if (!s.isPseudo())
            states.push_back(&s);

    for (const auto *s : states) {
        auto iri = t.iris.assign({ElementKind::State, s->name, {}, s->span}, "State_" + s->name);
        ax.emplace_back(DeclareClass{iri});
    }
    auto cls = [&](const std::string &name) { return mustIri(t.iris, ElementKind::State, name); };

    for (const auto *s : states)
        ax.emplace_back(SubClassOf{named(cls(s->name)), named(owner)});

    for (const auto *s : states)
        if (s->parent && s->kind != StateKind::Final)
            ax.emplace_back(SubClassOf{named(cls(s->name)), named(cls(*s->parent))});

    // Sibling groups keyed by (parent, region), in order of first appearance.
    std::vector<std::pair<std::pair<std::string, std::uint32_t>, std::vector<Iri>>> groups;
    for (const auto *s : states) {
        if (s->kind == StateKind::Final)
            continue;
        std::pair key{s->parent.value_or(""), s->parent ? s->region : 0u};
        auto it = std::find_if(groups.begin(), groups.end(), [&](const auto &g) { return g.first == key; });
        if (it == groups.end()) {
            groups.push_back({key, {}});
            it = std::prev(groups.end());
        }
        it->second.push_back(cls(s->name));
    }
    for (const auto &g : groups)
        addDisjoint(t.ontology, g.second);

    for (const auto *s : states) {
        if (!s->invariant)
            continue;
        auto first = t.diagnostics.size();
        auto inv = translateOcl(*s->invariant, rm, bm.forResource, t.iris, t.diagnostics);
        for (auto i = first; i < t.diagnostics.size(); ++i) {
            auto &d = t.diagnostics[i];
            d.message = fmt::format("invariant of state '{}': {}", s->name, d.message);
            d.element = {ElementKind::State, s->name, d.element.span.known() ? d.element.span : s->span};
        }
        // Relativized to the owning resource; a bare "size() = 0" would otherwise hold for every
        // unrelated element and drag it into the state.
        std::vector<ClassExpr> ops{named(owner)};
        flattenInto(ops, std::move(inv), true);
        ax.emplace_back(EquivalentClasses{named(cls(s->name)), intersectionOf(std::move(ops))});
    }
    return t;
}

Translation translateModels(const ResourceModel &rm, const BehavioralModel *bm, std::string baseIri)
{
    auto t = translateResourceModel(rm, std::move(baseIri));
    if (bm)
        t = translateBehavioralModel(*bm, rm, std::move(t));
    return t;
}

} // namespace restcheck
