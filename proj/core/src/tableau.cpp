#include "restcheck/tableau.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <functional>
#include <set>

namespace restcheck::dl {

std::string_view toString(SatStatus s) { return s == SatStatus::Sat ? "SAT" : "UNSAT"; }

// ---------------------------------------------------------------------------
// ConceptPool

std::size_t ConceptPool::Hash::operator()(const Concept &c) const
{
    std::size_t h = static_cast<std::size_t>(c.op) * 0x9e3779b97f4a7c15ULL;
    auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    mix(c.symbol);
    mix(c.n);
    for (auto a : c.args)
        mix(a);
    mix(static_cast<std::size_t>(c.value.type));
    mix(std::hash<std::string>{}(c.value.lexical));
    return h;
}

ConceptPool::ConceptPool()
{
    top_ = intern({ConceptOp::Top});
    bottom_ = intern({ConceptOp::Bottom});
}

ConceptId ConceptPool::intern(Concept c)
{
    if (auto it = index_.find(c); it != index_.end())
        return it->second;
    auto id = static_cast<ConceptId>(concepts_.size());
    concepts_.push_back(c);
    index_.emplace(std::move(c), id);
    return id;
}

ConceptId ConceptPool::atom(Symbol a, bool negated)
{
    return intern({negated ? ConceptOp::NotAtom : ConceptOp::Atom, a});
}

ConceptId ConceptPool::conj(std::vector<ConceptId> operands)
{
    std::vector<ConceptId> flat;
    for (auto c : operands) {
        const auto &k = concepts_[c];
        if (k.op == ConceptOp::Bottom)
            return bottom_;
        if (k.op == ConceptOp::Top)
            continue;
        if (k.op == ConceptOp::And)
            flat.insert(flat.end(), k.args.begin(), k.args.end());
        else
            flat.push_back(c);
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.empty())
        return top_;
    if (flat.size() == 1)
        return flat.front();
    return intern({ConceptOp::And, 0, 0, std::move(flat)});
}

ConceptId ConceptPool::disj(std::vector<ConceptId> operands)
{
    std::vector<ConceptId> flat;
    for (auto c : operands) {
        const auto &k = concepts_[c];
        if (k.op == ConceptOp::Top)
            return top_;
        if (k.op == ConceptOp::Bottom)
            continue;
        if (k.op == ConceptOp::Or)
            flat.insert(flat.end(), k.args.begin(), k.args.end());
        else
            flat.push_back(c);
    }
    std::sort(flat.begin(), flat.end());
    flat.erase(std::unique(flat.begin(), flat.end()), flat.end());
    if (flat.empty())
        return bottom_;
    if (flat.size() == 1)
        return flat.front();
    return intern({ConceptOp::Or, 0, 0, std::move(flat)});
}

ConceptId ConceptPool::some(Symbol role, ConceptId filler)
{
    if (filler == bottom_)
        return bottom_;
    return intern({ConceptOp::Some, role, 0, {filler}});
}

ConceptId ConceptPool::all(Symbol role, ConceptId filler)
{
    if (filler == top_)
        return top_;
    return intern({ConceptOp::All, role, 0, {filler}});
}

ConceptId ConceptPool::atLeast(std::uint32_t n, Symbol role)
{
    if (n == 0)
        return top_;
    if (n == 1)
        return some(role, top_);
    return intern({ConceptOp::AtLeast, role, n});
}

ConceptId ConceptPool::atMost(std::int64_t n, Symbol role)
{
    if (n < 0)
        return bottom_;
    if (n == 0)
        return all(role, bottom_);
    return intern({ConceptOp::AtMost, role, static_cast<std::uint32_t>(n)});
}

ConceptId ConceptPool::dataValue(Symbol property, LiteralValue value, bool negated)
{
    return intern({negated ? ConceptOp::NotDataValue : ConceptOp::DataValue, property, 0, {}, std::move(value)});
}

ConceptId ConceptPool::dataAtLeast(std::uint32_t n, Symbol property)
{
    if (n == 0)
        return top_;
    return intern({ConceptOp::DataAtLeast, property, n});
}

ConceptId ConceptPool::dataAtMost(std::int64_t n, Symbol property)
{
    if (n < 0)
        return bottom_;
    return intern({ConceptOp::DataAtMost, property, static_cast<std::uint32_t>(n)});
}

ConceptId ConceptPool::negate(ConceptId id)
{
    const Concept c = concepts_[id];
    switch (c.op) {
    case ConceptOp::Top:
        return bottom_;
    case ConceptOp::Bottom:
        return top_;
    case ConceptOp::Atom:
        return atom(c.symbol, true);
    case ConceptOp::NotAtom:
        return atom(c.symbol, false);
    case ConceptOp::And:
    case ConceptOp::Or: {
        std::vector<ConceptId> neg;
        for (auto a : c.args)
            neg.push_back(negate(a));
        return c.op == ConceptOp::And ? disj(std::move(neg)) : conj(std::move(neg));
    }
    case ConceptOp::Some:
        return all(c.symbol, negate(c.args.front()));
    case ConceptOp::All:
        return some(c.symbol, negate(c.args.front()));
    case ConceptOp::AtLeast:
        return atMost(static_cast<std::int64_t>(c.n) - 1, c.symbol);
    case ConceptOp::AtMost:
        return atLeast(c.n + 1, c.symbol);
    case ConceptOp::DataValue:
        return dataValue(c.symbol, c.value, true);
    case ConceptOp::NotDataValue:
        return dataValue(c.symbol, c.value, false);
    case ConceptOp::DataAtLeast:
        return dataAtMost(static_cast<std::int64_t>(c.n) - 1, c.symbol);
    case ConceptOp::DataAtMost:
        return dataAtLeast(c.n + 1, c.symbol);
    }
    return top_;
}

// ---------------------------------------------------------------------------
// TBox compilation

namespace {
const std::vector<ConceptId> kNoConcepts;
const std::vector<DataType> kNoTypes;
} // namespace

std::optional<Symbol> TBox::classSymbol(std::string_view iri) const
{
    if (auto it = classIds_.find(iri); it != classIds_.end())
        return it->second;
    return std::nullopt;
}

const std::vector<ConceptId> &TBox::unfolding(Symbol atom) const
{
    return atom < unfold_.size() ? unfold_[atom] : kNoConcepts;
}

const std::vector<ConceptId> &TBox::roleDomain(Symbol role) const
{
    return role < roleDomain_.size() ? roleDomain_[role] : kNoConcepts;
}

const std::vector<ConceptId> &TBox::dataDomain(Symbol property) const
{
    return property < dataDomain_.size() ? dataDomain_[property] : kNoConcepts;
}

const std::vector<DataType> &TBox::dataRange(Symbol property) const
{
    return property < dataRange_.size() ? dataRange_[property] : kNoTypes;
}

std::string TBox::describe(ConceptId id) const
{
    const auto &c = pool_[id];
    auto join = [&](std::string_view sep) {
        std::string out;
        for (auto a : c.args) {
            if (!out.empty())
                out += sep;
            auto op = pool_[a].op;
            bool wrap = op == ConceptOp::And || op == ConceptOp::Or;
            out += wrap ? "(" + describe(a) + ")" : describe(a);
        }
        return out;
    };
    auto filler = [&] {
        auto a = c.args.front();
        auto op = pool_[a].op;
        return op == ConceptOp::And || op == ConceptOp::Or ? "(" + describe(a) + ")" : describe(a);
    };
    switch (c.op) {
    case ConceptOp::Top:
        return "⊤";
    case ConceptOp::Bottom:
        return "⊥";
    case ConceptOp::Atom:
        return classNames_[c.symbol];
    case ConceptOp::NotAtom:
        return "¬" + classNames_[c.symbol];
    case ConceptOp::And:
        return join(" ⊓ ");
    case ConceptOp::Or:
        return join(" ⊔ ");
    case ConceptOp::Some:
        return fmt::format("∃{}.{}", roleNames_[c.symbol], filler());
    case ConceptOp::All:
        return fmt::format("∀{}.{}", roleNames_[c.symbol], filler());
    case ConceptOp::AtLeast:
        return fmt::format("≥{} {}", c.n, roleNames_[c.symbol]);
    case ConceptOp::AtMost:
        return fmt::format("≤{} {}", c.n, roleNames_[c.symbol]);
    case ConceptOp::DataValue:
        return fmt::format("{}=\"{}\"", dataNames_[c.symbol], c.value.lexical);
    case ConceptOp::NotDataValue:
        return fmt::format("{}≠\"{}\"", dataNames_[c.symbol], c.value.lexical);
    case ConceptOp::DataAtLeast:
        return fmt::format("≥{} {}", c.n, dataNames_[c.symbol]);
    case ConceptOp::DataAtMost:
        return fmt::format("≤{} {}", c.n, dataNames_[c.symbol]);
    }
    return "?";
}

std::string TBox::describe(const Inclusion &inc) const
{
    return describe(inc.sub) + " ⊑ " + describe(inc.sup);
}

class TBoxBuilder {
public:
    explicit TBoxBuilder(TBox &t) : t_(t) {}

    Symbol cls(const owl::Iri &iri) { return intern(iri, t_.classIds_, t_.classNames_); }
    Symbol role(const owl::Iri &iri) { return intern(iri, roleIds_, t_.roleNames_); }
    Symbol data(const owl::Iri &iri) { return intern(iri, dataIds_, t_.dataNames_); }

    ConceptId convert(const owl::ClassExpr &e)
    {
        auto &p = t_.pool_;
        return std::visit(
            [&](const auto &n) -> ConceptId {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, owl::Named>)
                    return p.atom(cls(n.iri));
                else if constexpr (std::is_same_v<T, owl::IntersectionOf> || std::is_same_v<T, owl::UnionOf>) {
                    std::vector<ConceptId> ops;
                    for (const auto &o : n.operands)
                        ops.push_back(convert(o));
                    return std::is_same_v<T, owl::IntersectionOf> ? p.conj(std::move(ops)) : p.disj(std::move(ops));
                } else if constexpr (std::is_same_v<T, owl::ComplementOf>)
                    return p.negate(convert(*n.operand));
                else if constexpr (std::is_same_v<T, owl::SomeValuesFrom>)
                    return p.some(role(n.property), convert(*n.filler));
                else if constexpr (std::is_same_v<T, owl::MinCardinality>)
                    return p.atLeast(n.n, role(n.property));
                else if constexpr (std::is_same_v<T, owl::MaxCardinality>)
                    return p.atMost(n.n, role(n.property));
                else if constexpr (std::is_same_v<T, owl::ExactCardinality>) {
                    auto r = role(n.property);
                    return p.conj({p.atLeast(n.n, r), p.atMost(n.n, r)});
                } else if constexpr (std::is_same_v<T, owl::DataHasValue>) {
                    if (!validLexical(n.datatype, n.lexical))
                        throw UnsupportedConstruct(
                            fmt::format("literal \"{}\" is not a valid {}", n.lexical, xsdName(n.datatype)));
                    return p.dataValue(data(n.property), LiteralValue::make(n.datatype, n.lexical));
                } else {
                    auto d = data(n.property);
                    return p.conj({p.dataAtLeast(n.n, d), p.dataAtMost(n.n, d)});
                }
            },
            e.node);
    }

    void include(ConceptId sub, ConceptId sup) { t_.inclusions_.push_back({sub, sup}); }

    void absorb()
    {
        auto &p = t_.pool_;
        for (Symbol a = 0; a < t_.classNames_.size(); ++a)
            t_.atoms_.push_back(p.atom(a));
        t_.unfold_.resize(t_.classNames_.size());
        t_.roleDomain_.resize(t_.roleNames_.size());
        t_.dataDomain_.resize(t_.dataNames_.size());
        t_.dataRange_.resize(t_.dataNames_.size());
        for (auto &[d, types] : ranges_)
            t_.dataRange_[d] = types;

        std::vector<ConceptId> global;
        for (const auto &inc : t_.inclusions_) {
            if (inc.sup == p.top())
                continue;
            const auto &sub = p[inc.sub];
            switch (sub.op) {
            case ConceptOp::Top:
                global.push_back(inc.sup);
                continue;
            case ConceptOp::Atom:
                t_.unfold_[sub.symbol].push_back(inc.sup);
                continue;
            case ConceptOp::Some:
                if (sub.args.front() == p.top()) {
                    t_.roleDomain_[sub.symbol].push_back(inc.sup);
                    continue;
                }
                break;
            case ConceptOp::DataAtLeast:
                if (sub.n == 1) {
                    t_.dataDomain_[sub.symbol].push_back(inc.sup);
                    continue;
                }
                break;
            case ConceptOp::And: {
                auto atomIt = std::find_if(sub.args.begin(), sub.args.end(),
                                           [&](ConceptId a) { return p[a].op == ConceptOp::Atom; });
                if (atomIt != sub.args.end()) {
                    std::vector<ConceptId> rest;
                    for (auto a : sub.args)
                        if (a != *atomIt)
                            rest.push_back(a);
                    auto restC = p.conj(rest);
                    t_.unfold_[p[*atomIt].symbol].push_back(p.disj({p.negate(restC), inc.sup}));
                    continue;
                }
                break;
            }
            default:
                break;
            }
            global.push_back(p.disj({p.negate(inc.sub), inc.sup}));
        }
        t_.global_ = p.conj(std::move(global));
    }

    void range(Symbol d, DataType t)
    {
        auto &v = ranges_[d];
        if (std::find(v.begin(), v.end(), t) == v.end())
            v.push_back(t);
    }

private:
    static Symbol intern(const owl::Iri &iri, std::map<std::string, Symbol, std::less<>> &ids,
                         std::vector<std::string> &names)
    {
        if (auto it = ids.find(iri); it != ids.end())
            return it->second;
        auto s = static_cast<Symbol>(names.size());
        names.push_back(iri);
        ids.emplace(iri, s);
        return s;
    }

    TBox &t_;
    std::map<std::string, Symbol, std::less<>> roleIds_;
    std::map<std::string, Symbol, std::less<>> dataIds_;
    std::map<Symbol, std::vector<DataType>> ranges_;
};

TBox compileTBox(const owl::Ontology &ontology)
{
    TBox t;
    TBoxBuilder b(t);
    auto &p = t.pool_;
    std::set<owl::Iri> declared;
    for (const auto &ax : ontology.axioms) {
        std::visit(
            [&](const auto &a) {
                using T = std::decay_t<decltype(a)>;
                if constexpr (std::is_same_v<T, owl::DeclareClass>) {
                    b.cls(a.iri);
                    if (declared.insert(a.iri).second)
                        t.classOrder_.push_back(a.iri);
                } else if constexpr (std::is_same_v<T, owl::DeclareObjectProperty>) {
                    b.role(a.iri);
                } else if constexpr (std::is_same_v<T, owl::DeclareDataProperty>) {
                    b.data(a.iri);
                } else if constexpr (std::is_same_v<T, owl::SubClassOf>) {
                    b.include(b.convert(a.sub), b.convert(a.super));
                } else if constexpr (std::is_same_v<T, owl::EquivalentClasses>) {
                    auto x = b.convert(a.first);
                    auto y = b.convert(a.second);
                    b.include(x, y);
                    b.include(y, x);
                } else if constexpr (std::is_same_v<T, owl::DisjointClasses>) {
                    std::vector<ConceptId> cs;
                    for (const auto &c : a.classes)
                        cs.push_back(b.convert(c));
                    for (std::size_t i = 0; i < cs.size(); ++i)
                        for (std::size_t j = i + 1; j < cs.size(); ++j)
                            b.include(p.conj({cs[i], cs[j]}), p.bottom());
                } else if constexpr (std::is_same_v<T, owl::ObjectPropertyDomain>) {
                    b.include(p.some(b.role(a.property), p.top()), b.convert(a.domain));
                } else if constexpr (std::is_same_v<T, owl::ObjectPropertyRange>) {
                    b.include(p.top(), p.all(b.role(a.property), b.convert(a.range)));
                } else if constexpr (std::is_same_v<T, owl::DataPropertyDomain>) {
                    b.include(p.dataAtLeast(1, b.data(a.property)), b.convert(a.domain));
                } else {
                    b.range(b.data(a.property), a.range);
                }
            },
            ax);
    }
    b.absorb();
    // Complements of every disjunct, for semantic branching. Negation is an
    // involution on NNF, so the closure is finite.
    for (ConceptId i = 0; i < p.size(); ++i) {
        if (p[i].op != ConceptOp::Or)
            continue;
        auto args = p[i].args;
        for (auto a : args)
            t.complement_.emplace(a, p.negate(a));
    }
    return t;
}

ConceptId TBox::complement(ConceptId c) const { return complement_.at(c); }

// ---------------------------------------------------------------------------
// Tableau

namespace {

/// Branch points a fact depends on, sorted.
using DepSet = std::vector<std::uint32_t>;

DepSet unite(const DepSet &a, const DepSet &b)
{
    DepSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool contains(const DepSet &d, std::uint32_t b) { return std::binary_search(d.begin(), d.end(), b); }

struct Node {
    int parent = -1;
    bool alive = true;
    std::map<ConceptId, DepSet> label;
    /// Roles on the edge from the parent.
    std::map<Symbol, DepSet> edge;
    std::set<ConceptId> generated;
};

struct Graph {
    std::vector<Node> nodes;
    /// Pairs (a, b) with a < b that must stay distinct.
    std::map<std::pair<int, int>, DepSet> distinct;
};

struct Outcome {
    bool sat = false;
    DepSet deps;
    std::size_t witness = 0;
};

class Clash {
public:
    explicit Clash(DepSet d) : deps(std::move(d)) {}
    DepSet deps;
};

class Tableau {
public:
    explicit Tableau(const TBox &t) : t_(t), p_(t.concepts()) {}

    Outcome run(ConceptId root)
    {
        Graph g;
        g.nodes.emplace_back();
        add(g, 0, root, {});
        add(g, 0, t_.globalConstraint(), {});
        return search(std::move(g));
    }

private:
    bool add(Graph &g, int x, ConceptId c, const DepSet &deps)
    {
        if (c == p_.top())
            return false;
        auto &label = g.nodes[x].label;
        auto [it, inserted] = label.emplace(c, deps);
        if (inserted)
            return true;
        // Keep the smaller dependency set; either justifies the fact.
        if (deps.size() < it->second.size() && std::includes(it->second.begin(), it->second.end(),
                                                             deps.begin(), deps.end())) {
            it->second = deps;
            return true;
        }
        return false;
    }

    std::vector<int> children(const Graph &g, int x) const
    {
        std::vector<int> out;
        for (int i = 0; i < static_cast<int>(g.nodes.size()); ++i)
            if (g.nodes[i].alive && g.nodes[i].parent == x)
                out.push_back(i);
        return out;
    }

    std::vector<int> successors(const Graph &g, int x, Symbol r) const
    {
        std::vector<int> out;
        for (int y : children(g, x))
            if (g.nodes[y].edge.count(r))
                out.push_back(y);
        return out;
    }

    int newNode(Graph &g, int parent, Symbol r, const DepSet &deps)
    {
        Node n;
        n.parent = parent;
        n.edge.emplace(r, deps);
        g.nodes.push_back(std::move(n));
        int y = static_cast<int>(g.nodes.size()) - 1;
        add(g, y, t_.globalConstraint(), {});
        return y;
    }

    /// Every concept of `inner` also labels `outer`.
    static bool labelWithin(const Node &inner, const Node &outer)
    {
        return std::includes(outer.label.begin(), outer.label.end(), inner.label.begin(), inner.label.end(),
                             [](const auto &u, const auto &v) { return u.first < v.first; });
    }

    /// 0 = active, 1 = directly blocked, 2 = indirectly blocked.
    std::vector<int> blocking(const Graph &g) const
    {
        std::vector<int> state(g.nodes.size(), 0);
        for (int x = 0; x < static_cast<int>(g.nodes.size()); ++x) {
            const auto &n = g.nodes[x];
            if (!n.alive || n.parent < 0)
                continue;
            // Parents precede children, so their state is already known.
            if (state[n.parent] != 0) {
                state[x] = 2;
                continue;
            }
            for (int y = n.parent; y >= 0; y = g.nodes[y].parent)
                if (labelWithin(n, g.nodes[y])) {
                    state[x] = 1;
                    break;
                }
        }
        return state;
    }

    /// Deterministic rules to fixpoint.
    void saturate(Graph &g, const std::vector<int> &state)
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int x = 0; x < static_cast<int>(g.nodes.size()); ++x) {
                if (!g.nodes[x].alive || state[x] == 2)
                    continue;
                std::vector<std::pair<ConceptId, DepSet>> items(g.nodes[x].label.begin(), g.nodes[x].label.end());
                for (const auto &[c, deps] : items) {
                    const auto &k = p_[c];
                    switch (k.op) {
                    case ConceptOp::And:
                        for (auto a : k.args)
                            changed |= add(g, x, a, deps);
                        break;
                    case ConceptOp::Atom:
                        for (auto u : t_.unfolding(k.symbol))
                            changed |= add(g, x, u, deps);
                        break;
                    case ConceptOp::All:
                        for (int y : successors(g, x, k.symbol))
                            changed |= add(g, y, k.args.front(), unite(deps, g.nodes[y].edge.at(k.symbol)));
                        break;
                    case ConceptOp::DataValue:
                    case ConceptOp::DataAtLeast:
                        for (auto d : t_.dataDomain(k.symbol))
                            changed |= add(g, x, d, deps);
                        break;
                    default:
                        break;
                    }
                }
                if (int par = g.nodes[x].parent; par >= 0) {
                    auto edge = g.nodes[x].edge;
                    for (const auto &[r, deps] : edge)
                        for (auto d : t_.roleDomain(r))
                            changed |= add(g, par, d, deps);
                }
            }
        }
    }

    void checkData(const Node &n) const
    {
        struct Facts {
            std::set<LiteralValue> values, excluded;
            std::uint32_t atLeast = 0;
            std::int64_t atMost = -1;
            DepSet deps;
        };
        std::map<Symbol, Facts> byProperty;
        for (const auto &[c, deps] : n.label) {
            const auto &k = p_[c];
            Facts *f = nullptr;
            switch (k.op) {
            case ConceptOp::DataValue:
                f = &byProperty[k.symbol];
                f->values.insert(k.value);
                break;
            case ConceptOp::NotDataValue:
                f = &byProperty[k.symbol];
                f->excluded.insert(k.value);
                break;
            case ConceptOp::DataAtLeast:
                f = &byProperty[k.symbol];
                f->atLeast = std::max(f->atLeast, k.n);
                break;
            case ConceptOp::DataAtMost:
                f = &byProperty[k.symbol];
                f->atMost = f->atMost < 0 ? k.n : std::min<std::int64_t>(f->atMost, k.n);
                break;
            default:
                break;
            }
            if (f)
                f->deps = unite(f->deps, deps);
        }
        for (const auto &[d, f] : byProperty) {
            for (const auto &v : f.values)
                if (f.excluded.count(v))
                    throw Clash(f.deps);
            std::int64_t need = std::max<std::int64_t>(f.atLeast, static_cast<std::int64_t>(f.values.size()));
            if (f.atMost >= 0 && need > f.atMost)
                throw Clash(f.deps);
            const auto &types = t_.dataRange(d);
            if (types.empty())
                continue;
            if (types.size() > 1) {
                // Value spaces are disjoint, so no value satisfies two ranges.
                if (need > 0)
                    throw Clash(f.deps);
                continue;
            }
            for (const auto &v : f.values)
                if (v.type != types.front())
                    throw Clash(f.deps);
            if (types.front() == DataType::Boolean) {
                std::int64_t available = 2;
                for (const auto &v : f.excluded)
                    if (v.type == DataType::Boolean)
                        --available;
                if (need > available)
                    throw Clash(f.deps);
            }
        }
    }

    void checkClashes(const Graph &g, const std::vector<int> &state) const
    {
        for (int x = 0; x < static_cast<int>(g.nodes.size()); ++x) {
            const auto &n = g.nodes[x];
            if (!n.alive || state[x] == 2)
                continue;
            std::map<Symbol, std::pair<std::uint32_t, const DepSet *>> least;
            for (const auto &[c, deps] : n.label) {
                const auto &k = p_[c];
                if (k.op == ConceptOp::Bottom)
                    throw Clash(deps);
                if (k.op == ConceptOp::NotAtom)
                    if (auto it = n.label.find(t_.classConcept(k.symbol)); it != n.label.end())
                        throw Clash(unite(deps, it->second));
                if (k.op == ConceptOp::AtLeast) {
                    auto &l = least[k.symbol];
                    if (k.n > l.first)
                        l = {k.n, &deps};
                }
            }
            for (const auto &[c, deps] : n.label) {
                const auto &k = p_[c];
                if (k.op == ConceptOp::AtMost)
                    if (auto it = least.find(k.symbol); it != least.end() && it->second.first > k.n)
                        throw Clash(unite(deps, *it->second.second));
            }
            checkData(n);
        }
    }

    /// 0: no successors needed, 1: constrains successors, 2: creates them.
    int cost(ConceptId c) const
    {
        const auto &k = p_[c];
        switch (k.op) {
        case ConceptOp::Some:
        case ConceptOp::AtLeast:
            return 2;
        case ConceptOp::All:
            return 1;
        case ConceptOp::And:
        case ConceptOp::Or: {
            int worst = 0;
            for (auto a : k.args)
                worst = std::max(worst, cost(a));
            return worst;
        }
        default:
            return 0;
        }
    }

    Outcome branchOr(const Graph &g, int x, ConceptId c, const DepSet &deps)
    {
        auto b = ++branches_;
        auto order = p_[c].args;
        std::stable_sort(order.begin(), order.end(), [&](ConceptId u, ConceptId v) { return cost(u) < cost(v); });
        DepSet failed;
        // Semantic branching: later branches also carry the negation of every
        // disjunct already refuted, justified by that refutation.
        std::vector<std::pair<ConceptId, DepSet>> refuted;
        for (auto d : order) {
            Graph h = g;
            DepSet with = deps;
            with.insert(std::upper_bound(with.begin(), with.end(), b), b);
            add(h, x, d, with);
            for (const auto &[n, why] : refuted)
                add(h, x, n, unite(why, with));
            auto r = search(std::move(h));
            if (r.sat)
                return r;
            if (!contains(r.deps, b))
                return r;
            failed = unite(failed, r.deps);
            DepSet why = r.deps;
            why.erase(std::remove(why.begin(), why.end(), b), why.end());
            refuted.emplace_back(t_.complement(d), std::move(why));
        }
        failed.erase(std::remove(failed.begin(), failed.end(), b), failed.end());
        return {false, unite(failed, deps), 0};
    }

    Outcome branchMerge(const Graph &g, int x, Symbol r, const DepSet &deps, const std::vector<std::pair<int, int>> &pairs)
    {
        auto b = ++branches_;
        DepSet failed;
        for (auto [older, newer] : pairs) {
            Graph h = g;
            DepSet with = unite(unite(deps, h.nodes[older].edge.at(r)), h.nodes[newer].edge.at(r));
            with.insert(std::upper_bound(with.begin(), with.end(), b), b);
            merge(h, newer, older, with);
            auto res = search(std::move(h));
            if (res.sat)
                return res;
            if (!contains(res.deps, b))
                return res;
            failed = unite(failed, res.deps);
        }
        failed.erase(std::remove(failed.begin(), failed.end(), b), failed.end());
        (void)x;
        return {false, unite(failed, deps), 0};
    }

    void prune(Graph &g, int y)
    {
        g.nodes[y].alive = false;
        for (int z : children(g, y))
            prune(g, z);
    }

    /// Folds y into z; both are successors of the same node.
    void merge(Graph &g, int y, int z, const DepSet &deps)
    {
        for (const auto &[c, d] : g.nodes[y].label)
            add(g, z, c, unite(d, deps));
        for (const auto &[r, d] : g.nodes[y].edge) {
            auto nd = unite(d, deps);
            auto [it, inserted] = g.nodes[z].edge.emplace(r, nd);
            if (!inserted && nd.size() < it->second.size())
                it->second = nd;
        }
        std::map<std::pair<int, int>, DepSet> moved;
        for (auto it = g.distinct.begin(); it != g.distinct.end();) {
            auto [a, b] = it->first;
            if (a == y || b == y) {
                int other = a == y ? b : a;
                moved[{std::min(other, z), std::max(other, z)}] = unite(it->second, deps);
                it = g.distinct.erase(it);
            } else {
                ++it;
            }
        }
        for (auto &[k, d] : moved)
            g.distinct.emplace(k, std::move(d));
        prune(g, y);
    }

    Outcome search(Graph g)
    {
        try {
            for (;;) {
                auto state = blocking(g);
                saturate(g, state);
                state = blocking(g);
                checkClashes(g, state);

                // Disjunctions.
                for (int x = 0; x < static_cast<int>(g.nodes.size()); ++x) {
                    if (!g.nodes[x].alive || state[x] == 2)
                        continue;
                    for (const auto &[c, deps] : g.nodes[x].label) {
                        const auto &k = p_[c];
                        if (k.op != ConceptOp::Or)
                            continue;
                        bool done = std::any_of(k.args.begin(), k.args.end(),
                                                [&](ConceptId a) { return g.nodes[x].label.count(a) > 0; });
                        if (!done)
                            return branchOr(g, x, c, deps);
                    }
                }

                // At-most restrictions.
                for (int x = 0; x < static_cast<int>(g.nodes.size()); ++x) {
                    if (!g.nodes[x].alive || state[x] == 2)
                        continue;
                    for (const auto &[c, deps] : g.nodes[x].label) {
                        const auto &k = p_[c];
                        if (k.op != ConceptOp::AtMost)
                            continue;
                        auto succ = successors(g, x, k.symbol);
                        if (succ.size() <= k.n)
                            continue;
                        std::vector<std::pair<int, int>> pairs;
                        DepSet clash = deps;
                        for (int y : succ)
                            clash = unite(clash, g.nodes[y].edge.at(k.symbol));
                        for (std::size_t i = succ.size(); i-- > 0;)
                            for (std::size_t j = i; j-- > 0;) {
                                auto it = g.distinct.find({succ[j], succ[i]});
                                if (it == g.distinct.end())
                                    pairs.emplace_back(succ[j], succ[i]);
                                else
                                    clash = unite(clash, it->second);
                            }
                        if (pairs.empty())
                            throw Clash(clash);
                        return branchMerge(g, x, k.symbol, deps, pairs);
                    }
                }

                // Generating rules on active nodes.
                bool generated = false;
                for (int x = 0; x < static_cast<int>(g.nodes.size()) && !generated; ++x) {
                    if (!g.nodes[x].alive || state[x] != 0)
                        continue;
                    std::vector<std::pair<ConceptId, DepSet>> items(g.nodes[x].label.begin(),
                                                                    g.nodes[x].label.end());
                    for (const auto &[c, deps] : items) {
                        const auto &k = p_[c];
                        if (k.op == ConceptOp::Some) {
                            auto succ = successors(g, x, k.symbol);
                            bool met = std::any_of(succ.begin(), succ.end(), [&](int y) {
                                return k.args.front() == p_.top() || g.nodes[y].label.count(k.args.front()) > 0;
                            });
                            if (met)
                                continue;
                            int y = newNode(g, x, k.symbol, deps);
                            add(g, y, k.args.front(), deps);
                            generated = true;
                        } else if (k.op == ConceptOp::AtLeast) {
                            if (g.nodes[x].generated.count(c))
                                continue;
                            g.nodes[x].generated.insert(c);
                            std::vector<int> fresh;
                            for (std::uint32_t i = 0; i < k.n; ++i)
                                fresh.push_back(newNode(g, x, k.symbol, deps));
                            for (std::size_t i = 0; i < fresh.size(); ++i)
                                for (std::size_t j = i + 1; j < fresh.size(); ++j)
                                    g.distinct[{fresh[i], fresh[j]}] = deps;
                            generated = true;
                        }
                    }
                }
                if (generated)
                    continue;

                Outcome done{true, {}, 0};
                for (int x = 0; x < static_cast<int>(g.nodes.size()); ++x)
                    if (g.nodes[x].alive && state[x] != 2)
                        ++done.witness;
                return done;
            }
        } catch (const Clash &c) {
            return {false, c.deps, 0};
        }
    }

    const TBox &t_;
    const ConceptPool &p_;
    std::uint32_t branches_ = 0;
};

} // namespace

SatVerdict isSatisfiable(const TBox &tbox, std::string_view conceptIri)
{
    const auto &order = tbox.namedClasses();
    auto sym = tbox.classSymbol(conceptIri);
    if (!sym || std::find(order.begin(), order.end(), conceptIri) == order.end())
        throw std::invalid_argument(fmt::format("'{}' is not a declared class", conceptIri));
    Tableau tab(tbox);
    auto r = tab.run(tbox.classConcept(*sym));
    SatVerdict v{std::string(conceptIri), r.sat ? SatStatus::Sat : SatStatus::Unsat, std::nullopt};
    if (r.sat)
        v.witnessSize = r.witness;
    return v;
}

std::vector<SatVerdict> classifyAll(const TBox &tbox)
{
    std::vector<SatVerdict> out;
    for (const auto &c : tbox.namedClasses())
        out.push_back(isSatisfiable(tbox, c));
    return out;
}

} // namespace restcheck::dl
