#include "restcheck/bounded_search.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

namespace restcheck::dl {

std::string FiniteModel::toString() const
{
    std::string out = fmt::format("domain: {}\n", domainSize);
    for (const auto &[c, xs] : classes) {
        out += fmt::format("class {}: {{", c);
        for (std::size_t i = 0; i < xs.size(); ++i)
            out += fmt::format("{}{}", i ? ", " : "", xs[i]);
        out += "}\n";
    }
    for (const auto &[r, pairs] : roles) {
        out += fmt::format("role {}: {{", r);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            out += fmt::format("{}({}, {})", i ? ", " : "", pairs[i].first, pairs[i].second);
        out += "}\n";
    }
    for (const auto &[d, pairs] : data) {
        out += fmt::format("data {}: {{", d);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            out += fmt::format("{}({}, \"{}\"^^{})", i ? ", " : "", pairs[i].first, pairs[i].second.lexical,
                               xsdName(pairs[i].second.type));
        out += "}\n";
    }
    return out;
}

namespace {

// ---------------------------------------------------------------------------
// CDCL solver. Literals are 2*var + sign, sign 1 meaning negated.

class Solver {
public:
    int newVar()
    {
        assign_.push_back(-1);
        level_.push_back(0);
        reason_.push_back(-1);
        activity_.push_back(0.0);
        seen_.push_back(0);
        watches_.emplace_back();
        watches_.emplace_back();
        return static_cast<int>(assign_.size()) - 1;
    }

    void addClause(std::vector<int> c)
    {
        if (!ok_)
            return;
        std::sort(c.begin(), c.end());
        c.erase(std::unique(c.begin(), c.end()), c.end());
        std::vector<int> kept;
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i + 1 < c.size() && (c[i] ^ 1) == c[i + 1])
                return; // tautology
            int v = value(c[i]);
            if (v == 1)
                return;
            if (v == -1)
                kept.push_back(c[i]);
        }
        if (kept.empty()) {
            ok_ = false;
        } else if (kept.size() == 1) {
            enqueue(kept[0], -1);
            if (propagate() != -1)
                ok_ = false;
        } else {
            clauses_.push_back(std::move(kept));
            attach(static_cast<int>(clauses_.size()) - 1);
        }
    }

    bool solve()
    {
        if (!ok_ || propagate() != -1)
            return false;
        std::size_t conflicts = 0, restartAt = 100, lubyIndex = 1;
        for (;;) {
            int confl = propagate();
            if (confl != -1) {
                ++conflicts;
                if (decisionLevel() == 0)
                    return false;
                auto [learnt, back] = analyze(confl);
                cancelUntil(back);
                if (learnt.size() == 1) {
                    enqueue(learnt[0], -1);
                } else {
                    clauses_.push_back(learnt);
                    int ci = static_cast<int>(clauses_.size()) - 1;
                    attach(ci);
                    enqueue(learnt[0], ci);
                }
                increment_ *= 1.0 / 0.95;
                continue;
            }
            if (conflicts >= restartAt) {
                cancelUntil(0);
                restartAt = conflicts + 100 * luby(++lubyIndex);
            }
            int v = pickBranch();
            if (v < 0)
                return true;
            trailLim_.push_back(static_cast<int>(trail_.size()));
            enqueue(2 * v + 1, -1);
        }
    }

    bool modelValue(int var) const { return assign_[var] == 1; }

private:
    static int varOf(int l) { return l >> 1; }

    int value(int l) const
    {
        int a = assign_[varOf(l)];
        return a < 0 ? -1 : a ^ (l & 1);
    }

    int decisionLevel() const { return static_cast<int>(trailLim_.size()); }

    void enqueue(int l, int why)
    {
        assign_[varOf(l)] = (l & 1) ? 0 : 1;
        level_[varOf(l)] = decisionLevel();
        reason_[varOf(l)] = why;
        trail_.push_back(l);
    }

    void attach(int ci)
    {
        watches_[clauses_[ci][0]].push_back(ci);
        watches_[clauses_[ci][1]].push_back(ci);
    }

    int propagate()
    {
        while (qhead_ < trail_.size()) {
            int falseLit = trail_[qhead_++] ^ 1;
            auto &ws = watches_[falseLit];
            std::size_t i = 0, j = 0;
            while (i < ws.size()) {
                int ci = ws[i++];
                auto &c = clauses_[ci];
                if (c[0] == falseLit)
                    std::swap(c[0], c[1]);
                if (value(c[0]) == 1) {
                    ws[j++] = ci;
                    continue;
                }
                bool moved = false;
                for (std::size_t k = 2; k < c.size(); ++k)
                    if (value(c[k]) != 0) {
                        std::swap(c[1], c[k]);
                        watches_[c[1]].push_back(ci);
                        moved = true;
                        break;
                    }
                if (moved)
                    continue;
                ws[j++] = ci;
                if (value(c[0]) == 0) {
                    while (i < ws.size())
                        ws[j++] = ws[i++];
                    ws.resize(j);
                    qhead_ = trail_.size();
                    return ci;
                }
                enqueue(c[0], ci);
            }
            ws.resize(j);
        }
        return -1;
    }

    void bump(int v)
    {
        activity_[v] += increment_;
        if (activity_[v] > 1e100) {
            for (auto &a : activity_)
                a *= 1e-100;
            increment_ *= 1e-100;
        }
    }

    std::pair<std::vector<int>, int> analyze(int confl)
    {
        std::vector<int> learnt{-1};
        int pathCount = 0;
        int p = -1;
        int idx = static_cast<int>(trail_.size()) - 1;
        int ci = confl;
        do {
            const auto &c = clauses_[ci];
            for (std::size_t k = p == -1 ? 0 : 1; k < c.size(); ++k) {
                int v = varOf(c[k]);
                if (seen_[v] || level_[v] == 0)
                    continue;
                seen_[v] = 1;
                bump(v);
                if (level_[v] >= decisionLevel())
                    ++pathCount;
                else
                    learnt.push_back(c[k]);
            }
            while (!seen_[varOf(trail_[idx])])
                --idx;
            p = trail_[idx--];
            ci = reason_[varOf(p)];
            seen_[varOf(p)] = 0;
            --pathCount;
        } while (pathCount > 0);
        learnt[0] = p ^ 1;

        int back = 0;
        std::size_t maxAt = 1;
        for (std::size_t k = 1; k < learnt.size(); ++k) {
            seen_[varOf(learnt[k])] = 0;
            if (level_[varOf(learnt[k])] > back) {
                back = level_[varOf(learnt[k])];
                maxAt = k;
            }
        }
        if (learnt.size() > 1)
            std::swap(learnt[1], learnt[maxAt]);
        return {learnt, back};
    }

    void cancelUntil(int lvl)
    {
        if (decisionLevel() <= lvl)
            return;
        for (std::size_t i = trail_.size(); i-- > static_cast<std::size_t>(trailLim_[lvl]);) {
            int v = varOf(trail_[i]);
            assign_[v] = -1;
            reason_[v] = -1;
        }
        trail_.resize(trailLim_[lvl]);
        trailLim_.resize(lvl);
        qhead_ = trail_.size();
    }

    int pickBranch() const
    {
        int best = -1;
        for (int v = 0; v < static_cast<int>(assign_.size()); ++v)
            if (assign_[v] < 0 && (best < 0 || activity_[v] > activity_[best]))
                best = v;
        return best;
    }

    static std::size_t luby(std::size_t i)
    {
        // 1 1 2 1 1 2 4 ...
        for (std::size_t k = 1;; ++k) {
            if (i == (std::size_t{1} << k) - 1)
                return std::size_t{1} << (k - 1);
            if (i < (std::size_t{1} << k) - 1)
                return luby(i - (std::size_t{1} << (k - 1)) + 1);
        }
    }

    bool ok_ = true;
    std::vector<std::vector<int>> clauses_;
    std::vector<std::vector<int>> watches_;
    std::vector<int> assign_, level_, reason_;
    std::vector<double> activity_;
    std::vector<char> seen_;
    std::vector<int> trail_, trailLim_;
    std::size_t qhead_ = 0;
    double increment_ = 1.0;
};

// ---------------------------------------------------------------------------
// Vocabulary and literal universe

struct Vocabulary {
    std::vector<owl::Iri> classes, roles, dataProps;
    std::vector<LiteralValue> universe;
};

void collect(const owl::ClassExpr &e, std::set<owl::Iri> &cls, std::set<owl::Iri> &roles,
             std::set<owl::Iri> &data, std::set<LiteralValue> &lits, std::uint32_t &maxData)
{
    std::visit(
        [&](const auto &n) {
            using T = std::decay_t<decltype(n)>;
            if constexpr (std::is_same_v<T, owl::Named>)
                cls.insert(n.iri);
            else if constexpr (std::is_same_v<T, owl::IntersectionOf> || std::is_same_v<T, owl::UnionOf>) {
                for (const auto &o : n.operands)
                    collect(o, cls, roles, data, lits, maxData);
            } else if constexpr (std::is_same_v<T, owl::ComplementOf>)
                collect(*n.operand, cls, roles, data, lits, maxData);
            else if constexpr (std::is_same_v<T, owl::SomeValuesFrom>) {
                roles.insert(n.property);
                collect(*n.filler, cls, roles, data, lits, maxData);
            } else if constexpr (std::is_same_v<T, owl::DataHasValue>) {
                data.insert(n.property);
                lits.insert(LiteralValue::make(n.datatype, n.lexical));
            } else if constexpr (std::is_same_v<T, owl::DataExactCardinality>) {
                data.insert(n.property);
                maxData = std::max(maxData, n.n);
            } else {
                roles.insert(n.property);
            }
        },
        e.node);
}

Vocabulary vocabularyOf(const owl::Ontology &o)
{
    std::set<owl::Iri> cls, roles, data;
    std::set<LiteralValue> lits;
    std::uint32_t maxData = 1;
    auto expr = [&](const owl::ClassExpr &e) { collect(e, cls, roles, data, lits, maxData); };
    for (const auto &ax : o.axioms)
        std::visit(
            [&](const auto &a) {
                using T = std::decay_t<decltype(a)>;
                if constexpr (std::is_same_v<T, owl::DeclareClass>)
                    cls.insert(a.iri);
                else if constexpr (std::is_same_v<T, owl::DeclareObjectProperty>)
                    roles.insert(a.iri);
                else if constexpr (std::is_same_v<T, owl::DeclareDataProperty>)
                    data.insert(a.iri);
                else if constexpr (std::is_same_v<T, owl::SubClassOf>) {
                    expr(a.sub);
                    expr(a.super);
                } else if constexpr (std::is_same_v<T, owl::EquivalentClasses>) {
                    expr(a.first);
                    expr(a.second);
                } else if constexpr (std::is_same_v<T, owl::DisjointClasses>) {
                    for (const auto &c : a.classes)
                        expr(c);
                } else if constexpr (std::is_same_v<T, owl::ObjectPropertyDomain>) {
                    roles.insert(a.property);
                    expr(a.domain);
                } else if constexpr (std::is_same_v<T, owl::ObjectPropertyRange>) {
                    roles.insert(a.property);
                    expr(a.range);
                } else if constexpr (std::is_same_v<T, owl::DataPropertyDomain>) {
                    data.insert(a.property);
                    expr(a.domain);
                } else {
                    data.insert(a.property);
                }
            },
            ax);

    Vocabulary v{{cls.begin(), cls.end()}, {roles.begin(), roles.end()}, {data.begin(), data.end()}, {}};
    // Booleans have exactly two values; the other datatypes are infinite, so
    // enough unmentioned values are added to meet any cardinality in o.
    lits.insert(LiteralValue::make(DataType::Boolean, "false"));
    lits.insert(LiteralValue::make(DataType::Boolean, "true"));
    for (auto t : {DataType::String, DataType::Integer, DataType::Decimal}) {
        std::uint32_t added = 0;
        for (unsigned i = 0; added < maxData; ++i) {
            std::string lex = t == DataType::String    ? fmt::format("fresh-{}", i)
                              : t == DataType::Integer ? fmt::format("{}", 900001 + i)
                                                       : fmt::format("0.{}1", 900001 + i);
            if (lits.insert(LiteralValue::make(t, lex)).second)
                ++added;
        }
    }
    v.universe.assign(lits.begin(), lits.end());
    return v;
}

// ---------------------------------------------------------------------------
// Grounding

class Grounder {
public:
    Grounder(const owl::Ontology &o, const Vocabulary &voc, std::size_t k, std::size_t maxClauses)
        : o_(o), voc_(voc), k_(k), maxClauses_(maxClauses)
    {
        true_ = s_.newVar();
        emit({pos(true_)});
        for (std::size_t i = 0; i < voc.classes.size() * k; ++i)
            s_.newVar();
        roleBase_ = true_ + 1 + static_cast<int>(voc.classes.size() * k);
        for (std::size_t i = 0; i < voc.roles.size() * k * k; ++i)
            s_.newVar();
        dataBase_ = roleBase_ + static_cast<int>(voc.roles.size() * k * k);
        for (std::size_t i = 0; i < voc.dataProps.size() * k * voc.universe.size(); ++i)
            s_.newVar();
    }

    static int pos(int v) { return 2 * v; }
    static int neg(int v) { return 2 * v + 1; }

    int classVar(const owl::Iri &c, std::size_t x) const
    {
        return true_ + 1 + static_cast<int>(index(voc_.classes, c) * k_ + x);
    }
    int roleVar(const owl::Iri &r, std::size_t x, std::size_t y) const
    {
        return roleBase_ + static_cast<int>((index(voc_.roles, r) * k_ + x) * k_ + y);
    }
    int dataVar(const owl::Iri &d, std::size_t x, std::size_t u) const
    {
        return dataBase_ + static_cast<int>((index(voc_.dataProps, d) * k_ + x) * voc_.universe.size() + u);
    }

    void groundAxioms(const owl::Iri &query)
    {
        for (const auto &ax : o_.axioms)
            std::visit([&](const auto &a) { groundAxiom(a); }, ax);
        emit({pos(classVar(query, 0))});
    }

    bool solve() { return s_.solve(); }

    FiniteModel model() const
    {
        FiniteModel m;
        m.domainSize = k_;
        for (const auto &c : voc_.classes) {
            auto &xs = m.classes[c];
            for (std::size_t x = 0; x < k_; ++x)
                if (s_.modelValue(classVar(c, x)))
                    xs.push_back(x);
        }
        for (const auto &r : voc_.roles) {
            auto &ps = m.roles[r];
            for (std::size_t x = 0; x < k_; ++x)
                for (std::size_t y = 0; y < k_; ++y)
                    if (s_.modelValue(roleVar(r, x, y)))
                        ps.emplace_back(x, y);
        }
        for (const auto &d : voc_.dataProps) {
            auto &ps = m.data[d];
            for (std::size_t x = 0; x < k_; ++x)
                for (std::size_t u = 0; u < voc_.universe.size(); ++u)
                    if (s_.modelValue(dataVar(d, x, u)))
                        ps.emplace_back(x, voc_.universe[u]);
        }
        return m;
    }

private:
    static std::size_t index(const std::vector<owl::Iri> &v, const owl::Iri &iri)
    {
        auto it = std::lower_bound(v.begin(), v.end(), iri);
        return static_cast<std::size_t>(it - v.begin());
    }

    void emit(std::vector<int> c)
    {
        if (++clauses_ > maxClauses_)
            throw BoundTooLarge(fmt::format("grounding over {} elements exceeds {} clauses", k_, maxClauses_));
        s_.addClause(std::move(c));
    }

    int fresh() { return s_.newVar(); }

    int constant(bool b) const { return b ? pos(true_) : neg(true_); }

    /// Literal that holds iff at least n of `lits` hold.
    int atLeast(std::size_t n, const std::vector<int> &lits)
    {
        if (n == 0)
            return constant(true);
        if (n > lits.size())
            return constant(false);
        int v = fresh();
        // v -> every (m-n+1)-subset contains a true literal
        forEachSubset(lits.size(), lits.size() - n + 1, [&](const std::vector<std::size_t> &s) {
            std::vector<int> c{neg(v)};
            for (auto i : s)
                c.push_back(lits[i]);
            emit(std::move(c));
        });
        // n true literals -> v
        forEachSubset(lits.size(), n, [&](const std::vector<std::size_t> &s) {
            std::vector<int> c{pos(v)};
            for (auto i : s)
                c.push_back(lits[i] ^ 1);
            emit(std::move(c));
        });
        return pos(v);
    }

    void forEachSubset(std::size_t m, std::size_t size, const std::function<void(const std::vector<std::size_t> &)> &f)
    {
        std::vector<std::size_t> idx(size);
        for (std::size_t i = 0; i < size; ++i)
            idx[i] = i;
        for (;;) {
            f(idx);
            std::size_t i = size;
            while (i > 0 && idx[i - 1] == m - size + i - 1)
                --i;
            if (i == 0)
                return;
            ++idx[i - 1];
            for (std::size_t j = i; j < size; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }

    int andOf(const std::vector<int> &lits)
    {
        int v = fresh();
        std::vector<int> back{pos(v)};
        for (int l : lits) {
            emit({neg(v), l});
            back.push_back(l ^ 1);
        }
        emit(std::move(back));
        return pos(v);
    }

    int orOf(const std::vector<int> &lits)
    {
        int v = fresh();
        std::vector<int> fwd{neg(v)};
        for (int l : lits) {
            emit({pos(v), l ^ 1});
            fwd.push_back(l);
        }
        emit(std::move(fwd));
        return pos(v);
    }

    std::vector<int> successorLits(const owl::Iri &r, std::size_t x) const
    {
        std::vector<int> out;
        for (std::size_t y = 0; y < k_; ++y)
            out.push_back(pos(roleVar(r, x, y)));
        return out;
    }

    std::vector<int> valueLits(const owl::Iri &d, std::size_t x) const
    {
        std::vector<int> out;
        for (std::size_t u = 0; u < voc_.universe.size(); ++u)
            out.push_back(pos(dataVar(d, x, u)));
        return out;
    }

    int lit(const owl::ClassExpr &e, std::size_t x)
    {
        if (const auto *n = std::get_if<owl::Named>(&e.node))
            return pos(classVar(n->iri, x));
        if (const auto *n = std::get_if<owl::ComplementOf>(&e.node))
            return lit(*n->operand, x) ^ 1;
        auto key = fmt::format("{}@{}", owl::serialize(e), x);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
        int out = std::visit(
            [&](const auto &n) -> int {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, owl::IntersectionOf> || std::is_same_v<T, owl::UnionOf>) {
                    std::vector<int> ops;
                    for (const auto &o : n.operands)
                        ops.push_back(lit(o, x));
                    return std::is_same_v<T, owl::IntersectionOf> ? andOf(ops) : orOf(ops);
                } else if constexpr (std::is_same_v<T, owl::SomeValuesFrom>) {
                    std::vector<int> ops;
                    for (std::size_t y = 0; y < k_; ++y)
                        ops.push_back(andOf({pos(roleVar(n.property, x, y)), lit(*n.filler, y)}));
                    return orOf(ops);
                } else if constexpr (std::is_same_v<T, owl::MinCardinality>) {
                    return atLeast(n.n, successorLits(n.property, x));
                } else if constexpr (std::is_same_v<T, owl::MaxCardinality>) {
                    return atLeast(std::size_t{n.n} + 1, successorLits(n.property, x)) ^ 1;
                } else if constexpr (std::is_same_v<T, owl::ExactCardinality>) {
                    auto lits = successorLits(n.property, x);
                    return andOf({atLeast(n.n, lits), atLeast(std::size_t{n.n} + 1, lits) ^ 1});
                } else if constexpr (std::is_same_v<T, owl::DataHasValue>) {
                    auto v = LiteralValue::make(n.datatype, n.lexical);
                    auto it = std::lower_bound(voc_.universe.begin(), voc_.universe.end(), v);
                    return pos(dataVar(n.property, x, static_cast<std::size_t>(it - voc_.universe.begin())));
                } else if constexpr (std::is_same_v<T, owl::DataExactCardinality>) {
                    auto lits = valueLits(n.property, x);
                    return andOf({atLeast(n.n, lits), atLeast(std::size_t{n.n} + 1, lits) ^ 1});
                } else {
                    return constant(true); // Named and ComplementOf handled above
                }
            },
            e.node);
        memo_.emplace(std::move(key), out);
        return out;
    }

    void groundAxiom(const owl::SubClassOf &a)
    {
        for (std::size_t x = 0; x < k_; ++x)
            emit({lit(a.sub, x) ^ 1, lit(a.super, x)});
    }
    void groundAxiom(const owl::EquivalentClasses &a)
    {
        for (std::size_t x = 0; x < k_; ++x) {
            int l = lit(a.first, x), r = lit(a.second, x);
            emit({l ^ 1, r});
            emit({r ^ 1, l});
        }
    }
    void groundAxiom(const owl::DisjointClasses &a)
    {
        for (std::size_t x = 0; x < k_; ++x)
            for (std::size_t i = 0; i < a.classes.size(); ++i)
                for (std::size_t j = i + 1; j < a.classes.size(); ++j)
                    emit({lit(a.classes[i], x) ^ 1, lit(a.classes[j], x) ^ 1});
    }
    void groundAxiom(const owl::ObjectPropertyDomain &a)
    {
        for (std::size_t x = 0; x < k_; ++x)
            for (std::size_t y = 0; y < k_; ++y)
                emit({neg(roleVar(a.property, x, y)), lit(a.domain, x)});
    }
    void groundAxiom(const owl::ObjectPropertyRange &a)
    {
        for (std::size_t x = 0; x < k_; ++x)
            for (std::size_t y = 0; y < k_; ++y)
                emit({neg(roleVar(a.property, x, y)), lit(a.range, y)});
    }
    void groundAxiom(const owl::DataPropertyDomain &a)
    {
        for (std::size_t x = 0; x < k_; ++x)
            for (std::size_t u = 0; u < voc_.universe.size(); ++u)
                emit({neg(dataVar(a.property, x, u)), lit(a.domain, x)});
    }
    void groundAxiom(const owl::DataPropertyRange &a)
    {
        for (std::size_t x = 0; x < k_; ++x)
            for (std::size_t u = 0; u < voc_.universe.size(); ++u)
                if (voc_.universe[u].type != a.range)
                    emit({neg(dataVar(a.property, x, u))});
    }
    template <typename Decl>
    void groundAxiom(const Decl &)
    {
    }

    const owl::Ontology &o_;
    const Vocabulary &voc_;
    std::size_t k_;
    std::size_t maxClauses_;
    std::size_t clauses_ = 0;
    Solver s_;
    int true_ = 0;
    int roleBase_ = 0;
    int dataBase_ = 0;
    std::unordered_map<std::string, int> memo_;
};

} // namespace

BoundedResult boundedModelSearch(const owl::Ontology &ontology, const owl::Iri &conceptIri, std::size_t maxDomain,
                                 const SearchBudget &budget)
{
    if (maxDomain == 0)
        throw std::invalid_argument("maxDomain must be at least 1");
    if (maxDomain > budget.maxDomain)
        throw BoundTooLarge(fmt::format("domain bound {} exceeds the budget of {}", maxDomain, budget.maxDomain));
    auto voc = vocabularyOf(ontology);
    if (!std::binary_search(voc.classes.begin(), voc.classes.end(), conceptIri))
        throw std::invalid_argument(fmt::format("'{}' does not occur in the ontology", conceptIri));
    for (std::size_t k = 1; k <= maxDomain; ++k) {
        Grounder g(ontology, voc, k, budget.maxClauses);
        g.groundAxioms(conceptIri);
        if (g.solve())
            return {g.model()};
    }
    return {};
}

// ---------------------------------------------------------------------------
// Direct evaluation

namespace {

class Evaluator {
public:
    explicit Evaluator(const FiniteModel &m) : m_(m)
    {
        for (const auto &[c, xs] : m.classes)
            classes_[c].insert(xs.begin(), xs.end());
        for (const auto &[r, ps] : m.roles)
            for (auto [x, y] : ps)
                succ_[r][x].insert(y);
        for (const auto &[d, ps] : m.data)
            for (const auto &[x, v] : ps)
                values_[d][x].insert(v);
    }

    bool holds(const owl::ClassExpr &e, std::size_t x) const
    {
        return std::visit(
            [&](const auto &n) -> bool {
                using T = std::decay_t<decltype(n)>;
                if constexpr (std::is_same_v<T, owl::Named>) {
                    auto it = classes_.find(n.iri);
                    return it != classes_.end() && it->second.count(x);
                } else if constexpr (std::is_same_v<T, owl::IntersectionOf>) {
                    return std::all_of(n.operands.begin(), n.operands.end(),
                                       [&](const auto &o) { return holds(o, x); });
                } else if constexpr (std::is_same_v<T, owl::UnionOf>) {
                    return std::any_of(n.operands.begin(), n.operands.end(),
                                       [&](const auto &o) { return holds(o, x); });
                } else if constexpr (std::is_same_v<T, owl::ComplementOf>) {
                    return !holds(*n.operand, x);
                } else if constexpr (std::is_same_v<T, owl::SomeValuesFrom>) {
                    const auto &ys = successors(n.property, x);
                    return std::any_of(ys.begin(), ys.end(), [&](std::size_t y) { return holds(*n.filler, y); });
                } else if constexpr (std::is_same_v<T, owl::MinCardinality>) {
                    return successors(n.property, x).size() >= n.n;
                } else if constexpr (std::is_same_v<T, owl::MaxCardinality>) {
                    return successors(n.property, x).size() <= n.n;
                } else if constexpr (std::is_same_v<T, owl::ExactCardinality>) {
                    return successors(n.property, x).size() == n.n;
                } else if constexpr (std::is_same_v<T, owl::DataHasValue>) {
                    return values(n.property, x).count(LiteralValue::make(n.datatype, n.lexical)) > 0;
                } else {
                    return values(n.property, x).size() == n.n;
                }
            },
            e.node);
    }

    const std::set<std::size_t> &successors(const owl::Iri &r, std::size_t x) const
    {
        if (auto it = succ_.find(r); it != succ_.end())
            if (auto jt = it->second.find(x); jt != it->second.end())
                return jt->second;
        return empty_;
    }

    const std::set<LiteralValue> &values(const owl::Iri &d, std::size_t x) const
    {
        if (auto it = values_.find(d); it != values_.end())
            if (auto jt = it->second.find(x); jt != it->second.end())
                return jt->second;
        return noValues_;
    }

    std::size_t size() const { return m_.domainSize; }

private:
    const FiniteModel &m_;
    std::map<owl::Iri, std::set<std::size_t>> classes_;
    std::map<owl::Iri, std::map<std::size_t, std::set<std::size_t>>> succ_;
    std::map<owl::Iri, std::map<std::size_t, std::set<LiteralValue>>> values_;
    std::set<std::size_t> empty_;
    std::set<LiteralValue> noValues_;
};

} // namespace

bool satisfies(const owl::Ontology &ontology, const FiniteModel &model)
{
    Evaluator ev(model);
    const std::size_t n = model.domainSize;
    for (const auto &[c, xs] : model.classes)
        for (auto x : xs)
            if (x >= n)
                return false;
    for (const auto &[r, ps] : model.roles)
        for (auto [x, y] : ps)
            if (x >= n || y >= n)
                return false;
    for (const auto &[d, ps] : model.data)
        for (const auto &[x, v] : ps)
            if (x >= n || !validLexical(v.type, v.lexical))
                return false;

    for (const auto &ax : ontology.axioms) {
        bool ok = std::visit(
            [&](const auto &a) -> bool {
                using T = std::decay_t<decltype(a)>;
                for (std::size_t x = 0; x < n; ++x) {
                    if constexpr (std::is_same_v<T, owl::SubClassOf>) {
                        if (ev.holds(a.sub, x) && !ev.holds(a.super, x))
                            return false;
                    } else if constexpr (std::is_same_v<T, owl::EquivalentClasses>) {
                        if (ev.holds(a.first, x) != ev.holds(a.second, x))
                            return false;
                    } else if constexpr (std::is_same_v<T, owl::DisjointClasses>) {
                        std::size_t count = 0;
                        for (const auto &c : a.classes)
                            count += ev.holds(c, x);
                        if (count > 1)
                            return false;
                    } else if constexpr (std::is_same_v<T, owl::ObjectPropertyDomain>) {
                        if (!ev.successors(a.property, x).empty() && !ev.holds(a.domain, x))
                            return false;
                    } else if constexpr (std::is_same_v<T, owl::ObjectPropertyRange>) {
                        for (auto y : ev.successors(a.property, x))
                            if (!ev.holds(a.range, y))
                                return false;
                    } else if constexpr (std::is_same_v<T, owl::DataPropertyDomain>) {
                        if (!ev.values(a.property, x).empty() && !ev.holds(a.domain, x))
                            return false;
                    } else if constexpr (std::is_same_v<T, owl::DataPropertyRange>) {
                        for (const auto &v : ev.values(a.property, x))
                            if (v.type != a.range)
                                return false;
                    }
                }
                return true;
            },
            ax);
        if (!ok)
            return false;
    }
    return true;
}

} // namespace restcheck::dl
