#pragma once

#include <restcheck/dsl.hpp>
#include <restcheck/ocl.hpp>
#include <restcheck/owl.hpp>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace restcheck::test {

namespace fs = std::filesystem;

inline fs::path sourceDir() { return RESTCHECK_SOURCE_DIR; }
inline fs::path modelsDir() { return sourceDir() / "models"; }
inline fs::path dataDir() { return sourceDir() / "tests" / "data"; }
inline fs::path goldenDir() { return sourceDir() / "tests" / "golden"; }

inline std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline ModelFile loadModel(const fs::path &p) { return parseModelFile(slurp(p), p.string()); }

/// Sorted list of files in `dir` with the given extension.
inline std::vector<fs::path> filesIn(const fs::path &dir, const std::string &ext)
{
    std::vector<fs::path> out;
    for (const auto &e : fs::directory_iterator(dir))
        if (e.path().extension() == ext)
            out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int below(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
    template <typename T>
    const T &pick(const std::vector<T> &v) { return v[static_cast<std::size_t>(below(static_cast<int>(v.size())))]; }

    std::mt19937_64 &engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Random ontologies inside the reasoner fragment

struct OntologyShape {
    int classes = 4;
    int roles = 2;
    int dataProperties = 2;
    std::uint32_t maxBound = 2;
    int maxAxioms = 5;
    int depth = 2;
};

class OntologyGen {
public:
    OntologyGen(Gen &g, OntologyShape shape) : g_(g), s_(shape)
    {
        for (int i = 0; i < 1 + g_.below(s_.classes); ++i)
            classes_.push_back("C" + std::to_string(i));
        for (int i = 0; i < g_.below(s_.roles + 1); ++i)
            roles_.push_back("r" + std::to_string(i));
        static const std::vector<DataType> types{DataType::Boolean, DataType::String, DataType::Integer,
                                                 DataType::Decimal};
        for (int i = 0; i < g_.below(s_.dataProperties + 1); ++i) {
            data_.push_back("d" + std::to_string(i));
            types_.push_back(g_.pick(types));
        }
    }

    owl::Ontology ontology()
    {
        owl::Ontology o;
        for (const auto &c : classes_)
            o.axioms.emplace_back(owl::DeclareClass{c});
        for (const auto &r : roles_)
            o.axioms.emplace_back(owl::DeclareObjectProperty{r});
        for (const auto &d : data_)
            o.axioms.emplace_back(owl::DeclareDataProperty{d});
        int n = 1 + g_.below(s_.maxAxioms);
        for (int i = 0; i < n; ++i)
            o.axioms.push_back(axiom());
        return o;
    }

    const std::vector<std::string> &classes() const { return classes_; }

    owl::ClassExpr expr(int depth)
    {
        int choices = depth <= 0 ? 1 : 10;
        switch (g_.below(choices)) {
        case 0:
            return owl::named(g_.pick(classes_));
        case 1:
            return owl::complementOf(expr(depth - 1));
        case 2:
            return owl::intersectionOf({expr(depth - 1), expr(depth - 1)});
        case 3:
            return owl::unionOf({expr(depth - 1), expr(depth - 1)});
        case 4:
            if (!roles_.empty())
                return owl::someValuesFrom(g_.pick(roles_), expr(depth - 1));
            break;
        case 5:
        case 6:
        case 7:
            if (!roles_.empty()) {
                auto n = static_cast<std::uint32_t>(g_.below(static_cast<int>(s_.maxBound) + 1));
                auto r = g_.pick(roles_);
                int kind = g_.below(3);
                return kind == 0 ? owl::minCardinality(n, r)
                                 : kind == 1 ? owl::maxCardinality(n, r) : owl::exactCardinality(n, r);
            }
            break;
        case 8:
            if (!data_.empty()) {
                auto i = static_cast<std::size_t>(g_.below(static_cast<int>(data_.size())));
                auto [lex, type] = literal(g_.coin(0.85) ? types_[i] : DataType::String);
                return owl::dataHasValue(data_[i], lex, type);
            }
            break;
        case 9:
            if (!data_.empty())
                return owl::dataExactCardinality(
                    static_cast<std::uint32_t>(g_.below(static_cast<int>(s_.maxBound) + 1)), g_.pick(data_));
            break;
        }
        return owl::named(g_.pick(classes_));
    }

private:
    std::pair<std::string, DataType> literal(DataType t)
    {
        switch (t) {
        case DataType::Boolean:
            return {g_.coin() ? "true" : "false", t};
        case DataType::Integer:
            return {std::to_string(g_.below(3)), t};
        case DataType::Decimal:
            return {g_.pick(std::vector<std::string>{"0.5", "1.5", "2.0"}), t};
        default:
            return {g_.pick(std::vector<std::string>{"a", "b", "c"}), t};
        }
    }

    owl::Axiom axiom()
    {
        for (;;) {
            switch (g_.below(8)) {
            case 0:
            case 1:
            case 2:
                return owl::SubClassOf{expr(s_.depth), expr(s_.depth)};
            case 3:
                return owl::EquivalentClasses{owl::named(g_.pick(classes_)), expr(s_.depth)};
            case 4:
                if (classes_.size() >= 2) {
                    auto a = g_.pick(classes_), b = g_.pick(classes_);
                    if (a != b)
                        return owl::DisjointClasses{{owl::named(a), owl::named(b)}};
                }
                break;
            case 5:
                if (!roles_.empty())
                    return g_.coin() ? owl::Axiom(owl::ObjectPropertyDomain{g_.pick(roles_), expr(1)})
                                     : owl::Axiom(owl::ObjectPropertyRange{g_.pick(roles_), expr(1)});
                break;
            case 6:
                if (!data_.empty())
                    return owl::DataPropertyDomain{g_.pick(data_), expr(1)};
                break;
            case 7:
                if (!data_.empty()) {
                    auto i = static_cast<std::size_t>(g_.below(static_cast<int>(data_.size())));
                    return owl::DataPropertyRange{data_[i], types_[i]};
                }
                break;
            }
        }
    }

    Gen &g_;
    OntologyShape s_;
    std::vector<std::string> classes_, roles_, data_;
    std::vector<DataType> types_;
};

// ---------------------------------------------------------------------------
// Random µOCL expressions (syntax only; paths need not resolve)

inline OclExpr randomOcl(Gen &g, int depth)
{
    static const std::vector<std::string> names{"payment", "room", "items", "owner", "waiting", "title"};
    auto path = [&] {
        NavPath p;
        int n = 1 + g.below(3);
        for (int i = 0; i < n; ++i)
            p.segments.push_back(g.pick(names));
        return p;
    };
    int choice = g.below(depth <= 0 ? 2 : 4);
    if (choice >= 2) {
        std::vector<OclExpr> ops;
        int n = 2 + g.below(2);
        for (int i = 0; i < n; ++i)
            ops.push_back(randomOcl(g, depth - 1));
        return choice == 2 ? OclExpr::andOf(std::move(ops)) : OclExpr::orOf(std::move(ops));
    }
    if (choice == 0) {
        static const std::vector<CmpOp> ops{CmpOp::Eq, CmpOp::Ge, CmpOp::Le, CmpOp::Gt, CmpOp::Lt};
        return OclExpr::sizeCmp(path(), g.pick(ops), static_cast<std::uint32_t>(g.below(5)));
    }
    Literal lit;
    switch (g.below(5)) {
    case 0:
        lit = {DataType::Boolean, g.coin() ? "True" : "False"};
        break;
    case 1:
        lit = {DataType::Integer, std::to_string(g.below(200) - 100)};
        break;
    case 2:
        lit = {DataType::Decimal, g.pick(std::vector<std::string>{"0.5", "12.25", "-3.75"})};
        break;
    default:
        lit = {DataType::String, g.pick(std::vector<std::string>{"", "open", "it's", "a\\b", "two words"})};
        break;
    }
    return OclExpr::attrEq(path(), std::move(lit));
}

// ---------------------------------------------------------------------------
// Random DSL models (names resolve; RESTfulness is not enforced)

inline ModelFile randomModel(Gen &g)
{
    ModelFile m;
    auto &rm = m.resources;
    rm.name = "Gen" + std::to_string(g.below(1000));
    int n = 1 + g.below(5);
    static const std::vector<DataType> types{DataType::String, DataType::Boolean, DataType::Integer,
                                             DataType::Decimal};
    for (int i = 0; i < n; ++i) {
        ResourceDef r;
        r.name = (g.coin() ? "Res" : "res") + std::to_string(i);
        r.kind = g.coin(0.3) ? ResourceKind::Collection : ResourceKind::Normal;
        r.isRoot = i == 0;
        if (i > 0 && g.coin(0.25))
            r.parent = rm.resources[static_cast<std::size_t>(g.below(i))].name;
        int attrs = g.below(3);
        for (int a = 0; a < attrs; ++a)
            r.attributes.push_back({"a" + std::to_string(i) + "_" + std::to_string(a), g.pick(types), {}});
        rm.resources.push_back(std::move(r));
    }
    int assocs = g.below(5);
    for (int i = 0; i < assocs; ++i) {
        Association a;
        a.label = "l" + std::to_string(i);
        a.source = g.pick(rm.resources).name;
        a.target = g.pick(rm.resources).name;
        a.min = static_cast<std::uint32_t>(g.below(3));
        if (g.coin(0.7))
            a.max = a.min + static_cast<std::uint32_t>(g.below(3));
        rm.associations.push_back(std::move(a));
    }
    if (!g.coin(0.7))
        return m;

    BehavioralModel bm;
    bm.name = "Life" + std::to_string(g.below(100));
    bm.forResource = g.pick(rm.resources).name;
    bm.states.push_back({"init", StateKind::Initial, std::nullopt, 0, std::nullopt, {}});
    int states = 1 + g.below(5);
    for (int i = 0; i < states; ++i) {
        State s;
        s.name = "s" + std::to_string(i);
        if (i > 0 && g.coin(0.3)) {
            auto &parent = bm.states[static_cast<std::size_t>(1 + g.below(i))];
            if (parent.kind == StateKind::Simple || parent.kind == StateKind::Composite) {
                parent.kind = StateKind::Composite;
                s.parent = parent.name;
                s.region = static_cast<std::uint32_t>(g.below(2));
            }
        }
        if (g.coin(0.6))
            s.invariant = randomOcl(g, 2);
        bm.states.push_back(std::move(s));
    }
    if (g.coin())
        bm.states.push_back({"done", StateKind::Final, std::nullopt, 0, std::nullopt, {}});
    int transitions = g.below(5);
    for (int i = 0; i < transitions; ++i) {
        Transition t;
        t.source = g.pick(bm.states).name;
        t.target = g.pick(bm.states).name;
        t.trigger = static_cast<Method>(g.below(3));
        if (g.coin())
            t.targetResource = g.pick(rm.resources).name;
        if (g.coin(0.3))
            t.guardText = "guard " + std::to_string(i);
        if (g.coin(0.3))
            t.postText = "post " + std::to_string(i);
        bm.transitions.push_back(std::move(t));
    }
    m.behavior = std::move(bm);
    return m;
}

} // namespace restcheck::test
