#pragma once

#include "support.hpp"

#include <restcheck/bounded_search.hpp>
#include <restcheck/tableau.hpp>

#include <string>
#include <vector>

namespace restcheck::test {

struct Disagreement {
    std::uint64_t seed;
    std::string conceptIri;
    bool tableauSat;
    std::string ontology;
};

struct DifferentialRun {
    std::size_t cases = 0;
    std::size_t sat = 0;
    std::vector<Disagreement> disagreements;
};

/// One query per seed: a random class of a random ontology, decided by the
/// tableau and by the bounded oracle.
inline DifferentialRun runDifferential(std::uint64_t firstSeed, std::size_t count, std::size_t bound,
                                       const OntologyShape &shape = {})
{
    DifferentialRun run;
    for (std::uint64_t seed = firstSeed; seed < firstSeed + count; ++seed) {
        Gen g(seed);
        OntologyGen og(g, shape);
        auto o = og.ontology();
        auto query = g.pick(og.classes());
        auto tbox = dl::compileTBox(o);
        bool tab = dl::isSatisfiable(tbox, query).status == dl::SatStatus::Sat;
        auto res = dl::boundedModelSearch(o, query, bound);
        if (res.found() && !dl::satisfies(o, *res.model))
            run.disagreements.push_back({seed, query, tab, "oracle model fails evaluation\n" + owl::serialize(o)});
        else if (tab != res.found())
            run.disagreements.push_back({seed, query, tab, owl::serialize(o)});
        ++run.cases;
        run.sat += tab;
    }
    return run;
}

} // namespace restcheck::test
