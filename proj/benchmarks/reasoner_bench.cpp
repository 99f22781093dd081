#include "support.hpp"

#include <benchmark/benchmark.h>
#include <restcheck/bounded_search.hpp>
#include <restcheck/tableau.hpp>
#include <restcheck/translator.hpp>

using namespace restcheck;
using namespace restcheck::test;

namespace {

const std::string &hotelText()
{
    static const std::string text = slurp(modelsDir() / "hotel_booking.model");
    return text;
}

owl::Ontology hotelOntology()
{
    auto m = parseModelFile(hotelText());
    return translateModels(m.resources, &*m.behavior).ontology;
}

void BM_ParseAndTranslate(benchmark::State &state)
{
    for (auto _ : state) {
        auto m = parseModelFile(hotelText());
        auto t = translateModels(m.resources, &*m.behavior);
        benchmark::DoNotOptimize(t.ontology.axioms.data());
    }
}
BENCHMARK(BM_ParseAndTranslate);

void BM_ClassifyHotel(benchmark::State &state)
{
    auto tbox = dl::compileTBox(hotelOntology());
    for (auto _ : state)
        benchmark::DoNotOptimize(dl::classifyAll(tbox));
}
BENCHMARK(BM_ClassifyHotel)->Unit(benchmark::kMicrosecond);

void BM_OracleHotelState(benchmark::State &state)
{
    auto o = hotelOntology();
    for (auto _ : state)
        benchmark::DoNotOptimize(
            dl::boundedModelSearch(o, "State_processingPayment", static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_OracleHotelState)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

// Random fragment ontologies, as in the differential suite; range is the seed block.
void BM_TableauRandom(benchmark::State &state)
{
    std::vector<std::pair<dl::TBox, std::string>> cases;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Gen g(static_cast<std::uint64_t>(state.range(0)) + seed);
        OntologyGen og(g, {4, 2, 2, 2, 8, 3});
        auto o = og.ontology();
        auto q = g.pick(og.classes());
        cases.emplace_back(dl::compileTBox(o), q);
    }
    for (auto _ : state)
        for (const auto &[tbox, q] : cases)
            benchmark::DoNotOptimize(dl::isSatisfiable(tbox, q));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cases.size()));
}
BENCHMARK(BM_TableauRandom)->Arg(0)->Arg(10'000)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
