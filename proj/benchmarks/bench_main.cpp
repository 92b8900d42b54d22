#include <benchmark/benchmark.h>

#include "likejudge/aggregate.hpp"
#include "likejudge/likelihood.hpp"
#include "likejudge/properties.hpp"

using namespace likejudge;

namespace {

Frame hotel_frame() {
    AtomTable atoms({"s", "t", "x", "e", "a", "h"});
    std::vector<Formula> agenda = {
        parse_formula("s | t", atoms), parse_formula("h", atoms),
        parse_formula("x", atoms), parse_formula("a", atoms),
        parse_formula("e", atoms)};
    std::vector<Formula> gamma = {
        parse_formula("(!e | x) <-> a", atoms),
        parse_formula("((s | t) & a) <-> h", atoms)};
    return Frame(atoms, agenda, gamma, {}, 6);
}

Profile hotel_profile(const Frame& frame, JudgmentStyle style) {
    GeneratorConfig cfg;
    cfg.seed = 7;
    cfg.style = style;
    return generate_profile(frame, cfg, 0);
}

void BM_FrameConstruction(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(hotel_frame());
    }
}
BENCHMARK(BM_FrameConstruction);

void BM_RationalSets(benchmark::State& state) {
    Frame frame = hotel_frame();
    for (auto _ : state) {
        benchmark::DoNotOptimize(rational_sets(frame));
    }
}
BENCHMARK(BM_RationalSets);

void BM_PrimeImplicants(benchmark::State& state) {
    Frame frame = hotel_frame();
    for (auto _ : state) {
        benchmark::DoNotOptimize(prime_implicants(frame));
    }
}
BENCHMARK(BM_PrimeImplicants);

void BM_RationalityCheck(benchmark::State& state) {
    Frame frame = hotel_frame();
    Profile profile = hotel_profile(frame, JudgmentStyle::Equalities);
    for (auto _ : state) {
        benchmark::DoNotOptimize(check_rationality(profile.sources[0], frame));
    }
}
BENCHMARK(BM_RationalityCheck);

void BM_MedianRule(benchmark::State& state) {
    Frame frame = hotel_frame();
    Profile profile = hotel_profile(frame, JudgmentStyle::Equalities);
    for (auto _ : state) {
        benchmark::DoNotOptimize(median_likelihood(frame, profile));
    }
}
BENCHMARK(BM_MedianRule);

void BM_DistanceRule(benchmark::State& state) {
    Frame frame = hotel_frame();
    Profile profile = hotel_profile(frame, JudgmentStyle::Equalities);
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            distance_rule(frame, profile, Metric::Euclidean, Mode::Sum));
    }
}
BENCHMARK(BM_DistanceRule);

void BM_SequentialAverage(benchmark::State& state) {
    Frame frame = hotel_frame();
    Profile profile = hotel_profile(frame, JudgmentStyle::Equalities);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sequential_average(frame, profile));
    }
}
BENCHMARK(BM_SequentialAverage);

void BM_ProfileGeneration(benchmark::State& state) {
    Frame frame = hotel_frame();
    GeneratorConfig cfg;
    cfg.style = JudgmentStyle::Equalities;
    std::uint64_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(generate_profile(frame, cfg, i++));
    }
}
BENCHMARK(BM_ProfileGeneration);

}  // namespace

BENCHMARK_MAIN();
