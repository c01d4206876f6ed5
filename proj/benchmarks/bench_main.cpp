#include <benchmark/benchmark.h>

#include <random>

#include "knotsig/braid.hpp"
#include "knotsig/covers.hpp"
#include "knotsig/families.hpp"
#include "knotsig/obstruct.hpp"

using namespace knotsig;

namespace {

SeifertMatrix randomMatrix(unsigned seed, int n) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(-3, 3);
    SeifertMatrix s;
    s.entries.assign(n, std::vector<Int>(n));
    for (auto& row : s.entries)
        for (auto& v : row) v = dist(rng);
    return s;
}

void BM_Alexander(benchmark::State& state) {
    SeifertMatrix s = randomMatrix(1, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(alexander(s));
}
BENCHMARK(BM_Alexander)->Arg(4)->Arg(6)->Arg(8);

void BM_IsolateCircleRoots(benchmark::State& state) {
    LaurentPoly delta = kkmAlexander(3, state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(isolateCircleRoots(delta));
}
BENCHMARK(BM_IsolateCircleRoots)->Arg(2)->Arg(4)->Arg(6);

void BM_InertiaAtRationalPoint(benchmark::State& state) {
    SeifertMatrix s = randomMatrix(2, static_cast<int>(state.range(0)));
    RationalCirclePoint pt{Rat(3, 5), Rat(4, 5)};
    for (auto _ : state) benchmark::DoNotOptimize(inertiaAtRationalPoint(s, pt));
}
BENCHMARK(BM_InertiaAtRationalPoint)->Arg(4)->Arg(8);

void BM_SignatureProfile(benchmark::State& state) {
    SeifertMatrix s = braidSeifertMatrix(parseBraid("[1,2,1,2,1,2,1,2,1,2]", 3));
    for (auto _ : state) benchmark::DoNotOptimize(signatureProfile(s));
}
BENCHMARK(BM_SignatureProfile);

void BM_BranchedCover(benchmark::State& state) {
    LaurentPoly delta = kkmAlexander(2, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(branchedCoverHomology(delta, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BranchedCover)->Arg(5)->Arg(8)->Arg(12);

void BM_N3Genus1(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(genus1NBound(Int(state.range(0))));
}
BENCHMARK(BM_N3Genus1)->Arg(2)->Arg(20)->Arg(100);

void BM_SignatureAtJump(benchmark::State& state) {
    SeifertMatrix t25 = braidSeifertMatrix(parseBraid("[1,1,1,1,1]", 2));
    for (auto _ : state) benchmark::DoNotOptimize(signatureAtRootOfUnity(t25, 10, 1));
}
BENCHMARK(BM_SignatureAtJump);

}  // namespace

BENCHMARK_MAIN();
