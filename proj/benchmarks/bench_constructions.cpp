#include <benchmark/benchmark.h>

#include <vector>

#include "lazydigest/constructions.hpp"

namespace {

using namespace lazydigest;

std::vector<std::uint8_t> seed_of(std::uint8_t byte) {
    return std::vector<std::uint8_t>(32, byte);
}

void BM_LazyGet(benchmark::State& state) {
    LazySpec spec{seed_of(0x01)};
    std::uint64_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(lazy_get(spec, i++));
    }
    state.SetItemsProcessed(state.iterations());
}

void BM_HierarchicalGet(benchmark::State& state) {
    HierarchicalSpec spec{seed_of(0x02)};
    std::uint64_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hierarchical_get(spec, i++));
    }
    state.SetItemsProcessed(state.iterations());
}

void BM_RekeyGet(benchmark::State& state) {
    RekeySpec spec{seed_of(0x03), HashSpec::sha256(), 1u << 16};
    std::uint64_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(rekey_get(spec, i++));
    }
    state.SetItemsProcessed(state.iterations());
}

void BM_SpongeGet(benchmark::State& state) {
    SpongeSpec spec{seed_of(0x04)};
    std::uint64_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sponge_get(spec, i++));
    }
    state.SetItemsProcessed(state.iterations());
}

void BM_XorMultiGet(benchmark::State& state) {
    XorMultiSpec spec{seed_of(0x05), XorMultiSpec::default_hashes()};
    std::uint64_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(xor_multi_get(spec, i++));
    }
    state.SetItemsProcessed(state.iterations());
}

void BM_CompositeGet(benchmark::State& state) {
    CompositeSpec spec{
        XorMultiSpec{seed_of(0x06), XorMultiSpec::default_hashes()},
        RekeySpec{seed_of(0x07)},
        HierarchicalSpec{seed_of(0x08)},
        SpongeSpec{seed_of(0x09)},
    };
    std::uint64_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(composite_get(spec, i++));
    }
    state.SetItemsProcessed(state.iterations());
}

BENCHMARK(BM_LazyGet);
BENCHMARK(BM_HierarchicalGet);
BENCHMARK(BM_RekeyGet);
BENCHMARK(BM_SpongeGet);
BENCHMARK(BM_XorMultiGet);
BENCHMARK(BM_CompositeGet);

}  // namespace

BENCHMARK_MAIN();
