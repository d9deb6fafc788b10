#include <benchmark/benchmark.h>

#include <vector>

#include "lazydigest/hash.hpp"

namespace {

using namespace lazydigest;

void BM_HashShortMessage(benchmark::State& state, HashSpec spec) {
    std::vector<std::uint8_t> message(33, 0x5a);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hash(spec, message));
    }
    state.SetItemsProcessed(state.iterations());
}

void BM_ToyIterate(benchmark::State& state) {
    HashSpec toy = HashSpec::toy(static_cast<int>(state.range(0)));
    std::uint32_t s = 1;
    for (auto _ : state) {
        s = toy_iterate(toy, s);
        benchmark::DoNotOptimize(s);
    }
    state.SetItemsProcessed(state.iterations());
}

BENCHMARK_CAPTURE(BM_HashShortMessage, sha256, HashSpec::sha256());
BENCHMARK_CAPTURE(BM_HashShortMessage, sha512, HashSpec::sha512());
BENCHMARK_CAPTURE(BM_HashShortMessage, sha3_256, HashSpec::sha3_256());
BENCHMARK_CAPTURE(BM_HashShortMessage, blake2b, HashSpec::blake2b());
BENCHMARK(BM_ToyIterate)->Arg(8)->Arg(16)->Arg(24);

}  // namespace
