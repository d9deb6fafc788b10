// Acceptance suite: one test and one printed pass/fail line per criterion.
// Every tolerance is fixed here, and every randomized check runs from a fixed
// RNG seed so a green run stays green.

#include <gtest/gtest.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <future>
#include <random>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "generators.hpp"
#include "lazydigest/lazydigest.hpp"
#include "subprocess.hpp"

namespace {

using namespace lazydigest;
using testsupport::CommandResult;
using testsupport::construction_kinds;
using testsupport::random_index;
using testsupport::random_leaf_of_kind;
using testsupport::random_tree;
using testsupport::run_command;
using testsupport::shell_quote;

const std::string kCli = LAZYDIGEST_CLI_PATH;

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct CriterionReporter {
    int number;
    const char* name;
    ~CriterionReporter() {
        std::printf("criterion %2d (%s): %s\n", number, name,
                    ::testing::Test::HasFailure() ? "FAIL" : "PASS");
        std::fflush(stdout);
    }
};

std::vector<std::uint8_t> seed_of(std::uint8_t byte) {
    return std::vector<std::uint8_t>(32, byte);
}

// --- criterion 1 -----------------------------------------------------------

TEST(Acceptance, C01_DeterminismInProcessAndAcrossProcesses) {
    CriterionReporter reporter{1, "determinism: repeated, reordered, fresh-process"};
    Stopwatch timer;
    std::mt19937_64 rng(0xC1);

    constexpr int kSpecsPerKind = 25;
    constexpr int kIndicesPerSpec = 400;  // 25 * 400 = 10^4 pairs per construction

    for (const std::string& kind : construction_kinds()) {
        for (int s = 0; s < kSpecsPerKind; ++s) {
            ConstructionDescriptor descriptor = random_leaf_of_kind(rng, kind);
            std::string text = serialize_descriptor(descriptor);

            std::vector<std::uint64_t> indices(kIndicesPerSpec);
            for (auto& index : indices) {
                index = random_index(rng);
            }

            StreamPtr stream = compile_descriptor(descriptor);
            std::vector<std::uint8_t> first = sample(*stream, indices);

            // Second in-process evaluation: fresh compile, shuffled order.
            StreamPtr again = compile_descriptor(parse_descriptor(text));
            std::vector<std::size_t> order(indices.size());
            for (std::size_t i = 0; i < order.size(); ++i) {
                order[i] = i;
            }
            std::shuffle(order.begin(), order.end(), rng);
            for (std::size_t at : order) {
                ASSERT_EQ(again->get(indices[at]), first[at]) << text;
            }

            // Fresh process through the CLI.
            std::string list;
            for (std::size_t i = 0; i < indices.size(); ++i) {
                if (i > 0) list += ',';
                list += std::to_string(indices[i]);
            }
            CommandResult fresh =
                run_command(kCli + " sample -d " + shell_quote(text) + " -i " + list);
            ASSERT_EQ(fresh.exit_code, 0) << text;
            ASSERT_EQ(fresh.output, to_hex(first) + "\n") << text;
        }
    }
    EXPECT_LT(timer.seconds(), 30.0);
}

// --- criterion 2 -----------------------------------------------------------

TEST(Acceptance, C02_BirthdayBoundOnToyFamilies) {
    CriterionReporter reporter{2, "birthday bound: mean steps-to-repeat within +-35%"};
    Stopwatch timer;

    const double expected_values[] = {20.0530, 40.1061, 80.2121};
    const int bit_sizes[] = {8, 10, 12};
    for (int i = 0; i < 3; ++i) {
        BirthdayResult result =
            run_birthday_experiment(bit_sizes[i], /*tweaks=*/8, /*starts_per_tweak=*/200,
                                    /*rng_seed=*/0xC2 + i);
        EXPECT_NEAR(result.expected, expected_values[i], 1e-4);
        EXPECT_GE(result.ratio(), 0.65) << "bits " << bit_sizes[i];
        EXPECT_LE(result.ratio(), 1.35) << "bits " << bit_sizes[i];
        std::printf("  bits=%d walks=%llu mean=%.2f expected=%.2f ratio=%.3f\n", bit_sizes[i],
                    static_cast<unsigned long long>(result.walks), result.mean_steps_to_repeat,
                    result.expected, result.ratio());
    }
    EXPECT_LT(timer.seconds(), 60.0);
}

// --- criterion 3 -----------------------------------------------------------

TEST(Acceptance, C03_BrentAgreesWithExhaustiveOracle) {
    CriterionReporter reporter{3, "cycle detector equals visited-set oracle"};

    for (int bits : {4, 6, 8}) {
        HashSpec toy = HashSpec::toy(bits);
        for (std::uint32_t start = 0; start < (std::uint32_t{1} << bits); ++start) {
            // Exhaustive oracle: plain walk with a visited map.
            std::unordered_map<std::uint32_t, std::uint64_t> seen;
            std::uint32_t state = start;
            std::uint64_t steps = 0;
            while (!seen.contains(state)) {
                seen.emplace(state, steps);
                state = toy_iterate(toy, state);
                ++steps;
            }
            std::uint64_t tail = seen[state];
            std::uint64_t cycle = steps - tail;

            CycleReport report = detect_cycle(toy, start);
            ASSERT_EQ(report.tail_length, tail) << "bits " << bits << " start " << start;
            ASSERT_EQ(report.cycle_length, cycle) << "bits " << bits << " start " << start;
        }
    }
}

// --- criterion 4 -----------------------------------------------------------

TEST(Acceptance, C04_StatisticalBatteryAtOneMillionBytes) {
    CriterionReporter reporter{4, "battery: 6 constructions pass, degenerate streams fail"};
    Stopwatch timer;
    constexpr std::uint64_t kN = 1000000;

    std::vector<std::pair<std::string, StreamPtr>> constructions;
    constructions.emplace_back("lazy", make_stream(LazySpec{seed_of(0x00)}));
    constructions.emplace_back(
        "hierarchical",
        make_stream(HierarchicalSpec{seed_of(0x11), HashSpec::sha256(), 1u << 20, 1u << 10}));
    constructions.emplace_back(
        "rekey", make_stream(RekeySpec{seed_of(0x22), HashSpec::sha256(), 1u << 16}));
    constructions.emplace_back("sponge", make_stream(SpongeSpec{seed_of(0x33)}));
    constructions.emplace_back(
        "xor-multi", make_stream(XorMultiSpec{seed_of(0x44), XorMultiSpec::default_hashes()}));
    constructions.emplace_back(
        "composite",
        make_stream(CompositeSpec{
            XorMultiSpec{seed_of(0x55), XorMultiSpec::default_hashes()},
            RekeySpec{seed_of(0x66), HashSpec::sha256(), 1u << 16},
            HierarchicalSpec{seed_of(0x77), HashSpec::sha256(), 1u << 20, 1u << 10},
            SpongeSpec{seed_of(0x88)},
        }));

    std::vector<std::future<std::vector<StatReport>>> futures;
    for (auto& [name, stream] : constructions) {
        futures.push_back(std::async(std::launch::async,
                                     [s = stream] { return run_battery(*s, kN); }));
    }
    for (std::size_t i = 0; i < constructions.size(); ++i) {
        std::vector<StatReport> reports = futures[i].get();
        for (const StatReport& report : reports) {
            EXPECT_TRUE(report.pass) << constructions[i].first << ": " << report.line();
            std::printf("  %-12s %s\n", constructions[i].first.c_str(), report.line().c_str());
        }
    }

    // Battery sanity: the degenerate streams must be caught.
    auto fails = [](const std::vector<StatReport>& reports) {
        int n = 0;
        for (const StatReport& r : reports) {
            n += r.pass ? 0 : 1;
        }
        return n;
    };
    EXPECT_GE(fails(run_battery(*constant_stream(0x00), kN)), 1);
    EXPECT_GE(fails(run_battery(*counter_stream(), kN)), 1);

    EXPECT_LT(timer.seconds(), 120.0);
}

// --- criterion 5 -----------------------------------------------------------

TEST(Acceptance, C05_AlgebraIdentitiesExhaustive) {
    CriterionReporter reporter{5, "algebra identities over 1024 indices x 100 specs"};
    std::mt19937_64 rng(0xC5);
    constexpr std::uint64_t kIndices = 1024;

    for (int round = 0; round < 100; ++round) {
        StreamPtr a = make_stream(LazySpec{
            parse_hex(testsupport::random_seed_hex(rng)),
            round % 3 == 0 ? HashSpec::toy(16) : HashSpec::sha256(),
        });
        StreamPtr b = make_stream(RekeySpec{parse_hex(testsupport::random_seed_hex(rng)),
                                            HashSpec::sha256(), 1 + rng() % 500});

        std::uint64_t s1 = rng() % 100000, p1 = 1 + rng() % 64;
        std::uint64_t s2 = rng() % 1000, p2 = 1 + rng() % 64;
        StreamPtr nested = slice_stream(slice_stream(a, s1, p1), s2, p2);
        StreamPtr flat = slice_stream(a, s1 + s2 * p1, p1 * p2);

        ByteTransform f = parse_transform_name("add:" + std::to_string(rng() % 256));
        ByteTransform g = parse_transform_name(rng() % 2 == 0 ? "not" : "add:97");
        StreamPtr tf_nested = transform_stream(transform_stream(a, f), g);
        StreamPtr tf_fused =
            transform_stream(a, [&](std::uint8_t v) { return g(f(v)); });

        StreamPtr self_zero = xor_streams(b, b);
        StreamPtr ab = xor_streams(a, b);
        StreamPtr ba = xor_streams(b, a);

        for (std::uint64_t i = 0; i < kIndices; ++i) {
            ASSERT_EQ(self_zero->get(i), 0);
            ASSERT_EQ(ab->get(i), ba->get(i));
            ASSERT_EQ(nested->get(i), flat->get(i));
            ASSERT_EQ(tf_nested->get(i), tf_fused->get(i));
        }

        // Truncate-prefix coherence and fold-sum agreement.
        std::uint64_t n1 = 1 + rng() % 512;
        std::uint64_t n2 = n1 + rng() % 512;
        Digest shorter = truncate(*ab, n1);
        Digest longer = truncate(*ab, n2);
        for (std::uint64_t i = 0; i < n1; ++i) {
            ASSERT_EQ(shorter[i], longer[i]);
        }
        std::uint64_t summed = 0;
        for (std::uint8_t byte : longer.bytes()) {
            summed += byte;
        }
        auto plus = [](std::uint64_t acc, std::uint8_t byte) { return acc + byte; };
        ASSERT_EQ(fold(*ab, plus, std::uint64_t{0}, n2), summed);
    }
}

// --- criterion 6 -----------------------------------------------------------

TEST(Acceptance, C06_HashWorkAccounting) {
    CriterionReporter reporter{6, "hash calls per index: 1 lazy, 3 hierarchical, <=2 rekey, m xor"};
    std::mt19937_64 rng(0xC6);

    LazySpec lazy{seed_of(0x01)};
    HierarchicalSpec hier{seed_of(0x02), HashSpec::sha256(), 1u << 12, 1u << 4};
    RekeySpec rekey{seed_of(0x03), HashSpec::sha256(), 1u << 10};

    for (int i = 0; i < 500; ++i) {
        std::uint64_t index = rng();

        reset_hash_invocations();
        lazy_get(lazy, index);
        ASSERT_EQ(hash_invocations(), 1u);

        reset_hash_invocations();
        hierarchical_get(hier, index);
        ASSERT_EQ(hash_invocations(), 3u);

        reset_hash_invocations();
        rekey_get(rekey, index);
        std::uint64_t rekey_calls = hash_invocations();
        ASSERT_LE(rekey_calls, 2u);
        ASSERT_EQ(rekey_calls, index / rekey.rekey_interval == 0 ? 1u : 2u);
    }

    auto pool = XorMultiSpec::default_hashes();
    for (std::size_t m = 2; m <= pool.size(); ++m) {
        XorMultiSpec spec{seed_of(0x04), {pool.begin(), pool.begin() + m}};
        for (int i = 0; i < 100; ++i) {
            reset_hash_invocations();
            xor_multi_get(spec, rng());
            ASSERT_EQ(hash_invocations(), m);
        }
    }
}

// --- criterion 7 -----------------------------------------------------------

TEST(Acceptance, C07_OracleImpossibilities) {
    CriterionReporter reporter{7, "oracle: exact memory growth, unserializable, irreproducible"};
    std::mt19937_64 rng(0xC7);

    // Memory usage equals the number of distinct indices ever queried.
    OracleDigest counted("", [] { return Digest(std::vector<std::uint8_t>{0xaa}); });
    std::set<std::uint64_t> distinct;
    for (int i = 0; i < 8000; ++i) {
        std::uint64_t index = rng() % 5000;
        counted.get(index);
        distinct.insert(index);
        ASSERT_EQ(counted.memory_usage(), distinct.size());
    }

    // Serialization always fails, fresh or used.
    for (int i = 0; i < 100; ++i) {
        OracleDigest oracle;
        if (i % 2 == 1) {
            oracle.get(i);
        }
        ASSERT_THROW(oracle.serialize(), NotSerializableError);
    }

    // Two independent instances agree at the 1/256 chance rate.
    OracleDigest a;
    OracleDigest b;
    const int n = 100000;
    int matches = 0;
    for (int i = 0; i < n; ++i) {
        matches += a.get(i) == b.get(i) ? 1 : 0;
    }
    double freq = static_cast<double>(matches) / n;
    std::printf("  oracle agreement frequency: %.5f (expect ~%.5f)\n", freq, 1.0 / 256.0);
    EXPECT_NEAR(freq, 1.0 / 256.0, 0.01);
}

// --- criterion 8 -----------------------------------------------------------

TEST(Acceptance, C08_ProofOfWorkAtDifficultyEight) {
    CriterionReporter reporter{8, "pow: mean attempts in [128, 512], nonces re-verify"};
    Stopwatch timer;

    StreamPtr headers = test_stream("pow-acceptance");
    double total_attempts = 0.0;
    for (int t = 0; t < 100; ++t) {
        std::vector<std::uint8_t> header = take(*headers, 16 * t, 16);
        PowResult result = find_pow(header, 8, 1u << 16);
        ASSERT_TRUE(result.found()) << "header " << t;
        total_attempts += static_cast<double>(result.attempts);

        // Independent re-computation of the winning candidate.
        std::vector<std::uint8_t> msg = hash(HashSpec::sha256(), header).bytes();
        std::uint32_t nonce = *result.nonce;
        msg.push_back(static_cast<std::uint8_t>(nonce >> 24));
        msg.push_back(static_cast<std::uint8_t>(nonce >> 16));
        msg.push_back(static_cast<std::uint8_t>(nonce >> 8));
        msg.push_back(static_cast<std::uint8_t>(nonce));
        Digest candidate = hash(HashSpec::sha256(), msg);
        ASSERT_EQ(candidate, *result.candidate);
        ASSERT_GE(leading_zero_bits(candidate), 8);
        ASSERT_EQ(result.attempts, static_cast<std::uint64_t>(nonce) + 1);
    }

    double mean = total_attempts / 100.0;
    std::printf("  mean attempts: %.2f (geometric expectation 256)\n", mean);
    EXPECT_GE(mean, 128.0);
    EXPECT_LE(mean, 512.0);
    EXPECT_LT(timer.seconds(), 10.0);
}

// --- criterion 9 -----------------------------------------------------------

TEST(Acceptance, C09_KdfAccessCountAndSaltSensitivity) {
    CriterionReporter reporter{9, "kdf: access count == memory cost, salt bits flip output"};

    std::vector<std::uint8_t> password = {'p', 'a', 's', 's'};
    std::vector<std::uint8_t> salt = {'1', '6', '-', 'b', 'y', 't', 'e', '-',
                                      's', 'a', 'l', 't', '-', 'v', 'a', 'l'};

    for (std::uint64_t cost : {1ull, 2ull, 7ull, 64ull, 1000ull}) {
        EXPECT_EQ(kdf_access_indices(password, salt, cost).size(), cost);
        reset_hash_invocations();
        memory_hard_kdf(password, salt, cost);
        EXPECT_EQ(hash_invocations(), cost + 2);  // seed + cost reads + output
    }

    // 100 single-bit salt flips: every derived key distinct, none collide.
    std::set<std::string> keys;
    keys.insert(memory_hard_kdf(password, salt, 32).hex());
    for (int bit = 0; bit < 100; ++bit) {
        std::vector<std::uint8_t> flipped = salt;
        flipped[bit / 8] ^= static_cast<std::uint8_t>(1u << (bit % 8));
        keys.insert(memory_hard_kdf(password, flipped, 32).hex());
    }
    EXPECT_EQ(keys.size(), 101u);
}

// --- criterion 10 ----------------------------------------------------------

TEST(Acceptance, C10_DescriptorRoundTripAndCrossProcessGen) {
    CriterionReporter reporter{10, "descriptors: canonical fixpoint, reproducible gen + offset"};
    std::mt19937_64 rng(0xCA);

    for (int i = 0; i < 1000; ++i) {
        ConstructionDescriptor tree = random_tree(rng, 3);
        std::string text = serialize_descriptor(tree);
        ConstructionDescriptor reparsed = parse_descriptor(text);
        ASSERT_EQ(reparsed, tree) << text;
        ASSERT_EQ(serialize_descriptor(reparsed), text) << text;
    }

    for (int i = 0; i < 50; ++i) {
        ConstructionDescriptor tree = random_tree(rng, 2);
        std::string text = serialize_descriptor(tree);

        CommandResult whole = run_command(kCli + " gen -d " + shell_quote(text) + " -n 48");
        CommandResult again = run_command(kCli + " gen -d " + shell_quote(text) + " -n 48");
        CommandResult offset =
            run_command(kCli + " gen -d " + shell_quote(text) + " -n 32 --offset 16");
        ASSERT_EQ(whole.exit_code, 0) << text;
        ASSERT_EQ(whole.output, again.output) << text;
        ASSERT_EQ(offset.output.substr(0, 64), whole.output.substr(32, 64)) << text;

        StreamPtr in_process = compile_descriptor(tree);
        ASSERT_EQ(whole.output, to_hex(take(*in_process, 0, 48)) + "\n") << text;
    }
}

}  // namespace
