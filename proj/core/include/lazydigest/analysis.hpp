#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lazydigest/extended_digest.hpp"
#include "lazydigest/hash.hpp"

namespace lazydigest {

/// Rho structure of an iterated toy hash walk: `tail_length` steps lead into
/// a loop of `cycle_length` steps. total_steps is the work the detector
/// spent. tail_length + cycle_length is the number of steps until the first
/// repeated state — the birthday-bound quantity.
struct CycleReport {
    std::uint64_t tail_length = 0;
    std::uint64_t cycle_length = 0;
    std::uint64_t total_steps = 0;

    std::uint64_t steps_to_repeat() const noexcept { return tail_length + cycle_length; }
};

/// Exact tail and cycle lengths of start, f(start), f(f(start)), ... under
/// the toy map, found with Brent's algorithm. The result is a property of the
/// walk, independent of the detection algorithm. Requires a toy spec and
/// start < 2^bits.
CycleReport detect_cycle(const HashSpec& toy_spec, std::uint32_t start);

/// Birthday-bound expectation sqrt(pi * 2^bits / 2): the expected number of
/// steps until an iterated b-bit map first repeats a state. bits >= 1.
double expected_cycle_length(int state_bits);

/// Averaged steps-to-repeat over `starts_per_tweak` random starts for each of
/// `tweaks` tweaked toy hashes. A single toy map is one sample of a "random
/// function"; averaging over the tweaked family tightens the estimate toward
/// the birthday expectation.
struct BirthdayResult {
    int state_bits = 0;
    std::uint64_t walks = 0;
    double mean_steps_to_repeat = 0.0;
    double expected = 0.0;

    double ratio() const { return mean_steps_to_repeat / expected; }
};

BirthdayResult run_birthday_experiment(int state_bits, int tweaks, int starts_per_tweak,
                                       std::uint64_t rng_seed);

/// One statistical test outcome. Pass/fail is a pure function of the
/// statistic and the test's fixed threshold.
struct StatReport {
    std::string test;
    double statistic = 0.0;
    std::uint64_t n = 0;
    bool pass = false;
    std::string note;  // e.g. "degenerate variance"

    /// "<test> n=<n> stat=<value> <PASS|FAIL>"
    std::string line() const;
};

/// Bit balance over the first 8*n_bytes bits: z = (ones - zeros) / sqrt(bits).
/// Pass iff |z| < 4. Requires n_bytes >= 1000.
StatReport monobit_test(const ExtendedDigest& d, std::uint64_t n_bytes);

/// Chi-square over the 256 byte-value bins against the uniform expectation.
/// Pass iff 180 <= chi2 <= 330 (central range for 255 degrees of freedom —
/// a suspiciously perfect fit fails too). Requires n_bytes >= 5120.
StatReport chi_square_test(const ExtendedDigest& d, std::uint64_t n_bytes);

/// Lag-1 Pearson correlation of consecutive bytes. Pass iff |r| < 0.02; a
/// degenerate (constant) stream fails with a note. Requires n_bytes >= 10000.
StatReport serial_correlation_test(const ExtendedDigest& d, std::uint64_t n_bytes);

/// All three tests over one shared evaluation of the first n_bytes bytes.
std::vector<StatReport> run_battery(const ExtendedDigest& d, std::uint64_t n_bytes);

}  // namespace lazydigest
