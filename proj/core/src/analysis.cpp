#include "lazydigest/analysis.hpp"

#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <random>
#include <span>

#include "lazydigest/algebra.hpp"
#include "lazydigest/errors.hpp"

namespace lazydigest {

namespace {

constexpr double kMonobitMaxZ = 4.0;
constexpr double kChiSquareLow = 180.0;
constexpr double kChiSquareHigh = 330.0;
constexpr double kSerialMaxR = 0.02;

constexpr std::uint64_t kMonobitMinBytes = 1000;
constexpr std::uint64_t kChiSquareMinBytes = 256 * 20;
constexpr std::uint64_t kSerialMinBytes = 10000;

std::string format_stat(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", value);
    return buf;
}

StatReport monobit_from_bytes(std::span<const std::uint8_t> buf) {
    std::uint64_t ones = 0;
    for (std::uint8_t b : buf) {
        ones += static_cast<std::uint64_t>(std::popcount(b));
    }
    double bits = 8.0 * static_cast<double>(buf.size());
    double zeros = bits - static_cast<double>(ones);
    double z = (static_cast<double>(ones) - zeros) / std::sqrt(bits);
    return {"monobit", z, buf.size(), std::fabs(z) < kMonobitMaxZ, {}};
}

StatReport chi_square_from_bytes(std::span<const std::uint8_t> buf) {
    std::array<std::uint64_t, 256> counts{};
    for (std::uint8_t b : buf) {
        ++counts[b];
    }
    double expected = static_cast<double>(buf.size()) / 256.0;
    double chi2 = 0.0;
    for (std::uint64_t c : counts) {
        double diff = static_cast<double>(c) - expected;
        chi2 += diff * diff / expected;
    }
    return {"chi-square", chi2, buf.size(), chi2 >= kChiSquareLow && chi2 <= kChiSquareHigh, {}};
}

StatReport serial_from_bytes(std::span<const std::uint8_t> buf) {
    // Lag-1 Pearson correlation of the pairs (buf[i], buf[i+1]).
    std::size_t pairs = buf.size() - 1;
    double mean_x = 0.0;
    double mean_y = 0.0;
    for (std::size_t i = 0; i < pairs; ++i) {
        mean_x += buf[i];
        mean_y += buf[i + 1];
    }
    mean_x /= static_cast<double>(pairs);
    mean_y /= static_cast<double>(pairs);

    double cov = 0.0;
    double var_x = 0.0;
    double var_y = 0.0;
    for (std::size_t i = 0; i < pairs; ++i) {
        double dx = buf[i] - mean_x;
        double dy = buf[i + 1] - mean_y;
        cov += dx * dy;
        var_x += dx * dx;
        var_y += dy * dy;
    }
    if (var_x == 0.0 || var_y == 0.0) {
        return {"serial-correlation", std::nan(""), buf.size(), false, "degenerate variance"};
    }
    double r = cov / std::sqrt(var_x * var_y);
    return {"serial-correlation", r, buf.size(), std::fabs(r) < kSerialMaxR, {}};
}

}  // namespace

CycleReport detect_cycle(const HashSpec& toy_spec, std::uint32_t start) {
    if (toy_spec.algorithm != HashAlgorithm::Toy) {
        throw DomainError("cycle detection runs on toy hashes only");
    }
    std::uint64_t evaluations = 0;
    auto step = [&](std::uint32_t s) {
        ++evaluations;
        return toy_iterate(toy_spec, s);
    };

    // Brent: find the cycle length, then align two cursors to find the tail.
    std::uint64_t power = 1;
    std::uint64_t cycle = 1;
    std::uint32_t tortoise = start;
    std::uint32_t hare = step(start);
    while (tortoise != hare) {
        if (power == cycle) {
            tortoise = hare;
            power *= 2;
            cycle = 0;
        }
        hare = step(hare);
        ++cycle;
    }

    tortoise = start;
    hare = start;
    for (std::uint64_t i = 0; i < cycle; ++i) {
        hare = step(hare);
    }
    std::uint64_t tail = 0;
    while (tortoise != hare) {
        tortoise = step(tortoise);
        hare = step(hare);
        ++tail;
    }
    return {tail, cycle, evaluations};
}

double expected_cycle_length(int state_bits) {
    if (state_bits < 1) {
        throw DomainError("state bits must be >= 1");
    }
    return std::sqrt(M_PI * std::exp2(static_cast<double>(state_bits)) / 2.0);
}

BirthdayResult run_birthday_experiment(int state_bits, int tweaks, int starts_per_tweak,
                                       std::uint64_t rng_seed) {
    if (tweaks < 1 || tweaks > 255 || starts_per_tweak < 1) {
        throw DomainError("birthday experiment needs 1..255 tweaks and >= 1 start per tweak");
    }
    std::mt19937_64 rng(rng_seed);
    std::uniform_int_distribution<std::uint32_t> pick_start(
        0, (std::uint32_t{1} << state_bits) - 1);

    std::uint64_t walks = 0;
    double total = 0.0;
    for (int t = 1; t <= tweaks; ++t) {
        HashSpec spec = HashSpec::toy(state_bits, static_cast<std::uint8_t>(t));
        for (int s = 0; s < starts_per_tweak; ++s) {
            CycleReport report = detect_cycle(spec, pick_start(rng));
            total += static_cast<double>(report.steps_to_repeat());
            ++walks;
        }
    }
    return {state_bits, walks, total / static_cast<double>(walks),
            expected_cycle_length(state_bits)};
}

std::string StatReport::line() const {
    return test + " n=" + std::to_string(n) + " stat=" + format_stat(statistic) +
           (pass ? " PASS" : " FAIL");
}

StatReport monobit_test(const ExtendedDigest& d, std::uint64_t n_bytes) {
    if (n_bytes < kMonobitMinBytes) {
        throw DomainError("monobit needs at least 1000 bytes");
    }
    return monobit_from_bytes(take(d, 0, n_bytes));
}

StatReport chi_square_test(const ExtendedDigest& d, std::uint64_t n_bytes) {
    if (n_bytes < kChiSquareMinBytes) {
        throw DomainError("chi-square needs at least 5120 bytes");
    }
    return chi_square_from_bytes(take(d, 0, n_bytes));
}

StatReport serial_correlation_test(const ExtendedDigest& d, std::uint64_t n_bytes) {
    if (n_bytes < kSerialMinBytes) {
        throw DomainError("serial correlation needs at least 10000 bytes");
    }
    return serial_from_bytes(take(d, 0, n_bytes));
}

std::vector<StatReport> run_battery(const ExtendedDigest& d, std::uint64_t n_bytes) {
    if (n_bytes < kSerialMinBytes) {
        throw DomainError("battery needs at least 10000 bytes");
    }
    std::vector<std::uint8_t> buf = take(d, 0, n_bytes);
    return {monobit_from_bytes(buf), chi_square_from_bytes(buf), serial_from_bytes(buf)};
}

}  // namespace lazydigest
