// Command-line frontend: generate stream bytes from descriptors, run the
// statistical battery, measure toy-hash cycles, and drive the applications.
// Exit codes: 0 success, 1 usage error, 2 computation failure.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lazydigest/lazydigest.hpp"

namespace {

using namespace lazydigest;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitComputation = 2;

std::vector<std::uint8_t> bytes_of(const std::string& text) {
    return {text.begin(), text.end()};
}

void emit_bytes(const std::vector<std::uint8_t>& bytes, const std::string& format) {
    if (bytes.empty()) {
        return;
    }
    if (format == "raw") {
        std::fwrite(bytes.data(), 1, bytes.size(), stdout);
        return;
    }
    std::fputs(to_hex(bytes).c_str(), stdout);
    std::fputc('\n', stdout);
}

int run_gen(const std::string& descriptor, std::uint64_t count, std::uint64_t offset,
            const std::string& format) {
    StreamPtr stream = compile_descriptor(parse_descriptor(descriptor));
    if (count > 0 && offset > UINT64_MAX - (count - 1)) {
        throw DomainError("offset + count exceeds the index space");
    }
    // Chunked so large ranges stream instead of materializing.
    constexpr std::uint64_t kChunk = 1 << 16;
    for (std::uint64_t done = 0; done < count;) {
        std::uint64_t batch = std::min(kChunk, count - done);
        std::vector<std::uint8_t> bytes = take(*stream, offset + done, batch);
        if (format == "raw") {
            std::fwrite(bytes.data(), 1, bytes.size(), stdout);
        } else {
            std::fputs(to_hex(bytes).c_str(), stdout);
        }
        done += batch;
    }
    if (format != "raw" && count > 0) {
        std::fputc('\n', stdout);
    }
    return kExitOk;
}

int run_sample(const std::string& descriptor, const std::string& index_list) {
    StreamPtr stream = compile_descriptor(parse_descriptor(descriptor));
    std::vector<std::uint64_t> indices;
    std::size_t at = 0;
    while (at < index_list.size()) {
        std::size_t comma = index_list.find(',', at);
        std::string item = index_list.substr(
            at, comma == std::string::npos ? std::string::npos : comma - at);
        try {
            std::size_t used = 0;
            indices.push_back(std::stoull(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw DomainError("bad index '" + item + "' in list");
        }
        if (comma == std::string::npos) break;
        at = comma + 1;
    }
    emit_bytes(sample(*stream, indices), "hex");
    return kExitOk;
}

int run_stats(const std::string& descriptor, std::uint64_t count) {
    StreamPtr stream = compile_descriptor(parse_descriptor(descriptor));
    bool all_pass = true;
    for (const StatReport& report : run_battery(*stream, count)) {
        std::puts(report.line().c_str());
        all_pass = all_pass && report.pass;
    }
    return all_pass ? kExitOk : kExitComputation;
}

int run_cycle(int bits, std::uint32_t starts) {
    HashSpec spec = HashSpec::toy(bits);
    std::uint32_t states = std::uint32_t{1} << bits;
    double total = 0.0;
    for (std::uint32_t s = 0; s < starts; ++s) {
        CycleReport report = detect_cycle(spec, s % states);
        std::printf("start=%u tail=%llu cycle=%llu steps=%llu\n", s % states,
                    static_cast<unsigned long long>(report.tail_length),
                    static_cast<unsigned long long>(report.cycle_length),
                    static_cast<unsigned long long>(report.total_steps));
        total += static_cast<double>(report.steps_to_repeat());
    }
    if (starts > 0) {
        std::printf("mean-steps-to-repeat=%.4f\n", total / starts);
    }
    std::printf("expected-birthday=%.4f\n", expected_cycle_length(bits));
    return kExitOk;
}

int run_pow(const std::string& header_hex, int difficulty, std::uint64_t max_nonce) {
    if (max_nonce > 0xffffffffull) {
        throw DomainError("max-nonce does not fit in 32 bits");
    }
    std::vector<std::uint8_t> header = parse_hex(header_hex);
    PowResult result = find_pow(header, difficulty, static_cast<std::uint32_t>(max_nonce));
    if (!result.found()) {
        std::fprintf(stderr, "pow: no nonce with %d leading zero bits within %llu attempts\n",
                     difficulty, static_cast<unsigned long long>(result.attempts));
        return kExitComputation;
    }
    std::printf("nonce=%u attempts=%llu candidate=%s\n", *result.nonce,
                static_cast<unsigned long long>(result.attempts), result.candidate->hex().c_str());
    return kExitOk;
}

int run_kdf(const std::string& password, const std::string& salt_hex, std::uint64_t cost) {
    std::vector<std::uint8_t> salt = parse_hex(salt_hex);
    Digest key = memory_hard_kdf(bytes_of(password), salt, cost);
    std::puts(key.hex().c_str());
    return kExitOk;
}

int run_teststream(const std::string& id, std::uint64_t count, std::uint64_t offset,
                   const std::string& format) {
    StreamPtr stream = test_stream(id);
    constexpr std::uint64_t kChunk = 1 << 16;
    for (std::uint64_t done = 0; done < count;) {
        std::uint64_t batch = std::min(kChunk, count - done);
        std::vector<std::uint8_t> bytes = take(*stream, offset + done, batch);
        if (format == "raw") {
            std::fwrite(bytes.data(), 1, bytes.size(), stdout);
        } else {
            std::fputs(to_hex(bytes).c_str(), stdout);
        }
        done += batch;
    }
    if (format != "raw" && count > 0) {
        std::fputc('\n', stdout);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seed-deterministic unbounded digest streams"};
    app.require_subcommand(1);

    std::string descriptor;
    std::string format = "hex";
    std::string index_list;
    std::string header_hex;
    std::string password;
    std::string salt_hex;
    std::string stream_id;
    std::uint64_t count = 0;
    std::uint64_t offset = 0;
    std::uint64_t max_nonce = 0xffffffffull;
    std::uint64_t cost = 1;
    std::uint32_t starts = 10;
    int bits = 8;
    int difficulty = 0;

    auto* gen = app.add_subcommand("gen", "Emit a contiguous range of stream bytes");
    gen->add_option("-d,--descriptor", descriptor, "Construction descriptor")->required();
    gen->add_option("-n,--count", count, "Number of bytes")->required();
    gen->add_option("--offset", offset, "First index");
    gen->add_option("--format", format, "hex or raw")
        ->check(CLI::IsMember({"hex", "raw"}));

    auto* sample_cmd = app.add_subcommand("sample", "Emit bytes at specific indices");
    sample_cmd->add_option("-d,--descriptor", descriptor, "Construction descriptor")->required();
    sample_cmd->add_option("-i,--indices", index_list, "Comma-separated indices")->required();

    auto* stats = app.add_subcommand("stats", "Run the statistical battery");
    stats->add_option("-d,--descriptor", descriptor, "Construction descriptor")->required();
    stats->add_option("-n,--count", count, "Number of bytes to test")->required();

    auto* cycle = app.add_subcommand("cycle", "Measure toy-hash cycle structure");
    cycle->add_option("--bits", bits, "Toy state bits (4..24)")->required();
    cycle->add_option("--starts", starts, "Number of walks (starts 0,1,...)");

    auto* pow = app.add_subcommand("pow", "Search for a proof-of-work nonce");
    pow->add_option("--header-hex", header_hex, "Block header, hex")->required();
    pow->add_option("--difficulty", difficulty, "Required leading zero bits")->required();
    pow->add_option("--max-nonce", max_nonce, "Highest nonce to try");

    auto* kdf = app.add_subcommand("kdf", "Derive a key with the memory-hard KDF");
    kdf->add_option("--password", password, "Password")->required();
    kdf->add_option("--salt-hex", salt_hex, "Salt, hex")->required();
    kdf->add_option("--cost", cost, "Memory cost (stream reads)")->required();

    auto* teststream = app.add_subcommand("teststream", "Reproducible per-test data stream");
    teststream->add_option("--id", stream_id, "Test identifier")->required();
    teststream->add_option("-n,--count", count, "Number of bytes")->required();
    teststream->add_option("--offset", offset, "First index");
    teststream->add_option("--format", format, "hex or raw")
        ->check(CLI::IsMember({"hex", "raw"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return run_gen(descriptor, count, offset, format);
        if (sample_cmd->parsed()) return run_sample(descriptor, index_list);
        if (stats->parsed()) return run_stats(descriptor, count);
        if (cycle->parsed()) return run_cycle(bits, starts);
        if (pow->parsed()) return run_pow(header_hex, difficulty, max_nonce);
        if (kdf->parsed()) return run_kdf(password, salt_hex, cost);
        if (teststream->parsed()) return run_teststream(stream_id, count, offset, format);
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const SpecError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const DomainError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitComputation;
    }
    return kExitUsage;
}
