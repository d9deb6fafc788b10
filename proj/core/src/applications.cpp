#include "lazydigest/applications.hpp"

#include <bit>

#include "detail.hpp"
#include "lazydigest/errors.hpp"

namespace lazydigest {

namespace {

constexpr std::uint64_t kMaxMemoryCost = std::uint64_t{1} << 32;

struct KdfWalk {
    std::vector<std::uint64_t> indices;
    std::vector<std::uint8_t> gathered;
};

// pattern[0] = 0; pattern[j+1] = (pattern[j] * 256 + gathered_j) mod (cost * 64).
// The next index depends on the byte just read, so the walk cannot be
// precomputed without doing the reads.
KdfWalk kdf_walk(std::span<const std::uint8_t> password, std::span<const std::uint8_t> salt,
                 std::uint64_t memory_cost) {
    if (salt.empty()) {
        throw DomainError("kdf requires a non-empty salt");
    }
    if (memory_cost < 1 || memory_cost > kMaxMemoryCost) {
        throw DomainError("kdf memory cost must be in [1, 2^32]");
    }
    std::vector<std::uint8_t> seed_input;
    seed_input.reserve(password.size() + salt.size());
    detail::append_bytes(seed_input, password);
    detail::append_bytes(seed_input, salt);
    LazySpec stream{hash(HashSpec::sha256(), seed_input).bytes(), HashSpec::sha256()};

    std::uint64_t modulus = memory_cost * 64;
    KdfWalk walk;
    walk.indices.reserve(memory_cost);
    walk.gathered.reserve(memory_cost);
    std::uint64_t position = 0;
    for (std::uint64_t j = 0; j < memory_cost; ++j) {
        std::uint8_t byte = lazy_get(stream, position);
        walk.indices.push_back(position);
        walk.gathered.push_back(byte);
        position = (position * 256 + byte) % modulus;
    }
    return walk;
}

}  // namespace

LazySpec test_stream_spec(std::string_view test_id) {
    if (test_id.empty()) {
        throw DomainError("test stream id must be non-empty");
    }
    std::string seed_input = "test_";
    seed_input += test_id;
    return LazySpec{hash(HashSpec::sha256(), seed_input).bytes(), HashSpec::sha256()};
}

StreamPtr test_stream(std::string_view test_id) { return make_stream(test_stream_spec(test_id)); }

std::vector<std::uint64_t> kdf_access_indices(std::span<const std::uint8_t> password,
                                              std::span<const std::uint8_t> salt,
                                              std::uint64_t memory_cost) {
    return kdf_walk(password, salt, memory_cost).indices;
}

Digest memory_hard_kdf(std::span<const std::uint8_t> password, std::span<const std::uint8_t> salt,
                       std::uint64_t memory_cost) {
    return hash(HashSpec::sha256(), kdf_walk(password, salt, memory_cost).gathered);
}

int leading_zero_bits(const Digest& d) {
    if (d.empty()) {
        throw DomainError("leading_zero_bits of an empty digest");
    }
    int count = 0;
    for (std::uint8_t byte : d.bytes()) {
        if (byte == 0) {
            count += 8;
            continue;
        }
        count += std::countl_zero(byte);
        break;
    }
    return count;
}

PowResult find_pow(std::span<const std::uint8_t> header, int difficulty,
                   std::uint32_t max_nonce) {
    if (difficulty < 0 || difficulty > 256) {
        throw DomainError("difficulty must be in [0, 256]");
    }
    Digest base = hash(HashSpec::sha256(), header);

    std::vector<std::uint8_t> msg(base.bytes());
    msg.resize(msg.size() + 4);
    std::size_t nonce_at = msg.size() - 4;

    std::uint64_t nonce = 0;
    for (; nonce <= max_nonce; ++nonce) {
        msg[nonce_at] = static_cast<std::uint8_t>(nonce >> 24);
        msg[nonce_at + 1] = static_cast<std::uint8_t>(nonce >> 16);
        msg[nonce_at + 2] = static_cast<std::uint8_t>(nonce >> 8);
        msg[nonce_at + 3] = static_cast<std::uint8_t>(nonce);
        Digest candidate = hash(HashSpec::sha256(), msg);
        if (leading_zero_bits(candidate) >= difficulty) {
            return {static_cast<std::uint32_t>(nonce), nonce + 1, std::move(candidate)};
        }
    }
    return {std::nullopt, static_cast<std::uint64_t>(max_nonce) + 1, std::nullopt};
}

}  // namespace lazydigest
