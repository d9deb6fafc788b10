#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lazydigest/constructions.hpp"
#include "lazydigest/digest.hpp"
#include "lazydigest/extended_digest.hpp"

namespace lazydigest {

/// Reproducible per-test data stream: a lazy stream seeded with
/// SHA-256("test_" + test_id). The same id yields byte-identical data on
/// every machine and run. test_id must be non-empty.
LazySpec test_stream_spec(std::string_view test_id);
StreamPtr test_stream(std::string_view test_id);

/// Data-dependent index walk used by the memory-hard KDF: pattern[0] = 0 and
/// pattern[j+1] = (pattern[j] * 256 + gathered_byte_j) mod (memory_cost * 64),
/// where gathered_byte_j is the stream byte at pattern[j]. Exactly
/// memory_cost indices.
std::vector<std::uint64_t> kdf_access_indices(std::span<const std::uint8_t> password,
                                              std::span<const std::uint8_t> salt,
                                              std::uint64_t memory_cost);

/// Memory-hard key derivation: seed = SHA-256(password || salt), gather
/// memory_cost bytes along the data-dependent walk, return SHA-256 of the
/// gathered bytes. Rejects empty salts and memory_cost == 0.
Digest memory_hard_kdf(std::span<const std::uint8_t> password,
                       std::span<const std::uint8_t> salt,
                       std::uint64_t memory_cost);

/// Consecutive zero bits from the most significant bit of byte 0.
/// Throws DomainError for an empty digest.
int leading_zero_bits(const Digest& d);

struct PowResult {
    std::optional<std::uint32_t> nonce;
    std::uint64_t attempts = 0;
    std::optional<Digest> candidate;

    bool found() const noexcept { return nonce.has_value(); }
};

/// Scans nonce = 0, 1, ... up to max_nonce inclusive. The candidate is
/// SHA-256(SHA-256(header) || nonce as 4 big-endian bytes); the first nonce
/// whose candidate has at least `difficulty` leading zero bits wins. When no
/// nonce qualifies, attempts = max_nonce + 1 and nonce/candidate are absent.
/// difficulty must be in [0, 256].
PowResult find_pow(std::span<const std::uint8_t> header, int difficulty,
                   std::uint32_t max_nonce = 0xffffffffu);

}  // namespace lazydigest
