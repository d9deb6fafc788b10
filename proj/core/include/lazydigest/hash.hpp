#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "lazydigest/digest.hpp"

namespace lazydigest {

enum class HashAlgorithm : std::uint8_t {
    Sha256,
    Sha512,
    Sha3_256,
    Blake2b,
    Toy,
};

/// Identifies a hash backend. The real algorithms are fixed-output
/// cryptographic hashes; the toy variant is a deliberately tiny hash whose
/// iterated cycle structure can be measured exhaustively.
///
/// Toy definition: SHA-256 of the message (prefixed with the one-byte tweak,
/// when set), truncated to ceil(bits/8) bytes and masked to the low `bits`
/// bits of the big-endian value. The tweak selects a different member of the
/// toy family so experiments can average over several "random functions".
struct HashSpec {
    HashAlgorithm algorithm = HashAlgorithm::Sha256;
    int toy_state_bits = 0;                      // toy only, 4..24
    std::optional<std::uint8_t> toy_tweak = {};  // toy only

    static HashSpec sha256() { return {HashAlgorithm::Sha256}; }
    static HashSpec sha512() { return {HashAlgorithm::Sha512}; }
    static HashSpec sha3_256() { return {HashAlgorithm::Sha3_256}; }
    static HashSpec blake2b() { return {HashAlgorithm::Blake2b}; }
    static HashSpec toy(int state_bits, std::optional<std::uint8_t> tweak = {});

    /// Output size in bytes; fixed per algorithm, ceil(bits/8) for toys.
    std::size_t output_len() const;

    friend bool operator==(const HashSpec&, const HashSpec&) = default;
};

/// One-shot hash. Pure: the same (spec, message) yields the same digest on
/// every platform and run. Throws SpecError for a malformed spec.
Digest hash(const HashSpec& spec, std::span<const std::uint8_t> message);
Digest hash(const HashSpec& spec, std::string_view message);

/// One step of the iterated toy map: the state is encoded big-endian in
/// ceil(bits/8) bytes, hashed, and the output reinterpreted as the next
/// state. Throws DomainError if state >= 2^bits.
std::uint32_t toy_iterate(const HashSpec& spec, std::uint32_t state);

/// Canonical name as used in descriptors: "sha256", "sha512", "sha3-256",
/// "blake2b", "toy-<bits>". Tweaked toys have no descriptor name and throw
/// NotSerializableError.
std::string hash_name(const HashSpec& spec);

/// Inverse of hash_name. Throws ConfigError for unknown names.
HashSpec parse_hash_name(std::string_view name);

/// Per-thread count of hash() invocations, for work accounting in tests and
/// experiments. toy hashes count as one invocation each.
std::uint64_t hash_invocations() noexcept;
void reset_hash_invocations() noexcept;

}  // namespace lazydigest
