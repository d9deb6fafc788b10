#pragma once

#include <cstdint>
#include <vector>

#include "lazydigest/extended_digest.hpp"
#include "lazydigest/hash.hpp"

namespace lazydigest {

// Seed-deterministic unbounded streams. Every get below is a pure function of
// (spec, index): no state is kept between queries, queries may arrive in any
// order from any number of threads, and memory use does not depend on how
// many indices have been visited.
//
// Index encoding is the ASCII decimal rendering of the index, unpadded.
// Derived constructions place a single 0x00 separator byte between every
// concatenated component of a hash input; the core lazy construction hashes
// seed || decimal(index) directly with no separator.

/// byte(i) = hash(seed || decimal(i))[0]
struct LazySpec {
    std::vector<std::uint8_t> seed;
    HashSpec hash = HashSpec::sha256();
};

/// Three-level seed derivation. The index splits into (epoch, chunk,
/// position); the epoch and chunk seeds are full hash outputs derived from
/// the master seed, and the byte comes from the chunk-level stream.
struct HierarchicalSpec {
    std::vector<std::uint8_t> master_seed;
    HashSpec hash = HashSpec::sha256();
    std::uint64_t epoch_size = std::uint64_t{1} << 40;
    std::uint64_t chunk_size = std::uint64_t{1} << 20;
};

/// Forward-secure epoch rekeying: every rekey_interval indices the working
/// key is rederived one-way from the root seed. Epoch 0 uses the raw seed.
struct RekeySpec {
    std::vector<std::uint8_t> seed;
    HashSpec hash = HashSpec::sha256();
    std::uint64_t rekey_interval = std::uint64_t{1} << 32;
};

/// Sponge-style construction: a (rate + capacity)-bit state is expanded from
/// the seed, the index is absorbed into the rate portion, the state is
/// permuted, and the first rate byte is emitted. The permutation is hash
/// expansion of the whole state; capacity bits never reach the output except
/// through the permutation.
struct SpongeSpec {
    std::vector<std::uint8_t> seed;
    HashSpec hash = HashSpec::sha256();
    std::uint32_t capacity_bits = 256;
    std::uint32_t rate_bits = 256;
};

/// byte(i) = XOR over the hash set of hash_k(seed || sep || decimal(i))[0].
/// Breaking the output requires breaking every member of the set.
struct XorMultiSpec {
    std::vector<std::uint8_t> seed;
    std::vector<HashSpec> hashes;  // >= 2, pairwise distinct

    /// The conventional four-algorithm set.
    static std::vector<HashSpec> default_hashes();
};

/// XOR of all four pillars evaluated at the same index.
struct CompositeSpec {
    XorMultiSpec xor_part;
    RekeySpec rekey_part;
    HierarchicalSpec hier_part;
    SpongeSpec sponge_part;
};

// Validation (throws SpecError). Each get validates its spec; make_stream
// validates eagerly.
void validate(const LazySpec&);
void validate(const HierarchicalSpec&);
void validate(const RekeySpec&);
void validate(const SpongeSpec&);
void validate(const XorMultiSpec&);
void validate(const CompositeSpec&);

std::uint8_t lazy_get(const LazySpec&, std::uint64_t index);
std::uint8_t hierarchical_get(const HierarchicalSpec&, std::uint64_t index);
std::uint8_t rekey_get(const RekeySpec&, std::uint64_t index);
std::uint8_t sponge_get(const SpongeSpec&, std::uint64_t index);
std::uint8_t xor_multi_get(const XorMultiSpec&, std::uint64_t index);
std::uint8_t composite_get(const CompositeSpec&, std::uint64_t index);

StreamPtr make_stream(LazySpec spec);
StreamPtr make_stream(HierarchicalSpec spec);
StreamPtr make_stream(RekeySpec spec);
StreamPtr make_stream(SpongeSpec spec);
StreamPtr make_stream(XorMultiSpec spec);
StreamPtr make_stream(CompositeSpec spec);

}  // namespace lazydigest
