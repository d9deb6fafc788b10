#pragma once

#include <cstdint>
#include <functional>
#include <mutex>
#include <string>
#include <unordered_map>

#include "lazydigest/digest.hpp"
#include "lazydigest/extended_digest.hpp"

namespace lazydigest {

/// A true-entropy "random oracle" over byte indices. Each first query of an
/// index draws one byte from the entropy source and caches it; repeated
/// queries return the cached byte. The cache can only grow, the instance
/// cannot be serialized, and two instances never reproduce each other —
/// the class exists so those limits can be observed and tested.
///
/// The constructor input is retained as an inert label; the oracle's output
/// does not depend on it.
class OracleDigest final : public ExtendedDigest {
public:
    using EntropySource = std::function<Digest()>;

    static constexpr std::size_t kDefaultCacheLimit = std::size_t{1} << 20;

    explicit OracleDigest(std::string label = {},
                          EntropySource entropy = system_entropy(),
                          std::size_t cache_limit = kDefaultCacheLimit);

    OracleDigest(const OracleDigest&) = delete;
    OracleDigest& operator=(const OracleDigest&) = delete;

    /// First call per index draws exactly one byte (the first byte of one
    /// entropy draw). Throws CacheLimitError when a new index would push the
    /// cache past its limit, EntropyError if the source fails.
    std::uint8_t get(std::uint64_t index) const override;

    /// Number of cached entries == number of distinct indices ever queried.
    std::size_t memory_usage() const;

    const std::string& label() const noexcept { return label_; }
    std::size_t cache_limit() const noexcept { return cache_limit_; }

    /// Always throws NotSerializableError: the cached bytes came from a live
    /// entropy source and have no finite description.
    [[noreturn]] void serialize() const;

    /// Default source: SHA-256 of 32 bytes of OS randomness per draw.
    static EntropySource system_entropy();

private:
    std::string label_;
    EntropySource entropy_;
    std::size_t cache_limit_;
    mutable std::mutex mutex_;
    mutable std::unordered_map<std::uint64_t, std::uint8_t> cache_;
};

}  // namespace lazydigest
