#include "lazydigest/oracle.hpp"

#include <openssl/rand.h>

#include <array>

#include "lazydigest/errors.hpp"
#include "lazydigest/hash.hpp"

namespace lazydigest {

OracleDigest::OracleDigest(std::string label, EntropySource entropy, std::size_t cache_limit)
    : label_(std::move(label)), entropy_(std::move(entropy)), cache_limit_(cache_limit) {
    if (!entropy_) {
        throw EntropyError("oracle requires an entropy source");
    }
}

std::uint8_t OracleDigest::get(std::uint64_t index) const {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(index);
    if (it != cache_.end()) {
        return it->second;
    }
    if (cache_.size() >= cache_limit_) {
        throw CacheLimitError("oracle cache limit of " + std::to_string(cache_limit_) +
                              " entries exhausted; every new index costs memory forever");
    }
    Digest draw;
    try {
        draw = entropy_();
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw EntropyError(std::string("entropy source failed: ") + e.what());
    }
    if (draw.empty()) {
        throw EntropyError("entropy source returned no bytes");
    }
    std::uint8_t value = draw[0];
    cache_.emplace(index, value);
    return value;
}

std::size_t OracleDigest::memory_usage() const {
    std::lock_guard lock(mutex_);
    return cache_.size();
}

void OracleDigest::serialize() const {
    throw NotSerializableError(
        "OracleDigest cannot be serialized: its bytes come from a live entropy source and exist "
        "only in this process's cache");
}

OracleDigest::EntropySource OracleDigest::system_entropy() {
    return [] {
        std::array<std::uint8_t, 32> buf{};
        if (RAND_bytes(buf.data(), static_cast<int>(buf.size())) != 1) {
            throw EntropyError("system entropy unavailable");
        }
        return hash(HashSpec::sha256(), std::span<const std::uint8_t>(buf));
    };
}

}  // namespace lazydigest
