#pragma once

#include <cstdint>
#include <memory>

namespace lazydigest {

/// An unbounded, index-addressable byte sequence. Implementations must be
/// consistent: get(i) called twice returns the same byte. Every index in
/// [0, 2^64) is addressable; nothing is materialized until queried.
class ExtendedDigest {
public:
    virtual ~ExtendedDigest() = default;
    virtual std::uint8_t get(std::uint64_t index) const = 0;
};

using StreamPtr = std::shared_ptr<const ExtendedDigest>;

/// Stream that returns `value` at every index.
StreamPtr constant_stream(std::uint8_t value);

/// Stream with get(i) = i mod 256. Useful as a battery sanity case.
StreamPtr counter_stream();

}  // namespace lazydigest
