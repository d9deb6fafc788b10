#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "lazydigest/digest.hpp"
#include "lazydigest/extended_digest.hpp"

namespace lazydigest {

// Stream combinators (infinite -> infinite) and projections (infinite ->
// finite). Combinators hold references to their operands and never cache:
// constructing one evaluates nothing, and each result byte evaluates each
// operand exactly once at the queried position.

using ByteTransform = std::function<std::uint8_t(std::uint8_t)>;

/// result.get(i) = a.get(i) ^ b.get(i)
StreamPtr xor_streams(StreamPtr a, StreamPtr b);

/// result.get(i) = d.get(start + i * step); step must be >= 1.
StreamPtr slice_stream(StreamPtr d, std::uint64_t start, std::uint64_t step);

/// result.get(i) = f(d.get(i)); f must be total over all 256 byte values.
StreamPtr transform_stream(StreamPtr d, ByteTransform f);

/// Named transforms expressible in descriptors: "not" (bitwise complement)
/// and "add:<k>" (add k mod 256, 0 <= k <= 255). Throws ConfigError for
/// anything else. Arbitrary ByteTransforms remain API-only.
ByteTransform parse_transform_name(std::string_view name);
bool is_whitelisted_transform(std::string_view name);

/// Bytes [offset, offset + count) of the stream.
std::vector<std::uint8_t> take(const ExtendedDigest& d, std::uint64_t offset, std::uint64_t count);

/// First n bytes as a finite Digest.
Digest truncate(const ExtendedDigest& d, std::uint64_t n);

/// output[j] = d.get(indices[j]); order preserved, duplicates allowed.
std::vector<std::uint8_t> sample(const ExtendedDigest& d, std::span<const std::uint64_t> indices);

/// Left fold of f over d.get(0 .. n-1) starting from init.
template <typename Acc, typename F>
Acc fold(const ExtendedDigest& d, F&& f, Acc init, std::uint64_t n) {
    Acc acc = std::move(init);
    for (std::uint64_t i = 0; i < n; ++i) {
        acc = f(std::move(acc), d.get(i));
    }
    return acc;
}

}  // namespace lazydigest
