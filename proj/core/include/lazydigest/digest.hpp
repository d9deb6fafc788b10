#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lazydigest {

/// Lowercase hex, no prefix, no separators.
std::string to_hex(std::span<const std::uint8_t> bytes);

/// Parses hex (either case accepted). Throws DomainError on odd length or a
/// non-hex character.
std::vector<std::uint8_t> parse_hex(std::string_view hex);

/// A finite immutable byte string: a concrete hash output or a truncation of
/// an extended digest.
class Digest {
public:
    Digest() = default;
    explicit Digest(std::vector<std::uint8_t> bytes) : bytes_(std::move(bytes)) {}

    static Digest from_hex(std::string_view hex) { return Digest(parse_hex(hex)); }

    const std::vector<std::uint8_t>& bytes() const& noexcept { return bytes_; }
    std::vector<std::uint8_t> bytes() && { return std::move(bytes_); }
    std::size_t size() const noexcept { return bytes_.size(); }
    bool empty() const noexcept { return bytes_.empty(); }
    std::uint8_t operator[](std::size_t i) const { return bytes_.at(i); }

    std::string hex() const { return to_hex(bytes_); }

    friend bool operator==(const Digest&, const Digest&) = default;

private:
    std::vector<std::uint8_t> bytes_;
};

}  // namespace lazydigest
