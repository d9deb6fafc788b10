#include "lazydigest/digest.hpp"

#include "lazydigest/errors.hpp"

namespace lazydigest {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

}  // namespace

std::string to_hex(std::span<const std::uint8_t> bytes) {
    std::string out;
    out.reserve(bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out.push_back(kHexDigits[b >> 4]);
        out.push_back(kHexDigits[b & 0x0f]);
    }
    return out;
}

std::vector<std::uint8_t> parse_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) {
        throw DomainError("hex string has odd length " + std::to_string(hex.size()));
    }
    std::vector<std::uint8_t> out;
    out.reserve(hex.size() / 2);
    for (std::size_t i = 0; i < hex.size(); i += 2) {
        int hi = hex_value(hex[i]);
        int lo = hex_value(hex[i + 1]);
        if (hi < 0 || lo < 0) {
            std::size_t bad = hi < 0 ? i : i + 1;
            throw DomainError(std::string("invalid hex digit '") + hex[bad] + "' at position " +
                              std::to_string(bad));
        }
        out.push_back(static_cast<std::uint8_t>(hi << 4 | lo));
    }
    return out;
}

}  // namespace lazydigest
