#pragma once

#include <charconv>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lazydigest::detail {

inline constexpr std::uint8_t kSep = 0x00;

inline void append_bytes(std::vector<std::uint8_t>& out, std::span<const std::uint8_t> bytes) {
    out.insert(out.end(), bytes.begin(), bytes.end());
}

inline void append_text(std::vector<std::uint8_t>& out, std::string_view text) {
    out.insert(out.end(), text.begin(), text.end());
}

// ASCII decimal, unpadded.
inline void append_decimal(std::vector<std::uint8_t>& out, std::uint64_t value) {
    char buf[20];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    out.insert(out.end(), buf, end);
}

inline std::string decimal_string(std::uint64_t value) {
    char buf[20];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, end);
}

}  // namespace lazydigest::detail
