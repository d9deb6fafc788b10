#include "lazydigest/algebra.hpp"

#include <charconv>

#include "lazydigest/errors.hpp"

namespace lazydigest {

namespace {

void require_operand(const StreamPtr& p) {
    if (!p) {
        throw SpecError("stream combinator operand is null");
    }
}

class XorStream final : public ExtendedDigest {
public:
    XorStream(StreamPtr a, StreamPtr b) : a_(std::move(a)), b_(std::move(b)) {}
    std::uint8_t get(std::uint64_t index) const override {
        return static_cast<std::uint8_t>(a_->get(index) ^ b_->get(index));
    }

private:
    StreamPtr a_;
    StreamPtr b_;
};

class SliceStream final : public ExtendedDigest {
public:
    SliceStream(StreamPtr d, std::uint64_t start, std::uint64_t step)
        : d_(std::move(d)), start_(start), step_(step) {}
    std::uint8_t get(std::uint64_t index) const override {
        return d_->get(start_ + index * step_);
    }

private:
    StreamPtr d_;
    std::uint64_t start_;
    std::uint64_t step_;
};

class TransformStream final : public ExtendedDigest {
public:
    TransformStream(StreamPtr d, ByteTransform f) : d_(std::move(d)), f_(std::move(f)) {}
    std::uint8_t get(std::uint64_t index) const override { return f_(d_->get(index)); }

private:
    StreamPtr d_;
    ByteTransform f_;
};

bool parse_add_constant(std::string_view name, int& k) {
    if (!name.starts_with("add:")) return false;
    std::string_view digits = name.substr(4);
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    return ec == std::errc{} && end == digits.data() + digits.size() && k >= 0 && k <= 255;
}

}  // namespace

StreamPtr xor_streams(StreamPtr a, StreamPtr b) {
    require_operand(a);
    require_operand(b);
    return std::make_shared<XorStream>(std::move(a), std::move(b));
}

StreamPtr slice_stream(StreamPtr d, std::uint64_t start, std::uint64_t step) {
    require_operand(d);
    if (step == 0) {
        throw DomainError("slice step must be >= 1");
    }
    return std::make_shared<SliceStream>(std::move(d), start, step);
}

StreamPtr transform_stream(StreamPtr d, ByteTransform f) {
    require_operand(d);
    if (!f) {
        throw SpecError("transform function is empty");
    }
    return std::make_shared<TransformStream>(std::move(d), std::move(f));
}

ByteTransform parse_transform_name(std::string_view name) {
    if (name == "not") {
        return [](std::uint8_t b) { return static_cast<std::uint8_t>(~b); };
    }
    int k = 0;
    if (parse_add_constant(name, k)) {
        return [k](std::uint8_t b) { return static_cast<std::uint8_t>(b + k); };
    }
    throw ConfigError("unknown transform '" + std::string(name) +
                      "'; expected \"not\" or \"add:<0..255>\"");
}

bool is_whitelisted_transform(std::string_view name) {
    int k = 0;
    return name == "not" || parse_add_constant(name, k);
}

std::vector<std::uint8_t> take(const ExtendedDigest& d, std::uint64_t offset,
                               std::uint64_t count) {
    std::vector<std::uint8_t> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) {
        out.push_back(d.get(offset + i));
    }
    return out;
}

Digest truncate(const ExtendedDigest& d, std::uint64_t n) { return Digest(take(d, 0, n)); }

std::vector<std::uint8_t> sample(const ExtendedDigest& d,
                                 std::span<const std::uint64_t> indices) {
    std::vector<std::uint8_t> out;
    out.reserve(indices.size());
    for (std::uint64_t index : indices) {
        out.push_back(d.get(index));
    }
    return out;
}

}  // namespace lazydigest
