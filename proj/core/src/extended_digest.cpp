#include "lazydigest/extended_digest.hpp"

namespace lazydigest {

namespace {

class ConstantStream final : public ExtendedDigest {
public:
    explicit ConstantStream(std::uint8_t value) : value_(value) {}
    std::uint8_t get(std::uint64_t) const override { return value_; }

private:
    std::uint8_t value_;
};

class CounterStream final : public ExtendedDigest {
public:
    std::uint8_t get(std::uint64_t index) const override {
        return static_cast<std::uint8_t>(index & 0xff);
    }
};

}  // namespace

StreamPtr constant_stream(std::uint8_t value) { return std::make_shared<ConstantStream>(value); }

StreamPtr counter_stream() { return std::make_shared<CounterStream>(); }

}  // namespace lazydigest
