#include "lazydigest/constructions.hpp"

#include <utility>

#include "detail.hpp"
#include "lazydigest/errors.hpp"

namespace lazydigest {

namespace {

using detail::append_bytes;
using detail::append_decimal;
using detail::append_text;
using detail::kSep;

void require_seed(const std::vector<std::uint8_t>& seed, const char* what) {
    if (seed.empty()) {
        throw SpecError(std::string(what) + " requires a non-empty seed");
    }
}

// hash(parts[0] || sep || parts[1] || sep || ...) built from byte spans,
// labels and decimals; the callers spell the exact component order.
struct MessageBuilder {
    std::vector<std::uint8_t> buf;

    MessageBuilder& bytes(std::span<const std::uint8_t> b) {
        sep();
        append_bytes(buf, b);
        return *this;
    }
    MessageBuilder& label(std::string_view text) {
        sep();
        append_text(buf, text);
        return *this;
    }
    MessageBuilder& decimal(std::uint64_t v) {
        sep();
        append_decimal(buf, v);
        return *this;
    }

private:
    bool first_ = true;
    void sep() {
        if (!first_) buf.push_back(kSep);
        first_ = false;
    }
};

}  // namespace

std::vector<HashSpec> XorMultiSpec::default_hashes() {
    return {HashSpec::sha256(), HashSpec::sha512(), HashSpec::sha3_256(), HashSpec::blake2b()};
}

void validate(const LazySpec& spec) { require_seed(spec.seed, "lazy"); }

void validate(const HierarchicalSpec& spec) {
    require_seed(spec.master_seed, "hierarchical");
    if (spec.chunk_size < 1 || spec.epoch_size <= spec.chunk_size) {
        throw SpecError("hierarchical needs epoch_size > chunk_size >= 1");
    }
    if (spec.epoch_size % spec.chunk_size != 0) {
        throw SpecError("hierarchical epoch_size must be divisible by chunk_size");
    }
}

void validate(const RekeySpec& spec) {
    require_seed(spec.seed, "rekey");
    if (spec.rekey_interval < 1) {
        throw SpecError("rekey interval must be >= 1");
    }
}

void validate(const SpongeSpec& spec) {
    require_seed(spec.seed, "sponge");
    if (spec.capacity_bits < 8 || spec.rate_bits < 8) {
        throw SpecError("sponge capacity and rate must each be >= 8 bits");
    }
    if (spec.capacity_bits % 8 != 0 || spec.rate_bits % 8 != 0) {
        throw SpecError("sponge capacity and rate must be multiples of 8 bits");
    }
}

void validate(const XorMultiSpec& spec) {
    require_seed(spec.seed, "xor-multi");
    if (spec.hashes.size() < 2) {
        throw SpecError("xor-multi needs at least 2 hash functions");
    }
    for (std::size_t i = 0; i < spec.hashes.size(); ++i) {
        for (std::size_t j = i + 1; j < spec.hashes.size(); ++j) {
            if (spec.hashes[i] == spec.hashes[j]) {
                throw SpecError("xor-multi hash set contains '" + hash_name(spec.hashes[i]) +
                                "' twice; members must be distinct");
            }
        }
    }
}

void validate(const CompositeSpec& spec) {
    validate(spec.xor_part);
    validate(spec.rekey_part);
    validate(spec.hier_part);
    validate(spec.sponge_part);
}

std::uint8_t lazy_get(const LazySpec& spec, std::uint64_t index) {
    validate(spec);
    // No separator here: the message is exactly seed || decimal(index).
    std::vector<std::uint8_t> msg;
    msg.reserve(spec.seed.size() + 20);
    append_bytes(msg, spec.seed);
    append_decimal(msg, index);
    return hash(spec.hash, msg)[0];
}

std::uint8_t hierarchical_get(const HierarchicalSpec& spec, std::uint64_t index) {
    validate(spec);
    std::uint64_t epoch = index / spec.epoch_size;
    std::uint64_t rem = index % spec.epoch_size;
    std::uint64_t chunk = rem / spec.chunk_size;
    std::uint64_t position = rem % spec.chunk_size;

    Digest epoch_seed =
        hash(spec.hash,
             MessageBuilder{}.bytes(spec.master_seed).label("epoch").decimal(epoch).buf);
    Digest chunk_seed =
        hash(spec.hash,
             MessageBuilder{}.bytes(epoch_seed.bytes()).label("chunk").decimal(chunk).buf);
    return hash(spec.hash, MessageBuilder{}.bytes(chunk_seed.bytes()).decimal(position).buf)[0];
}

std::uint8_t rekey_get(const RekeySpec& spec, std::uint64_t index) {
    validate(spec);
    std::uint64_t epoch = index / spec.rekey_interval;
    std::uint64_t local = index % spec.rekey_interval;

    if (epoch == 0) {
        return hash(spec.hash, MessageBuilder{}.bytes(spec.seed).decimal(local).buf)[0];
    }
    // One-way epoch key: epoch n's key reveals nothing about epochs 0..n-1.
    Digest key =
        hash(spec.hash, MessageBuilder{}.bytes(spec.seed).label("rekey").decimal(epoch).buf);
    return hash(spec.hash, MessageBuilder{}.bytes(key.bytes()).decimal(local).buf)[0];
}

namespace {

// Expand x to `width_bits` bits by concatenating hash(x || sep || j) for
// j = 0, 1, ... Doubles as the sponge permutation.
std::vector<std::uint8_t> hash_expand(const HashSpec& h, std::span<const std::uint8_t> x,
                                      std::uint32_t width_bits) {
    std::size_t width_bytes = width_bits / 8;
    std::vector<std::uint8_t> out;
    out.reserve(width_bytes + h.output_len());
    for (std::uint64_t j = 0; out.size() < width_bytes; ++j) {
        Digest block = hash(h, MessageBuilder{}.bytes(x).decimal(j).buf);
        append_bytes(out, block.bytes());
    }
    out.resize(width_bytes);
    return out;
}

}  // namespace

std::uint8_t sponge_get(const SpongeSpec& spec, std::uint64_t index) {
    validate(spec);
    std::uint32_t width_bits = spec.rate_bits + spec.capacity_bits;
    std::size_t rate_bytes = spec.rate_bits / 8;

    std::string block = detail::decimal_string(index);
    if (block.size() > rate_bytes) {
        throw SpecError("sponge rate of " + std::to_string(spec.rate_bits) +
                        " bits cannot absorb index " + block);
    }

    std::vector<std::uint8_t> state = hash_expand(spec.hash, spec.seed, width_bits);
    // Absorb: XOR the zero-padded index encoding into the rate portion.
    for (std::size_t i = 0; i < block.size(); ++i) {
        state[i] ^= static_cast<std::uint8_t>(block[i]);
    }
    state = hash_expand(spec.hash, state, width_bits);
    // Squeeze one byte from the rate portion.
    return state[0];
}

std::uint8_t xor_multi_get(const XorMultiSpec& spec, std::uint64_t index) {
    validate(spec);
    std::uint8_t result = 0;
    for (const HashSpec& h : spec.hashes) {
        result ^= hash(h, MessageBuilder{}.bytes(spec.seed).decimal(index).buf)[0];
    }
    return result;
}

std::uint8_t composite_get(const CompositeSpec& spec, std::uint64_t index) {
    return static_cast<std::uint8_t>(
        xor_multi_get(spec.xor_part, index) ^ rekey_get(spec.rekey_part, index) ^
        hierarchical_get(spec.hier_part, index) ^ sponge_get(spec.sponge_part, index));
}

namespace {

template <typename Spec, std::uint8_t (*GetFn)(const Spec&, std::uint64_t)>
class SpecStream final : public ExtendedDigest {
public:
    explicit SpecStream(Spec spec) : spec_(std::move(spec)) {}
    std::uint8_t get(std::uint64_t index) const override { return GetFn(spec_, index); }

private:
    Spec spec_;
};

template <typename Spec, std::uint8_t (*GetFn)(const Spec&, std::uint64_t)>
StreamPtr stream_of(Spec spec) {
    validate(spec);
    return std::make_shared<SpecStream<Spec, GetFn>>(std::move(spec));
}

}  // namespace

StreamPtr make_stream(LazySpec spec) { return stream_of<LazySpec, &lazy_get>(std::move(spec)); }
StreamPtr make_stream(HierarchicalSpec spec) {
    return stream_of<HierarchicalSpec, &hierarchical_get>(std::move(spec));
}
StreamPtr make_stream(RekeySpec spec) { return stream_of<RekeySpec, &rekey_get>(std::move(spec)); }
StreamPtr make_stream(SpongeSpec spec) {
    return stream_of<SpongeSpec, &sponge_get>(std::move(spec));
}
StreamPtr make_stream(XorMultiSpec spec) {
    return stream_of<XorMultiSpec, &xor_multi_get>(std::move(spec));
}
StreamPtr make_stream(CompositeSpec spec) {
    return stream_of<CompositeSpec, &composite_get>(std::move(spec));
}

}  // namespace lazydigest
