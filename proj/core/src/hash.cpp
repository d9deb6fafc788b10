#include "lazydigest/hash.hpp"

#include <openssl/evp.h>

#include <array>
#include <charconv>

#include "lazydigest/errors.hpp"

namespace lazydigest {

namespace {

constexpr int kToyMinBits = 4;
constexpr int kToyMaxBits = 24;

thread_local std::uint64_t t_hash_calls = 0;

struct EvpContext {
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    ~EvpContext() { EVP_MD_CTX_free(ctx); }
};

const EVP_MD* evp_md(HashAlgorithm algorithm) {
    switch (algorithm) {
        case HashAlgorithm::Sha256: return EVP_sha256();
        case HashAlgorithm::Sha512: return EVP_sha512();
        case HashAlgorithm::Sha3_256: return EVP_sha3_256();
        case HashAlgorithm::Blake2b: return EVP_blake2b512();
        case HashAlgorithm::Toy: break;
    }
    return nullptr;
}

Digest evp_hash(const EVP_MD* md, std::span<const std::uint8_t> message) {
    thread_local EvpContext tl;
    if (tl.ctx == nullptr) {
        throw Error("could not allocate a digest context");
    }
    std::array<unsigned char, EVP_MAX_MD_SIZE> out{};
    unsigned int out_len = 0;
    if (EVP_DigestInit_ex(tl.ctx, md, nullptr) != 1 ||
        EVP_DigestUpdate(tl.ctx, message.data(), message.size()) != 1 ||
        EVP_DigestFinal_ex(tl.ctx, out.data(), &out_len) != 1) {
        throw Error("digest computation failed");
    }
    return Digest(std::vector<std::uint8_t>(out.begin(), out.begin() + out_len));
}

void validate_spec(const HashSpec& spec) {
    if (spec.algorithm == HashAlgorithm::Toy) {
        if (spec.toy_state_bits < kToyMinBits || spec.toy_state_bits > kToyMaxBits) {
            throw SpecError("toy state bits must be in [4, 24], got " +
                            std::to_string(spec.toy_state_bits));
        }
    } else if (spec.toy_state_bits != 0 || spec.toy_tweak.has_value()) {
        throw SpecError("toy parameters set on a non-toy hash spec");
    }
}

Digest toy_hash(const HashSpec& spec, std::span<const std::uint8_t> message) {
    std::vector<std::uint8_t> salted;
    std::span<const std::uint8_t> input = message;
    if (spec.toy_tweak) {
        salted.reserve(message.size() + 1);
        salted.push_back(*spec.toy_tweak);
        salted.insert(salted.end(), message.begin(), message.end());
        input = salted;
    }
    Digest full = evp_hash(EVP_sha256(), input);
    std::size_t n_bytes = spec.output_len();
    std::vector<std::uint8_t> out(full.bytes().begin(), full.bytes().begin() + n_bytes);
    // Mask to the low `bits` bits of the big-endian value.
    unsigned excess = static_cast<unsigned>(8 * n_bytes - spec.toy_state_bits);
    out[0] &= static_cast<std::uint8_t>(0xff >> excess);
    return Digest(std::move(out));
}

}  // namespace

HashSpec HashSpec::toy(int state_bits, std::optional<std::uint8_t> tweak) {
    HashSpec spec{HashAlgorithm::Toy, state_bits, tweak};
    validate_spec(spec);
    return spec;
}

std::size_t HashSpec::output_len() const {
    switch (algorithm) {
        case HashAlgorithm::Sha256: return 32;
        case HashAlgorithm::Sha512: return 64;
        case HashAlgorithm::Sha3_256: return 32;
        case HashAlgorithm::Blake2b: return 64;
        case HashAlgorithm::Toy:
            validate_spec(*this);
            return static_cast<std::size_t>((toy_state_bits + 7) / 8);
    }
    throw ConfigError("unknown hash algorithm");
}

Digest hash(const HashSpec& spec, std::span<const std::uint8_t> message) {
    ++t_hash_calls;
    validate_spec(spec);
    if (spec.algorithm == HashAlgorithm::Toy) {
        return toy_hash(spec, message);
    }
    return evp_hash(evp_md(spec.algorithm), message);
}

Digest hash(const HashSpec& spec, std::string_view message) {
    return hash(spec, std::span<const std::uint8_t>(
                          reinterpret_cast<const std::uint8_t*>(message.data()), message.size()));
}

std::uint32_t toy_iterate(const HashSpec& spec, std::uint32_t state) {
    if (spec.algorithm != HashAlgorithm::Toy) {
        throw DomainError("toy_iterate requires a toy hash spec");
    }
    validate_spec(spec);
    if (state >= (std::uint32_t{1} << spec.toy_state_bits)) {
        throw DomainError("state " + std::to_string(state) + " is out of range for " +
                          std::to_string(spec.toy_state_bits) + " state bits");
    }
    std::size_t n_bytes = spec.output_len();
    std::array<std::uint8_t, 3> encoded{};
    for (std::size_t i = 0; i < n_bytes; ++i) {
        encoded[n_bytes - 1 - i] = static_cast<std::uint8_t>(state >> (8 * i));
    }
    Digest next = hash(spec, std::span<const std::uint8_t>(encoded.data(), n_bytes));
    std::uint32_t value = 0;
    for (std::size_t i = 0; i < n_bytes; ++i) {
        value = value << 8 | next[i];
    }
    return value;
}

std::string hash_name(const HashSpec& spec) {
    switch (spec.algorithm) {
        case HashAlgorithm::Sha256: return "sha256";
        case HashAlgorithm::Sha512: return "sha512";
        case HashAlgorithm::Sha3_256: return "sha3-256";
        case HashAlgorithm::Blake2b: return "blake2b";
        case HashAlgorithm::Toy:
            validate_spec(spec);
            if (spec.toy_tweak) {
                throw NotSerializableError("tweaked toy hashes have no descriptor name");
            }
            return "toy-" + std::to_string(spec.toy_state_bits);
    }
    throw ConfigError("unknown hash algorithm");
}

HashSpec parse_hash_name(std::string_view name) {
    if (name == "sha256") return HashSpec::sha256();
    if (name == "sha512") return HashSpec::sha512();
    if (name == "sha3-256") return HashSpec::sha3_256();
    if (name == "blake2b") return HashSpec::blake2b();
    if (name.starts_with("toy-")) {
        std::string_view digits = name.substr(4);
        int bits = 0;
        auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), bits);
        if (ec != std::errc{} || end != digits.data() + digits.size() || bits < kToyMinBits ||
            bits > kToyMaxBits) {
            throw ConfigError("toy hash name needs state bits in [4, 24]: '" + std::string(name) +
                              "'");
        }
        return HashSpec::toy(bits);
    }
    throw ConfigError("unknown hash algorithm '" + std::string(name) + "'");
}

std::uint64_t hash_invocations() noexcept { return t_hash_calls; }

void reset_hash_invocations() noexcept { t_hash_calls = 0; }

}  // namespace lazydigest
