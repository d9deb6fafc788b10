#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lazydigest {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unknown or unsupported configuration, e.g. an unrecognized hash algorithm name.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Argument outside an operation's domain (state value too large, sample too
/// small, difficulty out of range, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Structurally invalid construction parameters (duplicate hash set entries,
/// rate too small for the index encoding, empty seed, ...).
class SpecError : public Error {
public:
    using Error::Error;
};

/// The oracle cache would grow past its configured limit.
class CacheLimitError : public Error {
public:
    using Error::Error;
};

/// An entropy source failed to produce bytes.
class EntropyError : public Error {
public:
    using Error::Error;
};

/// The value has no finite description: oracle state, or a transform outside
/// the named whitelist.
class NotSerializableError : public Error {
public:
    using Error::Error;
};

/// Descriptor text was rejected. offset() is the position of the offending
/// character in the input.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t offset)
        : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

}  // namespace lazydigest
