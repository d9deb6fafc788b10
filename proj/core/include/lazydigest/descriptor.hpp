#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lazydigest/extended_digest.hpp"

namespace lazydigest {

/// Finite, serializable description of an unbounded stream: a construction
/// kind (or combinator) with parameters and optional sub-descriptors. The
/// descriptor's byte length depends only on its parameters, never on how many
/// indices will ever be queried.
///
/// Grammar (single line, no whitespace):
///   node       := kind "{" params "}" | combinator "(" node ("," node)* ["," params] ")"
///   kind       := "lazy" | "hierarchical" | "rekey" | "sponge" | "xor-multi" | "composite"
///   combinator := "xor" | "slice" | "transform"
///   params     := key "=" value ("," key "=" value)*
///
/// Seeds are lowercase hex, integers decimal, hash names per hash_name().
/// Canonical form orders params lexicographically by key.
struct ConstructionDescriptor {
    std::string kind;
    std::map<std::string, std::string> params;
    std::vector<ConstructionDescriptor> children;

    friend bool operator==(const ConstructionDescriptor&, const ConstructionDescriptor&) = default;
};

/// Canonical single-line text. Validates the tree first; throws SpecError for
/// unknown kinds/params or missing required params, NotSerializableError for
/// a transform outside the whitelist.
std::string serialize_descriptor(const ConstructionDescriptor& d);

/// Parses and validates. Throws ParseError with the offset of the offending
/// character; malformed hex, unknown hash names, unknown params, and
/// out-of-range values each get a distinct diagnostic.
ConstructionDescriptor parse_descriptor(std::string_view text);

/// Builds the described stream.
StreamPtr compile_descriptor(const ConstructionDescriptor& d);

}  // namespace lazydigest
