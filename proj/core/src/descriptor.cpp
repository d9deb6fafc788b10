#include "lazydigest/descriptor.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <optional>
#include <vector>

#include "lazydigest/algebra.hpp"
#include "lazydigest/constructions.hpp"
#include "lazydigest/errors.hpp"

namespace lazydigest {

namespace {

enum class ParamType {
    Seed,       // non-empty lowercase hex, even length
    U64,        // decimal, any value
    U64Pos,     // decimal, >= 1
    Bits,       // decimal, >= 8, multiple of 8
    HashName,   // per parse_hash_name
    HashList,   // '+'-joined hash names, >= 2, distinct
    Transform,  // whitelisted transform name
};

struct ParamDef {
    std::string key;
    ParamType type;
    bool required;
};

using ParamTable = std::vector<ParamDef>;

ParamTable lazy_table() {
    return {{"seed", ParamType::Seed, true}, {"hash", ParamType::HashName, false}};
}

ParamTable hierarchical_table() {
    return {{"seed", ParamType::Seed, true},
            {"hash", ParamType::HashName, false},
            {"epoch_size", ParamType::U64Pos, false},
            {"chunk_size", ParamType::U64Pos, false}};
}

ParamTable rekey_table() {
    return {{"seed", ParamType::Seed, true},
            {"hash", ParamType::HashName, false},
            {"interval", ParamType::U64Pos, false}};
}

ParamTable sponge_table() {
    return {{"seed", ParamType::Seed, true},
            {"hash", ParamType::HashName, false},
            {"capacity", ParamType::Bits, false},
            {"rate", ParamType::Bits, false}};
}

ParamTable xor_multi_table() {
    return {{"seed", ParamType::Seed, true}, {"hashes", ParamType::HashList, true}};
}

ParamTable with_prefix(std::string prefix, ParamTable table) {
    for (ParamDef& def : table) {
        def.key = prefix + def.key;
    }
    return table;
}

ParamTable composite_table() {
    ParamTable table;
    for (ParamTable part :
         {with_prefix("hier.", hierarchical_table()), with_prefix("rekey.", rekey_table()),
          with_prefix("sponge.", sponge_table()), with_prefix("xor.", xor_multi_table())}) {
        table.insert(table.end(), part.begin(), part.end());
    }
    return table;
}

const std::map<std::string, ParamTable>& leaf_kinds() {
    static const std::map<std::string, ParamTable> kinds = {
        {"lazy", lazy_table()},           {"hierarchical", hierarchical_table()},
        {"rekey", rekey_table()},         {"sponge", sponge_table()},
        {"xor-multi", xor_multi_table()}, {"composite", composite_table()},
    };
    return kinds;
}

struct CombinatorDef {
    std::size_t arity;
    ParamTable params;
};

const std::map<std::string, CombinatorDef>& combinator_kinds() {
    static const std::map<std::string, CombinatorDef> kinds = {
        {"xor", {2, {}}},
        {"slice",
         {1, {{"start", ParamType::U64, true}, {"step", ParamType::U64Pos, true}}}},
        {"transform", {1, {{"fn", ParamType::Transform, true}}}},
    };
    return kinds;
}

const ParamDef* find_param(const ParamTable& table, std::string_view key) {
    for (const ParamDef& def : table) {
        if (def.key == key) return &def;
    }
    return nullptr;
}

// --- value checks shared by parse (with offsets) and serialize/compile ---

struct ValueProblem {
    std::string reason;
    std::size_t rel_offset = 0;  // within the value text
};

std::optional<ValueProblem> check_u64(std::string_view v, std::uint64_t minimum) {
    if (v.empty()) return ValueProblem{"empty integer"};
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] < '0' || v[i] > '9') {
            return ValueProblem{std::string("invalid digit '") + v[i] + "' in integer", i};
        }
    }
    std::uint64_t value = 0;
    auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
    if (ec != std::errc{} || end != v.data() + v.size()) {
        return ValueProblem{"integer out of range"};
    }
    if (value < minimum) {
        return ValueProblem{"integer must be >= " + std::to_string(minimum)};
    }
    return std::nullopt;
}

std::optional<ValueProblem> check_value(ParamType type, std::string_view v) {
    switch (type) {
        case ParamType::Seed: {
            if (v.empty()) return ValueProblem{"empty seed"};
            if (v.size() % 2 != 0) return ValueProblem{"hex seed has odd length"};
            for (std::size_t i = 0; i < v.size(); ++i) {
                char c = v[i];
                bool ok = (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f');
                if (!ok) return ValueProblem{std::string("invalid hex digit '") + c + "'", i};
            }
            return std::nullopt;
        }
        case ParamType::U64:
            return check_u64(v, 0);
        case ParamType::U64Pos:
            return check_u64(v, 1);
        case ParamType::Bits: {
            if (auto problem = check_u64(v, 8)) return problem;
            std::uint64_t value = 0;
            std::from_chars(v.data(), v.data() + v.size(), value);
            if (value % 8 != 0) return ValueProblem{"bit count must be a multiple of 8"};
            if (value > 1u << 20) return ValueProblem{"bit count too large"};
            return std::nullopt;
        }
        case ParamType::HashName: {
            try {
                parse_hash_name(v);
            } catch (const ConfigError& e) {
                return ValueProblem{e.what()};
            }
            return std::nullopt;
        }
        case ParamType::HashList: {
            std::vector<std::string_view> names;
            std::size_t at = 0;
            while (true) {
                std::size_t plus = v.find('+', at);
                std::string_view name = v.substr(at, plus == std::string_view::npos
                                                         ? std::string_view::npos
                                                         : plus - at);
                try {
                    parse_hash_name(name);
                } catch (const ConfigError& e) {
                    return ValueProblem{e.what(), at};
                }
                for (std::string_view seen : names) {
                    if (seen == name) {
                        return ValueProblem{"duplicate hash '" + std::string(name) + "' in set",
                                            at};
                    }
                }
                names.push_back(name);
                if (plus == std::string_view::npos) break;
                at = plus + 1;
            }
            if (names.size() < 2) return ValueProblem{"hash set needs at least 2 members"};
            return std::nullopt;
        }
        case ParamType::Transform: {
            if (!is_whitelisted_transform(v)) {
                return ValueProblem{"unknown transform '" + std::string(v) +
                                    "'; expected \"not\" or \"add:<0..255>\""};
            }
            return std::nullopt;
        }
    }
    return ValueProblem{"unhandled parameter type"};
}

std::uint64_t get_u64(const ConstructionDescriptor& d, const std::string& key,
                      std::uint64_t fallback) {
    auto it = d.params.find(key);
    if (it == d.params.end()) return fallback;
    std::uint64_t value = 0;
    std::from_chars(it->second.data(), it->second.data() + it->second.size(), value);
    return value;
}

// Cross-parameter constraint with defaults applied; empty result means fine.
std::string cross_check(const std::string& kind, const ConstructionDescriptor& d) {
    auto check_hier = [&](const std::string& prefix) -> std::string {
        HierarchicalSpec defaults;
        std::uint64_t epoch = get_u64(d, prefix + "epoch_size", defaults.epoch_size);
        std::uint64_t chunk = get_u64(d, prefix + "chunk_size", defaults.chunk_size);
        if (epoch <= chunk || chunk < 1 || epoch % chunk != 0) {
            return "hierarchical needs epoch_size > chunk_size >= 1 with epoch_size divisible "
                   "by chunk_size (got " +
                   std::to_string(epoch) + " / " + std::to_string(chunk) + ")";
        }
        return {};
    };
    if (kind == "hierarchical") return check_hier("");
    if (kind == "composite") return check_hier("hier.");
    return {};
}

// --- tree validation for serialize/compile (no offsets available) ---

void validate_tree(const ConstructionDescriptor& d) {
    if (auto leaf = leaf_kinds().find(d.kind); leaf != leaf_kinds().end()) {
        if (!d.children.empty()) {
            throw SpecError("'" + d.kind + "' does not take sub-descriptors");
        }
        for (const auto& [key, value] : d.params) {
            const ParamDef* def = find_param(leaf->second, key);
            if (def == nullptr) {
                throw SpecError("unknown parameter '" + key + "' for '" + d.kind + "'");
            }
            if (auto problem = check_value(def->type, value)) {
                throw SpecError("parameter '" + key + "': " + problem->reason);
            }
        }
        for (const ParamDef& def : leaf->second) {
            if (def.required && d.params.find(def.key) == d.params.end()) {
                throw SpecError("'" + d.kind + "' is missing required parameter '" + def.key +
                                "'");
            }
        }
        if (std::string reason = cross_check(d.kind, d); !reason.empty()) {
            throw SpecError(reason);
        }
        return;
    }
    if (auto comb = combinator_kinds().find(d.kind); comb != combinator_kinds().end()) {
        if (d.children.size() != comb->second.arity) {
            throw SpecError("'" + d.kind + "' expects " + std::to_string(comb->second.arity) +
                            " sub-descriptor(s), got " + std::to_string(d.children.size()));
        }
        for (const auto& [key, value] : d.params) {
            const ParamDef* def = find_param(comb->second.params, key);
            if (def == nullptr) {
                throw SpecError("unknown parameter '" + key + "' for '" + d.kind + "'");
            }
            if (auto problem = check_value(def->type, value)) {
                if (def->type == ParamType::Transform) {
                    throw NotSerializableError("parameter '" + key + "': " + problem->reason);
                }
                throw SpecError("parameter '" + key + "': " + problem->reason);
            }
        }
        for (const ParamDef& def : comb->second.params) {
            if (def.required && d.params.find(def.key) == d.params.end()) {
                throw SpecError("'" + d.kind + "' is missing required parameter '" + def.key +
                                "'");
            }
        }
        for (const ConstructionDescriptor& child : d.children) {
            validate_tree(child);
        }
        return;
    }
    throw SpecError("unknown construction kind '" + d.kind + "'");
}

// --- parser ---

constexpr bool is_name_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.';
}

constexpr bool is_value_char(char c) {
    return c != ',' && c != '{' && c != '}' && c != '(' && c != ')' && c != '=' && c != '\0';
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ConstructionDescriptor parse() {
        ConstructionDescriptor node = parse_node();
        if (pos_ != text_.size()) {
            throw ParseError("unexpected trailing text", pos_);
        }
        return node;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void expect(char c, const char* what) {
        if (peek() != c) {
            throw ParseError(std::string("expected '") + c + "' " + what, pos_);
        }
        ++pos_;
    }

    std::string_view scan_name() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_name_char(text_[pos_])) {
            ++pos_;
        }
        return text_.substr(start, pos_ - start);
    }

    std::string_view scan_value() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && is_value_char(text_[pos_])) {
            ++pos_;
        }
        return text_.substr(start, pos_ - start);
    }

    bool next_is_param() const {
        std::size_t p = pos_;
        while (p < text_.size() && is_name_char(text_[p])) {
            ++p;
        }
        return p < text_.size() && text_[p] == '=' && p > pos_;
    }

    void parse_param(ConstructionDescriptor& node, const ParamTable& table) {
        std::size_t key_start = pos_;
        std::string_view key = scan_name();
        if (key.empty()) {
            throw ParseError("expected parameter name", pos_);
        }
        const ParamDef* def = find_param(table, key);
        if (def == nullptr) {
            throw ParseError("unknown parameter '" + std::string(key) + "' for '" + node.kind +
                                 "'",
                             key_start);
        }
        if (node.params.contains(std::string(key))) {
            throw ParseError("duplicate parameter '" + std::string(key) + "'", key_start);
        }
        expect('=', "after parameter name");
        std::size_t value_start = pos_;
        std::string_view value = scan_value();
        if (value.empty()) {
            throw ParseError("empty value for parameter '" + std::string(key) + "'", value_start);
        }
        if (auto problem = check_value(def->type, value)) {
            throw ParseError(problem->reason, value_start + problem->rel_offset);
        }
        node.params.emplace(std::string(key), std::string(value));
    }

    void finish_leaf(ConstructionDescriptor& node, const ParamTable& table,
                     std::size_t node_start) {
        expect('{', "after construction kind");
        if (peek() != '}') {
            while (true) {
                parse_param(node, table);
                if (peek() == ',') {
                    ++pos_;
                    continue;
                }
                break;
            }
        }
        expect('}', "to close parameter list");
        require_params(node, table, node_start);
        if (std::string reason = cross_check(node.kind, node); !reason.empty()) {
            throw ParseError(reason, node_start);
        }
    }

    void finish_combinator(ConstructionDescriptor& node, const CombinatorDef& def,
                           std::size_t node_start) {
        expect('(', "after combinator name");
        bool params_started = false;
        if (peek() != ')') {
            while (true) {
                if (next_is_param()) {
                    params_started = true;
                    parse_param(node, def.params);
                } else {
                    if (params_started) {
                        throw ParseError("sub-descriptors must come before parameters", pos_);
                    }
                    node.children.push_back(parse_node());
                }
                if (peek() == ',') {
                    ++pos_;
                    continue;
                }
                break;
            }
        }
        expect(')', "to close combinator");
        if (node.children.size() != def.arity) {
            throw ParseError("'" + node.kind + "' expects " + std::to_string(def.arity) +
                                 " sub-descriptor(s), got " +
                                 std::to_string(node.children.size()),
                             node_start);
        }
        require_params(node, def.params, node_start);
    }

    void require_params(const ConstructionDescriptor& node, const ParamTable& table,
                        std::size_t node_start) {
        for (const ParamDef& def : table) {
            if (def.required && node.params.find(def.key) == node.params.end()) {
                throw ParseError("'" + node.kind + "' is missing required parameter '" + def.key +
                                     "'",
                                 node_start);
            }
        }
    }

    ConstructionDescriptor parse_node() {
        std::size_t node_start = pos_;
        std::string_view kind = scan_name();
        if (kind.empty()) {
            throw ParseError("expected a construction kind", pos_);
        }
        ConstructionDescriptor node;
        node.kind = std::string(kind);
        if (auto leaf = leaf_kinds().find(node.kind); leaf != leaf_kinds().end()) {
            finish_leaf(node, leaf->second, node_start);
            return node;
        }
        if (auto comb = combinator_kinds().find(node.kind); comb != combinator_kinds().end()) {
            finish_combinator(node, comb->second, node_start);
            return node;
        }
        throw ParseError("unknown construction kind '" + node.kind + "'", node_start);
    }
};

// --- building specs from validated descriptors ---

std::vector<std::uint8_t> seed_param(const ConstructionDescriptor& d, const std::string& key) {
    return parse_hex(d.params.at(key));
}

HashSpec hash_param(const ConstructionDescriptor& d, const std::string& key) {
    auto it = d.params.find(key);
    return it == d.params.end() ? HashSpec::sha256() : parse_hash_name(it->second);
}

LazySpec build_lazy(const ConstructionDescriptor& d) {
    return {seed_param(d, "seed"), hash_param(d, "hash")};
}

HierarchicalSpec build_hierarchical(const ConstructionDescriptor& d,
                                    const std::string& prefix = {}) {
    HierarchicalSpec spec;
    spec.master_seed = seed_param(d, prefix + "seed");
    spec.hash = hash_param(d, prefix + "hash");
    spec.epoch_size = get_u64(d, prefix + "epoch_size", spec.epoch_size);
    spec.chunk_size = get_u64(d, prefix + "chunk_size", spec.chunk_size);
    return spec;
}

RekeySpec build_rekey(const ConstructionDescriptor& d, const std::string& prefix = {}) {
    RekeySpec spec;
    spec.seed = seed_param(d, prefix + "seed");
    spec.hash = hash_param(d, prefix + "hash");
    spec.rekey_interval = get_u64(d, prefix + "interval", spec.rekey_interval);
    return spec;
}

SpongeSpec build_sponge(const ConstructionDescriptor& d, const std::string& prefix = {}) {
    SpongeSpec spec;
    spec.seed = seed_param(d, prefix + "seed");
    spec.hash = hash_param(d, prefix + "hash");
    spec.capacity_bits = static_cast<std::uint32_t>(get_u64(d, prefix + "capacity", spec.capacity_bits));
    spec.rate_bits = static_cast<std::uint32_t>(get_u64(d, prefix + "rate", spec.rate_bits));
    return spec;
}

XorMultiSpec build_xor_multi(const ConstructionDescriptor& d, const std::string& prefix = {}) {
    XorMultiSpec spec;
    spec.seed = seed_param(d, prefix + "seed");
    const std::string& list = d.params.at(prefix + "hashes");
    std::size_t at = 0;
    while (true) {
        std::size_t plus = list.find('+', at);
        spec.hashes.push_back(parse_hash_name(
            std::string_view(list).substr(at, plus == std::string::npos ? plus : plus - at)));
        if (plus == std::string::npos) break;
        at = plus + 1;
    }
    return spec;
}

CompositeSpec build_composite(const ConstructionDescriptor& d) {
    return {build_xor_multi(d, "xor."), build_rekey(d, "rekey."), build_hierarchical(d, "hier."),
            build_sponge(d, "sponge.")};
}

StreamPtr compile_validated(const ConstructionDescriptor& d) {
    if (d.kind == "lazy") return make_stream(build_lazy(d));
    if (d.kind == "hierarchical") return make_stream(build_hierarchical(d));
    if (d.kind == "rekey") return make_stream(build_rekey(d));
    if (d.kind == "sponge") return make_stream(build_sponge(d));
    if (d.kind == "xor-multi") return make_stream(build_xor_multi(d));
    if (d.kind == "composite") return make_stream(build_composite(d));
    if (d.kind == "xor") {
        return xor_streams(compile_validated(d.children[0]), compile_validated(d.children[1]));
    }
    if (d.kind == "slice") {
        return slice_stream(compile_validated(d.children[0]), get_u64(d, "start", 0),
                            get_u64(d, "step", 1));
    }
    if (d.kind == "transform") {
        return transform_stream(compile_validated(d.children[0]),
                                parse_transform_name(d.params.at("fn")));
    }
    throw SpecError("unknown construction kind '" + d.kind + "'");
}

void serialize_node(const ConstructionDescriptor& d, std::string& out) {
    out += d.kind;
    if (d.children.empty() && leaf_kinds().contains(d.kind)) {
        out += '{';
        bool first = true;
        for (const auto& [key, value] : d.params) {
            if (!first) out += ',';
            first = false;
            out += key;
            out += '=';
            out += value;
        }
        out += '}';
        return;
    }
    out += '(';
    bool first = true;
    for (const ConstructionDescriptor& child : d.children) {
        if (!first) out += ',';
        first = false;
        serialize_node(child, out);
    }
    for (const auto& [key, value] : d.params) {
        if (!first) out += ',';
        first = false;
        out += key;
        out += '=';
        out += value;
    }
    out += ')';
}

}  // namespace

std::string serialize_descriptor(const ConstructionDescriptor& d) {
    validate_tree(d);
    std::string out;
    serialize_node(d, out);
    return out;
}

ConstructionDescriptor parse_descriptor(std::string_view text) { return Parser(text).parse(); }

StreamPtr compile_descriptor(const ConstructionDescriptor& d) {
    validate_tree(d);
    return compile_validated(d);
}

}  // namespace lazydigest
