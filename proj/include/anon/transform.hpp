#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anon/binder.hpp"
#include "anon/error.hpp"
#include "anon/hash.hpp"
#include "anon/lexer.hpp"
#include "anon/naming.hpp"
#include "anon/profile.hpp"
#include "anon/record.hpp"

namespace anon {

/// Identifier classes selected for renaming.
struct TargetSet {
    bool variable = false;
    bool method_definition = false;
    bool method_invocation = false;

    static constexpr TargetSet none() { return {}; }
    static constexpr TargetSet variables() { return {true, false, false}; }
    static constexpr TargetSet method_definitions() { return {false, true, false}; }
    static constexpr TargetSet method_invocations() { return {false, false, true}; }
    static constexpr TargetSet all() { return {true, true, true}; }

    constexpr bool contains(IdentifierClass cls) const noexcept {
        switch (cls) {
            case IdentifierClass::Variable: return variable;
            case IdentifierClass::MethodDefinition: return method_definition;
            case IdentifierClass::MethodInvocation: return method_invocation;
            case IdentifierClass::Protected: return false;
        }
        return false;
    }
    constexpr bool empty() const noexcept { return !variable && !method_definition && !method_invocation; }
    friend constexpr bool operator==(const TargetSet&, const TargetSet&) = default;
};

/// Leading part of a variant tag for the given targets; nullopt for
/// combinations outside the four experiment groups and the empty set.
constexpr std::optional<std::string_view> target_tag(TargetSet t) noexcept {
    if (t == TargetSet::none()) return "none";
    if (t == TargetSet::variables()) return "var";
    if (t == TargetSet::method_definitions()) return "mdef";
    if (t == TargetSet::method_invocations()) return "minv";
    if (t == TargetSet::all()) return "all";
    return std::nullopt;
}

constexpr std::string_view scheme_tag(NamingScheme s) noexcept {
    switch (s) {
        case NamingScheme::Sequential: return "seq";
        case NamingScheme::Random: return "rand";
        case NamingScheme::Meaningful: return "mean";
    }
    return "?";
}

/// One dataset variant: which classes to rename and how.
struct AnonymizationSpec {
    TargetSet targets;
    NamingScheme scheme = NamingScheme::Random;
    std::uint64_t seed = 0;

    std::string tag() const {
        auto t = target_tag(targets);
        std::string lead;
        if (t) lead = std::string(*t);
        else {
            if (targets.variable) lead += "v";
            if (targets.method_definition) lead += "d";
            if (targets.method_invocation) lead += "i";
        }
        return lead + "." + std::string(scheme_tag(scheme));
    }

    std::uint64_t digest() const {
        std::uint64_t h = fnv1a64(tag());
        h = fnv1a64(std::to_string(seed), h ^ 0x2f);
        return mix64(h);
    }
};

/// The eight published variants, in tag order var, mdef, minv, all and
/// random before meaningful within each.
inline std::vector<AnonymizationSpec> standard_variants(std::uint64_t seed) {
    std::vector<AnonymizationSpec> out;
    for (auto t : {TargetSet::variables(), TargetSet::method_definitions(), TargetSet::method_invocations(),
                   TargetSet::all()})
        for (auto s : {NamingScheme::Random, NamingScheme::Meaningful}) out.push_back({t, s, seed});
    return out;
}

inline constexpr std::array<std::string_view, 8> kStandardVariantTags = {
    "var.rand", "var.mean", "mdef.rand", "mdef.mean", "minv.rand", "minv.mean", "all.rand", "all.mean"};

/// Parses "<targets>.<scheme>" where targets is none/var/mdef/minv/all and
/// scheme is seq/rand/mean.
inline std::optional<AnonymizationSpec> parse_variant_tag(std::string_view tag, std::uint64_t seed) {
    const auto dot = tag.find('.');
    if (dot == std::string_view::npos) return std::nullopt;
    const auto lead = tag.substr(0, dot);
    const auto tail = tag.substr(dot + 1);
    AnonymizationSpec spec;
    spec.seed = seed;
    if (lead == "none") spec.targets = TargetSet::none();
    else if (lead == "var") spec.targets = TargetSet::variables();
    else if (lead == "mdef") spec.targets = TargetSet::method_definitions();
    else if (lead == "minv") spec.targets = TargetSet::method_invocations();
    else if (lead == "all") spec.targets = TargetSet::all();
    else return std::nullopt;
    if (tail == "seq") spec.scheme = NamingScheme::Sequential;
    else if (tail == "rand") spec.scheme = NamingScheme::Random;
    else if (tail == "mean") spec.scheme = NamingScheme::Meaningful;
    else return std::nullopt;
    return spec;
}

struct Rename {
    std::string to;
    IdentifierClass cls = IdentifierClass::Variable;
};

/// Old name to new name for one unit. Injective, and no new name collides
/// with a keyword, builtin or any identifier the unit already uses.
class RenameMap {
public:
    bool empty() const noexcept { return pairs_.empty(); }
    std::size_t size() const noexcept { return pairs_.size(); }

    const Rename* find(std::string_view from) const {
        auto it = pairs_.find(from);
        return it == pairs_.end() ? nullptr : &it->second;
    }
    const std::map<std::string, Rename, std::less<>>& pairs() const noexcept { return pairs_; }

    /// First-occurrence order of the renamed symbols.
    const std::vector<std::string>& order() const noexcept { return order_; }

    void add(std::string from, std::string to, IdentifierClass cls) {
        order_.push_back(from);
        pairs_.emplace(std::move(from), Rename{std::move(to), cls});
    }

    std::array<std::size_t, 3> counts_by_class() const {
        std::array<std::size_t, 3> out{};
        for (const auto& [from, r] : pairs_) ++out[static_cast<std::size_t>(r.cls)];
        return out;
    }

    std::size_t random_fallbacks = 0;

private:
    std::map<std::string, Rename, std::less<>> pairs_;
    std::vector<std::string> order_;
};

/// Assigns a fresh name to every symbol whose class is targeted, walking
/// symbols in first-occurrence order. Sequential counters skip names that
/// are already taken.
inline RenameMap plan_renames(const IdentifierTable& table, const AnonymizationSpec& spec, SeededGenerator& gen,
                              const Vocabulary* vocab) {
    if (spec.scheme == NamingScheme::Meaningful && !vocab)
        throw ConfigError("meaningful naming requires a vocabulary");
    RenameMap map;
    if (spec.targets.empty()) return map;

    ReservedNames reserved(table.profile());
    for (const auto& sym : table.symbols()) reserved.insert(sym.name);

    std::size_t var_counter = 0;
    std::size_t fun_counter = 0;
    for (const auto& sym : table.symbols()) {
        if (!spec.targets.contains(sym.cls)) continue;
        std::string fresh;
        switch (spec.scheme) {
            case NamingScheme::Sequential: {
                auto& counter = sym.cls == IdentifierClass::Variable ? var_counter : fun_counter;
                do fresh = sequential_name(sym.cls, ++counter);
                while (reserved.contains(fresh));
                break;
            }
            case NamingScheme::Random:
                fresh = random_name(gen, reserved);
                break;
            case NamingScheme::Meaningful: {
                auto draw = meaningful_name(*vocab, sym.cls, gen, reserved);
                if (draw.random_fallback) ++map.random_fallbacks;
                fresh = std::move(draw.name);
                break;
            }
        }
        reserved.insert(fresh);
        map.add(sym.name, std::move(fresh), sym.cls);
    }
    return map;
}

/// Rewrites the mapped identifier tokens; every other byte is copied.
inline std::string apply_renames(const TokenStream& stream, const RenameMap& map) {
    std::string out;
    out.reserve(stream.source.size() + stream.source.size() / 4);
    for (const auto& t : stream.tokens) {
        const Rename* r = t.kind == TokenKind::Identifier ? map.find(t.text) : nullptr;
        out += r ? r->to : t.text;
    }
    return out;
}

/// Lexed and classified form of a record, shared by every spec applied to it.
struct AnalyzedUnit {
    std::optional<TokenStream> stream;
    std::optional<IdentifierTable> table;
    std::string skip_reason;

    bool ok() const noexcept { return stream.has_value(); }
};

inline AnalyzedUnit analyze_unit(const DatasetRecord& record) {
    AnalyzedUnit unit;
    const auto lang = record.parsed_language();
    if (!lang) {
        unit.skip_reason = "unsupported language: " + record.language;
        return unit;
    }
    const auto& profile = load_profile(*lang);
    try {
        unit.stream = tokenize(record.code, profile);
    } catch (const LexError& e) {
        unit.skip_reason = e.what();
        return unit;
    }
    unit.table = classify_identifiers(*unit.stream, profile);
    return unit;
}

/// Applies `spec` to an already analyzed record. Unanalyzable records pass
/// through unchanged and are flagged as skipped.
inline DatasetRecord transform_analyzed(const DatasetRecord& record, const AnalyzedUnit& unit,
                                        const AnonymizationSpec& spec, const Vocabulary* vocab,
                                        RenameMap* map_out = nullptr) {
    if (spec.scheme == NamingScheme::Meaningful && !vocab)
        throw ConfigError("meaningful naming requires a vocabulary");
    DatasetRecord out = record;
    TransformAnnotation ann;
    ann.variant = spec.tag();
    ann.spec_digest = spec.digest();
    if (!unit.ok()) {
        ann.skipped = true;
        ann.skip_reason = unit.skip_reason;
    } else {
        SeededGenerator gen(spec.seed, record.id);
        RenameMap map = plan_renames(*unit.table, spec, gen, vocab);
        out.code = apply_renames(*unit.stream, map);
        ann.renames = map.size();
        ann.renames_by_class = map.counts_by_class();
        ann.random_fallbacks = map.random_fallbacks;
        if (map_out) *map_out = std::move(map);
    }
    out.transform = std::move(ann);
    return out;
}

inline DatasetRecord transform_unit(const DatasetRecord& record, const AnonymizationSpec& spec,
                                    const Vocabulary* vocab, RenameMap* map_out = nullptr) {
    if (spec.scheme == NamingScheme::Meaningful && !vocab)
        throw ConfigError("meaningful naming requires a vocabulary");
    return transform_analyzed(record, analyze_unit(record), spec, vocab, map_out);
}

/// The eight standard variants of one record, lexed and classified once.
inline std::vector<DatasetRecord> generate_variants(const DatasetRecord& record, std::uint64_t seed,
                                                    const Vocabulary& vocab) {
    const AnalyzedUnit unit = analyze_unit(record);
    std::vector<DatasetRecord> out;
    for (const auto& spec : standard_variants(seed)) out.push_back(transform_analyzed(record, unit, spec, &vocab));
    return out;
}

}  // namespace anon
