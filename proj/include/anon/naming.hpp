#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <ranges>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "anon/binder.hpp"
#include "anon/embedded_data.hpp"
#include "anon/hash.hpp"
#include "anon/lexer.hpp"
#include "anon/profile.hpp"
#include "anon/record.hpp"

namespace anon {

enum class NamingScheme { Sequential, Random, Meaningful };

constexpr std::string_view to_string(NamingScheme s) noexcept {
    switch (s) {
        case NamingScheme::Sequential: return "sequential";
        case NamingScheme::Random: return "random";
        case NamingScheme::Meaningful: return "meaningful";
    }
    return "?";
}

inline std::optional<NamingScheme> parse_naming_scheme(std::string_view s) noexcept {
    for (auto v : {NamingScheme::Sequential, NamingScheme::Random, NamingScheme::Meaningful})
        if (to_string(v) == s) return v;
    return std::nullopt;
}

/// Deterministic per-unit random source. The engine is seeded from a stable
/// hash of (seed, record id), so units can be processed in any order.
class SeededGenerator {
public:
    SeededGenerator(std::uint64_t seed, std::string_view record_id)
        : sub_seed_(derive(seed, record_id)), engine_(sub_seed_) {}

    static std::uint64_t derive(std::uint64_t seed, std::string_view record_id) noexcept {
        return mix64(fnv1a64(record_id, mix64(seed)));
    }

    std::uint64_t sub_seed() const noexcept { return sub_seed_; }
    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). std::uniform_int_distribution is
    /// implementation-defined, so draws are done by rejection here.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("below(0)");
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x;
        do x = engine_();
        while (x >= limit);
        return x % bound;
    }

    std::uint64_t next_fallback_counter() noexcept { return ++fallback_counter_; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::uint64_t sub_seed_;
    std::mt19937_64 engine_;
    std::uint64_t fallback_counter_ = 0;
};

/// Names a generator must avoid: the unit profile's keywords and builtins plus
/// an explicit set (original identifiers, names already issued).
class ReservedNames {
public:
    ReservedNames() = default;
    explicit ReservedNames(const LanguageProfile* profile) : profile_(profile) {}

    void insert(std::string name) { names_.insert(std::move(name)); }
    bool contains(std::string_view name) const {
        if (profile_ && (profile_->is_keyword(name) || profile_->is_builtin(name))) return true;
        return names_.find(name) != names_.end();
    }
    std::size_t explicit_size() const noexcept { return names_.size(); }

private:
    const LanguageProfile* profile_ = nullptr;
    std::set<std::string, std::less<>> names_;
};

/// "var<n>" for variables, "fun<n>" for both function classes.
inline std::string sequential_name(IdentifierClass cls, std::size_t counter) {
    if (cls == IdentifierClass::Protected) throw std::invalid_argument("protected names are never generated");
    if (counter == 0) throw std::invalid_argument("sequential counters start at 1");
    return (cls == IdentifierClass::Variable ? "var" : "fun") + std::to_string(counter);
}

inline constexpr std::size_t kRandomNameLength = 16;
inline constexpr int kRandomNameRetries = 1000;

/// 16 characters over [a-z0-9] with a leading letter, not in `reserved`.
/// After kRandomNameRetries collisions a counter suffix makes it unique.
inline std::string random_name(SeededGenerator& gen, const ReservedNames& reserved) {
    static constexpr std::string_view letters = "abcdefghijklmnopqrstuvwxyz";
    static constexpr std::string_view alnum = "abcdefghijklmnopqrstuvwxyz0123456789";
    std::string name(kRandomNameLength, 'a');
    for (int attempt = 0; attempt < kRandomNameRetries; ++attempt) {
        name[0] = letters[gen.below(letters.size())];
        for (std::size_t i = 1; i < kRandomNameLength; ++i) name[i] = alnum[gen.below(alnum.size())];
        if (!reserved.contains(name)) return name;
    }
    std::string suffixed;
    do suffixed = name + "_" + std::to_string(gen.next_fallback_counter());
    while (reserved.contains(suffixed));
    return suffixed;
}

struct VocabularyEntry {
    std::string name;
    IdentifierClass source_class = IdentifierClass::Variable;

    friend auto operator<=>(const VocabularyEntry&, const VocabularyEntry&) = default;
};

/// Real identifier names grouped by the class they were harvested from.
/// Immutable once built.
class Vocabulary {
public:
    Vocabulary() = default;
    Vocabulary(std::vector<VocabularyEntry> entries, std::string provenance, bool fallback_used)
        : entries_(std::move(entries)), provenance_(std::move(provenance)), fallback_used_(fallback_used) {
        std::sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) {
            return std::tie(a.source_class, a.name) < std::tie(b.source_class, b.name);
        });
        entries_.erase(std::unique(entries_.begin(), entries_.end()), entries_.end());
        for (const auto& e : entries_) by_class_[static_cast<std::size_t>(e.source_class)].push_back(e.name);
    }

    std::span<const VocabularyEntry> entries() const noexcept { return entries_; }
    std::span<const std::string> names(IdentifierClass cls) const noexcept {
        if (cls == IdentifierClass::Protected) return {};
        return by_class_[static_cast<std::size_t>(cls)];
    }
    bool contains(std::string_view name, IdentifierClass cls) const {
        auto ns = names(cls);
        return std::binary_search(ns.begin(), ns.end(), name, std::less<>{});
    }
    const std::string& provenance() const noexcept { return provenance_; }
    bool fallback_used() const noexcept { return fallback_used_; }
    bool empty() const noexcept { return entries_.empty(); }

private:
    std::vector<VocabularyEntry> entries_;
    std::array<std::vector<std::string>, 3> by_class_;
    std::string provenance_;
    bool fallback_used_ = false;
};

/// Entries of the shipped curated list.
inline std::vector<VocabularyEntry> fallback_vocabulary_entries() {
    std::vector<VocabularyEntry> out;
    detail::for_each_entry(embedded::fallback_vocab, [&](std::string_view section, std::string_view name) {
        auto cls = parse_identifier_class(section);
        if (!cls || *cls == IdentifierClass::Protected)
            throw ConfigError("unknown vocabulary section [" + std::string(section) + "]");
        out.push_back({std::string(name), *cls});
    });
    return out;
}

namespace detail {

/// Names that would re-lex as a string prefix next to a quote.
inline bool is_string_prefix_name(std::string_view s) {
    static const std::set<std::string_view> prefixes = {
        "L", "u", "U", "u8", "R", "LR", "uR", "UR", "u8R", "r", "b", "f", "br", "rb", "fr", "rf",
        "B", "F", "Br", "bR", "BR", "Rb", "rB", "RB", "Fr", "fR", "FR", "Rf", "rF", "RF"};
    return prefixes.count(s) > 0;
}

}  // namespace detail

/// Whether a harvested name may be used as a replacement: a plain ASCII
/// identifier that starts lowercase (capitalization feeds the type heuristic
/// of the binder) and is reserved in none of the given profiles.
inline bool usable_vocabulary_name(std::string_view s, std::span<const LanguageProfile* const> profiles) {
    if (s.empty() || !((s[0] >= 'a' && s[0] <= 'z') || s[0] == '_')) return false;
    for (char c : s)
        if (!(detail::is_alnum(c) || c == '_')) return false;
    if (detail::is_string_prefix_name(s)) return false;
    for (const auto* p : profiles)
        if (p->is_keyword(s) || p->is_builtin(s)) return false;
    return true;
}

inline std::vector<const LanguageProfile*> all_profiles() {
    std::vector<const LanguageProfile*> out;
    for (auto lang : kAllLanguages) out.push_back(&load_profile(lang));
    return out;
}

/// Streaming harvester behind build_vocabulary.
class VocabularyBuilder {
public:
    explicit VocabularyBuilder(std::vector<const LanguageProfile*> profiles = all_profiles())
        : profiles_(std::move(profiles)) {}

    void add(const DatasetRecord& record) {
        ++records_;
        auto lang = record.parsed_language();
        if (!lang) return;
        const LanguageProfile& profile = load_profile(*lang);
        try {
            const auto stream = tokenize(record.code, profile);
            const auto table = classify_identifiers(stream, profile);
            for (const auto& sym : table.symbols()) {
                if (sym.cls == IdentifierClass::Protected) continue;
                if (!usable_vocabulary_name(sym.name, profiles_)) continue;
                harvested_.insert({sym.name, sym.cls});
            }
        } catch (const LexError&) {
            // Unlexable records contribute nothing.
        }
    }

    /// Classes with no harvested names are filled from the curated list and
    /// the vocabulary is flagged.
    Vocabulary build(std::string provenance) && {
        std::vector<VocabularyEntry> entries(harvested_.begin(), harvested_.end());
        std::array<bool, 3> present{};
        for (const auto& e : entries) present[static_cast<std::size_t>(e.source_class)] = true;
        bool fallback = false;
        for (const auto& e : fallback_vocabulary_entries()) {
            if (present[static_cast<std::size_t>(e.source_class)]) continue;
            if (!usable_vocabulary_name(e.name, profiles_)) continue;
            entries.push_back(e);
            fallback = true;
        }
        return Vocabulary(std::move(entries), std::move(provenance), fallback);
    }

    std::size_t records_seen() const noexcept { return records_; }

private:
    std::vector<const LanguageProfile*> profiles_;
    std::set<VocabularyEntry> harvested_;
    std::size_t records_ = 0;
};

template <std::ranges::input_range R>
    requires std::convertible_to<std::ranges::range_reference_t<R>, const DatasetRecord&>
Vocabulary build_vocabulary(R&& corpus, std::vector<const LanguageProfile*> profiles = all_profiles(),
                            std::string provenance = "corpus") {
    VocabularyBuilder builder(std::move(profiles));
    for (const DatasetRecord& r : corpus) builder.add(r);
    return std::move(builder).build(std::move(provenance));
}

struct NameDraw {
    std::string name;
    bool random_fallback = false;
};

/// Uniform draw among the class's vocabulary names that are not reserved.
/// Falls back to random_name when every candidate is reserved.
inline NameDraw meaningful_name(const Vocabulary& vocab, IdentifierClass cls, SeededGenerator& gen,
                                const ReservedNames& reserved) {
    if (cls == IdentifierClass::Protected) throw std::invalid_argument("protected names are never generated");
    const auto pool = vocab.names(cls);
    if (!pool.empty()) {
        // Rejection sampling is uniform over the unreserved names and cheap
        // while few are reserved; the filtered draw covers the dense case.
        for (int attempt = 0; attempt < 32; ++attempt) {
            const auto& candidate = pool[gen.below(pool.size())];
            if (!reserved.contains(candidate)) return {candidate, false};
        }
        std::vector<const std::string*> open;
        for (const auto& n : pool)
            if (!reserved.contains(n)) open.push_back(&n);
        if (!open.empty()) return {*open[gen.below(open.size())], false};
    }
    return {random_name(gen, reserved), true};
}

}  // namespace anon
