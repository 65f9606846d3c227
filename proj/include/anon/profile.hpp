#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "anon/embedded_data.hpp"
#include "anon/error.hpp"
#include "anon/hash.hpp"

namespace anon {

enum class Language { c, cpp, java, python };

inline constexpr std::array<Language, 4> kAllLanguages = {Language::c, Language::cpp,
                                                          Language::java, Language::python};

constexpr std::string_view to_string(Language lang) noexcept {
    switch (lang) {
        case Language::c: return "c";
        case Language::cpp: return "cpp";
        case Language::java: return "java";
        case Language::python: return "python";
    }
    return "?";
}

inline std::optional<Language> parse_language(std::string_view name) noexcept {
    for (Language lang : kAllLanguages)
        if (to_string(lang) == name) return lang;
    return std::nullopt;
}

using TokenSet = std::set<std::string, std::less<>>;

/// Fixed token vocabulary of one language plus the cues the binder needs.
struct LanguageProfile {
    Language language{};
    TokenSet keywords;
    TokenSet builtins;
    TokenSet operators;
    TokenSet punctuation;
    TokenSet qualification_separators;
    TokenSet definition_keywords;
    /// Operators sorted longest first, for maximal munch.
    std::vector<std::string> operators_by_length;

    bool is_keyword(std::string_view s) const { return keywords.find(s) != keywords.end(); }
    bool is_builtin(std::string_view s) const { return builtins.find(s) != builtins.end(); }
    bool is_separator(std::string_view s) const {
        return qualification_separators.find(s) != qualification_separators.end();
    }
    bool is_definition_keyword(std::string_view s) const {
        return definition_keywords.find(s) != definition_keywords.end();
    }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    return s;
}

inline bool is_section_header(std::string_view line) {
    if (line.size() < 3 || line.front() != '[' || line.back() != ']') return false;
    return std::all_of(line.begin() + 1, line.end() - 1,
                       [](char c) { return (c >= 'a' && c <= 'z') || c == '_'; });
}

/// Splits a sectioned token file into (section, entry) pairs. Lines starting
/// with '#' are comments, except inside [operators] where '#' is a token.
template <typename Sink>
void for_each_entry(std::string_view text, Sink&& sink) {
    std::string_view section;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.empty()) continue;
        if (is_section_header(line)) {
            section = line.substr(1, line.size() - 2);
            continue;
        }
        if (line.front() == '#' && section != "operators") continue;
        if (section.empty()) throw ConfigError("entry before any section on line " + std::to_string(line_no));
        sink(section, line);
    }
}

}  // namespace detail

/// Parses a profile data file and checks the profile invariants.
inline LanguageProfile parse_profile(Language lang, std::string_view text) {
    LanguageProfile p;
    p.language = lang;
    detail::for_each_entry(text, [&](std::string_view section, std::string_view entry) {
        std::string e(entry);
        if (section == "keywords") p.keywords.insert(e);
        else if (section == "builtins") p.builtins.insert(e);
        else if (section == "operators") p.operators.insert(e);
        else if (section == "punctuation") p.punctuation.insert(e);
        else if (section == "qualification_separators") p.qualification_separators.insert(e);
        else if (section == "definition_keywords") p.definition_keywords.insert(e);
        else throw ConfigError("unknown profile section [" + std::string(section) + "]");
    });

    const std::string name(to_string(lang));
    if (p.keywords.empty()) throw ConfigError(name + " profile has no keywords");
    auto disjoint = [&](const TokenSet& a, const TokenSet& b, const char* what) {
        for (const auto& x : a)
            if (b.count(x)) throw ConfigError(name + " profile: '" + x + "' is in both " + what);
    };
    disjoint(p.keywords, p.builtins, "keywords and builtins");
    disjoint(p.keywords, p.operators, "keywords and operators");
    disjoint(p.builtins, p.operators, "builtins and operators");
    disjoint(p.operators, p.punctuation, "operators and punctuation");
    for (const auto& sep : p.qualification_separators)
        if (!p.operators.count(sep) && !p.punctuation.count(sep))
            throw ConfigError(name + " profile: separator '" + sep + "' is not a known token");
    for (const auto& kw : p.definition_keywords)
        if (!p.keywords.count(kw))
            throw ConfigError(name + " profile: definition keyword '" + kw + "' is not a keyword");

    p.operators_by_length.assign(p.operators.begin(), p.operators.end());
    std::stable_sort(p.operators_by_length.begin(), p.operators_by_length.end(),
                     [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
    return p;
}

inline std::string_view embedded_profile_text(Language lang) noexcept {
    switch (lang) {
        case Language::c: return embedded::c_profile;
        case Language::cpp: return embedded::cpp_profile;
        case Language::java: return embedded::java_profile;
        case Language::python: return embedded::python_profile;
    }
    return {};
}

/// Returns the shipped, immutable profile. Thread-safe.
inline const LanguageProfile& load_profile(Language lang) {
    static const std::array<LanguageProfile, 4> profiles = [] {
        std::array<LanguageProfile, 4> out;
        for (std::size_t i = 0; i < kAllLanguages.size(); ++i)
            out[i] = parse_profile(kAllLanguages[i], embedded_profile_text(kAllLanguages[i]));
        return out;
    }();
    return profiles[static_cast<std::size_t>(lang)];
}

inline const LanguageProfile& load_profile(std::string_view name) {
    if (auto lang = parse_language(name)) return load_profile(*lang);
    throw UnsupportedLanguage(std::string(name));
}

/// Content digest over every section, independent of file formatting.
inline std::uint64_t profile_digest(const LanguageProfile& p) {
    StreamDigest d;
    d.update(to_string(p.language));
    auto section = [&](std::string_view name, const TokenSet& set) {
        d.update("\n[");
        d.update(name);
        d.update("]");
        for (const auto& s : set) {
            d.update("\n");
            d.update(s);
        }
    };
    section("keywords", p.keywords);
    section("builtins", p.builtins);
    section("operators", p.operators);
    section("punctuation", p.punctuation);
    section("qualification_separators", p.qualification_separators);
    section("definition_keywords", p.definition_keywords);
    return d.value();
}

}  // namespace anon
