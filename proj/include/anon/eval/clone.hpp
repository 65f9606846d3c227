#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "anon/corpus.hpp"
#include "anon/error.hpp"
#include "anon/eval/fingerprint.hpp"
#include "anon/naming.hpp"
#include "anon/record.hpp"

namespace anon::eval {

enum class CloneBackend { LiteralTokens, StructuralFingerprint };

constexpr std::string_view to_string(CloneBackend b) noexcept {
    return b == CloneBackend::LiteralTokens ? "literal" : "structural";
}

inline std::optional<CloneBackend> parse_clone_backend(std::string_view s) noexcept {
    if (s == "literal") return CloneBackend::LiteralTokens;
    if (s == "structural") return CloneBackend::StructuralFingerprint;
    return std::nullopt;
}

inline constexpr double kDefaultCloneThreshold = 0.7;

struct LabeledPair {
    std::size_t first = 0;
    std::size_t second = 0;
    bool clone = false;
};

struct CloneVerdict {
    std::pair<std::string, std::string> pair;
    double similarity = 0.0;
    bool predicted = false;
    bool actual = false;
    CloneBackend backend = CloneBackend::LiteralTokens;
};

struct CloneMetrics {
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::size_t positives = 0;
    std::size_t negatives = 0;
    double threshold = kDefaultCloneThreshold;
};

struct CloneEvalResult {
    std::vector<CloneVerdict> verdicts;
    CloneMetrics metrics;
};

/// Every within-group pair as a positive, plus an equally sized sample of
/// cross-group pairs as negatives. Records with no clone_group form
/// singleton groups. Depends only on ids, groups and seed, so index-aligned
/// variant corpora yield the same pairs.
inline std::vector<LabeledPair> clone_pairs(std::span<const DatasetRecord> corpus, std::uint64_t seed) {
    std::map<std::string, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        if (corpus[i].clone_group) groups[*corpus[i].clone_group].push_back(i);

    std::vector<LabeledPair> pairs;
    for (const auto& [name, members] : groups)
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b) pairs.push_back({members[a], members[b], true});
    const std::size_t positives = pairs.size();

    auto group_of = [&](std::size_t i) -> const std::string* {
        return corpus[i].clone_group ? &*corpus[i].clone_group : nullptr;
    };
    auto cross = [&](std::size_t i, std::size_t j) {
        const auto* gi = group_of(i);
        const auto* gj = group_of(j);
        return i != j && (!gi || !gj || *gi != *gj);
    };

    SeededGenerator gen(seed, "clone-negatives");
    std::set<std::pair<std::size_t, std::size_t>> taken;
    const std::size_t n = corpus.size();
    std::size_t attempts = 0;
    while (taken.size() < positives && n >= 2 && attempts < 100 * positives + 1000) {
        ++attempts;
        std::size_t i = gen.below(n), j = gen.below(n);
        if (!cross(i, j)) continue;
        if (i > j) std::swap(i, j);
        taken.insert({i, j});
    }
    // Dense corpora: finish deterministically from the full enumeration.
    for (std::size_t i = 0; i < n && taken.size() < positives; ++i)
        for (std::size_t j = i + 1; j < n && taken.size() < positives; ++j)
            if (cross(i, j)) taken.insert({i, j});
    for (const auto& [i, j] : taken) pairs.push_back({i, j, false});
    return pairs;
}

/// Σ min / Σ max over token-text counts, whitespace excluded.
inline double literal_similarity(const TokenStream& a, const TokenStream& b) {
    std::map<std::string_view, std::pair<std::size_t, std::size_t>> counts;
    for (const auto& t : a.tokens)
        if (t.kind != TokenKind::Whitespace) ++counts[t.text].first;
    for (const auto& t : b.tokens)
        if (t.kind != TokenKind::Whitespace) ++counts[t.text].second;
    if (counts.empty()) return 1.0;
    std::size_t lo = 0, hi = 0;
    for (const auto& [text, c] : counts) {
        lo += std::min(c.first, c.second);
        hi += std::max(c.first, c.second);
    }
    return static_cast<double>(lo) / static_cast<double>(hi);
}

namespace detail {

struct CloneUnit {
    std::optional<TokenStream> stream;
    std::optional<IdentifierTable> table;
    Fingerprint fingerprint;
};

inline CloneUnit prepare_unit(const DatasetRecord& r, CloneBackend backend, std::size_t k) {
    CloneUnit u;
    const auto lang = r.parsed_language();
    if (!lang) return u;
    const auto& profile = load_profile(*lang);
    try {
        u.stream = tokenize(r.code, profile);
    } catch (const LexError&) {
        return u;
    }
    if (backend == CloneBackend::StructuralFingerprint) {
        u.table = classify_identifiers(*u.stream, profile);
        u.fingerprint = structure_fingerprint(*u.stream, *u.table, k);
    }
    return u;
}

}  // namespace detail

inline CloneMetrics score_verdicts(const std::vector<CloneVerdict>& verdicts, double threshold) {
    CloneMetrics m;
    m.threshold = threshold;
    std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
    for (const auto& v : verdicts) {
        if (v.actual) ++m.positives;
        else ++m.negatives;
        if (v.predicted && v.actual) ++tp;
        else if (v.predicted) ++fp;
        else if (v.actual) ++fn;
        else ++tn;
    }
    const double total = static_cast<double>(verdicts.size());
    m.accuracy = total > 0 ? static_cast<double>(tp + tn) / total : 0.0;
    m.precision = tp + fp > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fp) : 0.0;
    m.recall = tp + fn > 0 ? static_cast<double>(tp) / static_cast<double>(tp + fn) : 0.0;
    m.f1 = m.precision + m.recall > 0 ? 2 * m.precision * m.recall / (m.precision + m.recall) : 0.0;
    return m;
}

/// Scores the pairs of clone_pairs() with one backend. A pair is predicted
/// a clone when its similarity reaches `threshold`. Records that fail to
/// lex have similarity 0 to everything.
inline CloneEvalResult clone_eval(std::span<const DatasetRecord> corpus, CloneBackend backend,
                                  double threshold = kDefaultCloneThreshold, std::uint64_t seed = 0,
                                  std::size_t k = kDefaultGramLength, unsigned workers = 1) {
    if (threshold < 0.0 || threshold > 1.0) throw ConfigError("threshold must lie in [0, 1]");
    const auto pairs = clone_pairs(corpus, seed);
    const bool has_pos = std::any_of(pairs.begin(), pairs.end(), [](const auto& p) { return p.clone; });
    const bool has_neg = std::any_of(pairs.begin(), pairs.end(), [](const auto& p) { return !p.clone; });
    if (!has_pos || !has_neg) throw DataError("degenerate clone corpus: need positive and negative pairs", 0);

    std::vector<detail::CloneUnit> units(corpus.size());
    parallel_for(corpus.size(), workers, [&](std::size_t i) { units[i] = detail::prepare_unit(corpus[i], backend, k); });

    CloneEvalResult result;
    result.verdicts.resize(pairs.size());
    parallel_for(pairs.size(), workers, [&](std::size_t p) {
        const auto& pair = pairs[p];
        const auto& a = units[pair.first];
        const auto& b = units[pair.second];
        double sim = 0.0;
        if (a.stream && b.stream) {
            sim = backend == CloneBackend::LiteralTokens ? literal_similarity(*a.stream, *b.stream)
                                                         : jaccard(a.fingerprint, b.fingerprint);
        }
        result.verdicts[p] = CloneVerdict{{corpus[pair.first].id, corpus[pair.second].id}, sim, sim >= threshold,
                                          pair.clone, backend};
    });
    result.metrics = score_verdicts(result.verdicts, threshold);
    return result;
}

}  // namespace anon::eval
