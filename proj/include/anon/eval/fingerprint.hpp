#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "anon/binder.hpp"
#include "anon/hash.hpp"
#include "anon/lexer.hpp"

namespace anon::eval {

/// Sorted, deduplicated k-gram hashes of a class-normalized token sequence.
struct Fingerprint {
    std::vector<std::uint64_t> hashes;

    bool empty() const noexcept { return hashes.empty(); }
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

inline constexpr std::size_t kDefaultGramLength = 5;

/// Token texts with renameable identifiers replaced by a placeholder for
/// their class. Whitespace and comments are dropped; everything else,
/// including protected and builtin names, is kept verbatim.
inline std::vector<std::string> normalized_tokens(const TokenStream& stream, const IdentifierTable& table) {
    std::vector<std::string> out;
    for (const auto& t : stream.tokens) {
        if (t.is_trivia()) continue;
        if (t.kind == TokenKind::Identifier) {
            if (auto cls = table.class_of(t.text); cls && *cls != IdentifierClass::Protected) {
                out.emplace_back(std::string("\x1f") + std::string(to_string(*cls)));
                continue;
            }
        }
        out.push_back(t.text);
    }
    return out;
}

/// Units shorter than k contribute a single gram over all their tokens.
inline Fingerprint structure_fingerprint(const TokenStream& stream, const IdentifierTable& table,
                                         std::size_t k = kDefaultGramLength) {
    if (k < 2) throw std::invalid_argument("gram length must be at least 2");
    const auto tokens = normalized_tokens(stream, table);
    Fingerprint fp;
    if (tokens.empty()) return fp;
    auto gram = [&](std::size_t first, std::size_t len) {
        std::uint64_t h = kFnvOffset;
        for (std::size_t i = first; i < first + len; ++i) {
            h = fnv1a64(tokens[i], h);
            h = fnv1a64(std::string_view("\0", 1), h);
        }
        return h;
    };
    if (tokens.size() < k) {
        fp.hashes.push_back(gram(0, tokens.size()));
    } else {
        for (std::size_t i = 0; i + k <= tokens.size(); ++i) fp.hashes.push_back(gram(i, k));
    }
    std::sort(fp.hashes.begin(), fp.hashes.end());
    fp.hashes.erase(std::unique(fp.hashes.begin(), fp.hashes.end()), fp.hashes.end());
    return fp;
}

/// |A ∩ B| / |A ∪ B|; two empty sets are identical.
inline double jaccard(const Fingerprint& a, const Fingerprint& b) {
    if (a.empty() && b.empty()) return 1.0;
    std::size_t common = 0;
    auto i = a.hashes.begin(), j = b.hashes.begin();
    while (i != a.hashes.end() && j != b.hashes.end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else ++common, ++i, ++j;
    }
    const std::size_t uni = a.hashes.size() + b.hashes.size() - common;
    return static_cast<double>(common) / static_cast<double>(uni);
}

}  // namespace anon::eval
