#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "anon/lexer.hpp"
#include "anon/profile.hpp"

namespace anon::eval {

/// Splits an identifier on underscores, digits and case boundaries and
/// lowercases the pieces: "parseHTTPHeader_v2" -> parse, http, header, v.
inline std::vector<std::string> split_identifier(std::string_view id) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) out.push_back(std::move(cur));
        cur.clear();
    };
    auto lower = [](char c) { return static_cast<char>(c >= 'A' && c <= 'Z' ? c + 32 : c); };
    auto is_up = [](char c) { return c >= 'A' && c <= 'Z'; };
    auto is_lo = [](char c) { return c >= 'a' && c <= 'z'; };
    for (std::size_t i = 0; i < id.size(); ++i) {
        const char c = id[i];
        if (!(is_up(c) || is_lo(c))) {
            flush();
            continue;
        }
        if (is_up(c) && !cur.empty()) {
            const char p = id[i - 1];
            const bool next_lower = i + 1 < id.size() && is_lo(id[i + 1]);
            if (is_lo(p) || (is_up(p) && next_lower)) flush();
        }
        cur += lower(c);
    }
    flush();
    return out;
}

/// Terms of natural-language text: alphabetic runs, split like identifiers.
inline std::vector<std::string> text_terms(std::string_view text) { return split_identifier(text); }

/// Terms a lexical code search sees: identifier fragments and keywords.
/// Falls back to plain text splitting when the code does not lex.
inline std::vector<std::string> code_terms(std::string_view code, const LanguageProfile* profile) {
    if (!profile) return text_terms(code);
    try {
        const auto stream = tokenize(code, *profile);
        std::vector<std::string> out;
        for (const auto& t : stream.tokens) {
            if (t.kind == TokenKind::Identifier || t.kind == TokenKind::Keyword)
                for (auto& piece : split_identifier(t.text)) out.push_back(std::move(piece));
        }
        return out;
    } catch (const LexError&) {
        return text_terms(code);
    }
}

}  // namespace anon::eval
