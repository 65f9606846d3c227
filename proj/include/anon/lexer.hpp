#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "anon/error.hpp"
#include "anon/profile.hpp"

namespace anon {

enum class TokenKind {
    Keyword,
    Operator,
    Identifier,
    NumericLiteral,
    StringLiteral,
    Comment,
    Whitespace,
    Punctuation,
};

constexpr std::string_view to_string(TokenKind kind) noexcept {
    switch (kind) {
        case TokenKind::Keyword: return "Keyword";
        case TokenKind::Operator: return "Operator";
        case TokenKind::Identifier: return "Identifier";
        case TokenKind::NumericLiteral: return "NumericLiteral";
        case TokenKind::StringLiteral: return "StringLiteral";
        case TokenKind::Comment: return "Comment";
        case TokenKind::Whitespace: return "Whitespace";
        case TokenKind::Punctuation: return "Punctuation";
    }
    return "?";
}

/// Half-open byte range into the source.
struct Span {
    std::size_t start = 0;
    std::size_t end = 0;

    std::size_t size() const noexcept { return end - start; }
    friend bool operator==(const Span&, const Span&) = default;
};

struct Token {
    TokenKind kind{};
    std::string text;
    Span span;

    bool is_trivia() const noexcept {
        return kind == TokenKind::Whitespace || kind == TokenKind::Comment;
    }
    /// True for operator or punctuation tokens spelled exactly `s`.
    bool is_symbol(std::string_view s) const noexcept {
        return (kind == TokenKind::Operator || kind == TokenKind::Punctuation) && text == s;
    }
    friend bool operator==(const Token&, const Token&) = default;
};

/// Contiguous token cover of `source`: concatenating the token texts
/// reproduces it byte for byte.
struct TokenStream {
    std::string source;
    std::vector<Token> tokens;

    std::string reconstruct() const {
        std::string out;
        out.reserve(source.size());
        for (const auto& t : tokens) out += t.text;
        return out;
    }

    std::vector<TokenKind> kinds() const {
        std::vector<TokenKind> out;
        out.reserve(tokens.size());
        for (const auto& t : tokens) out.push_back(t.kind);
        return out;
    }
};

/// Returns the offset of the first byte that breaks UTF-8 well-formedness,
/// or npos.
inline std::size_t find_invalid_utf8(std::string_view s) noexcept {
    const auto* p = reinterpret_cast<const unsigned char*>(s.data());
    const std::size_t n = s.size();
    std::size_t i = 0;
    while (i < n) {
        const unsigned char c = p[i];
        if (c < 0x80) {
            ++i;
            continue;
        }
        std::size_t len;
        std::uint32_t cp;
        if ((c & 0xe0) == 0xc0) len = 2, cp = c & 0x1f;
        else if ((c & 0xf0) == 0xe0) len = 3, cp = c & 0x0f;
        else if ((c & 0xf8) == 0xf0) len = 4, cp = c & 0x07;
        else return i;
        if (i + len > n) return i;
        for (std::size_t j = 1; j < len; ++j) {
            if ((p[i + j] & 0xc0) != 0x80) return i;
            cp = (cp << 6) | (p[i + j] & 0x3f);
        }
        const bool overlong = (len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000);
        if (overlong || cp > 0x10ffff || (cp >= 0xd800 && cp <= 0xdfff)) return i;
        i += len;
    }
    return std::string_view::npos;
}

namespace detail {

constexpr bool is_ascii_alpha(char c) noexcept { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
constexpr bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }
constexpr bool is_alnum(char c) noexcept { return is_ascii_alpha(c) || is_digit(c); }
constexpr bool is_space(char c) noexcept {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}
constexpr bool is_non_ascii(char c) noexcept { return static_cast<unsigned char>(c) >= 0x80; }

inline std::size_t utf8_length(char lead) noexcept {
    const auto c = static_cast<unsigned char>(lead);
    if (c < 0x80) return 1;
    if ((c & 0xe0) == 0xc0) return 2;
    if ((c & 0xf0) == 0xe0) return 3;
    return 4;
}

class Lexer {
public:
    Lexer(std::string_view src, const LanguageProfile& profile) : src_(src), profile_(profile) {}

    std::vector<Token> run() {
        while (pos_ < src_.size()) step();
        return std::move(out_);
    }

private:
    Language lang() const noexcept { return profile_.language; }
    bool c_family() const noexcept { return lang() != Language::python; }
    char at(std::size_t i) const noexcept { return i < src_.size() ? src_[i] : '\0'; }

    void emit(TokenKind kind, std::size_t end) {
        out_.push_back(Token{kind, std::string(src_.substr(pos_, end - pos_)), Span{pos_, end}});
        pos_ = end;
    }

    bool ident_start(char c) const noexcept {
        return is_ascii_alpha(c) || c == '_' || is_non_ascii(c) || (c == '$' && lang() == Language::java);
    }
    bool ident_continue(char c) const noexcept { return ident_start(c) || is_digit(c); }

    // Backslash-newline is a line continuation in every supported language.
    std::size_t continuation_length(std::size_t i) const noexcept {
        if (at(i) != '\\') return 0;
        if (at(i + 1) == '\n') return 2;
        if (at(i + 1) == '\r' && at(i + 2) == '\n') return 3;
        return 0;
    }

    void step() {
        const char c = src_[pos_];
        if (is_space(c) || continuation_length(pos_)) return lex_whitespace();
        if (c_family() && c == '/' && at(pos_ + 1) == '/') return lex_line_comment();
        if (c_family() && c == '/' && at(pos_ + 1) == '*') return lex_block_comment();
        if (!c_family() && c == '#') return lex_line_comment();
        if (c == '"' || c == '\'') return lex_string(pos_);
        if (is_digit(c) || (c == '.' && is_digit(at(pos_ + 1)))) return lex_number();
        if (ident_start(c)) return lex_word();
        for (const auto& op : profile_.operators_by_length) {
            if (src_.compare(pos_, op.size(), op) == 0) return emit(TokenKind::Operator, pos_ + op.size());
        }
        // Everything else (known punctuation or a stray code point) is a
        // single punctuation token.
        emit(TokenKind::Punctuation, std::min(src_.size(), pos_ + utf8_length(c)));
    }

    void lex_whitespace() {
        std::size_t i = pos_;
        while (i < src_.size()) {
            if (is_space(src_[i])) ++i;
            else if (auto n = continuation_length(i)) i += n;
            else break;
        }
        emit(TokenKind::Whitespace, i);
    }

    void lex_line_comment() {
        const auto nl = src_.find('\n', pos_);
        std::size_t end = nl == std::string_view::npos ? src_.size() : nl;
        if (end > pos_ && src_[end - 1] == '\r') --end;
        emit(TokenKind::Comment, std::max(end, pos_ + 1));
    }

    void lex_block_comment() {
        const auto close = src_.find("*/", pos_ + 2);
        if (close == std::string_view::npos) throw LexError("unterminated block comment", pos_);
        emit(TokenKind::Comment, close + 2);
    }

    bool is_string_prefix(std::string_view word, char quote) const {
        switch (lang()) {
            case Language::c:
                return word == "L" || word == "u" || word == "U" || word == "u8";
            case Language::cpp:
                if (word == "L" || word == "u" || word == "U" || word == "u8") return true;
                return quote == '"' && (word == "R" || word == "LR" || word == "uR" || word == "UR" || word == "u8R");
            case Language::java:
                return false;
            case Language::python: {
                if (word.empty() || word.size() > 2) return false;
                std::string lower;
                for (char ch : word) lower += static_cast<char>(ch | 0x20);
                return lower == "r" || lower == "u" || lower == "b" || lower == "f" || lower == "br" ||
                       lower == "rb" || lower == "fr" || lower == "rf";
            }
        }
        return false;
    }

    void lex_word() {
        std::size_t i = pos_;
        while (i < src_.size() && ident_continue(src_[i])) i += utf8_length(src_[i]);
        const std::string_view word = src_.substr(pos_, i - pos_);
        const char next = at(i);
        if ((next == '"' || next == '\'') && is_string_prefix(word, next)) {
            if (lang() == Language::cpp && word.back() == 'R') return lex_raw_string(i);
            return lex_string(i);
        }
        emit(profile_.is_keyword(word) ? TokenKind::Keyword : TokenKind::Identifier, i);
    }

    // `quote_pos` points at the opening quote; any prefix starts at pos_.
    void lex_string(std::size_t quote_pos) {
        const char q = src_[quote_pos];
        const bool triple = (lang() == Language::python || (lang() == Language::java && q == '"')) &&
                            at(quote_pos + 1) == q && at(quote_pos + 2) == q;
        std::size_t i = quote_pos + (triple ? 3 : 1);
        while (true) {
            if (i >= src_.size()) throw LexError("unterminated string literal", pos_);
            const char c = src_[i];
            if (c == '\\') {
                if (auto n = continuation_length(i)) i += n;
                else i += 2;
                continue;
            }
            if (triple) {
                if (c == q && at(i + 1) == q && at(i + 2) == q) {
                    i += 3;
                    break;
                }
            } else {
                if (c == q) {
                    ++i;
                    break;
                }
                if (c == '\n') throw LexError("unterminated string literal", pos_);
            }
            ++i;
        }
        emit(TokenKind::StringLiteral, std::min(i, src_.size()));
    }

    void lex_raw_string(std::size_t quote_pos) {
        const auto open = src_.find('(', quote_pos + 1);
        if (open == std::string_view::npos || open - quote_pos - 1 > 16)
            throw LexError("malformed raw string delimiter", pos_);
        const std::string close = ")" + std::string(src_.substr(quote_pos + 1, open - quote_pos - 1)) + "\"";
        const auto end = src_.find(close, open + 1);
        if (end == std::string_view::npos) throw LexError("unterminated raw string literal", pos_);
        emit(TokenKind::StringLiteral, end + close.size());
    }

    void lex_number() {
        const bool hex = src_[pos_] == '0' && (at(pos_ + 1) == 'x' || at(pos_ + 1) == 'X');
        std::size_t i = pos_;
        while (i < src_.size()) {
            const char c = src_[i];
            if (is_alnum(c) || c == '_') {
                ++i;
            } else if (c == '.') {
                if (at(i + 1) == '.') break;
                ++i;
            } else if ((c == '+' || c == '-') && i > pos_) {
                const char prev = src_[i - 1];
                const bool exponent = hex ? (prev == 'p' || prev == 'P') : (prev == 'e' || prev == 'E');
                if (!exponent) break;
                ++i;
            } else if (c == '\'' && lang() == Language::cpp && is_alnum(at(i + 1))) {
                ++i;
            } else {
                break;
            }
        }
        emit(TokenKind::NumericLiteral, i);
    }

    std::string_view src_;
    const LanguageProfile& profile_;
    std::size_t pos_ = 0;
    std::vector<Token> out_;
};

}  // namespace detail

/// Losslessly tokenizes one source unit.
///
/// Throws EncodingError for malformed UTF-8 and LexError for unterminated
/// strings or block comments; both carry the byte offset of the problem.
inline TokenStream tokenize(std::string_view source, const LanguageProfile& profile) {
    if (auto bad = find_invalid_utf8(source); bad != std::string_view::npos) throw EncodingError(bad);
    TokenStream stream;
    stream.source = std::string(source);
    stream.tokens = detail::Lexer(stream.source, profile).run();
    return stream;
}

}  // namespace anon
