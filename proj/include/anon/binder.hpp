#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "anon/lexer.hpp"
#include "anon/profile.hpp"

namespace anon {

enum class IdentifierClass { Variable, MethodDefinition, MethodInvocation, Protected };

inline constexpr std::array<IdentifierClass, 3> kRenameableClasses = {
    IdentifierClass::Variable, IdentifierClass::MethodDefinition, IdentifierClass::MethodInvocation};

constexpr std::string_view to_string(IdentifierClass cls) noexcept {
    switch (cls) {
        case IdentifierClass::Variable: return "variable";
        case IdentifierClass::MethodDefinition: return "method_definition";
        case IdentifierClass::MethodInvocation: return "method_invocation";
        case IdentifierClass::Protected: return "protected";
    }
    return "?";
}

inline std::optional<IdentifierClass> parse_identifier_class(std::string_view s) noexcept {
    for (auto cls : {IdentifierClass::Variable, IdentifierClass::MethodDefinition,
                     IdentifierClass::MethodInvocation, IdentifierClass::Protected})
        if (to_string(cls) == s) return cls;
    return std::nullopt;
}

struct Symbol {
    std::string name;
    IdentifierClass cls = IdentifierClass::Variable;
    std::vector<Span> occurrences;
    std::vector<std::size_t> token_indices;
};

/// All non-builtin identifiers of one unit, one entry per distinct name, in
/// order of first occurrence.
class IdentifierTable {
public:
    IdentifierTable() = default;
    explicit IdentifierTable(const LanguageProfile& profile) : profile_(&profile) {}

    const LanguageProfile* profile() const noexcept { return profile_; }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    std::size_t size() const noexcept { return symbols_.size(); }

    const Symbol* find(std::string_view name) const {
        auto it = index_.find(name);
        return it == index_.end() ? nullptr : &symbols_[it->second];
    }

    std::optional<IdentifierClass> class_of(std::string_view name) const {
        if (const auto* s = find(name)) return s->cls;
        return std::nullopt;
    }

    std::vector<std::string> names(IdentifierClass cls) const {
        std::vector<std::string> out;
        for (const auto& s : symbols_)
            if (s.cls == cls) out.push_back(s.name);
        return out;
    }

    std::size_t occurrence_count() const noexcept {
        std::size_t n = 0;
        for (const auto& s : symbols_) n += s.occurrences.size();
        return n;
    }

    Symbol& add_occurrence(const Token& tok, std::size_t token_index) {
        auto [it, inserted] = index_.try_emplace(tok.text, symbols_.size());
        if (inserted) symbols_.push_back(Symbol{tok.text, IdentifierClass::Variable, {}, {}});
        Symbol& sym = symbols_[it->second];
        sym.occurrences.push_back(tok.span);
        sym.token_indices.push_back(token_index);
        return sym;
    }

    Symbol& at(std::size_t i) { return symbols_[i]; }

private:
    const LanguageProfile* profile_ = nullptr;
    std::vector<Symbol> symbols_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

namespace detail {

constexpr bool is_capitalized(std::string_view s) noexcept { return !s.empty() && s[0] >= 'A' && s[0] <= 'Z'; }

/// Per-occurrence syntactic evidence; combined per name afterwards.
struct Evidence {
    bool is_protected = false;
    bool type_position = false;
    bool local_type_definition = false;
    bool definition = false;
    bool call = false;
};

enum class ParenKind { Call, DefParams, ClassBases, Group, Bracket, Brace };

class Binder {
public:
    Binder(const TokenStream& stream, const LanguageProfile& profile)
        : stream_(stream), profile_(profile), table_(profile) {}

    IdentifierTable run() {
        collect_significant();
        match_parens();
        scan();
        resolve();
        return std::move(table_);
    }

private:
    bool c_family() const noexcept { return profile_.language != Language::python; }
    const Token& sig(std::size_t k) const { return stream_.tokens[sig_[k]]; }
    const Token* prev(std::size_t k, std::size_t back = 1) const { return k >= back ? &sig(k - back) : nullptr; }
    const Token* next(std::size_t k, std::size_t ahead = 1) const {
        return k + ahead < sig_.size() ? &sig(k + ahead) : nullptr;
    }
    static bool is(const Token* t, std::string_view s) { return t && t->is_symbol(s); }
    static bool is_kw(const Token* t, std::string_view s) { return t && t->kind == TokenKind::Keyword && t->text == s; }
    static bool is_ident(const Token* t) { return t && t->kind == TokenKind::Identifier; }

    void collect_significant() {
        bool line_start = true;
        for (std::size_t i = 0; i < stream_.tokens.size(); ++i) {
            const auto& t = stream_.tokens[i];
            if (t.is_trivia()) {
                if (t.text.find('\n') != std::string::npos) line_start = true;
                continue;
            }
            sig_.push_back(i);
            starts_line_.push_back(line_start);
            line_start = false;
        }
    }

    void match_parens() {
        match_.assign(sig_.size(), npos);
        std::vector<std::size_t> open;
        for (std::size_t k = 0; k < sig_.size(); ++k) {
            if (sig(k).is_symbol("(")) open.push_back(k);
            else if (sig(k).is_symbol(")") && !open.empty()) {
                match_[open.back()] = k;
                open.pop_back();
            }
        }
        // For each position, whether the first '{' or ';' at or after it is a '{'.
        brace_before_semicolon_.assign(sig_.size() + 1, false);
        for (std::size_t k = sig_.size(); k-- > 0;) {
            if (sig(k).is_symbol("{")) brace_before_semicolon_[k] = true;
            else if (sig(k).is_symbol(";")) brace_before_semicolon_[k] = false;
            else brace_before_semicolon_[k] = brace_before_semicolon_[k + 1];
        }
    }

    // C-family type position: `Name ident`, `Name* ident`, `Name const& ident`, `Name[] ident`.
    bool followed_by_declarator(std::size_t k) const {
        for (std::size_t j = k + 1; j < sig_.size(); ++j) {
            const Token& t = sig(j);
            if (t.is_symbol("*") || t.is_symbol("&") || t.is_symbol("&&") || t.is_symbol("...") ||
                is_kw(&t, "const") || is_kw(&t, "volatile"))
                continue;
            if (t.is_symbol("[") && is(next(j), "]")) {
                ++j;
                continue;
            }
            return t.kind == TokenKind::Identifier;
        }
        return false;
    }

    ParenKind classify_open_paren(std::size_t k) const {
        const Token* before = prev(k);
        if (is_ident(before)) {
            if (is_kw(prev(k, 2), "def")) return ParenKind::DefParams;
            if (is_kw(prev(k, 2), "class")) return ParenKind::ClassBases;
            return ParenKind::Call;
        }
        if (before && (before->is_symbol(")") || before->is_symbol("]") || before->kind == TokenKind::StringLiteral))
            return ParenKind::Call;
        return ParenKind::Group;
    }

    void protect_fstring_names(const Token& t) {
        // Prefix letters precede the first quote.
        const auto quote = t.text.find_first_of("'\"");
        const std::string_view prefix = std::string_view(t.text).substr(0, quote);
        if (prefix.find_first_of("fF") == std::string_view::npos) return;
        const std::string_view body = std::string_view(t.text).substr(quote);
        int depth = 0;
        for (std::size_t i = 0; i < body.size(); ++i) {
            const char c = body[i];
            if (c == '{') {
                if (depth == 0 && i + 1 < body.size() && body[i + 1] == '{') {
                    ++i;
                    continue;
                }
                ++depth;
            } else if (c == '}') {
                if (depth > 0) --depth;
            } else if (depth > 0 && (is_ascii_alpha(c) || c == '_')) {
                std::size_t j = i;
                while (j < body.size() && (is_alnum(body[j]) || body[j] == '_')) ++j;
                if (i == 0 || body[i - 1] != '.') forced_protected_.insert(std::string(body.substr(i, j - i)));
                i = j - 1;
            }
        }
    }

    void scan() {
        evidence_.resize(sig_.size());
        std::vector<ParenKind> stack;
        int brace_depth = 0;
        int paren_depth = 0;
        bool statement_protects = false;  // inside a Python import/global line or a C include line

        for (std::size_t k = 0; k < sig_.size(); ++k) {
            const Token& t = sig(k);
            if (starts_line_[k] && paren_depth == 0) statement_protects = false;

            if (t.kind == TokenKind::StringLiteral && !c_family()) protect_fstring_names(t);

            if (t.kind == TokenKind::Keyword && starts_line_[k] && !c_family() &&
                (t.text == "import" || t.text == "from" || t.text == "global" || t.text == "nonlocal"))
                statement_protects = true;
            if (c_family() && starts_line_[k] && t.is_symbol("#")) {
                const Token* directive = next(k);
                if (is_ident(directive) && (directive->text == "include" || directive->text == "import"))
                    statement_protects = true;
            }

            if (t.kind == TokenKind::Identifier) {
                evidence_[k] = evidence_for(k, stack, brace_depth, paren_depth);
                if (statement_protects) evidence_[k].is_protected = true;
            }

            if (t.is_symbol("(")) {
                stack.push_back(classify_open_paren(k));
                ++paren_depth;
            } else if (t.is_symbol("[")) {
                stack.push_back(ParenKind::Bracket);
            } else if (t.is_symbol("{")) {
                stack.push_back(ParenKind::Brace);
                ++brace_depth;
            } else if (t.is_symbol(")") || t.is_symbol("]") || t.is_symbol("}")) {
                if (!stack.empty()) stack.pop_back();
                if (t.is_symbol(")") && paren_depth > 0) --paren_depth;
                if (t.is_symbol("}") && brace_depth > 0) --brace_depth;
            }
        }
    }

    Evidence evidence_for(std::size_t k, const std::vector<ParenKind>& stack, int brace_depth,
                          int paren_depth) const {
        Evidence e;
        const Token& t = sig(k);
        const Token* before = prev(k);
        const Token* after = next(k);
        const bool capital = is_capitalized(t.text);

        // Qualified paths and member access.
        if (before && (before->kind == TokenKind::Operator || before->kind == TokenKind::Punctuation) &&
            profile_.is_separator(before->text))
            e.is_protected = true;
        if (is(after, "::")) e.is_protected = true;
        if (profile_.language == Language::java) {
            if (is(before, "@")) e.is_protected = true;
            if (capital && is(after, ".")) e.is_protected = true;
        }
        if (profile_.language == Language::python) {
            if (is(before, "@") && starts_line_[k - 1]) e.is_protected = true;
            const bool in_call = !stack.empty() && stack.back() == ParenKind::Call;
            if (in_call && (is(before, "(") || is(before, ",")) && is(after, "=")) e.is_protected = true;
        }
        if (c_family() && is(before, "#") && starts_line_[k - 1]) e.is_protected = true;

        // Type positions.
        if (capital) {
            if (c_family()) {
                if (followed_by_declarator(k)) e.type_position = true;
                if (before && before->kind == TokenKind::Keyword) {
                    static const std::set<std::string_view> type_introducers = {
                        "typename", "class", "struct", "enum", "union", "new",
                        "extends", "implements", "instanceof", "throws", "interface"};
                    if (type_introducers.count(before->text)) e.type_position = true;
                    static const std::set<std::string_view> definers = {"class", "struct", "enum", "union",
                                                                        "interface"};
                    if (definers.count(before->text) &&
                        (is(after, "{") || is(after, ":") || is_kw(after, "extends") ||
                         is_kw(after, "implements") || (profile_.language == Language::java && is(after, "<"))))
                        e.local_type_definition = true;
                }
                if (is(before, "<") || is(after, ">") || is(after, ">>") || is(after, ">>>"))
                    e.type_position = true;
            } else {
                if (is(before, "->") || is_kw(before, "except")) e.type_position = true;
                if (!stack.empty() && stack.back() == ParenKind::DefParams && is(before, ":"))
                    e.type_position = true;
                if (!stack.empty() && stack.back() == ParenKind::ClassBases) e.type_position = true;
                if (is_kw(before, "class")) e.local_type_definition = true;
            }
        }

        // Definitions.
        if (before && before->kind == TokenKind::Keyword && profile_.is_definition_keyword(before->text))
            e.definition = true;
        if (c_family() && brace_depth == 0 && paren_depth == 0 && is(after, "(")) {
            const std::size_t close = match_[k + 1];
            if (close != npos && brace_before_semicolon_[close + 1]) e.definition = true;
        }

        // Invocations.
        if (is(after, "(") && !is_kw(before, "class")) {
            // `Type name(args)` declares an object in the C family.
            if (!(c_family() && is_ident(before))) e.call = true;
        }
        return e;
    }

    void resolve() {
        struct NameFacts {
            bool any_protected = false, any_type = false, any_local_type = false, any_def = false,
                 any_call = false;
        };
        std::vector<NameFacts> facts;
        for (std::size_t k = 0; k < sig_.size(); ++k) {
            const Token& t = sig(k);
            if (t.kind != TokenKind::Identifier || profile_.is_builtin(t.text)) continue;
            const Symbol& sym = table_.add_occurrence(t, sig_[k]);
            const auto idx = static_cast<std::size_t>(&sym - table_.symbols().data());
            if (idx == facts.size()) facts.emplace_back();
            const Evidence& e = evidence_[k];
            auto& f = facts[idx];
            f.any_protected |= e.is_protected;
            f.any_type |= e.type_position;
            f.any_local_type |= e.local_type_definition;
            f.any_def |= e.definition;
            f.any_call |= e.call;
        }
        for (std::size_t i = 0; i < table_.size(); ++i) {
            Symbol& sym = table_.at(i);
            const auto& f = facts[i];
            const bool type_like = is_capitalized(sym.name) && f.any_type && !f.any_local_type;
            if (f.any_protected || type_like || forced_protected_.count(sym.name))
                sym.cls = IdentifierClass::Protected;
            else if (f.any_def)
                sym.cls = IdentifierClass::MethodDefinition;
            else if (f.any_call)
                sym.cls = IdentifierClass::MethodInvocation;
            else
                sym.cls = IdentifierClass::Variable;
        }
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    const TokenStream& stream_;
    const LanguageProfile& profile_;
    IdentifierTable table_;
    std::vector<std::size_t> sig_;
    std::vector<bool> starts_line_;
    std::vector<std::size_t> match_;
    std::vector<bool> brace_before_semicolon_;
    std::vector<Evidence> evidence_;
    std::set<std::string, std::less<>> forced_protected_;
};

}  // namespace detail

/// Assigns every non-builtin identifier of the unit to one class. Names are
/// grouped by spelling; when occurrences disagree the strongest evidence
/// wins, in the order Protected, MethodDefinition, MethodInvocation,
/// Variable.
///
/// Protected covers qualified names and members (`std::swap`, `obj.field`),
/// capitalized names seen in type positions without a local type definition,
/// Python keyword arguments, names referenced from f-strings, and names on
/// Python import/global lines or C include lines.
inline IdentifierTable classify_identifiers(const TokenStream& stream, const LanguageProfile& profile) {
    return detail::Binder(stream, profile).run();
}

}  // namespace anon
