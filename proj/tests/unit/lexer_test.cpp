#include <gtest/gtest.h>

#include "anon/golden.hpp"
#include "anon/lexer.hpp"
#include "anon/sample_corpus.hpp"

using namespace anon;

namespace {

std::vector<std::pair<TokenKind, std::string>> lex(std::string_view src, Language lang) {
    std::vector<std::pair<TokenKind, std::string>> out;
    for (const auto& t : tokenize(src, load_profile(lang)).tokens) out.emplace_back(t.kind, std::string(t.text));
    return out;
}

std::vector<std::pair<TokenKind, std::string>> lex_no_ws(std::string_view src, Language lang) {
    auto all = lex(src, lang);
    std::erase_if(all, [](const auto& p) { return p.first == TokenKind::Whitespace; });
    return all;
}

using K = TokenKind;

}  // namespace

TEST(Lexer, KeywordFor) {
    const auto toks = lex("for", Language::c);
    ASSERT_EQ(toks.size(), 1u);
    EXPECT_EQ(toks[0], std::make_pair(K::Keyword, std::string("for")));
}

TEST(Lexer, EmptySource) {
    for (auto lang : kAllLanguages) EXPECT_TRUE(tokenize("", load_profile(lang)).tokens.empty());
}

TEST(Lexer, PostIncrement) {
    const auto toks = lex("i++", Language::c);
    ASSERT_EQ(toks.size(), 2u);
    EXPECT_EQ(toks[0], std::make_pair(K::Identifier, std::string("i")));
    EXPECT_EQ(toks[1], std::make_pair(K::Operator, std::string("++")));
}

TEST(Lexer, MaximalMunch) {
    const auto toks = lex_no_ws("a >>= b->c :: d", Language::cpp);
    ASSERT_EQ(toks.size(), 7u);
    EXPECT_EQ(toks[1].second, ">>=");
    EXPECT_EQ(toks[3].second, "->");
    EXPECT_EQ(toks[5].second, "::");
}

TEST(Lexer, SpansAreContiguous) {
    const std::string src = "int x = 42; // done\n";
    const auto stream = tokenize(src, load_profile(Language::c));
    std::size_t pos = 0;
    for (const auto& t : stream.tokens) {
        EXPECT_EQ(t.span.start, pos);
        EXPECT_EQ(t.span.end - t.span.start, t.text.size());
        pos = t.span.end;
    }
    EXPECT_EQ(pos, src.size());
}

TEST(Lexer, LiteralKinds) {
    const auto toks = lex_no_ws("x = 0x1F + 3.5e-2 + 'c' + \"s\\\"q\" /* c */", Language::c);
    EXPECT_EQ(toks[2], std::make_pair(K::NumericLiteral, std::string("0x1F")));
    EXPECT_EQ(toks[4], std::make_pair(K::NumericLiteral, std::string("3.5e-2")));
    EXPECT_EQ(toks[6], std::make_pair(K::StringLiteral, std::string("'c'")));
    EXPECT_EQ(toks[8], std::make_pair(K::StringLiteral, std::string("\"s\\\"q\"")));
    EXPECT_EQ(toks[9], std::make_pair(K::Comment, std::string("/* c */")));
}

TEST(Lexer, CppRawString) {
    const auto toks = lex_no_ws("auto s = R\"x(a \"quoted\" )\" b)x\";", Language::cpp);
    ASSERT_GE(toks.size(), 4u);
    EXPECT_EQ(toks[3], std::make_pair(K::StringLiteral, std::string("R\"x(a \"quoted\" )\" b)x\"")));
}

TEST(Lexer, PythonStrings) {
    const auto toks = lex_no_ws("s = f'{x}' + rb\"\\d\" + '''a\n'b'\n''' # note", Language::python);
    EXPECT_EQ(toks[2], std::make_pair(K::StringLiteral, std::string("f'{x}'")));
    EXPECT_EQ(toks[4], std::make_pair(K::StringLiteral, std::string("rb\"\\d\"")));
    EXPECT_EQ(toks[6], std::make_pair(K::StringLiteral, std::string("'''a\n'b'\n'''")));
    EXPECT_EQ(toks[7], std::make_pair(K::Comment, std::string("# note")));
}

TEST(Lexer, HashIsOperatorInCButCommentInPython) {
    EXPECT_EQ(lex("#define X 1", Language::c)[0].first, K::Operator);
    EXPECT_EQ(lex("#define X 1", Language::python)[0].first, K::Comment);
}

TEST(Lexer, JavaAnnotationAndDollar) {
    const auto toks = lex_no_ws("@Override int $x;", Language::java);
    EXPECT_EQ(toks[0], std::make_pair(K::Operator, std::string("@")));
    EXPECT_EQ(toks[1], std::make_pair(K::Identifier, std::string("Override")));
    EXPECT_EQ(toks[3], std::make_pair(K::Identifier, std::string("$x")));
}

TEST(Lexer, NonAsciiIdentifierAndPunctuation) {
    const auto toks = lex_no_ws("größe = 1", Language::python);
    EXPECT_EQ(toks[0], std::make_pair(K::Identifier, std::string("größe")));
    const auto punct = lex_no_ws("a ` b", Language::c);
    EXPECT_EQ(punct[1].first, K::Punctuation);
}

TEST(Lexer, UnterminatedStringReportsOffset) {
    try {
        tokenize("x = \"abc", load_profile(Language::c));
        FAIL() << "expected LexError";
    } catch (const EncodingError&) {
        FAIL() << "wrong error type";
    } catch (const LexError& e) {
        EXPECT_EQ(e.offset(), 4u);
    }
}

TEST(Lexer, UnterminatedCommentReportsOffset) {
    try {
        tokenize("int a; /* open", load_profile(Language::cpp));
        FAIL() << "expected LexError";
    } catch (const LexError& e) {
        EXPECT_EQ(e.offset(), 7u);
    }
    EXPECT_THROW(tokenize("s = '''never closed", load_profile(Language::python)), LexError);
}

TEST(Lexer, InvalidUtf8) {
    const std::string bad = std::string("x = 1 ") + static_cast<char>(0xC3) + "(";
    try {
        tokenize(bad, load_profile(Language::c));
        FAIL() << "expected EncodingError";
    } catch (const EncodingError& e) {
        EXPECT_EQ(e.offset(), 6u);
    }
}

TEST(Lexer, LineContinuation) {
    const std::string src = "#define A \\\n  1\nx = a + \\\n    b\n";
    EXPECT_EQ(tokenize(src, load_profile(Language::c)).reconstruct(), src);
    const auto py = lex_no_ws("x = a + \\\n    b", Language::python);
    EXPECT_EQ(py.size(), 5u);
}

TEST(Lexer, ReconstructionAndIdempotenceOverSamples) {
    std::vector<std::pair<std::string, Language>> sources = {{std::string(golden_named()), Language::cpp},
                                                             {std::string(golden_reference()), Language::cpp}};
    for (const auto& r : sample::mixed_corpus(400, 3)) sources.emplace_back(r.code, *r.parsed_language());
    for (const auto& [src, lang] : sources) {
        const auto& profile = load_profile(lang);
        const auto first = tokenize(src, profile);
        const std::string rebuilt = first.reconstruct();
        ASSERT_EQ(rebuilt, src);
        const auto second = tokenize(rebuilt, profile);
        ASSERT_EQ(first.tokens.size(), second.tokens.size());
        for (std::size_t i = 0; i < first.tokens.size(); ++i) {
            EXPECT_EQ(first.tokens[i].kind, second.tokens[i].kind);
            EXPECT_EQ(first.tokens[i].text, second.tokens[i].text);
        }
        for (const auto& t : first.tokens)
            if (t.kind == TokenKind::Identifier) EXPECT_FALSE(profile.is_keyword(t.text)) << t.text;
    }
}
