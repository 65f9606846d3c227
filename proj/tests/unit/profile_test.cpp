#include <gtest/gtest.h>

#include <algorithm>

#include "anon/profile.hpp"

using namespace anon;

TEST(Profile, CHasThirtyTwoKeywords) { EXPECT_EQ(load_profile(Language::c).keywords.size(), 32u); }

TEST(Profile, PythonHasThirtyFiveKeywords) { EXPECT_EQ(load_profile(Language::python).keywords.size(), 35u); }

TEST(Profile, JavaAndCppSizes) {
    EXPECT_EQ(load_profile(Language::java).keywords.size(), 50u);
    EXPECT_EQ(load_profile(Language::cpp).keywords.size(), 92u);
}

TEST(Profile, UnknownLanguageIsUnsupported) {
    EXPECT_THROW(load_profile("cobol"), UnsupportedLanguage);
    EXPECT_THROW(load_profile(""), UnsupportedLanguage);
    EXPECT_NO_THROW(load_profile("python"));
}

TEST(Profile, KeywordsAndBuiltinsAreDisjoint) {
    for (auto lang : kAllLanguages) {
        const auto& p = load_profile(lang);
        for (const auto& k : p.keywords) EXPECT_FALSE(p.is_builtin(k)) << to_string(lang) << ": " << k;
    }
}

TEST(Profile, CppExtendsC) {
    const auto& c = load_profile(Language::c);
    const auto& cpp = load_profile(Language::cpp);
    for (const auto& k : c.keywords) EXPECT_TRUE(cpp.is_keyword(k)) << k;
}

TEST(Profile, SeparatorsAreOperators) {
    for (auto lang : kAllLanguages) {
        const auto& p = load_profile(lang);
        EXPECT_FALSE(p.qualification_separators.empty());
        for (const auto& s : p.qualification_separators) EXPECT_TRUE(p.operators.count(s)) << s;
    }
    EXPECT_TRUE(load_profile(Language::cpp).is_separator("::"));
    EXPECT_TRUE(load_profile(Language::python).is_definition_keyword("def"));
}

TEST(Profile, OperatorsSortedLongestFirst) {
    const auto& ops = load_profile(Language::cpp).operators_by_length;
    EXPECT_TRUE(std::is_sorted(ops.begin(), ops.end(),
                               [](const auto& a, const auto& b) { return a.size() > b.size(); }));
}

TEST(Profile, DigestsArePinned) {
    EXPECT_EQ(hex64(profile_digest(load_profile(Language::c))), "35f68de011573398");
    EXPECT_EQ(hex64(profile_digest(load_profile(Language::cpp))), "f4a10119ac61c2d2");
    EXPECT_EQ(hex64(profile_digest(load_profile(Language::java))), "11d400171dbd216c");
    EXPECT_EQ(hex64(profile_digest(load_profile(Language::python))), "2b9395bd4ab0ea84");
}

TEST(Profile, ReloadIsStable) {
    const auto& a = load_profile(Language::java);
    const auto& b = load_profile(Language::java);
    EXPECT_EQ(&a, &b);
    const auto fresh = parse_profile(Language::java, embedded_profile_text(Language::java));
    EXPECT_EQ(profile_digest(fresh), profile_digest(a));
}

TEST(Profile, ParserRejectsOverlap) {
    EXPECT_THROW(parse_profile(Language::c, "[keywords]\nfor\n[builtins]\nfor\n[operators]\n.\n"
                                            "[qualification_separators]\n.\n"),
                 ConfigError);
}

TEST(Profile, ParserRejectsUnknownSeparator) {
    EXPECT_THROW(parse_profile(Language::c, "[keywords]\nfor\n[operators]\n+\n[qualification_separators]\n.\n"),
                 ConfigError);
}

TEST(Profile, HashLineIsOperatorInsideOperatorSection) {
    const auto p = parse_profile(Language::c, "# comment\n[keywords]\nfor\n[operators]\n#\n.\n"
                                              "[qualification_separators]\n.\n");
    EXPECT_TRUE(p.operators.count("#"));
    EXPECT_EQ(p.keywords.size(), 1u);
}

TEST(Profile, LanguageNames) {
    for (auto lang : kAllLanguages) EXPECT_EQ(parse_language(to_string(lang)), lang);
    EXPECT_FALSE(parse_language("Python"));
}
