#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "anon/embedded_data.hpp"
#include "anon/lexer.hpp"
#include "anon/profile.hpp"
#include "anon/transform.hpp"

namespace anon {

/// Shipped fixture pair: a C++ bubble sort with meaningful names and its
/// sequentially anonymized form.
///
/// `golden_reference()` is the anonymized form as originally published. It
/// renames the template parameter `Pred` to `Fun2` in the template head and
/// in the default argument but keeps `Pred` in the parameter list.
/// `golden_expected()` keeps `Pred` in all three places, which is what a
/// consistent rename produces; those two tokens are the only differences.
inline std::string_view golden_named() noexcept { return embedded::golden_named; }
inline std::string_view golden_expected() noexcept { return embedded::golden_expected; }
inline std::string_view golden_reference() noexcept { return embedded::golden_reference; }

/// The mapping the fixture must produce, in first-occurrence order.
inline const std::vector<std::pair<std::string, std::string>>& golden_renames() {
    static const std::vector<std::pair<std::string, std::string>> renames = {
        {"bubble_sort", "fun1"}, {"begin", "var1"}, {"end", "var2"}, {"pred", "fun2"},
        {"it_end", "var3"},      {"finished", "var4"}, {"it", "var5"}, {"next", "var6"}};
    return renames;
}

struct GoldenResult {
    std::string output;
    RenameMap renames;
    bool matches = false;
};

/// Anonymizes `source` (the shipped fixture by default) with every class
/// targeted and sequential naming, and compares against `expected`.
inline GoldenResult run_golden_check(std::string_view source = golden_named(),
                                     std::string_view expected = golden_expected()) {
    const auto& profile = load_profile(Language::cpp);
    const TokenStream stream = tokenize(source, profile);
    const IdentifierTable table = classify_identifiers(stream, profile);
    SeededGenerator gen(0, "golden");
    GoldenResult r;
    r.renames = plan_renames(table, {TargetSet::all(), NamingScheme::Sequential, 0}, gen, nullptr);
    r.output = apply_renames(stream, r.renames);
    r.matches = r.output == expected;
    return r;
}

}  // namespace anon
