#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "anon/corpus.hpp"
#include "anon/error.hpp"
#include "anon/eval/terms.hpp"
#include "anon/naming.hpp"
#include "anon/record.hpp"

namespace anon::eval {

struct QueryResult {
    std::string query_id;
    std::vector<std::string> ranked_ids;
    /// 1-based rank of the query's own code.
    std::size_t rank = 0;
};

struct SearchMetrics {
    double accuracy_at_1 = 0.0;
    double mrr = 0.0;
    std::size_t queries = 0;
    std::size_t excluded = 0;
};

struct SearchResult {
    std::vector<QueryResult> queries;
    SearchMetrics metrics;
};

namespace detail {

/// L2-normalized sparse tf-idf vector, sorted by term id.
using SparseVector = std::vector<std::pair<std::uint32_t, double>>;

class TermIndex {
public:
    std::uint32_t id(const std::string& term) {
        auto [it, inserted] = ids_.try_emplace(term, static_cast<std::uint32_t>(ids_.size()));
        return it->second;
    }
    const std::uint32_t* find(const std::string& term) const {
        auto it = ids_.find(term);
        return it == ids_.end() ? nullptr : &it->second;
    }
    std::size_t size() const noexcept { return ids_.size(); }

private:
    std::unordered_map<std::string, std::uint32_t> ids_;
};

inline std::map<std::uint32_t, double> counts(const std::vector<std::string>& terms, const TermIndex& index) {
    std::map<std::uint32_t, double> tf;
    for (const auto& t : terms)
        if (const auto* id = index.find(t)) tf[*id] += 1.0;
    return tf;
}

inline SparseVector weigh(const std::map<std::uint32_t, double>& tf, const std::vector<double>& idf) {
    SparseVector v;
    double norm = 0.0;
    for (const auto& [id, f] : tf) {
        const double w = (1.0 + std::log(f)) * idf[id];
        v.emplace_back(id, w);
        norm += w * w;
    }
    if (norm > 0.0) {
        norm = std::sqrt(norm);
        for (auto& [id, w] : v) w /= norm;
    }
    return v;
}

inline double dot(const SparseVector& a, const SparseVector& b) {
    double s = 0.0;
    auto i = a.begin(), j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (i->first < j->first) ++i;
        else if (j->first < i->first) ++j;
        else s += (i++)->second * (j++)->second;
    }
    return s;
}

}  // namespace detail

/// Lexical code search: each docstring is ranked against its own code plus
/// `candidates_per_query - 1` distractors by tf-idf cosine similarity.
///
/// Distractors and tie order are drawn from SeededGenerator(seed, query id),
/// so variants of the same corpus are scored against the same candidate
/// sets. Records without a docstring are not queried but still serve as
/// distractors.
inline SearchResult search_eval(std::span<const DatasetRecord> corpus, std::size_t candidates_per_query,
                                std::uint64_t seed, unsigned workers = 1) {
    if (candidates_per_query == 0) throw ConfigError("candidates per query must be positive");
    if (candidates_per_query > corpus.size())
        throw ConfigError("candidates per query (" + std::to_string(candidates_per_query) +
                          ") exceeds corpus size (" + std::to_string(corpus.size()) + ")");

    detail::TermIndex index;
    std::vector<std::vector<std::string>> doc_terms(corpus.size());
    std::vector<double> df;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto lang = corpus[i].parsed_language();
        doc_terms[i] = code_terms(corpus[i].code, lang ? &load_profile(*lang) : nullptr);
        std::set<std::uint32_t> unique;
        for (const auto& t : doc_terms[i]) unique.insert(index.id(t));
        df.resize(index.size(), 0.0);
        for (auto id : unique) df[id] += 1.0;
    }
    const double n = static_cast<double>(corpus.size());
    std::vector<double> idf(df.size());
    for (std::size_t t = 0; t < df.size(); ++t) idf[t] = std::log((n + 1.0) / (df[t] + 1.0)) + 1.0;
    std::vector<detail::SparseVector> docs(corpus.size());
    for (std::size_t i = 0; i < corpus.size(); ++i) docs[i] = detail::weigh(detail::counts(doc_terms[i], index), idf);

    std::vector<std::size_t> query_rows;
    SearchResult result;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto& d = corpus[i].docstring;
        if (d && !text_terms(*d).empty()) query_rows.push_back(i);
        else ++result.metrics.excluded;
    }
    result.queries.resize(query_rows.size());

    parallel_for(query_rows.size(), workers, [&](std::size_t q) {
        const std::size_t row = query_rows[q];
        const auto& record = corpus[row];
        SeededGenerator gen(seed, record.id);

        // Floyd's algorithm: distinct distractor rows, none equal to `row`.
        std::vector<std::size_t> candidates{row};
        std::set<std::size_t> chosen{row};
        const std::size_t pool = corpus.size() - 1;
        for (std::size_t j = pool - (candidates_per_query - 1); j < pool; ++j) {
            std::size_t pick = gen.below(j + 1);
            if (chosen.count(pick >= row ? pick + 1 : pick)) pick = j;
            const std::size_t actual = pick >= row ? pick + 1 : pick;
            chosen.insert(actual);
            candidates.push_back(actual);
        }
        gen.shuffle(candidates);

        const auto query = detail::weigh(detail::counts(text_terms(*record.docstring), index), idf);
        std::vector<std::pair<double, std::size_t>> scored;
        scored.reserve(candidates.size());
        for (auto c : candidates) scored.emplace_back(detail::dot(query, docs[c]), c);
        std::stable_sort(scored.begin(), scored.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });

        QueryResult& out = result.queries[q];
        out.query_id = record.id;
        for (std::size_t r = 0; r < scored.size(); ++r) {
            out.ranked_ids.push_back(corpus[scored[r].second].id);
            if (scored[r].second == row) out.rank = r + 1;
        }
    });

    for (const auto& q : result.queries) {
        result.metrics.mrr += 1.0 / static_cast<double>(q.rank);
        if (q.rank == 1) result.metrics.accuracy_at_1 += 1.0;
    }
    result.metrics.queries = result.queries.size();
    if (!result.queries.empty()) {
        result.metrics.mrr /= static_cast<double>(result.queries.size());
        result.metrics.accuracy_at_1 /= static_cast<double>(result.queries.size());
    }
    return result;
}

}  // namespace anon::eval
