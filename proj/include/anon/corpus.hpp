#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <span>
#include <ostream>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "anon/error.hpp"
#include "anon/hash.hpp"
#include "anon/naming.hpp"
#include "anon/record.hpp"
#include "anon/transform.hpp"

namespace anon {

namespace fs = std::filesystem;

/// Streams records from a line-delimited file in file order. Memory use is
/// independent of file length apart from an 8-byte hash per id, kept to
/// reject duplicate ids.
class RecordReader {
public:
    explicit RecordReader(const fs::path& path, std::optional<std::string> default_language = std::nullopt)
        : in_(path, std::ios::binary), default_language_(std::move(default_language)) {
        if (!in_) throw Error("cannot open " + path.string());
    }

    /// Next record, or nullopt at end of file. Blank lines are ignored.
    std::optional<DatasetRecord> next() {
        std::string line;
        while (std::getline(in_, line)) {
            ++line_no_;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.find_first_not_of(" \t") == std::string::npos) continue;
            DatasetRecord r = parse_record(line, line_no_, default_language_);
            if (!seen_ids_.insert(fnv1a64(r.id)).second) throw DataError("duplicate id '" + r.id + "'", line_no_);
            return r;
        }
        if (in_.bad()) throw Error("read failure after line " + std::to_string(line_no_));
        return std::nullopt;
    }

    std::size_t line_number() const noexcept { return line_no_; }

    /// Input-range adaptor so a reader can feed range algorithms.
    class iterator {
    public:
        using value_type = DatasetRecord;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(RecordReader* reader) : reader_(reader) { ++*this; }

        const DatasetRecord& operator*() const { return *current_; }
        iterator& operator++() {
            current_ = reader_->next();
            if (!current_) reader_ = nullptr;
            return *this;
        }
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.reader_ == nullptr; }

    private:
        RecordReader* reader_ = nullptr;
        std::optional<DatasetRecord> current_;
    };

    iterator begin() { return iterator(this); }
    std::default_sentinel_t end() { return {}; }

private:
    std::ifstream in_;
    std::optional<std::string> default_language_;
    std::size_t line_no_ = 0;
    std::unordered_set<std::uint64_t> seen_ids_;
};

inline RecordReader read_records(const fs::path& path, std::optional<std::string> default_language = std::nullopt) {
    return RecordReader(path, std::move(default_language));
}

/// Loads a whole corpus; for evaluation-sized inputs.
inline std::vector<DatasetRecord> read_all_records(const fs::path& path,
                                                   std::optional<std::string> default_language = std::nullopt) {
    std::vector<DatasetRecord> out;
    RecordReader reader(path, std::move(default_language));
    while (auto r = reader.next()) out.push_back(std::move(*r));
    return out;
}

inline void write_records(const fs::path& path, const std::vector<DatasetRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    for (const auto& r : records) out << serialize_record(r) << '\n';
    if (!out) throw Error("write failure on " + path.string());
}

struct StatsReport {
    std::string variant_tag;
    std::uint64_t seed = 0;
    std::size_t records_total = 0;
    std::size_t records_processed = 0;
    std::size_t records_skipped = 0;
    std::array<std::size_t, 3> renames_by_class{};
    std::size_t random_fallbacks = 0;
    bool vocabulary_fallback_used = false;
    std::uint64_t corpus_digest = 0;
    std::string output_file;
};

inline Json to_json(const StatsReport& s) {
    Json j = Json::object();
    j["variant_tag"] = s.variant_tag;
    j["seed"] = s.seed;
    j["records_total"] = s.records_total;
    j["records_processed"] = s.records_processed;
    j["records_skipped"] = s.records_skipped;
    j["renames_by_class"] = {{"variable", s.renames_by_class[0]},
                             {"method_definition", s.renames_by_class[1]},
                             {"method_invocation", s.renames_by_class[2]}};
    j["random_fallbacks"] = s.random_fallbacks;
    j["vocabulary_fallback_used"] = s.vocabulary_fallback_used;
    j["corpus_digest"] = hex64(s.corpus_digest);
    j["output_file"] = s.output_file;
    return j;
}

inline void print_summary(std::ostream& os, const std::vector<StatsReport>& reports) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%-10s %8s %8s %10s %10s %10s  %-16s\n", "variant", "records", "skipped",
                  "var", "mdef", "minv", "digest");
    os << buf;
    for (const auto& r : reports) {
        std::snprintf(buf, sizeof buf, "%-10s %8zu %8zu %10zu %10zu %10zu  %-16s\n", r.variant_tag.c_str(),
                      r.records_total, r.records_skipped, r.renames_by_class[0], r.renames_by_class[1],
                      r.renames_by_class[2], hex64(r.corpus_digest).c_str());
        os << buf;
    }
}

struct CorpusJob {
    fs::path input;
    fs::path output_dir;
    std::vector<AnonymizationSpec> specs;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    /// Corpus to harvest meaningful names from; the input itself when empty.
    std::optional<fs::path> vocabulary_source;
    std::optional<std::string> default_language;
    std::size_t batch_size = 512;
};

/// Output path for one variant: `<input-stem>.<tag><input-ext>`.
inline fs::path variant_path(const fs::path& input, const fs::path& output_dir, std::string_view tag) {
    return output_dir / (input.stem().string() + "." + std::string(tag) + input.extension().string());
}

inline fs::path report_path(const fs::path& input, const fs::path& output_dir, std::string_view tag) {
    return output_dir / (input.stem().string() + "." + std::string(tag) + ".stats.json");
}

/// Runs `fn(i)` for every i in [0, n) on up to `workers` threads.
template <typename Fn>
void parallel_for(std::size_t n, unsigned workers, Fn&& fn) {
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    if (workers == 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> cursor{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i; !failed && (i = cursor.fetch_add(1)) < n;) {
                    try {
                        fn(i);
                    } catch (...) {
                        if (!failed.exchange(true)) failure = std::current_exception();
                    }
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

inline Vocabulary vocabulary_from_file(const fs::path& path, const std::optional<std::string>& default_language) {
    VocabularyBuilder builder;
    RecordReader reader(path, default_language);
    while (auto r = reader.next()) builder.add(*r);
    return std::move(builder).build(path.filename().string());
}

/// In-memory counterpart of transform_corpus: result[s][i] is record i under
/// specs[s].
inline std::vector<std::vector<DatasetRecord>> transform_records(std::span<const DatasetRecord> records,
                                                                 std::span<const AnonymizationSpec> specs,
                                                                 const Vocabulary* vocab, unsigned workers = 1) {
    std::vector<std::vector<DatasetRecord>> out(specs.size(), std::vector<DatasetRecord>(records.size()));
    parallel_for(records.size(), workers, [&](std::size_t i) {
        const AnalyzedUnit unit = analyze_unit(records[i]);
        for (std::size_t s = 0; s < specs.size(); ++s) out[s][i] = transform_analyzed(records[i], unit, specs[s], vocab);
    });
    return out;
}

/// Writes one file per spec, record order preserved, and one stats report
/// per spec. Output is independent of `workers`. On any failure the files
/// created by this call are removed before the exception propagates.
inline std::vector<StatsReport> transform_corpus(const CorpusJob& job) {
    if (job.specs.empty()) throw ConfigError("no variants requested");
    if (job.workers == 0) throw ConfigError("workers must be positive");
    std::vector<AnonymizationSpec> specs = job.specs;
    for (auto& s : specs) s.seed = job.seed;

    std::optional<Vocabulary> vocab;
    const bool need_vocab = std::any_of(specs.begin(), specs.end(),
                                        [](const auto& s) { return s.scheme == NamingScheme::Meaningful; });
    if (need_vocab) vocab = vocabulary_from_file(job.vocabulary_source.value_or(job.input), job.default_language);

    std::error_code ec;
    fs::create_directories(job.output_dir, ec);
    if (ec) throw Error("cannot create " + job.output_dir.string() + ": " + ec.message());

    std::vector<fs::path> created;
    auto cleanup = [&] {
        for (const auto& p : created) fs::remove(p, ec);
    };

    try {
        RecordReader reader(job.input, job.default_language);
        std::vector<std::ofstream> outs;
        std::vector<StreamDigest> digests(specs.size());
        std::vector<StatsReport> reports(specs.size());
        for (std::size_t s = 0; s < specs.size(); ++s) {
            const auto path = variant_path(job.input, job.output_dir, specs[s].tag());
            created.push_back(path);
            outs.emplace_back(path, std::ios::binary | std::ios::trunc);
            if (!outs.back()) throw Error("cannot write " + path.string());
            reports[s].variant_tag = specs[s].tag();
            reports[s].seed = job.seed;
            reports[s].vocabulary_fallback_used = vocab && vocab->fallback_used();
            reports[s].output_file = path.filename().string();
        }

        const std::size_t batch = std::max<std::size_t>(1, job.batch_size);
        std::vector<DatasetRecord> records;
        std::vector<std::vector<DatasetRecord>> results(specs.size());
        const Vocabulary* vocab_ptr = vocab ? &*vocab : nullptr;
        bool done = false;
        while (!done) {
            records.clear();
            while (records.size() < batch) {
                auto r = reader.next();
                if (!r) {
                    done = true;
                    break;
                }
                records.push_back(std::move(*r));
            }
            for (auto& res : results) res.assign(records.size(), DatasetRecord{});
            parallel_for(records.size(), job.workers, [&](std::size_t i) {
                const AnalyzedUnit unit = analyze_unit(records[i]);
                for (std::size_t s = 0; s < specs.size(); ++s)
                    results[s][i] = transform_analyzed(records[i], unit, specs[s], vocab_ptr);
            });
            for (std::size_t s = 0; s < specs.size(); ++s) {
                for (const auto& out : results[s]) {
                    std::string line = serialize_record(out);
                    line += '\n';
                    outs[s] << line;
                    digests[s].update(line);
                    auto& rep = reports[s];
                    ++rep.records_total;
                    const auto& ann = *out.transform;
                    if (ann.skipped) ++rep.records_skipped;
                    else ++rep.records_processed;
                    for (std::size_t c = 0; c < 3; ++c) rep.renames_by_class[c] += ann.renames_by_class[c];
                    rep.random_fallbacks += ann.random_fallbacks;
                }
                if (!outs[s]) throw Error("write failure on " + created[s].string());
            }
        }

        for (std::size_t s = 0; s < specs.size(); ++s) {
            outs[s].close();
            if (!outs[s]) throw Error("write failure on " + created[s].string());
            reports[s].corpus_digest = digests[s].value();
            const auto rpath = report_path(job.input, job.output_dir, specs[s].tag());
            created.push_back(rpath);
            std::ofstream rep(rpath, std::ios::binary | std::ios::trunc);
            rep << to_json(reports[s]).dump(2) << '\n';
            if (!rep) throw Error("cannot write " + rpath.string());
        }
        return reports;
    } catch (...) {
        cleanup();
        throw;
    }
}

}  // namespace anon
