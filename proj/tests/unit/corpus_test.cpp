#include <gtest/gtest.h>

#include "../support/test_support.hpp"
#include "anon/corpus.hpp"
#include "anon/sample_corpus.hpp"

using namespace anon;
using anon::testing::read_file;
using anon::testing::TempDir;
using anon::testing::write_file;

namespace {

std::size_t count_lines(const fs::path& p) {
    const auto text = read_file(p);
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

CorpusJob job_for(const fs::path& input, const fs::path& out, unsigned workers) {
    CorpusJob job;
    job.input = input;
    job.output_dir = out;
    job.specs = standard_variants(0);
    job.seed = 42;
    job.workers = workers;
    job.batch_size = 37;
    return job;
}

}  // namespace

TEST(RecordReader, ReadsInOrder) {
    TempDir dir;
    write_file(dir / "in.jsonl",
               "{\"id\":\"a\",\"language\":\"c\",\"code\":\"int x;\"}\n"
               "\n"
               "{\"id\":\"b\",\"language\":\"python\",\"code\":\"x = 1\",\"docstring\":\"d\"}\n"
               "{\"id\":\"c\",\"language\":\"java\",\"code\":\"int y;\",\"clone_group\":7,\"url\":\"u\"}\n");
    const auto records = read_all_records(dir / "in.jsonl");
    ASSERT_EQ(records.size(), 3u);
    EXPECT_EQ(records[0].id, "a");
    EXPECT_EQ(records[1].docstring, "d");
    EXPECT_EQ(records[2].clone_group, "7");
    EXPECT_EQ(records[2].extra["url"], "u");
}

TEST(RecordReader, MissingCodeNamesTheLine) {
    TempDir dir;
    write_file(dir / "in.jsonl", "{\"id\":\"a\",\"language\":\"c\",\"code\":\"\"}\n{\"id\":\"b\",\"language\":\"c\"}\n");
    try {
        read_all_records(dir / "in.jsonl");
        FAIL() << "expected DataError";
    } catch (const DataError& e) {
        EXPECT_EQ(e.line(), 2u);
        EXPECT_NE(std::string(e.what()).find("code"), std::string::npos);
    }
}

TEST(RecordReader, MalformedLine) {
    TempDir dir;
    write_file(dir / "in.jsonl", "{\"id\":\"a\",\"language\":\"c\",\"code\":\"\"}\n{oops\n");
    try {
        read_all_records(dir / "in.jsonl");
        FAIL() << "expected DataError";
    } catch (const DataError& e) {
        EXPECT_EQ(e.line(), 2u);
    }
}

TEST(RecordReader, DuplicateId) {
    TempDir dir;
    write_file(dir / "in.jsonl", "{\"id\":\"a\",\"language\":\"c\",\"code\":\"\"}\n{\"id\":\"a\",\"language\":\"c\",\"code\":\"\"}\n");
    EXPECT_THROW(read_all_records(dir / "in.jsonl"), DataError);
}

TEST(RecordReader, EmptyFile) {
    TempDir dir;
    write_file(dir / "in.jsonl", "");
    EXPECT_TRUE(read_all_records(dir / "in.jsonl").empty());
}

TEST(RecordReader, DefaultLanguage) {
    TempDir dir;
    write_file(dir / "in.jsonl", "{\"id\":\"a\",\"code\":\"x = 1\"}\n");
    EXPECT_THROW(read_all_records(dir / "in.jsonl"), DataError);
    EXPECT_EQ(read_all_records(dir / "in.jsonl", "python")[0].language, "python");
}

TEST(RecordReader, RoundTripsThroughWriter) {
    TempDir dir;
    auto records = sample::mixed_corpus(50, 1);
    records[3].extra["repo"] = "x/y";
    write_records(dir / "a.jsonl", records);
    const auto back = read_all_records(dir / "a.jsonl");
    ASSERT_EQ(back.size(), records.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        EXPECT_EQ(back[i].code, records[i].code);
        EXPECT_EQ(back[i].docstring, records[i].docstring);
    }
    EXPECT_EQ(back[3].extra["repo"], "x/y");
}

TEST(TransformCorpus, EightFilesOfOneHundred) {
    TempDir dir;
    write_records(dir / "ds.jsonl", sample::mixed_corpus(100, 4));
    const auto reports = transform_corpus(job_for(dir / "ds.jsonl", dir / "out", 2));
    ASSERT_EQ(reports.size(), 8u);
    const auto input = read_all_records(dir / "ds.jsonl");
    for (const auto& rep : reports) {
        const auto path = dir / "out" / rep.output_file;
        EXPECT_EQ(count_lines(path), 100u);
        EXPECT_EQ(rep.records_total, 100u);
        EXPECT_EQ(rep.records_skipped, 0u);
        EXPECT_TRUE(fs::exists(report_path(dir / "ds.jsonl", dir / "out", rep.variant_tag)));
        const auto out = read_all_records(path);
        for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i].id, input[i].id);
        EXPECT_EQ(fnv1a64(read_file(path)), rep.corpus_digest);
    }
    EXPECT_EQ(reports[0].output_file, "ds.var.rand.jsonl");
}

TEST(TransformCorpus, WorkerCountDoesNotChangeOutput) {
    TempDir dir;
    write_records(dir / "ds.jsonl", sample::mixed_corpus(150, 6));
    const auto one = transform_corpus(job_for(dir / "ds.jsonl", dir / "w1", 1));
    const auto eight = transform_corpus(job_for(dir / "ds.jsonl", dir / "w8", 8));
    ASSERT_EQ(one.size(), eight.size());
    for (std::size_t s = 0; s < one.size(); ++s) EXPECT_EQ(one[s].corpus_digest, eight[s].corpus_digest);
}

TEST(TransformCorpus, SeedChangesOutput) {
    TempDir dir;
    write_records(dir / "ds.jsonl", sample::mixed_corpus(30, 6));
    auto a = job_for(dir / "ds.jsonl", dir / "a", 1);
    auto b = job_for(dir / "ds.jsonl", dir / "b", 1);
    b.seed = 43;
    EXPECT_NE(transform_corpus(a)[0].corpus_digest, transform_corpus(b)[0].corpus_digest);
}

TEST(TransformCorpus, UnlexableInputPassesThrough) {
    TempDir dir;
    std::vector<DatasetRecord> records;
    for (int i = 0; i < 100; ++i)
        records.push_back(anon::testing::record("u" + std::to_string(i), "c", "x = \"open" + std::to_string(i)));
    write_records(dir / "bad.jsonl", records);
    const auto reports = transform_corpus(job_for(dir / "bad.jsonl", dir / "out", 2));
    for (const auto& rep : reports) {
        EXPECT_EQ(rep.records_skipped, 100u);
        const auto out = read_all_records(dir / "out" / rep.output_file);
        for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i].code, records[i].code);
    }
}

TEST(TransformCorpus, NoneTargetIsIdentity) {
    TempDir dir;
    const auto records = sample::mixed_corpus(80, 12);
    write_records(dir / "ds.jsonl", records);
    auto job = job_for(dir / "ds.jsonl", dir / "out", 2);
    job.specs = {{TargetSet::none(), NamingScheme::Random, 0}};
    const auto reports = transform_corpus(job);
    const auto out = read_all_records(dir / "out" / reports[0].output_file);
    for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i].code, records[i].code);
}

TEST(TransformCorpus, FailureRemovesPartialOutput) {
    TempDir dir;
    std::string text;
    for (const auto& r : sample::mixed_corpus(60, 2)) text += serialize_record(r) + "\n";
    text += "{not json}\n";
    write_file(dir / "ds.jsonl", text);
    EXPECT_THROW(transform_corpus(job_for(dir / "ds.jsonl", dir / "out", 2)), DataError);
    EXPECT_TRUE(!fs::exists(dir / "out") || fs::is_empty(dir / "out"));
}

TEST(TransformCorpus, VocabularyFallbackIsReported) {
    TempDir dir;
    write_records(dir / "ds.jsonl", {anon::testing::record("only", "python", "x = 1\n")});
    auto job = job_for(dir / "ds.jsonl", dir / "out", 1);
    const auto reports = transform_corpus(job);
    EXPECT_TRUE(reports[1].vocabulary_fallback_used);
    const auto j = Json::parse(read_file(report_path(dir / "ds.jsonl", dir / "out", "var.mean")));
    EXPECT_EQ(j["vocabulary_fallback_used"], true);
    EXPECT_EQ(j["variant_tag"], "var.mean");
}

TEST(TransformCorpus, RejectsBadJobs) {
    TempDir dir;
    write_records(dir / "ds.jsonl", sample::mixed_corpus(3, 2));
    auto job = job_for(dir / "ds.jsonl", dir / "out", 1);
    job.specs.clear();
    EXPECT_THROW(transform_corpus(job), ConfigError);
    job = job_for(dir / "ds.jsonl", dir / "out", 0);
    EXPECT_THROW(transform_corpus(job), ConfigError);
}

TEST(ParallelFor, VisitsEveryIndexOnce) {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), 8, [&](std::size_t i) { ++hits[i]; });
    for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
}

TEST(ParallelFor, PropagatesExceptions) {
    EXPECT_THROW(parallel_for(100, 4, [](std::size_t i) {
                     if (i == 57) throw std::runtime_error("boom");
                 }),
                 std::runtime_error);
}

TEST(TransformRecords, MatchesCorpusDriver) {
    const auto records = sample::mixed_corpus(40, 9);
    const auto specs = standard_variants(5);
    const auto vocab = build_vocabulary(records);
    const auto a = transform_records(records, specs, &vocab, 1);
    const auto b = transform_records(records, specs, &vocab, 4);
    for (std::size_t s = 0; s < specs.size(); ++s)
        for (std::size_t i = 0; i < records.size(); ++i) EXPECT_EQ(a[s][i].code, b[s][i].code);
}
