// Acceptance suite: one PASS/FAIL line per criterion.
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include <CLI11.hpp>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "anon/anon.hpp"
#include "anon/eval/clone.hpp"
#include "anon/eval/fingerprint.hpp"
#include "anon/eval/search.hpp"
#include "anon/golden.hpp"
#include "anon/sample_corpus.hpp"

using namespace anon;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = false;
    std::string detail;
};

class ScratchDir {
public:
    ScratchDir() {
        std::random_device rd;
        path_ = fs::temp_directory_path() / ("anon-accept-" + std::to_string(::getpid()) + "-" + std::to_string(rd()));
        fs::create_directories(path_);
    }
    ~ScratchDir() {
        std::error_code ec;
        fs::remove_all(path_, ec);
    }
    fs::path operator/(const std::string& name) const { return path_ / name; }

private:
    fs::path path_;
};

std::string read_text(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

unsigned default_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

Outcome golden() {
    const auto t0 = Clock::now();
    const auto result = run_golden_check();
    const auto& profile = load_profile(Language::cpp);
    const auto table = classify_identifiers(tokenize(golden_named(), profile), profile);
    SeededGenerator gen(0, "golden");
    const auto map = plan_renames(table, {TargetSet::all(), NamingScheme::Sequential, 0}, gen, nullptr);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& from : map.order()) pairs.emplace_back(from, map.find(from)->to);
    const double secs = seconds_since(t0);
    const bool exact = pairs == golden_renames() && result.matches && result.output == golden_expected();
    return {exact && secs < 1.0, std::to_string(pairs.size()) + " renames, exact=" + (exact ? "yes" : "no") + ", " +
                                     fmt("%.3f s", secs)};
}

Outcome round_trip() {
    ScratchDir dir;
    const auto records = sample::mixed_corpus(1200, 2);
    write_records(dir / "rt.jsonl", records);
    const auto t0 = Clock::now();
    CorpusJob job;
    job.input = dir / "rt.jsonl";
    job.output_dir = dir / "out";
    job.specs = {{TargetSet::none(), NamingScheme::Random, 0}};
    job.workers = default_workers();
    const auto reports = transform_corpus(job);
    const double secs = seconds_since(t0);

    std::istringstream in_lines(read_text(dir / "rt.jsonl"));
    auto out = read_all_records(dir / "out" / reports[0].output_file);
    std::size_t mismatches = out.size() == records.size() ? 0 : 1;
    std::string line;
    for (std::size_t i = 0; i < out.size() && std::getline(in_lines, line); ++i) {
        if (out[i].code != records[i].code) ++mismatches;
        out[i].extra.erase("variant");
        out[i].extra.erase("transform");
        if (serialize_record(out[i]) != line) ++mismatches;
    }
    return {mismatches == 0 && secs < 30.0, std::to_string(records.size()) + " records, " +
                                                std::to_string(mismatches) + " mismatches, " + fmt("%.2f s", secs)};
}

/// Token-aligned check of one transformed unit against its original.
/// Returns an empty string when kinds, classes and renaming consistency hold.
std::string check_unit(const DatasetRecord& before, const DatasetRecord& after, const AnonymizationSpec& spec) {
    const auto lang = before.parsed_language();
    if (!lang) return "unknown language";
    const auto& profile = load_profile(*lang);
    const auto s0 = tokenize(before.code, profile);
    const auto s1 = tokenize(after.code, profile);
    const auto t0 = classify_identifiers(s0, profile);
    const auto t1 = classify_identifiers(s1, profile);
    if (s0.tokens.size() != s1.tokens.size()) return "token count changed";
    std::map<std::string, std::string> forward, backward;
    for (std::size_t i = 0; i < s0.tokens.size(); ++i) {
        const auto& a = s0.tokens[i];
        const auto& b = s1.tokens[i];
        if (a.kind != b.kind) return "kind changed at token " + std::to_string(i);
        if (a.kind != TokenKind::Identifier) {
            if (a.text != b.text) return "non-identifier changed: " + a.text;
            continue;
        }
        const auto cls = t0.class_of(a.text);
        const bool targeted = cls && spec.targets.contains(*cls);
        if (!targeted) {
            if (a.text != b.text) return "untargeted name changed: " + a.text;
            continue;
        }
        if (t1.class_of(b.text) != cls) return "class changed: " + a.text + " -> " + b.text;
        if (auto [it, fresh] = forward.emplace(a.text, b.text); !fresh && it->second != b.text)
            return "inconsistent renaming of " + a.text;
        if (auto [it, fresh] = backward.emplace(b.text, a.text); !fresh && it->second != a.text)
            return "collision on " + b.text;
        if (b.text != a.text && t0.find(b.text)) return "fresh name already in unit: " + b.text;
    }
    return {};
}

Outcome kind_preservation() {
    const auto t0 = Clock::now();
    auto records = sample::mixed_corpus(2000, 3);
    DatasetRecord g;
    g.id = "golden";
    g.language = "cpp";
    g.code = std::string(golden_named());
    records.push_back(g);
    const auto vocab = build_vocabulary(records);
    const auto specs = standard_variants(3);
    const auto variants = transform_records(records, specs, &vocab, default_workers());
    std::size_t failures = 0, checked = 0;
    std::string first;
    for (std::size_t s = 0; s < specs.size(); ++s)
        for (std::size_t i = 0; i < records.size(); ++i) {
            ++checked;
            const auto why = check_unit(records[i], variants[s][i], specs[s]);
            if (!why.empty() && failures++ == 0) first = specs[s].tag() + " " + records[i].id + ": " + why;
        }
    const double secs = seconds_since(t0);
    return {failures == 0 && secs < 300.0, std::to_string(checked) + " units, " + std::to_string(failures) +
                                               " failures" + (first.empty() ? "" : " (" + first + ")") + ", " +
                                               fmt("%.2f s", secs)};
}

Outcome determinism() {
    ScratchDir dir;
    write_records(dir / "ds.jsonl", sample::mixed_corpus(1500, 4));
    auto run = [&](unsigned workers, const std::string& out) {
        CorpusJob job;
        job.input = dir / "ds.jsonl";
        job.output_dir = dir / out;
        job.specs = standard_variants(0);
        job.seed = 42;
        job.workers = workers;
        job.batch_size = 64;
        return transform_corpus(job);
    };
    const auto one = run(1, "w1");
    const auto eight = run(8, "w8");
    std::size_t equal = 0;
    for (std::size_t s = 0; s < one.size() && s < eight.size(); ++s)
        if (one[s].corpus_digest == eight[s].corpus_digest &&
            read_text(dir / "w1" / one[s].output_file) == read_text(dir / "w8" / eight[s].output_file))
            ++equal;
    return {one.size() == 8 && equal == 8, std::to_string(equal) + "/8 variants identical"};
}

Outcome fingerprint_invariance() {
    auto records = sample::mixed_corpus(2000, 5);
    for (auto& r : sample::clone_corpus(60, 5)) records.push_back(std::move(r));
    const auto vocab = build_vocabulary(records);
    const auto specs = standard_variants(5);
    const auto variants = transform_records(records, specs, &vocab, default_workers());
    auto fingerprint = [](const DatasetRecord& r) {
        const auto& profile = load_profile(*r.parsed_language());
        const auto stream = tokenize(r.code, profile);
        return eval::structure_fingerprint(stream, classify_identifiers(stream, profile));
    };
    std::size_t mismatches = 0, checked = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto original = fingerprint(records[i]);
        for (std::size_t s = 0; s < specs.size(); ++s, ++checked)
            if (!(fingerprint(variants[s][i]) == original)) ++mismatches;
    }
    return {mismatches == 0, std::to_string(checked) + " variant units, " + std::to_string(mismatches) + " mismatches"};
}

Outcome search_degradation() {
    const auto t0 = Clock::now();
    const auto records = sample::search_corpus(600, 6);
    const std::vector<AnonymizationSpec> specs = {*parse_variant_tag("all.rand", 6)};
    const auto variants = transform_records(records, specs, nullptr, default_workers());
    const auto original = eval::search_eval(records, 100, 6, default_workers());
    const auto anonymized = eval::search_eval(variants[0], 100, 6, default_workers());
    const double secs = seconds_since(t0);
    const double ratio = original.metrics.mrr > 0 ? anonymized.metrics.mrr / original.metrics.mrr : 1.0;
    const bool ok = original.metrics.queries >= 500 && ratio <= 0.5 && secs < 300.0;
    return {ok, std::to_string(original.metrics.queries) + " queries, MRR " + fmt("%.4f", original.metrics.mrr) +
                    " -> " + fmt("%.4f", anonymized.metrics.mrr) + ", ratio " + fmt("%.3f", ratio) + ", " +
                    fmt("%.2f s", secs)};
}

Outcome clone_backends() {
    const auto records = sample::clone_corpus(60, 7);
    std::map<std::string, std::vector<const DatasetRecord*>> groups;
    for (const auto& r : records) groups[*r.clone_group].push_back(&r);
    auto significant = [](const DatasetRecord& r) {
        std::vector<std::string> out;
        for (const auto& t : tokenize(r.code, load_profile(*r.parsed_language())).tokens)
            if (!t.is_trivia()) out.push_back(t.text);
        return out;
    };
    auto fingerprint = [](const DatasetRecord& r) {
        const auto& profile = load_profile(*r.parsed_language());
        const auto stream = tokenize(r.code, profile);
        return eval::structure_fingerprint(stream, classify_identifiers(stream, profile));
    };
    // A rename clone differs in its tokens but not in its structure.
    std::size_t rename_pairs = 0;
    const bool has_golden = groups.count("golden") > 0;
    for (const auto& [name, members] : groups)
        for (std::size_t a = 0; a < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b)
                if (significant(*members[a]) != significant(*members[b]) &&
                    fingerprint(*members[a]) == fingerprint(*members[b]))
                    ++rename_pairs;

    const auto vocab = build_vocabulary(records);
    const auto specs = standard_variants(7);
    const auto variants = transform_records(records, specs, &vocab, default_workers());
    double min_structural = 1.0;
    double literal_all_rand = 0.0;
    for (std::size_t s = 0; s < specs.size(); ++s) {
        const auto structural = eval::clone_eval(variants[s], eval::CloneBackend::StructuralFingerprint);
        min_structural = std::min(min_structural, structural.metrics.f1);
        if (specs[s].tag() == "all.rand")
            literal_all_rand = eval::clone_eval(variants[s], eval::CloneBackend::LiteralTokens).metrics.f1;
    }
    const double literal_original = eval::clone_eval(records, eval::CloneBackend::LiteralTokens).metrics.f1;
    const bool ok = has_golden && rename_pairs >= 50 && min_structural == 1.0 && literal_all_rand < literal_original;
    return {ok, std::string(has_golden ? "golden pair + " : "no golden pair, ") + std::to_string(rename_pairs) +
                    " rename pairs, structural F1 min " + fmt("%.3f", min_structural) + ", literal F1 " +
                    fmt("%.3f", literal_original) + " -> " + fmt("%.3f", literal_all_rand)};
}

Outcome chance_level() {
    const std::size_t candidates = 100;
    const auto records = sample::random_token_corpus(600, 8);
    const auto res = eval::search_eval(records, candidates, 8, default_workers());
    const double chance = 1.0 / static_cast<double>(candidates);
    const bool ok = res.metrics.queries >= 500 && std::abs(res.metrics.accuracy_at_1 - chance) <= 0.05;
    return {ok, std::to_string(res.metrics.queries) + " queries, acc@1 " + fmt("%.4f", res.metrics.accuracy_at_1) +
                    " vs chance " + fmt("%.4f", chance)};
}

/// Runs the transform driver in a fresh process and returns its peak RSS in KiB.
long child_peak_rss(const fs::path& input, const fs::path& out) {
    const pid_t pid = ::fork();
    if (pid < 0) throw std::runtime_error("fork failed");
    if (pid == 0) {
        const std::string self = fs::read_symlink("/proc/self/exe").string();
        ::execl(self.c_str(), self.c_str(), "--transform-child", input.c_str(), out.c_str(), nullptr);
        ::_exit(127);
    }
    int status = 0;
    struct rusage usage {};
    if (::wait4(pid, &status, 0, &usage) < 0 || !WIFEXITED(status) || WEXITSTATUS(status) != 0)
        throw std::runtime_error("transform child failed");
    return usage.ru_maxrss;
}

CorpusJob throughput_job(const fs::path& input, const fs::path& out) {
    CorpusJob job;
    job.input = input;
    job.output_dir = out;
    job.specs = standard_variants(0);
    job.seed = 9;
    job.workers = default_workers();
    return job;
}

Outcome throughput() {
    ScratchDir dir;
    write_records(dir / "10k.jsonl", sample::mixed_corpus(10000, 9));
    const auto t0 = Clock::now();
    const auto reports = transform_corpus(throughput_job(dir / "10k.jsonl", dir / "out"));
    const double secs = seconds_since(t0);
    std::size_t lines = 0;
    for (const auto& r : reports) lines += r.records_total;

    write_records(dir / "small.jsonl", sample::mixed_corpus(5000, 10));
    {
        std::ofstream big(dir / "big.jsonl", std::ios::binary);
        const auto block = sample::mixed_corpus(5000, 11);
        for (int copy = 0; copy < 10; ++copy)
            for (auto r : block) {
                r.id += "-" + std::to_string(copy);
                big << serialize_record(r) << '\n';
            }
    }
    const long small = child_peak_rss(dir / "small.jsonl", dir / "small-out");
    const long big = child_peak_rss(dir / "big.jsonl", dir / "big-out");
    const bool flat = static_cast<double>(big) <= 1.25 * static_cast<double>(small) + 4096.0;
    return {reports.size() == 8 && lines == 80000 && secs < 60.0 && flat,
            std::to_string(lines) + " records in " + fmt("%.2f s", secs) + ", peak RSS " + std::to_string(small) +
                " KiB (5k) vs " + std::to_string(big) + " KiB (50k)"};
}

}  // namespace

int main(int argc, char** argv) {
    if (argc == 4 && std::string(argv[1]) == "--transform-child") {
        try {
            transform_corpus(throughput_job(argv[2], argv[3]));
            return 0;
        } catch (const std::exception& e) {
            std::cerr << e.what() << '\n';
            return 1;
        }
    }

    CLI::App app{"acceptance criteria"};
    int only = 0;
    app.add_option("--only", only, "run a single criterion")->check(CLI::Range(1, 9));
    CLI11_PARSE(app, argc, argv);

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"golden sequential map", golden},
        {"round trip with empty targets", round_trip},
        {"kind preservation", kind_preservation},
        {"determinism across workers", determinism},
        {"fingerprint invariance", fingerprint_invariance},
        {"search degradation", search_degradation},
        {"clone backends", clone_backends},
        {"chance level on random tokens", chance_level},
        {"throughput and flat memory", throughput},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first << " ("
                  << o.detail << ")" << std::endl;
        if (!o.pass) ++failed;
    }
    return failed == 0 ? 0 : 1;
}
