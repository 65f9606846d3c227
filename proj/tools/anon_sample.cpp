// Writes a synthetic record file for trying out the anon tool.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "anon/anon.hpp"
#include "anon/sample_corpus.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Generate a synthetic corpus of named functions"};
    std::string kind = "mixed", output;
    std::size_t count = 1000;
    std::uint64_t seed = 0;
    app.add_option("--kind", kind, "mixed, search, clone or noise")
        ->check(CLI::IsMember({"mixed", "search", "clone", "noise"}));
    app.add_option("--count", count, "Records (clone: two-member groups)")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Generator seed");
    app.add_option("--output", output, "Output file")->required();
    CLI11_PARSE(app, argc, argv);

    try {
        std::vector<anon::DatasetRecord> records;
        if (kind == "mixed") records = anon::sample::mixed_corpus(count, seed);
        else if (kind == "search") records = anon::sample::search_corpus(count, seed);
        else if (kind == "clone") records = anon::sample::clone_corpus(count, seed);
        else records = anon::sample::random_token_corpus(count, seed);
        anon::write_records(output, records);
        std::cout << records.size() << " records written to " << output << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
