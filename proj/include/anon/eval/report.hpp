#pragma once

#include <cstdio>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "anon/record.hpp"

namespace anon::eval {

/// One line of a metric report file.
struct MetricRow {
    std::string variant_tag;
    std::string metric;
    double value = 0.0;
    std::size_t n = 0;
};

inline Json to_json(const MetricRow& row) {
    Json j = Json::object();
    j["variant_tag"] = row.variant_tag;
    j["metric"] = row.metric;
    j["value"] = row.value;
    j["n"] = row.n;
    return j;
}

inline void write_metric_rows(std::ostream& os, const std::vector<MetricRow>& rows) {
    for (const auto& r : rows) os << to_json(r).dump() << '\n';
}

/// Side-by-side layout: one row per (metric, naming strategy), columns
/// Original, w/o Variable, w/o Method Def., w/o Method Inv., All.
/// `original` is keyed by metric; `variants` by variant tag then metric.
inline void print_variant_table(std::ostream& os, const std::string& title,
                                const std::vector<std::string>& metrics,
                                const std::map<std::string, double>& original,
                                const std::map<std::string, std::map<std::string, double>>& variants) {
    static const char* groups[] = {"var", "mdef", "minv", "all"};
    static const std::pair<const char*, const char*> schemes[] = {{"rand", "Random"}, {"mean", "Meaningful"}};
    char buf[256];
    os << title << '\n';
    std::snprintf(buf, sizeof buf, "%-12s %-11s %9s %13s %16s %16s %9s\n", "Metric", "Anonymizing", "Original",
                  "w/o Variable", "w/o Method Def.", "w/o Method Inv.", "All");
    os << buf;
    auto cell = [](std::optional<double> v) {
        char c[32];
        if (v) std::snprintf(c, sizeof c, "%.2f%%", *v * 100.0);
        else std::snprintf(c, sizeof c, "-");
        return std::string(c);
    };
    for (const auto& metric : metrics) {
        bool first = true;
        for (const auto& [suffix, label] : schemes) {
            std::string cols[4];
            for (int g = 0; g < 4; ++g) {
                std::optional<double> v;
                auto it = variants.find(std::string(groups[g]) + "." + suffix);
                if (it != variants.end())
                    if (auto m = it->second.find(metric); m != it->second.end()) v = m->second;
                cols[g] = cell(v);
            }
            std::optional<double> orig;
            if (auto it = original.find(metric); it != original.end()) orig = it->second;
            std::snprintf(buf, sizeof buf, "%-12s %-11s %9s %13s %16s %16s %9s\n", first ? metric.c_str() : "",
                          label, first ? cell(orig).c_str() : "", cols[0].c_str(), cols[1].c_str(),
                          cols[2].c_str(), cols[3].c_str());
            os << buf;
            first = false;
        }
    }
}

}  // namespace anon::eval
