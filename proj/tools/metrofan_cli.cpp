// Command-line front end. Links only the shared C API; owns exit-code policy:
// 0 ok, 2 unreadable input, 3 not a pseudometric, 4 refused size, 5 reproduce
// mismatch, 1 anything else.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "metrofan.h"

namespace {

int exit_code_of(mf_status st) {
    switch (st) {
        case MF_OK: return 0;
        case MF_ERR_PARSE:
        case MF_ERR_IO: return 2;
        case MF_ERR_NOT_PSEUDOMETRIC:
        case MF_ERR_ZERO_DISTANCE: return 3;
        case MF_ERR_TOO_LARGE: return 4;
        case MF_ERR_REPRODUCE_MISMATCH: return 5;
        default: return 1;
    }
}

int report_error(mf_status st) {
    std::cerr << "metrofan: " << mf_last_error() << "\n";
    return exit_code_of(st);
}

using MetricPtr = std::unique_ptr<mf_metric, decltype(&mf_metric_free)>;

MetricPtr load_metric(const std::string& path, mf_status& st) {
    mf_metric* m = nullptr;
    st = mf_metric_from_file(path.c_str(), &m);
    return MetricPtr(m, &mf_metric_free);
}

struct OwnedString {
    char* s = nullptr;
    ~OwnedString() { mf_string_free(s); }
};

int run_analyze(const std::string& file, bool facets, const std::string& dot_dir) {
    mf_status st;
    MetricPtr m = load_metric(file, st);
    if (st != MF_OK) return report_error(st);
    OwnedString json;
    st = mf_analysis_report(m.get(), facets ? 1 : 0, &json.s);
    if (st != MF_OK) return report_error(st);
    std::cout << json.s << "\n";
    if (!dot_dir.empty()) {
        mf_dot_set* dots = nullptr;
        st = mf_facet_dots(m.get(), &dots);
        if (st != MF_OK) return report_error(st);
        std::unique_ptr<mf_dot_set, decltype(&mf_dot_set_free)> guard(dots, &mf_dot_set_free);
        std::error_code ec;
        std::filesystem::create_directories(dot_dir, ec);
        if (ec) {
            std::cerr << "metrofan: cannot create " << dot_dir << ": " << ec.message() << "\n";
            return 1;
        }
        for (size_t i = 0; i < mf_dot_count(dots); ++i) {
            const std::filesystem::path path = std::filesystem::path(dot_dir) / mf_dot_name(dots, i);
            std::ofstream out(path, std::ios::binary);
            out << mf_dot_content(dots, i);
            if (!out) {
                std::cerr << "metrofan: cannot write " << path.string() << "\n";
                return 1;
            }
        }
        std::cerr << "wrote " << mf_dot_count(dots) << " DOT files to " << dot_dir << "\n";
    }
    if (mf_metric_validity(m.get()) == MF_NOT_PSEUDOMETRIC) return 3;
    return 0;
}

int run_compare(const std::string& file1, const std::string& file2) {
    mf_status st;
    MetricPtr a = load_metric(file1, st);
    if (st != MF_OK) return report_error(st);
    MetricPtr b = load_metric(file2, st);
    if (st != MF_OK) return report_error(st);
    OwnedString json;
    st = mf_compare_report(a.get(), b.get(), &json.s);
    if (st != MF_OK) return report_error(st);
    std::cout << json.s << "\n";
    return 0;
}

int run_arrangement(int n, bool count) {
    OwnedString json;
    const mf_status st = mf_arrangement_stats(n, count ? 1 : 0, &json.s);
    if (st != MF_OK) return report_error(st);
    std::cout << json.s << "\n";
    return 0;
}

int run_reproduce(const std::string& target, const std::string& data_dir) {
    OwnedString csv, diffs;
    const mf_status st = mf_reproduce(target.c_str(), data_dir.c_str(), &csv.s, &diffs.s);
    if (csv.s) std::cout << csv.s;
    if (st == MF_OK) return 0;
    if (st == MF_ERR_REPRODUCE_MISMATCH && diffs.s) std::cerr << diffs.s;
    return report_error(st);
}

std::string default_data_dir() {
    if (const char* env = std::getenv("METROFAN_DATA")) return env;
#ifdef METROFAN_DATA_DIR
    return METROFAN_DATA_DIR;
#else
    return "data";
#endif
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Kantorovich-Rubinstein polytopes, Wasserstein arrangements, and tight spans of finite metrics"};
    app.require_subcommand(1);

    std::string an_file, dot_dir;
    bool facets = false;
    auto* an = app.add_subcommand("analyze", "Full report for one metric");
    an->add_option("file", an_file, "metric file (JSON or CSV)")->required();
    an->add_flag("--facets", facets, "include the facet list in the report");
    an->add_option("--dot", dot_dir, "write one DOT file per facet graph into this directory");

    int arr_n = 0;
    bool arr_count = false;
    auto* ar = app.add_subcommand("arrangement", "Wasserstein arrangement statistics");
    ar->add_option("--n", arr_n, "number of points (4..6)")->required();
    ar->add_flag("--count", arr_count, "add characteristic polynomial and chamber count (n <= 5)");

    std::string cmp_file1, cmp_file2;
    auto* cm = app.add_subcommand("compare", "Cone, tight-span type, and f-vector comparison");
    cm->add_option("file1", cmp_file1, "first metric file")->required();
    cm->add_option("file2", cmp_file2, "second metric file")->required();

    std::string target, data_dir = default_data_dir();
    auto* re = app.add_subcommand("reproduce", "Recompute a bundled table and diff it");
    re->add_option("target", target, "table1, table2, table3-strict5, or generic5")->required();
    re->add_option("--data", data_dir, "data directory holding metrics/ and expected/");

    CLI11_PARSE(app, argc, argv);

    if (an->parsed()) return run_analyze(an_file, facets, dot_dir);
    if (ar->parsed()) return run_arrangement(arr_n, arr_count);
    if (cm->parsed()) return run_compare(cmp_file1, cmp_file2);
    return run_reproduce(target, data_dir);
}
