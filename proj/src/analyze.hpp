// Report assembly for the CLI: single-metric analysis, pairwise comparison,
// arrangement statistics, and reproduction of the bundled sample tables.

#ifndef METROFAN_ANALYZE_HPP
#define METROFAN_ANALYZE_HPP

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "metric.hpp"

namespace metrofan {

struct AnalysisOptions {
    bool facets = false;
};

// Full JSON report for one metric. Fields that need a stricter validity class
// or exceed the supported size range are null rather than errors; only a
// non-pseudometric input leaves everything but the echo and class empty.
std::string analysis_report_json(const Metric& m, const AnalysisOptions& opt = {});

// DOT files for the facet graphs of a strict metric, as (filename, content).
std::vector<std::pair<std::string, std::string>> facet_dot_files(const Metric& m);

// {same_wasserstein_cone, same_tight_span_type, same_f_vector}.
std::string compare_report_json(const Metric& m1, const Metric& m2);

// Hyperplane count and lineality; with_count adds the characteristic
// polynomial and chamber count. Listing is limited to 4 <= n <= 6 and
// counting to n <= 5.
std::string arrangement_stats_json(int n, bool with_count);

struct ReproduceResult {
    std::string csv;                // recomputed table, header included
    std::vector<std::string> diffs; // one line per mismatched cell
    bool ok() const { return diffs.empty(); }
};

// Recomputes a bundled table and diffs it against the expected CSV. Targets:
// table1, table2, table3-strict5, generic5. data_dir holds metrics/ and
// expected/.
ReproduceResult reproduce(const std::string& target, const std::string& data_dir);

// Runs fn(0..count-1) across worker threads; METROFAN_THREADS caps the pool.
void parallel_for(size_t count, const std::function<void(size_t)>& fn);

} // namespace metrofan

#endif
