// Implements the C boundary: exceptions from the core become status codes and
// a per-thread error message; returned strings and handles are heap copies
// owned by the caller.

#include "metrofan.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "analyze.hpp"
#include "errors.hpp"
#include "metric.hpp"

namespace {

thread_local std::string g_last_error;

mf_status status_of(metrofan::ErrorCode code) {
    using metrofan::ErrorCode;
    switch (code) {
        case ErrorCode::parse_error: return MF_ERR_PARSE;
        case ErrorCode::not_pseudometric: return MF_ERR_NOT_PSEUDOMETRIC;
        case ErrorCode::zero_distance: return MF_ERR_ZERO_DISTANCE;
        case ErrorCode::not_strict: return MF_ERR_NOT_STRICT;
        case ErrorCode::too_large: return MF_ERR_TOO_LARGE;
        case ErrorCode::degenerate: return MF_ERR_DEGENERATE;
        case ErrorCode::internal_disagreement: return MF_ERR_INTERNAL_DISAGREEMENT;
        case ErrorCode::reproduce_mismatch: return MF_ERR_REPRODUCE_MISMATCH;
        case ErrorCode::io_error: return MF_ERR_IO;
        case ErrorCode::bad_argument: return MF_ERR_BAD_ARGUMENT;
    }
    return MF_ERR_UNKNOWN;
}

template <typename Fn>
mf_status guarded(Fn&& fn) {
    try {
        fn();
        return MF_OK;
    } catch (const metrofan::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return MF_ERR_UNKNOWN;
    } catch (...) {
        g_last_error = "unknown error";
        return MF_ERR_UNKNOWN;
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

} // namespace

struct mf_metric {
    metrofan::Metric m;
};

struct mf_dot_set {
    std::vector<std::pair<std::string, std::string>> files;
};

extern "C" {

const char* mf_last_error(void) { return g_last_error.c_str(); }

void mf_string_free(char* s) { std::free(s); }

mf_status mf_metric_from_file(const char* path, mf_metric** out) {
    return guarded([&] {
        if (!path || !out) metrofan::fail(metrofan::ErrorCode::bad_argument, "null argument");
        *out = new mf_metric{metrofan::metric_from_file(path)};
    });
}

mf_status mf_metric_from_json(const char* text, mf_metric** out) {
    return guarded([&] {
        if (!text || !out) metrofan::fail(metrofan::ErrorCode::bad_argument, "null argument");
        *out = new mf_metric{metrofan::metric_from_json(text)};
    });
}

void mf_metric_free(mf_metric* m) { delete m; }

int mf_metric_points(const mf_metric* m) { return m ? m->m.n : 0; }

mf_metric_class mf_metric_validity(const mf_metric* m) {
    if (!m) return MF_NOT_PSEUDOMETRIC;
    switch (metrofan::validate(m->m)) {
        case metrofan::MetricClass::not_pseudometric: return MF_NOT_PSEUDOMETRIC;
        case metrofan::MetricClass::pseudometric: return MF_PSEUDOMETRIC;
        case metrofan::MetricClass::metric: return MF_METRIC;
        case metrofan::MetricClass::strict_metric: return MF_STRICT;
    }
    return MF_NOT_PSEUDOMETRIC;
}

mf_status mf_analysis_report(const mf_metric* m, int with_facets, char** out_json) {
    return guarded([&] {
        if (!m || !out_json) metrofan::fail(metrofan::ErrorCode::bad_argument, "null argument");
        metrofan::AnalysisOptions opt;
        opt.facets = with_facets != 0;
        *out_json = copy_string(metrofan::analysis_report_json(m->m, opt));
    });
}

mf_status mf_compare_report(const mf_metric* a, const mf_metric* b, char** out_json) {
    return guarded([&] {
        if (!a || !b || !out_json) metrofan::fail(metrofan::ErrorCode::bad_argument, "null argument");
        *out_json = copy_string(metrofan::compare_report_json(a->m, b->m));
    });
}

mf_status mf_arrangement_stats(int n, int with_count, char** out_json) {
    return guarded([&] {
        if (!out_json) metrofan::fail(metrofan::ErrorCode::bad_argument, "null argument");
        *out_json = copy_string(metrofan::arrangement_stats_json(n, with_count != 0));
    });
}

mf_status mf_facet_dots(const mf_metric* m, mf_dot_set** out) {
    return guarded([&] {
        if (!m || !out) metrofan::fail(metrofan::ErrorCode::bad_argument, "null argument");
        *out = new mf_dot_set{metrofan::facet_dot_files(m->m)};
    });
}

size_t mf_dot_count(const mf_dot_set* s) { return s ? s->files.size() : 0; }

const char* mf_dot_name(const mf_dot_set* s, size_t i) {
    if (!s || i >= s->files.size()) return nullptr;
    return s->files[i].first.c_str();
}

const char* mf_dot_content(const mf_dot_set* s, size_t i) {
    if (!s || i >= s->files.size()) return nullptr;
    return s->files[i].second.c_str();
}

void mf_dot_set_free(mf_dot_set* s) { delete s; }

mf_status mf_reproduce(const char* target, const char* data_dir,
                       char** out_csv, char** out_diffs) {
    return guarded([&] {
        if (!target || !data_dir || !out_csv || !out_diffs)
            metrofan::fail(metrofan::ErrorCode::bad_argument, "null argument");
        const auto res = metrofan::reproduce(target, data_dir);
        *out_csv = copy_string(res.csv);
        if (res.ok()) {
            *out_diffs = nullptr;
            return;
        }
        std::string diffs;
        for (const auto& d : res.diffs) {
            diffs += d;
            diffs += '\n';
        }
        *out_diffs = copy_string(diffs);
        metrofan::fail(metrofan::ErrorCode::reproduce_mismatch,
                       std::to_string(res.diffs.size()) + " cells differ");
    });
}

} // extern "C"
