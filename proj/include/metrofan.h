/* C interface to the metrofan core: finite metric analysis, pairwise
 * comparison, Wasserstein arrangement statistics, and reproduction of the
 * bundled sample tables. Every fallible call returns MF_OK or an error code;
 * mf_last_error() describes the most recent failure on the calling thread. */

#ifndef METROFAN_H
#define METROFAN_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mf_status {
    MF_OK = 0,
    MF_ERR_PARSE = 1,
    MF_ERR_NOT_PSEUDOMETRIC = 2,
    MF_ERR_ZERO_DISTANCE = 3,
    MF_ERR_NOT_STRICT = 4,
    MF_ERR_TOO_LARGE = 5,
    MF_ERR_DEGENERATE = 6,
    MF_ERR_INTERNAL_DISAGREEMENT = 7,
    MF_ERR_REPRODUCE_MISMATCH = 8,
    MF_ERR_IO = 9,
    MF_ERR_BAD_ARGUMENT = 10,
    MF_ERR_UNKNOWN = 11,
} mf_status;

typedef enum mf_metric_class {
    MF_NOT_PSEUDOMETRIC = 0,
    MF_PSEUDOMETRIC = 1,
    MF_METRIC = 2,
    MF_STRICT = 3,
} mf_metric_class;

const char* mf_last_error(void);

/* Frees any string returned through a char** out parameter. */
void mf_string_free(char* s);

typedef struct mf_metric mf_metric;

/* Reads a metric from a JSON or CSV file (format sniffed from content). */
mf_status mf_metric_from_file(const char* path, mf_metric** out);
mf_status mf_metric_from_json(const char* text, mf_metric** out);
void mf_metric_free(mf_metric* m);

int mf_metric_points(const mf_metric* m);
mf_metric_class mf_metric_validity(const mf_metric* m);

/* JSON report: echo, validity, genericity, f-vector, simplicial flag, sign
 * vector, class membership, tight-span cell count, stabilizer order. Fields
 * that need a stricter validity class or exceed the supported size are null.
 * with_facets adds the facet list. */
mf_status mf_analysis_report(const mf_metric* m, int with_facets, char** out_json);

/* JSON {same_wasserstein_cone, same_tight_span_type, same_f_vector}. */
mf_status mf_compare_report(const mf_metric* a, const mf_metric* b, char** out_json);

/* JSON with hyperplane count and lineality dimension; with_count adds the
 * characteristic polynomial and chamber count (4 <= n <= 6, counting n <= 5). */
mf_status mf_arrangement_stats(int n, int with_count, char** out_json);

/* DOT files for the facet graphs of a strict metric. */
typedef struct mf_dot_set mf_dot_set;

mf_status mf_facet_dots(const mf_metric* m, mf_dot_set** out);
size_t mf_dot_count(const mf_dot_set* s);
const char* mf_dot_name(const mf_dot_set* s, size_t i);
const char* mf_dot_content(const mf_dot_set* s, size_t i);
void mf_dot_set_free(mf_dot_set* s);

/* Recomputes a bundled table (table1, table2, table3-strict5, generic5) from
 * the metric files under data_dir and diffs it against the expected CSV.
 * On MF_OK or MF_ERR_REPRODUCE_MISMATCH, *out_csv holds the recomputed table;
 * on mismatch, *out_diffs holds one line per differing cell. */
mf_status mf_reproduce(const char* target, const char* data_dir,
                       char** out_csv, char** out_diffs);

#ifdef __cplusplus
}
#endif

#endif
