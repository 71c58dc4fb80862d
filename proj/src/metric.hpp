// Finite point-set metrics with exact rational entries, stored as the upper
// triangle in lexicographic pair order (1,2),(1,3),...,(n-1,n). Points are
// 1-based throughout.

#ifndef METROFAN_METRIC_HPP
#define METROFAN_METRIC_HPP

#include <string>
#include <vector>

#include "rat.hpp"

namespace metrofan {

struct Metric {
    int n = 0;
    RatVec d; // n*(n-1)/2 entries, lex order

    Metric() = default;
    Metric(int n_, RatVec d_);

    static int pair_count(int n) { return n * (n - 1) / 2; }

    // Index of the unordered pair {i,j} (1-based, i != j) into d.
    static int pair_index(int n, int i, int j);
    int pair_index(int i, int j) const { return pair_index(n, i, j); }

    const Rat& dist(int i, int j) const { return d[pair_index(i, j)]; }
    Rat& dist(int i, int j) { return d[pair_index(i, j)]; }

    bool operator==(const Metric&) const = default;
};

enum class MetricClass {
    not_pseudometric, // triangle inequality violated or a negative entry
    pseudometric,     // triangle holds, some zero off-diagonal distance
    metric,           // positive, triangle holds, some triangle tight
    strict_metric,    // every triangle on distinct points is strict
};

const char* metric_class_name(MetricClass c);

MetricClass validate(const Metric& m);

bool is_pseudometric(const Metric& m);
bool is_metric(const Metric& m);
bool is_strict(const Metric& m);

// A split A | [n]\A, stored by the side containing point 1, sorted.
struct Split {
    int n = 0;
    std::vector<int> part_a;

    Split() = default;
    Split(int n_, std::vector<int> side); // canonicalizes to the side with 1

    std::vector<int> part_b() const;

    bool operator==(const Split&) const = default;
    auto operator<=>(const Split&) const = default;
};

// All 2^(n-1) - 1 splits of [n] in a deterministic order.
std::vector<Split> all_splits(int n);

// The split pseudometric: distance 1 across the split, 0 within a part.
Metric split_metric(const Split& s);
Metric split_metric(int n, const std::vector<int>& side);

// Path metric on k+1 points: d(i,j) = |i - j|.
Metric path_metric(int k);

Metric scale(const Metric& m, const Rat& factor);

// Pointwise sum of a metric and a weighted combination; general helper for
// split decompositions.
Metric add(const Metric& a, const Metric& b);

// Glues m2's first point onto m1's last point: the result lives on
// n1 + n2 - 1 points, with cross distances m1(i, n1) + m2(1, j).
// Rejects non-pseudometric inputs and zero glue distances.
Metric free_sum(const Metric& m1, const Metric& m2);

// Relabeled metric with d'(i,j) = d(sigma^-1(i), sigma^-1(j)); sigma is given
// as the image list sigma[i-1] = sigma(i). Satisfies
// permute(permute(m, s), t) == permute(m, compose(t, s)).
Metric permute(const Metric& m, const std::vector<int>& sigma);

std::vector<int> compose(const std::vector<int>& s, const std::vector<int>& t); // s after t
std::vector<int> inverse(const std::vector<int>& sigma);

// JSON form {"n": int, "d": [entries]} with entries as integers or "p/q"
// strings; CSV form is a full symmetric matrix with zero diagonal.
Metric metric_from_json(const std::string& text);
Metric metric_from_csv(const std::string& text);
Metric metric_from_file(const std::string& path); // sniffs JSON vs CSV
std::string metric_to_json(const Metric& m);

} // namespace metrofan

#endif
