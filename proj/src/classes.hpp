// Split decomposition of finite metrics and the metric classes built on it:
// totally split-decomposable, tree-like, Kalmanson, and the six-point class.

#ifndef METROFAN_CLASSES_HPP
#define METROFAN_CLASSES_HPP

#include <string>
#include <utility>
#include <vector>

#include "metric.hpp"

namespace metrofan {

// Isolation index of the pair of subsets A, B. Zero whenever the subsets
// meet; the same minimum formula covers every case.
Rat isolation_index(const Metric& m, const std::vector<int>& a,
                    const std::vector<int>& b);

struct SplitSummand {
    Split split;
    Rat weight; // strictly positive

    bool operator==(const SplitSummand&) const = default;
};

struct SplitDecomposition {
    int n = 0;
    std::vector<SplitSummand> summands; // splits with positive weight
    RatVec residual; // split-prime part; entries may be zero or negative

    bool residual_zero() const;
};

// Canonical decomposition: weights are the isolation indices of the input
// metric, the residual is the remainder and is verified split-prime.
SplitDecomposition split_decompose(const Metric& m);

// True iff the residual of the decomposition vanishes. Cross-checked against
// the quartet-inequality characterization over all ordered 5-tuples of
// distinct points; a mismatch is an internal failure.
bool is_totally_split_decomposable(const Metric& m);

// Four-point condition: in every quadruple the two largest of the three pair
// sums are equal.
bool is_tree_like(const Metric& m);

struct KalmansonResult {
    bool holds = false;
    std::vector<int> order; // witness circular order when holds, else empty
};

// Searches circular orders (up to rotation and reflection) for one in which
// crossing pair sums dominate; n > 8 is refused.
KalmansonResult is_kalmanson(const Metric& m);

// Every 6-subset contains a pair {i,j} such that for all pairs {k,l} of the
// remaining four points d(i,j) + d(k,l) <= max of the two crossing sums.
// Vacuously true below six points.
bool six_point_condition(const Metric& m);

std::string classes_report_json(const Metric& m);

} // namespace metrofan

#endif
