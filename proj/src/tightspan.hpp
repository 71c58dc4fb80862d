// Regular subdivisions of lifted point configurations (lower-facet
// convention), the second-hypersimplex subdivision induced by a metric as
// heights, and tight-span type comparison through it.

#ifndef METROFAN_TIGHTSPAN_HPP
#define METROFAN_TIGHTSPAN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "metric.hpp"
#include "rat.hpp"

namespace metrofan {

struct RegularSubdivision {
    std::vector<RatVec> config;
    std::vector<std::string> labels; // one per configuration point
    RatVec heights;
    std::vector<uint64_t> maximal_cells; // masks over config indices, sorted
    bool trivial = false;                // heights affine on the configuration

    int cell_count() const { return static_cast<int>(maximal_cells.size()); }
};

// Maximal cells of the lower hull of the configuration lifted by the heights.
// A cell keeps every point lying on its supporting hyperplane. If the heights
// are affine on the configuration the subdivision is the single full cell.
RegularSubdivision regular_subdivision(std::vector<RatVec> config, RatVec heights,
                                       std::vector<std::string> labels = {});

// Configuration e_i + e_j (i < j, lex order) in R^n, labels "i,j".
std::vector<RatVec> hypersimplex_config(int n);

// The subdivision of the second hypersimplex with heights d(i,j); equality of
// its labeled maximal-cell sets is what "same tight-span type" means here.
RegularSubdivision hypersimplex_type(const Metric& m);

bool same_tight_span_type(const Metric& m1, const Metric& m2);

std::string subdivision_to_json(const RegularSubdivision& rs);

} // namespace metrofan

#endif
