// The polytope conv{(e_i - e_j)/d(i,j)}, its labeled face data, the
// cyclic-inequality admissibility oracle for directed graphs, genericity,
// closed-form face counts for low dimensions, and the cross-check identifying
// its facets with the lower cells of the lifted root configuration.

#ifndef METROFAN_KRW_HPP
#define METROFAN_KRW_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hull.hpp"
#include "metric.hpp"
#include "rat.hpp"

namespace metrofan {

struct DirectedGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // ordered (source, target), kept sorted

    DirectedGraph() = default;
    DirectedGraph(int n_, std::vector<std::pair<int, int>> edges_); // validates, sorts, dedups

    bool operator==(const DirectedGraph&) const = default;
    auto operator<=>(const DirectedGraph&) const = default;
};

struct KrwPolytope {
    int n = 0;
    Metric metric;
    std::vector<std::pair<int, int>> labels; // ordered pairs, lex; index = point index
    Hull hull;
    FaceLattice lattice;

    static int label_index(int n, int i, int j);
    int label_index(int i, int j) const { return label_index(n, i, j); }
};

// Hull and face lattice of the n(n-1) labeled points (e_i - e_j)/d(i,j).
// Requires a genuine metric: zero off-diagonal distances are rejected.
KrwPolytope build_krw(const Metric& m);

// The cyclic inequality sum d(x_i,y_i) <= sum d(x_i,y_{i+1}) for every
// selection of edges with pairwise-distinct sources and pairwise-distinct
// targets, over every cyclic order (rotations tested once).
bool is_admissible(const Metric& m, const DirectedGraph& g);

// Maximal admissible graphs of a strict metric; equals the facet incidence
// sets of build_krw translated through the labels (tested, not assumed).
std::vector<DirectedGraph> facet_graphs(const Metric& m);

// Strict metric whose assignment minima are all uniquely attained; equivalent
// to the polytope being simplicial (the tests check both routes).
bool is_generic(const Metric& m);

// Number of (m-1)-dimensional faces of the polytope of a generic metric on l
// points: multinomial (l-1+m)! / (m! m! (l-1-m)!).
Int generic_face_count(int l, int m);

// Number of cycle-length-2k arrangement hyperplanes vanishing on the metric.
long long r_k(const Metric& m, int k);

// Closed-form (f0, f1) for a strict metric on l points: f0 = l(l-1),
// f1 = (l+1)!/(4 (l-3)!) - 2 r_2; cross-validated against the hull for l <= 6.
std::pair<long long, long long> f01_strict(const Metric& m);

// Configuration e_i - e_j (ordered pairs, lex) plus the origin as last point.
std::vector<RatVec> root_config(int n);

// True iff the lower cells of the root configuration lifted by the distances
// equal the polytope's facet point sets joined with the origin, and the cell
// set is centrally symmetric.
bool root_subdivision_check(const Metric& m);

std::string graph_dot(const DirectedGraph& g, const std::string& name);

// Facet list keyed by vertex labels "(i,j)" with the facet graphs.
std::string facet_report_json(const Metric& m);

} // namespace metrofan

#endif
