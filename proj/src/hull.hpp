// Exact convex hull of rational point sets (<= 64 points), via the double
// description method on the polar cone of the homogenization. Produces facet
// normals with full incidence data, the affine hull, the vertex set, and the
// face lattice by intersection closure.

#ifndef METROFAN_HULL_HPP
#define METROFAN_HULL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rat.hpp"

namespace metrofan {

struct Facet {
    IntVec normal;             // primitive outward normal: normal . x <= offset
    Int offset;
    uint64_t incident_points;  // all input points on the supporting hyperplane
    uint64_t incident_vertices;

    int point_count() const;
    int vertex_count() const;
};

struct Hull {
    int ambient_dim = 0;
    int dim = -1; // affine dimension of the point set
    std::vector<RatVec> points;
    std::vector<IntHyperplane> affine_hull; // equations valid on every point
    std::vector<Facet> facets;              // sorted by (normal, offset)
    uint64_t vertex_mask = 0;

    std::vector<int> vertices() const;
    bool is_vertex(int i) const { return (vertex_mask >> i) & 1; }
};

// Exact hull; throws DEGENERATE when the points span a single point (dim 0)
// and rejects empty input or more than 64 points.
Hull convex_hull(const std::vector<RatVec>& points);

struct FaceLattice {
    int dim = -1;
    // faces_by_dim[k] = vertex masks of the k-dimensional proper faces,
    // sorted; the empty face and the polytope itself are excluded.
    std::vector<std::vector<uint64_t>> faces_by_dim;

    std::vector<int> f_vector() const;
    int face_count() const;
};

// All proper nonempty faces as intersections of facet vertex sets, graded by
// exact affine rank of their vertex coordinates.
FaceLattice face_lattice(const Hull& h);

std::vector<int> f_vector(const Hull& h);

// Every facet has exactly dim(P) vertices.
bool is_simplicial(const Hull& h);

// Euler relation sum_k (-1)^k f_k = 1 - (-1)^dim for the proper faces.
bool euler_relation_holds(const FaceLattice& l);

// Nonmaximal faces of a free sum are joins of nonmaximal faces, so the
// f-vector of the sum is the convolution of the parts' extended f-vectors.
bool free_sum_f_check(const FaceLattice& l1, const FaceLattice& l2,
                      const FaceLattice& l12);

// JSON object {dim, f_vector, vertices, facets} with exact coordinates.
std::string hull_to_json(const Hull& h);

} // namespace metrofan

#endif
