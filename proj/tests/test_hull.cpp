#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "errors.hpp"
#include "hull.hpp"
#include "rat.hpp"

using namespace metrofan;

namespace {

RatVec pt(std::initializer_list<int> xs) {
    RatVec v;
    for (int x : xs) v.emplace_back(x);
    return v;
}

// Facet incidence sets of a full-dimensional 3-polytope by testing every
// plane through three points against all points.
std::set<uint64_t> brute_facets_3d(const std::vector<RatVec>& pts) {
    const size_t n = pts.size();
    std::set<uint64_t> facets;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b)
            for (size_t c = b + 1; c < n; ++c) {
                auto hp = affine_normal({pts[a], pts[b], pts[c]});
                if (!hp) continue;
                bool has_pos = false, has_neg = false;
                uint64_t mask = 0;
                for (size_t i = 0; i < n; ++i) {
                    Rat v = -Rat(hp->offset);
                    for (size_t t = 0; t < pts[i].size(); ++t)
                        v += Rat(hp->normal[t]) * pts[i][t];
                    const int s = sgn(v);
                    if (s > 0) has_pos = true;
                    if (s < 0) has_neg = true;
                    if (s == 0) mask |= uint64_t(1) << i;
                }
                if (has_pos != has_neg) facets.insert(mask);
            }
    return facets;
}

} // namespace

TEST_CASE("cube and octahedron have the textbook f-vectors") {
    std::vector<RatVec> cube;
    for (int x : {0, 1})
        for (int y : {0, 1})
            for (int z : {0, 1}) cube.push_back(pt({x, y, z}));
    Hull h = convex_hull(cube);
    CHECK(h.dim == 3);
    CHECK(f_vector(h) == std::vector<int>{8, 12, 6});
    CHECK_FALSE(is_simplicial(h));

    std::vector<RatVec> oct;
    for (int s : {1, -1})
        for (int axis : {0, 1, 2}) {
            RatVec v = pt({0, 0, 0});
            v[axis] = s;
            oct.push_back(v);
        }
    Hull ho = convex_hull(oct);
    CHECK(f_vector(ho) == std::vector<int>{6, 12, 8});
    CHECK(is_simplicial(ho));
    CHECK(euler_relation_holds(face_lattice(ho)));
}

TEST_CASE("vertex queries are positional, face counts are geometric") {
    std::vector<RatVec> pts;
    for (int x : {0, 2})
        for (int y : {0, 2})
            for (int z : {0, 2}) pts.push_back(pt({x, y, z}));
    pts.push_back(pt({1, 1, 1})); // interior
    pts.push_back(pt({0, 0, 0})); // duplicates a corner
    Hull h = convex_hull(pts);
    CHECK_FALSE(h.is_vertex(8));
    // Every copy of a corner position reports as a vertex of the polytope,
    // while the face lattice counts the position once.
    CHECK(h.is_vertex(0));
    CHECK(h.is_vertex(9));
    CHECK(h.vertices().size() == 9);
    CHECK(f_vector(h)[0] == 8);
}

TEST_CASE("degenerate input is rejected, lower-dimensional input is not") {
    CHECK_THROWS_AS(convex_hull({pt({1, 1, 1}), pt({1, 1, 1})}), Error);
    // A square inside R^3 still gets facets within its plane.
    Hull h = convex_hull({pt({0, 0, 1}), pt({1, 0, 1}), pt({0, 1, 1}), pt({1, 1, 1})});
    CHECK(h.dim == 2);
    CHECK(f_vector(h) == std::vector<int>{4, 4});
    CHECK(h.affine_hull.size() == 1);
}

TEST_CASE("random 3d hulls agree with the plane-enumeration oracle") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> coord(0, 6);
    int done = 0;
    while (done < 20) {
        std::set<RatVec> uniq;
        while (uniq.size() < 8)
            uniq.insert(pt({coord(rng), coord(rng), coord(rng)}));
        std::vector<RatVec> pts(uniq.begin(), uniq.end());
        if (affine_dim(pts) != 3) continue;
        ++done;
        Hull h = convex_hull(pts);
        std::set<uint64_t> got;
        for (const auto& f : h.facets) got.insert(f.incident_points);
        CHECK(got == brute_facets_3d(pts));
        CHECK(euler_relation_holds(face_lattice(h)));
    }
}

TEST_CASE("free sum f-vector law on cross polytopes") {
    auto cross = [](int k) {
        std::vector<RatVec> pts;
        for (int axis = 0; axis < k; ++axis)
            for (int s : {1, -1}) {
                RatVec v(k, Rat(0));
                v[axis] = s;
                pts.push_back(v);
            }
        return pts;
    };
    // Embed the summands in complementary coordinate subspaces of R^5.
    std::vector<RatVec> a, b, sum;
    for (const auto& p : cross(2)) {
        RatVec v(5, Rat(0));
        v[0] = p[0];
        v[1] = p[1];
        a.push_back(v);
        sum.push_back(v);
    }
    for (const auto& p : cross(3)) {
        RatVec v(5, Rat(0));
        v[2] = p[0];
        v[3] = p[1];
        v[4] = p[2];
        b.push_back(v);
        sum.push_back(v);
    }
    FaceLattice la = face_lattice(convex_hull(a));
    FaceLattice lb = face_lattice(convex_hull(b));
    FaceLattice lsum = face_lattice(convex_hull(sum));
    CHECK(free_sum_f_check(la, lb, lsum));
    CHECK(lsum.f_vector() == std::vector<int>{10, 40, 80, 80, 32});
}
