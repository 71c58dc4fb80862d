#include "doctest.h"

#include <random>
#include <set>

#include "arrangement.hpp"
#include "hull.hpp"
#include "tightspan.hpp"

using namespace metrofan;

namespace {

// x lies in conv(points) iff appending it to the hull input leaves it a
// non-vertex. Callers keep x distinct from the points themselves.
bool in_convex_hull(const std::vector<RatVec>& points, const RatVec& x) {
    auto aug = points;
    aug.push_back(x);
    Hull h = convex_hull(aug);
    return !h.is_vertex(static_cast<int>(points.size()));
}

std::vector<RatVec> cell_points(const RegularSubdivision& rs, uint64_t mask) {
    std::vector<RatVec> pts;
    for (size_t i = 0; i < rs.config.size(); ++i)
        if (mask & (uint64_t(1) << i)) pts.push_back(rs.config[i]);
    return pts;
}

RatVec convex_combination(const std::vector<RatVec>& pts, std::mt19937& rng) {
    std::uniform_int_distribution<int> w(1, 5); // strictly positive weights
    std::vector<Rat> weights(pts.size());
    Rat total = 0;
    for (auto& x : weights) {
        x = w(rng);
        total += x;
    }
    RatVec out(pts[0].size(), Rat(0));
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t c = 0; c < out.size(); ++c) out[c] += weights[i] * pts[i][c] / total;
    return out;
}

Metric random_strict(int n, std::mt19937& rng) {
    std::uniform_int_distribution<int> d(51, 99);
    RatVec v(Metric::pair_count(n));
    for (auto& x : v) x = d(rng);
    return Metric{n, v};
}

} // namespace

TEST_CASE("square with a lifted corner splits into two triangles") {
    std::vector<RatVec> sq{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    auto rs = regular_subdivision(sq, {0, 0, 0, 1}, {"a", "b", "c", "d"});
    CHECK_FALSE(rs.trivial);
    CHECK(rs.maximal_cells == std::vector<uint64_t>{0b0111, 0b1110});

    auto flat = regular_subdivision(sq, {2, 3, 5, 6});
    CHECK(flat.trivial);
    CHECK(flat.maximal_cells == std::vector<uint64_t>{0b1111});
}

TEST_CASE("hypersimplex configuration enumerates pairs in order") {
    auto cfg = hypersimplex_config(4);
    CHECK(cfg.size() == 6);
    CHECK(cfg[0] == RatVec{1, 1, 0, 0});
    CHECK(cfg[5] == RatVec{0, 0, 1, 1});
    auto rs = hypersimplex_type(Metric{4, {1, 1, 1, 1, 1, 1}});
    CHECK(rs.trivial);
    CHECK(rs.cell_count() == 1);
    CHECK(rs.labels == std::vector<std::string>{"1,2", "1,3", "1,4", "2,3", "2,4", "3,4"});
}

TEST_CASE("path metrics induce one cell per interior split") {
    for (int k = 2; k <= 4; ++k) {
        auto rs = hypersimplex_type(path_metric(k));
        CHECK(rs.cell_count() == k - 1);
        // Three points form a simplex, so every height there is affine.
        CHECK(rs.trivial == (k == 2));
    }
}

TEST_CASE("equal subdivisions can carry different cone positions") {
    Metric a{4, {3, 3, 4, 4, 3, 3}};
    Metric b{4, {4, 3, 5, 5, 3, 4}};
    CHECK(same_tight_span_type(a, b));
    CHECK(sign_vector(a) != sign_vector(b));
    CHECK_FALSE(same_open_cone(a, b));
}

TEST_CASE("equal cone positions can carry different subdivisions") {
    Metric a{5, {149, 48, 125, 84, 125, 48, 92, 149, 77, 99}};
    Metric b{5, {10083, 4316, 7447, 5584, 7447, 4316, 6179, 10083, 7560, 5199}};
    CHECK(same_open_cone(a, b));
    CHECK_FALSE(same_tight_span_type(a, b));
    CHECK(hypersimplex_type(a).cell_count() == 9);
    CHECK(hypersimplex_type(b).cell_count() == 11);
}

TEST_CASE("distinct four-point types are told apart") {
    Metric r2{4, {6, 5, 5, 5, 5, 6}};
    Metric r3{4, {3, 3, 2, 2, 3, 3}};
    CHECK_FALSE(same_tight_span_type(r2, r3));
    CHECK(same_tight_span_type(r2, r2));
}

TEST_CASE("cells cover the hypersimplex and meet only in boundaries") {
    std::mt19937 rng(424242);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 4 + trial % 2;
        auto rs = hypersimplex_type(random_strict(n, rng));

        // Interior barycenters of one maximal cell lie in no other cell.
        for (uint64_t cell : rs.maximal_cells) {
            auto pts = cell_points(rs, cell);
            RatVec bary(pts[0].size(), Rat(0));
            for (const auto& p : pts)
                for (size_t c = 0; c < bary.size(); ++c)
                    bary[c] += p[c] / Rat(static_cast<int>(pts.size()));
            for (uint64_t other : rs.maximal_cells) {
                if (other == cell) continue;
                CHECK_FALSE(in_convex_hull(cell_points(rs, other), bary));
            }
        }

        // Random points of the hypersimplex land in at least one cell.
        for (int probe = 0; probe < 8; ++probe) {
            RatVec x = convex_combination(rs.config, rng);
            bool covered = false;
            for (uint64_t cell : rs.maximal_cells)
                if (in_convex_hull(cell_points(rs, cell), x)) {
                    covered = true;
                    break;
                }
            CHECK(covered);
        }
    }
}

TEST_CASE("subdivision report carries labeled cells") {
    auto rs = hypersimplex_type(Metric{4, {6, 5, 5, 5, 5, 6}});
    auto json = subdivision_to_json(rs);
    CHECK(json.find("\"maximal_cells\"") != std::string::npos);
    CHECK(json.find("\"1,2\"") != std::string::npos);
}
