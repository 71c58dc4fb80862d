#include "hull.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "json.hpp"

#include "errors.hpp"

namespace metrofan {

int Facet::point_count() const { return std::popcount(incident_points); }
int Facet::vertex_count() const { return std::popcount(incident_vertices); }

std::vector<int> Hull::vertices() const {
    std::vector<int> out;
    for (size_t i = 0; i < points.size(); i++)
        if ((vertex_mask >> i) & 1)
            out.push_back(static_cast<int>(i));
    return out;
}

namespace {

struct Ray {
    IntVec vec;     // primitive
    uint64_t tight; // constraints the ray is orthogonal to
};

// Double description state for intersecting halfspaces {y : h . y >= 0} in
// R^dim, starting from the full space. The current set is
// span(lineality) + cone(rays), and lineality always equals the kernel of all
// processed constraints, so the ray part stays pointed modulo lineality.
struct DoubleDescription {
    int dim;
    std::vector<IntVec> lineality;
    std::vector<Ray> rays;
    uint64_t processed = 0;

    explicit DoubleDescription(int d) : dim(d) {
        for (int i = 0; i < d; i++) {
            IntVec e(d, 0);
            e[i] = 1;
            lineality.push_back(std::move(e));
        }
    }

    void add_constraint(const IntVec& h, int index) {
        int pivot = -1;
        for (size_t i = 0; i < lineality.size(); i++) {
            if (dot_int(h, lineality[i]) != 0) {
                pivot = static_cast<int>(i);
                break;
            }
        }
        if (pivot >= 0)
            reduce_lineality(h, index, pivot);
        else
            cut_rays(h, index);
        processed |= uint64_t(1) << index;
    }

private:
    void reduce_lineality(const IntVec& h, int index, int pivot) {
        IntVec l0 = lineality[pivot];
        lineality.erase(lineality.begin() + pivot);
        Int hl0 = dot_int(h, l0);
        if (hl0 < 0)
            for (auto& e : l0)
                e = -e;
        hl0 = dot_int(h, l0);
        for (auto& l : lineality) {
            Int hl = dot_int(h, l);
            if (hl == 0)
                continue;
            for (int j = 0; j < dim; j++)
                l[j] = hl0 * l[j] - hl * l0[j];
            make_primitive(l);
        }
        for (auto& r : rays) {
            Int hr = dot_int(h, r.vec);
            if (hr != 0) {
                for (int j = 0; j < dim; j++)
                    r.vec[j] = hl0 * r.vec[j] - hr * l0[j];
                make_primitive(r.vec);
            }
            r.tight |= uint64_t(1) << index;
        }
        // The removed lineality direction survives as the one ray off the new
        // hyperplane; it is tight at every earlier constraint.
        rays.push_back(Ray{std::move(l0), processed});
    }

    void cut_rays(const IntVec& h, int index) {
        std::vector<int> pos, neg;
        std::vector<Int> vals(rays.size());
        for (size_t i = 0; i < rays.size(); i++) {
            vals[i] = dot_int(h, rays[i].vec);
            if (vals[i] > 0)
                pos.push_back(static_cast<int>(i));
            else if (vals[i] < 0)
                neg.push_back(static_cast<int>(i));
            else
                rays[i].tight |= uint64_t(1) << index;
        }
        if (neg.empty())
            return;
        std::vector<Ray> created;
        for (int p : pos) {
            for (int q : neg) {
                uint64_t common = rays[p].tight & rays[q].tight;
                if (!adjacent(p, q, common))
                    continue;
                Ray nr;
                nr.vec.resize(dim);
                for (int j = 0; j < dim; j++)
                    nr.vec[j] = vals[p] * rays[q].vec[j] - vals[q] * rays[p].vec[j];
                make_primitive(nr.vec);
                nr.tight = common | (uint64_t(1) << index);
                created.push_back(std::move(nr));
            }
        }
        std::vector<Ray> next;
        next.reserve(rays.size() - neg.size() + created.size());
        for (size_t i = 0; i < rays.size(); i++)
            if (vals[i] >= 0)
                next.push_back(std::move(rays[i]));
        for (auto& r : created)
            next.push_back(std::move(r));
        rays = std::move(next);
    }

    // Combinatorial adjacency: p and q span a 2-face iff no third ray is
    // tight at everything both are tight at.
    bool adjacent(int p, int q, uint64_t common) const {
        for (size_t i = 0; i < rays.size(); i++) {
            if (static_cast<int>(i) == p || static_cast<int>(i) == q)
                continue;
            if ((common & ~rays[i].tight) == 0)
                return false;
        }
        return true;
    }
};

bool facet_less(const Facet& a, const Facet& b) {
    for (size_t i = 0; i < a.normal.size(); i++) {
        int c = cmp(a.normal[i], b.normal[i]);
        if (c != 0)
            return c < 0;
    }
    return cmp(a.offset, b.offset) < 0;
}

} // namespace

Hull convex_hull(const std::vector<RatVec>& points) {
    if (points.empty())
        fail(ErrorCode::bad_argument, "hull of an empty point set");
    if (points.size() > 64)
        fail(ErrorCode::too_large, "hull limited to 64 points");
    int d = static_cast<int>(points[0].size());
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != d)
            fail(ErrorCode::bad_argument, "hull: inconsistent point dimensions");

    Hull h;
    h.ambient_dim = d;
    h.points = points;

    // Homogenized integer generators (1, v); positive scaling is harmless.
    std::vector<IntVec> gens;
    gens.reserve(points.size());
    for (const auto& p : points) {
        RatVec w(d + 1);
        w[0] = Rat(1);
        for (int j = 0; j < d; j++)
            w[j + 1] = p[j];
        gens.push_back(primitive_direction(w));
    }

    DoubleDescription dd(d + 1);
    for (size_t i = 0; i < gens.size(); i++)
        dd.add_constraint(gens[i], static_cast<int>(i));

    // Final lineality = linear relations (y0, a) with a . v = -y0 on all
    // points: the affine hull of the input.
    for (const auto& l : dd.lineality) {
        IntHyperplane eq;
        eq.normal.assign(l.begin() + 1, l.end());
        eq.offset = -l[0];
        IntVec joint = l;
        bool nonzero_normal = false;
        for (const auto& e : eq.normal)
            if (e != 0)
                nonzero_normal = true;
        if (!nonzero_normal)
            fail(ErrorCode::degenerate, "hull: inconsistent homogenization");
        for (const auto& e : eq.normal) {
            if (e == 0)
                continue;
            if (e < 0) {
                for (auto& f : eq.normal)
                    f = -f;
                eq.offset = -eq.offset;
            }
            break;
        }
        h.affine_hull.push_back(std::move(eq));
    }
    h.dim = d - static_cast<int>(h.affine_hull.size());
    if (h.dim <= 0)
        fail(ErrorCode::degenerate, "hull: points span a single point");

    for (const auto& r : dd.rays) {
        Facet f;
        f.normal.resize(d);
        for (int j = 0; j < d; j++)
            f.normal[j] = -r.vec[j + 1];
        f.offset = r.vec[0];
        f.incident_points = r.tight;
        h.facets.push_back(std::move(f));
    }

    // A point is a vertex iff the facets and affine-hull equations tight at it
    // pin it down completely (homogenized rank d).
    for (size_t i = 0; i < points.size(); i++) {
        std::vector<IntVec> tight;
        for (const auto& l : dd.lineality)
            tight.push_back(l);
        for (const auto& r : dd.rays)
            if ((r.tight >> i) & 1)
                tight.push_back(r.vec);
        if (rank_int_rows(tight, d + 1) == d)
            h.vertex_mask |= uint64_t(1) << i;
    }
    for (auto& f : h.facets)
        f.incident_vertices = f.incident_points & h.vertex_mask;

    std::sort(h.facets.begin(), h.facets.end(), facet_less);
    return h;
}

FaceLattice face_lattice(const Hull& h) {
    std::unordered_set<uint64_t> seen;
    std::vector<uint64_t> queue;
    for (const auto& f : h.facets) {
        if (seen.insert(f.incident_vertices).second)
            queue.push_back(f.incident_vertices);
    }
    for (size_t qi = 0; qi < queue.size(); qi++) {
        uint64_t m = queue[qi];
        for (const auto& f : h.facets) {
            uint64_t x = m & f.incident_vertices;
            if (x != 0 && seen.insert(x).second)
                queue.push_back(x);
        }
    }

    FaceLattice l;
    l.dim = h.dim;
    l.faces_by_dim.assign(h.dim, {});
    for (uint64_t m : queue) {
        std::vector<RatVec> pts;
        for (size_t i = 0; i < h.points.size(); i++)
            if ((m >> i) & 1)
                pts.push_back(h.points[i]);
        int fd = affine_dim(pts);
        if (fd < 0 || fd >= h.dim)
            fail(ErrorCode::degenerate, "face lattice: face dimension out of range");
        l.faces_by_dim[fd].push_back(m);
    }
    for (auto& level : l.faces_by_dim)
        std::sort(level.begin(), level.end());
    return l;
}

std::vector<int> FaceLattice::f_vector() const {
    std::vector<int> f;
    f.reserve(faces_by_dim.size());
    for (const auto& level : faces_by_dim)
        f.push_back(static_cast<int>(level.size()));
    return f;
}

int FaceLattice::face_count() const {
    int c = 0;
    for (const auto& level : faces_by_dim)
        c += static_cast<int>(level.size());
    return c;
}

std::vector<int> f_vector(const Hull& h) {
    return face_lattice(h).f_vector();
}

bool is_simplicial(const Hull& h) {
    for (const auto& f : h.facets)
        if (f.vertex_count() != h.dim)
            return false;
    return true;
}

bool euler_relation_holds(const FaceLattice& l) {
    long long sum = 0, sign = 1;
    for (const auto& level : l.faces_by_dim) {
        sum += sign * static_cast<long long>(level.size());
        sign = -sign;
    }
    long long expected = 1 - (l.dim % 2 == 0 ? 1 : -1);
    return sum == expected;
}

bool free_sum_f_check(const FaceLattice& l1, const FaceLattice& l2,
                      const FaceLattice& l12) {
    if (l12.dim != l1.dim + l2.dim)
        return false;
    // Extended f-vectors with f[-1] = 1 for the empty face.
    auto extended = [](const FaceLattice& l) {
        std::vector<long long> f(l.dim + 1, 0);
        f[0] = 1;
        for (int k = 0; k < l.dim; k++)
            f[k + 1] = static_cast<long long>(l.faces_by_dim[k].size());
        return f;
    };
    auto f1 = extended(l1), f2 = extended(l2);
    for (int k = 0; k < l12.dim; k++) {
        long long want = 0;
        for (int i = -1; i <= k; i++) {
            int j = k - 1 - i;
            if (i + 1 < static_cast<int>(f1.size()) && j + 1 >= 0 &&
                j + 1 < static_cast<int>(f2.size()))
                want += f1[i + 1] * f2[j + 1];
        }
        long long got = static_cast<long long>(l12.faces_by_dim[k].size());
        if (got != want)
            return false;
    }
    return true;
}

std::string hull_to_json(const Hull& h) {
    nlohmann::ordered_json j;
    j["dim"] = h.dim;
    j["f_vector"] = f_vector(h);
    auto verts = nlohmann::ordered_json::array();
    for (int i : h.vertices()) {
        auto coords = nlohmann::ordered_json::array();
        for (const auto& c : h.points[i])
            coords.push_back(rat_to_string(c));
        verts.push_back({{"index", i}, {"coords", std::move(coords)}});
    }
    j["vertices"] = std::move(verts);
    auto facets = nlohmann::ordered_json::array();
    for (const auto& f : h.facets) {
        auto normal = nlohmann::ordered_json::array();
        for (const auto& c : f.normal)
            normal.push_back(c.get_str());
        std::vector<int> inc;
        for (size_t i = 0; i < h.points.size(); i++)
            if ((f.incident_vertices >> i) & 1)
                inc.push_back(static_cast<int>(i));
        facets.push_back({{"normal", std::move(normal)},
                          {"offset", f.offset.get_str()},
                          {"vertices", inc}});
    }
    j["facets"] = std::move(facets);
    return j.dump();
}

} // namespace metrofan
