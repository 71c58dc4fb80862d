#include "krw.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_set>

#include "arrangement.hpp"
#include "errors.hpp"
#include "json.hpp"
#include "tightspan.hpp"

namespace metrofan {

namespace {

Rat dist0(const Metric& m, int i, int j) { return i == j ? Rat(0) : m.dist(i, j); }

// True iff the matching's own pairing is a minimum over all cyclic shifts:
// sum d(x_i, y_i) <= sum d(x_i, y_{next}) for every cyclic order of the pairs.
bool matching_minimal(const Metric& m, const std::vector<std::pair<int, int>>& mat) {
    const int k = static_cast<int>(mat.size());
    Rat lhs(0);
    for (const auto& [x, y] : mat) lhs += dist0(m, x, y);
    std::vector<int> rest(k - 1);
    std::iota(rest.begin(), rest.end(), 1);
    do {
        Rat rhs(0);
        int prev = 0;
        for (int pos : rest) {
            rhs += dist0(m, mat[prev].first, mat[pos].second);
            prev = pos;
        }
        rhs += dist0(m, mat[prev].first, mat[0].second);
        if (lhs > rhs) return false;
    } while (std::next_permutation(rest.begin(), rest.end()));
    return true;
}

// Every matching drawn from `universe` that contains all of `seed` must be
// minimal; sources and targets must stay pairwise distinct.
bool matchings_containing_ok(const Metric& m,
                             const std::vector<std::pair<int, int>>& universe,
                             std::vector<std::pair<int, int>>& mat,
                             uint32_t smask, uint32_t tmask, size_t from) {
    if (mat.size() >= 2 && !matching_minimal(m, mat)) return false;
    for (size_t e = from; e < universe.size(); ++e) {
        const auto [s, t] = universe[e];
        if ((smask >> s) & 1 || (tmask >> t) & 1) continue;
        mat.push_back(universe[e]);
        const bool ok = matchings_containing_ok(m, universe, mat, smask | (1u << s),
                                                tmask | (1u << t), e + 1);
        mat.pop_back();
        if (!ok) return false;
    }
    return true;
}

} // namespace

DirectedGraph::DirectedGraph(int n_, std::vector<std::pair<int, int>> edges_)
    : n(n_), edges(std::move(edges_)) {
    if (n < 1)
        fail(ErrorCode::bad_argument, "graph needs at least one vertex");
    for (const auto& [s, t] : edges) {
        if (s < 1 || s > n || t < 1 || t > n)
            fail(ErrorCode::bad_argument, "edge endpoint out of range");
        if (s == t)
            fail(ErrorCode::bad_argument, "loops are not allowed");
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

int KrwPolytope::label_index(int n, int i, int j) {
    if (i == j || i < 1 || j < 1 || i > n || j > n)
        fail(ErrorCode::bad_argument, "bad ordered pair");
    return (i - 1) * (n - 1) + (j - 1) - (j > i ? 1 : 0);
}

KrwPolytope build_krw(const Metric& m) {
    if (m.n < 2)
        fail(ErrorCode::bad_argument, "need at least two points");
    switch (validate(m)) {
    case MetricClass::not_pseudometric:
        fail(ErrorCode::not_pseudometric, "input is not a pseudometric");
    case MetricClass::pseudometric:
        fail(ErrorCode::zero_distance, "zero distance between distinct points");
    default:
        break;
    }
    KrwPolytope kp;
    kp.n = m.n;
    kp.metric = m;
    std::vector<RatVec> pts;
    for (int i = 1; i <= m.n; ++i)
        for (int j = 1; j <= m.n; ++j) {
            if (i == j) continue;
            kp.labels.emplace_back(i, j);
            RatVec v(m.n, Rat(0));
            v[i - 1] = 1 / m.dist(i, j);
            v[j - 1] = -v[i - 1];
            pts.push_back(std::move(v));
        }
    kp.hull = convex_hull(pts);
    kp.lattice = face_lattice(kp.hull);
    return kp;
}

bool is_admissible(const Metric& m, const DirectedGraph& g) {
    if (g.n != m.n)
        fail(ErrorCode::bad_argument, "graph and metric point counts differ");
    std::vector<std::pair<int, int>> mat;
    return matchings_containing_ok(m, g.edges, mat, 0, 0, 0);
}

std::vector<DirectedGraph> facet_graphs(const Metric& m) {
    if (!is_strict(m))
        fail(ErrorCode::not_strict, "facet graphs need a strict metric");
    const int n = m.n;
    std::vector<std::pair<int, int>> all_edges;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) all_edges.emplace_back(i, j);
    const size_t ne = all_edges.size();

    // Every admissible set of a strict metric has disjoint sources and
    // targets, so searching within such edge sets is exhaustive.
    std::unordered_set<uint64_t> visited{0};
    std::vector<std::pair<int, int>> current;
    std::function<void(uint64_t, size_t, uint32_t, uint32_t)> explore =
        [&](uint64_t mask, size_t from, uint32_t smask, uint32_t tmask) {
            for (size_t e = from; e < ne; ++e) {
                const auto [s, t] = all_edges[e];
                if ((tmask >> s) & 1 || (smask >> t) & 1) continue;
                std::vector<std::pair<int, int>> mat{all_edges[e]};
                if (!matchings_containing_ok(m, current, mat, 1u << s, 1u << t, 0))
                    continue;
                current.push_back(all_edges[e]);
                visited.insert(mask | (uint64_t(1) << e));
                explore(mask | (uint64_t(1) << e), e + 1, smask | (1u << s),
                        tmask | (1u << t));
                current.pop_back();
            }
        };
    explore(0, 0, 0, 0);

    std::vector<DirectedGraph> out;
    for (uint64_t mask : visited) {
        if (mask == 0) continue;
        bool maximal = true;
        for (size_t e = 0; e < ne && maximal; ++e)
            if (!((mask >> e) & 1) && visited.count(mask | (uint64_t(1) << e)))
                maximal = false;
        if (!maximal) continue;
        std::vector<std::pair<int, int>> edges;
        for (size_t e = 0; e < ne; ++e)
            if ((mask >> e) & 1) edges.push_back(all_edges[e]);
        out.emplace_back(n, std::move(edges));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_generic(const Metric& m) {
    if (!is_strict(m))
        fail(ErrorCode::not_strict, "genericity is defined for strict metrics");
    const int n = m.n;
    for (int k = 2; 2 * k <= n; ++k) {
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + 2 * k, true);
        do {
            std::vector<int> support;
            for (int i = 0; i < n; ++i)
                if (pick[i]) support.push_back(i + 1);
            // Unordered bipartitions into k-sets: the least point stays in X.
            std::vector<bool> inx(2 * k - 1, false);
            std::fill(inx.begin(), inx.begin() + (k - 1), true);
            do {
                std::vector<int> xs{support[0]}, ys;
                for (int i = 1; i < 2 * k; ++i)
                    (inx[i - 1] ? xs : ys).push_back(support[i]);
                std::vector<int> perm(k);
                std::iota(perm.begin(), perm.end(), 0);
                std::vector<Rat> sums;
                do {
                    Rat s(0);
                    for (int i = 0; i < k; ++i) s += m.dist(xs[i], ys[perm[i]]);
                    sums.push_back(std::move(s));
                } while (std::next_permutation(perm.begin(), perm.end()));
                const Rat mn = *std::min_element(sums.begin(), sums.end());
                if (std::count(sums.begin(), sums.end(), mn) > 1) return false;
            } while (std::prev_permutation(inx.begin(), inx.end()));
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    return true;
}

Int generic_face_count(int l, int m) {
    if (l < 2 || m < 0 || m > l - 1)
        fail(ErrorCode::bad_argument, "face index out of range");
    auto factorial = [](int v) {
        Int f(1);
        for (int i = 2; i <= v; ++i) f *= i;
        return f;
    };
    return factorial(l - 1 + m) / (factorial(m) * factorial(m) * factorial(l - 1 - m));
}

long long r_k(const Metric& m, int k) {
    const auto& hps = wasserstein_arrangement(m.n);
    const auto sv = sign_vector(m);
    long long count = 0;
    for (size_t i = 0; i < hps.size(); ++i)
        if (hps[i].k == k && sv[i] == 0) ++count;
    return count;
}

std::pair<long long, long long> f01_strict(const Metric& m) {
    if (!is_strict(m))
        fail(ErrorCode::not_strict, "closed-form face counts need a strict metric");
    const int l = m.n;
    if (l < 3)
        fail(ErrorCode::bad_argument, "need at least three points");
    const long long f0 = static_cast<long long>(l) * (l - 1);
    Int edges(1);
    for (int i = 2; i <= l + 1; ++i) edges *= i;
    for (int i = 2; i <= l - 3; ++i) edges /= i;
    edges /= 4;
    const long long f1 = edges.get_si() - 2 * r_k(m, 2);
    if (l <= 6) {
        const auto fv = f_vector(build_krw(m).hull);
        if (fv.size() < 2 || fv[0] != f0 || fv[1] != f1)
            fail(ErrorCode::internal_disagreement,
                 "closed-form face counts disagree with the hull");
    }
    return {f0, f1};
}

std::vector<RatVec> root_config(int n) {
    std::vector<RatVec> pts;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            RatVec v(n, Rat(0));
            v[i - 1] = 1;
            v[j - 1] = -1;
            pts.push_back(std::move(v));
        }
    pts.emplace_back(n, Rat(0));
    return pts;
}

bool root_subdivision_check(const Metric& m) {
    const KrwPolytope kp = build_krw(m);
    const int n = m.n;
    RatVec heights;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) heights.push_back(m.dist(i, j));
    heights.emplace_back(0);
    const auto rs = regular_subdivision(root_config(n), heights);
    if (rs.trivial) return false;

    const uint64_t origin_bit = uint64_t(1) << (n * (n - 1));
    std::vector<uint64_t> expected;
    for (const auto& f : kp.hull.facets)
        expected.push_back(f.incident_points | origin_bit);
    std::sort(expected.begin(), expected.end());
    if (rs.maximal_cells != expected) return false;

    std::set<uint64_t> cells(rs.maximal_cells.begin(), rs.maximal_cells.end());
    for (uint64_t cell : rs.maximal_cells) {
        uint64_t mirrored = cell & origin_bit;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                if ((cell >> KrwPolytope::label_index(n, i, j)) & 1)
                    mirrored |= uint64_t(1) << KrwPolytope::label_index(n, j, i);
            }
        if (!cells.count(mirrored)) return false;
    }
    return true;
}

std::string graph_dot(const DirectedGraph& g, const std::string& name) {
    std::string out = "digraph " + name + " {\n  rankdir=LR;\n";
    for (int v = 1; v <= g.n; ++v) out += "  " + std::to_string(v) + ";\n";
    for (const auto& [s, t] : g.edges)
        out += "  " + std::to_string(s) + " -> " + std::to_string(t) + ";\n";
    out += "}\n";
    return out;
}

std::string facet_report_json(const Metric& m) {
    const KrwPolytope kp = build_krw(m);
    nlohmann::ordered_json out;
    out["n"] = kp.n;
    out["facet_count"] = kp.hull.facets.size();
    out["facets"] = nlohmann::ordered_json::array();
    for (const auto& f : kp.hull.facets) {
        nlohmann::ordered_json jf;
        std::vector<std::string> verts;
        nlohmann::ordered_json edges = nlohmann::ordered_json::array();
        for (size_t t = 0; t < kp.labels.size(); ++t)
            if ((f.incident_points >> t) & 1) {
                const auto& [i, j] = kp.labels[t];
                verts.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
                edges.push_back(std::vector<int>{i, j});
            }
        jf["vertices"] = verts;
        jf["edges"] = edges;
        out["facets"].push_back(std::move(jf));
    }
    return out.dump(2);
}

} // namespace metrofan
