#include "classes.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"
#include "json.hpp"

namespace metrofan {

namespace {

Rat dvec(int n, const RatVec& d, int i, int j) {
    return i == j ? Rat(0) : d[Metric::pair_index(n, i, j)];
}

// Isolation index of (A, B) for an arbitrary symmetric dissimilarity given by
// its upper triangle. Repeated choices are allowed, which makes the value
// zero whenever the subsets meet. Always nonnegative: the max includes the
// subtracted term.
Rat iso_index_vec(int n, const RatVec& d, const std::vector<int>& a_set,
                  const std::vector<int>& b_set) {
    bool first = true;
    Rat best(0);
    for (int a : a_set)
        for (int a2 : a_set)
            for (int b : b_set)
                for (int b2 : b_set) {
                    const Rat base = dvec(n, d, a, a2) + dvec(n, d, b, b2);
                    const Rat cross1 = dvec(n, d, a2, b) + dvec(n, d, b2, a);
                    const Rat cross2 = dvec(n, d, a2, b2) + dvec(n, d, a, b);
                    Rat val = std::max({cross1, cross2, base}) - base;
                    if (first || val < best) {
                        best = std::move(val);
                        first = false;
                    }
                }
    return best / 2;
}

bool kalmanson_order_ok(const Metric& m, const std::vector<int>& c) {
    const int n = static_cast<int>(c.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                for (int l = k + 1; l < n; ++l) {
                    const Rat crossing = m.dist(c[i], c[k]) + m.dist(c[j], c[l]);
                    if (crossing < m.dist(c[i], c[j]) + m.dist(c[k], c[l]) ||
                        crossing < m.dist(c[j], c[k]) + m.dist(c[i], c[l]))
                        return false;
                }
    return true;
}

} // namespace

Rat isolation_index(const Metric& m, const std::vector<int>& a,
                    const std::vector<int>& b) {
    if (a.empty() || b.empty())
        fail(ErrorCode::bad_argument, "isolation index needs nonempty subsets");
    for (int v : a)
        if (v < 1 || v > m.n) fail(ErrorCode::bad_argument, "subset entry out of range");
    for (int v : b)
        if (v < 1 || v > m.n) fail(ErrorCode::bad_argument, "subset entry out of range");
    return iso_index_vec(m.n, m.d, a, b);
}

bool SplitDecomposition::residual_zero() const {
    return std::all_of(residual.begin(), residual.end(),
                       [](const Rat& r) { return r == 0; });
}

SplitDecomposition split_decompose(const Metric& m) {
    if (!is_pseudometric(m))
        fail(ErrorCode::not_pseudometric, "split decomposition needs a pseudometric");
    SplitDecomposition out;
    out.n = m.n;
    out.residual = m.d;
    for (const Split& s : all_splits(m.n)) {
        const Rat alpha = iso_index_vec(m.n, m.d, s.part_a, s.part_b());
        if (alpha > 0) {
            uint32_t amask = 0;
            for (int v : s.part_a) amask |= 1u << v;
            for (int i = 1; i <= m.n; ++i)
                for (int j = i + 1; j <= m.n; ++j)
                    if (((amask >> i) & 1) != ((amask >> j) & 1))
                        out.residual[Metric::pair_index(m.n, i, j)] -= alpha;
            out.summands.push_back({s, alpha});
        }
    }
    for (const Split& s : all_splits(m.n))
        if (iso_index_vec(m.n, out.residual, s.part_a, s.part_b()) != 0)
            fail(ErrorCode::internal_disagreement, "residual is not split-prime");
    return out;
}

bool is_totally_split_decomposable(const Metric& m) {
    const bool by_residual = split_decompose(m).residual_zero();

    const int n = m.n;
    const int pc = Metric::pair_count(n);
    std::vector<std::vector<Rat>> quartet(pc, std::vector<Rat>(pc, Rat(0)));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    if (k == i || k == j || l == i || l == j) continue;
                    quartet[Metric::pair_index(n, i, j)][Metric::pair_index(n, k, l)] =
                        iso_index_vec(n, m.d, {i, j}, {k, l});
                }
    auto q = [&](int i, int j, int k, int l) -> const Rat& {
        return quartet[Metric::pair_index(n, i, j)][Metric::pair_index(n, k, l)];
    };
    bool by_quartets = true;
    for (int t = 1; t <= n && by_quartets; ++t)
        for (int u = 1; u <= n && by_quartets; ++u)
            for (int v = 1; v <= n && by_quartets; ++v)
                for (int w = 1; w <= n && by_quartets; ++w)
                    for (int x = 1; x <= n; ++x) {
                        if (t == u || t == v || t == w || t == x || u == v ||
                            u == w || u == x || v == w || v == x || w == x)
                            continue;
                        if (q(t, u, v, w) > q(t, x, v, w) + q(t, u, v, x)) {
                            by_quartets = false;
                            break;
                        }
                    }

    if (by_residual != by_quartets)
        fail(ErrorCode::internal_disagreement,
             "decomposition residual and quartet criterion disagree");
    return by_residual;
}

bool is_tree_like(const Metric& m) {
    const int n = m.n;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    const Rat s1 = m.dist(i, j) + m.dist(k, l);
                    const Rat s2 = m.dist(i, k) + m.dist(j, l);
                    const Rat s3 = m.dist(i, l) + m.dist(j, k);
                    const Rat mx = std::max({s1, s2, s3});
                    const int hits = (s1 == mx) + (s2 == mx) + (s3 == mx);
                    if (hits < 2) return false;
                }
    return true;
}

KalmansonResult is_kalmanson(const Metric& m) {
    const int n = m.n;
    if (n > 8)
        fail(ErrorCode::too_large, "circular order search is limited to eight points");
    KalmansonResult res;
    if (n <= 3) {
        res.holds = true;
        res.order.resize(n);
        std::iota(res.order.begin(), res.order.end(), 1);
        return res;
    }
    std::vector<int> rest(n - 1);
    std::iota(rest.begin(), rest.end(), 2);
    do {
        if (rest.front() > rest.back()) continue;
        std::vector<int> c{1};
        c.insert(c.end(), rest.begin(), rest.end());
        if (kalmanson_order_ok(m, c)) {
            res.holds = true;
            res.order = std::move(c);
            return res;
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    return res;
}

bool six_point_condition(const Metric& m) {
    const int n = m.n;
    if (n < 6) return true;
    std::vector<bool> pick(n, false);
    std::fill(pick.begin(), pick.begin() + 6, true);
    do {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (pick[i]) s.push_back(i + 1);
        bool found = false;
        for (int pi = 0; pi < 6 && !found; ++pi)
            for (int pj = pi + 1; pj < 6 && !found; ++pj) {
                std::vector<int> rest;
                for (int t = 0; t < 6; ++t)
                    if (t != pi && t != pj) rest.push_back(s[t]);
                bool all_ok = true;
                for (int pk = 0; pk < 4 && all_ok; ++pk)
                    for (int pl = pk + 1; pl < 4 && all_ok; ++pl) {
                        const int i = s[pi], j = s[pj], k = rest[pk], l = rest[pl];
                        if (m.dist(i, j) + m.dist(k, l) >
                            std::max(m.dist(i, k) + m.dist(j, l),
                                     m.dist(j, k) + m.dist(i, l)))
                            all_ok = false;
                    }
                found = all_ok;
            }
        if (!found) return false;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return true;
}

std::string classes_report_json(const Metric& m) {
    nlohmann::ordered_json out;
    out["tree_like"] = is_tree_like(m);
    if (m.n <= 8) {
        const auto kal = is_kalmanson(m);
        nlohmann::ordered_json jk;
        jk["holds"] = kal.holds;
        if (kal.holds)
            jk["order"] = kal.order;
        else
            jk["order"] = nullptr;
        out["kalmanson"] = std::move(jk);
    } else {
        out["kalmanson"] = nullptr;
    }
    out["totally_split_decomposable"] = is_totally_split_decomposable(m);
    out["six_point"] = six_point_condition(m);
    const auto dec = split_decompose(m);
    out["splits"] = nlohmann::ordered_json::array();
    for (const auto& sm : dec.summands) {
        nlohmann::ordered_json js;
        js["A"] = sm.split.part_a;
        js["weight"] = rat_to_string(sm.weight);
        out["splits"].push_back(std::move(js));
    }
    out["residual_norm_zero"] = dec.residual_zero();
    return out.dump(2);
}

} // namespace metrofan
