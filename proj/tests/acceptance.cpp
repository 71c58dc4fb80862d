// End-to-end acceptance checks. Each numbered criterion prints one PASS or
// FAIL line; the exit status is the number of failed criteria.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "arrangement.hpp"
#include "classes.hpp"
#include "hull.hpp"
#include "krw.hpp"
#include "metric.hpp"
#include "tightspan.hpp"

using namespace metrofan;

namespace {

const std::string kDataDir = METROFAN_DATA_DIR;

int failures = 0;
std::vector<std::string> notes;

void note(const std::string& text) { notes.push_back(text); }

void criterion(int id, const std::string& label, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << label
              << "\n";
    for (const auto& t : notes) std::cout << "      " << t << "\n";
    notes.clear();
    if (!ok) ++failures;
}

Metric load(const std::string& name) {
    return metric_from_file(kDataDir + "/metrics/" + name + ".json");
}

std::vector<std::vector<std::string>> load_csv(const std::string& name) {
    std::ifstream in(kDataDir + "/expected/" + name + ".csv");
    if (!in) {
        note("missing expected table " + name);
        return {};
    }
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(cell);
        rows.push_back(std::move(row));
    }
    return rows;
}

Metric random_strict(int n, std::mt19937& rng, int den = 1) {
    std::uniform_int_distribution<int> d(51, 99);
    RatVec v(Metric::pair_count(n));
    for (auto& x : v) x = Rat(d(rng)) / den;
    return Metric{n, v};
}

std::set<uint64_t> hull_facet_masks(const KrwPolytope& kp) {
    std::set<uint64_t> out;
    for (const auto& f : kp.hull.facets) out.insert(f.incident_points);
    return out;
}

std::set<uint64_t> graph_facet_masks(const KrwPolytope& kp) {
    std::set<uint64_t> out;
    for (const auto& g : facet_graphs(kp.metric)) {
        uint64_t mask = 0;
        for (const auto& [s, t] : g.edges)
            mask |= uint64_t(1) << kp.label_index(s, t);
        out.insert(mask);
    }
    return out;
}

bool facet_oracles_agree(const Metric& m) {
    KrwPolytope kp = build_krw(m);
    return graph_facet_masks(kp) == hull_facet_masks(kp) && root_subdivision_check(m);
}

bool lattice_centrally_symmetric(const KrwPolytope& kp) {
    const int n = kp.n;
    auto flip = [&](uint64_t mask) {
        uint64_t out = 0;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                if (mask & (uint64_t(1) << kp.label_index(i, j)))
                    out |= uint64_t(1) << kp.label_index(j, i);
            }
        return out;
    };
    for (const auto& level : kp.lattice.faces_by_dim) {
        std::set<uint64_t> faces(level.begin(), level.end());
        for (uint64_t f : faces)
            if (!faces.count(flip(f))) return false;
    }
    return true;
}

std::vector<std::string> sample_metric_names() {
    std::vector<std::string> names;
    for (int i = 1; i <= 12; ++i) names.push_back("generic5_row" + std::to_string(i));
    for (const auto& row : load_csv("table3_strict5")) {
        if (row[0] == "row") continue;
        std::string id = row[0];
        for (auto& c : id)
            if (c == '.') c = '_';
        names.push_back("table3_" + id);
    }
    for (int i = 1; i <= 4; ++i) names.push_back("table2_row" + std::to_string(i));
    return names;
}

long long ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

void check_hyperplane_counts() {
    bool ok = true;
    const std::vector<std::pair<int, size_t>> expected{{4, 3}, {5, 15}, {6, 105}};
    for (auto [n, count] : expected) {
        size_t got = wasserstein_arrangement(n).size();
        if (got != count) {
            note("n=" + std::to_string(n) + " gave " + std::to_string(got) +
                 " hyperplanes, expected " + std::to_string(count));
            ok = false;
        }
        if (wasserstein_count(n) != static_cast<long long>(count)) {
            note("closed-form count disagrees at n=" + std::to_string(n));
            ok = false;
        }
    }
    criterion(1, "hyperplane counts 3, 15, 105 for n = 4, 5, 6", ok);
}

void check_lineality() {
    bool ok = true;
    for (int n : {4, 5, 6}) {
        Lineality lin = lineality(n);
        if (lin.dimension != n || !lin.splits_span) {
            note("lineality at n=" + std::to_string(n) + " gave dimension " +
                 std::to_string(lin.dimension) +
                 (lin.splits_span ? "" : " and splits failing to span"));
            ok = false;
        }
        for (int i = 1; i <= n; ++i) {
            Metric split = split_metric(n, {i});
            for (int s : sign_vector(split))
                if (s != 0) {
                    note("elementary split " + std::to_string(i) + " at n=" +
                         std::to_string(n) + " leaves the lineality space");
                    ok = false;
                }
        }
    }
    criterion(2, "lineality dimension n with elementary splits inside", ok);
}

void check_chambers() {
    bool ok = true;
    auto p4 = poset_and_charpoly(4);
    if (p4.chambers != 6) {
        note("n=4 chambers " + std::to_string(p4.chambers));
        ok = false;
    }
    auto p5 = poset_and_charpoly(5);
    if (p5.chambers != 882) {
        note("n=5 chambers " + std::to_string(p5.chambers));
        ok = false;
    }
    std::vector<long long> chi5(11, 0);
    chi5[10] = 1;
    chi5[9] = -15;
    chi5[8] = 90;
    chi5[7] = -260;
    chi5[6] = 350;
    chi5[5] = -166;
    if (p5.charpoly != chi5) {
        note("characteristic polynomial coefficients for n=5 differ");
        ok = false;
    }
    criterion(3, "chamber counts 6 and 882 with the n=5 polynomial", ok);
}

void check_generic_samples() {
    bool ok = true;
    const std::vector<long long> stab_orders{2, 1, 1, 1, 2, 1, 4, 2, 2, 2, 2, 10};
    long long orbit_sum = 0;
    for (int i = 1; i <= 12; ++i) {
        Metric m = load("generic5_row" + std::to_string(i));
        KrwPolytope kp = build_krw(m);
        if (kp.lattice.f_vector() != std::vector<int>{20, 90, 140, 70}) {
            note("row " + std::to_string(i) + " f-vector differs");
            ok = false;
        }
        if (!is_generic(m)) {
            note("row " + std::to_string(i) + " fails the genericity test");
            ok = false;
        }
        SignVector sv = sign_vector(m);
        auto stab = stabilizer(sv, 5);
        if (stab.order() != stab_orders[i - 1]) {
            note("row " + std::to_string(i) + " stabilizer order " +
                 std::to_string(stab.order()));
            ok = false;
        }
        std::set<SignVector> orbit;
        std::vector<int> sigma{1, 2, 3, 4, 5};
        do {
            orbit.insert(act(sv, sigma, 5));
        } while (std::next_permutation(sigma.begin(), sigma.end()));
        orbit_sum += static_cast<long long>(orbit.size());
    }
    if (orbit_sum != 882) {
        note("orbit sizes sum to " + std::to_string(orbit_sum));
        ok = false;
    }
    criterion(4, "twelve generic samples: f-vector, stabilizers, orbit sum 882", ok);
}

void check_four_point_samples() {
    bool ok = true;
    const std::vector<std::vector<int>> expected{
        {12, 30, 20}, {12, 28, 18}, {12, 28, 18}, {12, 24, 14}};
    for (int i = 1; i <= 4; ++i) {
        Metric m = load("table2_row" + std::to_string(i));
        if (f_vector(build_krw(m).hull) != expected[i - 1]) {
            note("row " + std::to_string(i) + " f-vector differs");
            ok = false;
        }
    }
    if (same_tight_span_type(load("table2_row2"), load("table2_row3"))) {
        note("rows 2 and 3 share a subdivision but should not");
        ok = false;
    }
    // The unit distance metric realizes the polytope whose facets are the
    // lower cells of the root configuration with zero heights: 8 triangles
    // and 6 squares in a (12, 24, 14) lattice.
    Metric ones = load("table2_row4");
    KrwPolytope kp = build_krw(ones);
    int tri = 0, quad = 0;
    for (const auto& f : kp.hull.facets) {
        if (f.vertex_count() == 3) ++tri;
        if (f.vertex_count() == 4) ++quad;
    }
    if (tri != 8 || quad != 6 || !root_subdivision_check(ones)) {
        note("unit metric facets: " + std::to_string(tri) + " triangles, " +
             std::to_string(quad) + " squares");
        ok = false;
    }
    criterion(5, "four-point samples and the unit-distance cuboctahedron", ok);
}

void check_strict_five_table() {
    bool ok = true;
    int rows = 0;
    for (const auto& row : load_csv("table3_strict5")) {
        if (row[0] == "row") continue;
        ++rows;
        std::string id = row[0];
        for (auto& c : id)
            if (c == '.') c = '_';
        Metric m = load("table3_" + id);
        KrwPolytope kp = build_krw(m);
        std::vector<int> expected_f{std::stoi(row[1]), std::stoi(row[2]),
                                    std::stoi(row[3]), std::stoi(row[4])};
        if (kp.lattice.f_vector() != expected_f) {
            note("row " + row[0] + " f-vector differs");
            ok = false;
        }
        auto stab = stabilizer(sign_vector(m), 5);
        if (stab.order() != std::stoll(row[5])) {
            note("row " + row[0] + " stabilizer order " + std::to_string(stab.order()));
            ok = false;
        }
        if (is_generic(m)) {
            note("row " + row[0] + " wrongly counts as generic");
            ok = false;
        }
        auto [f0, f1] = f01_strict(m);
        if (f0 != 20 || f1 != 90 - 2 * r_k(m, 2) || f0 != expected_f[0] ||
            f1 != expected_f[1]) {
            note("row " + row[0] + " closed-form edge count differs");
            ok = false;
        }
    }
    if (rows != 65) {
        note("expected 65 rows, found " + std::to_string(rows));
        ok = false;
    }
    criterion(6, "all 65 strict five-point samples with the edge formula", ok);
}

void check_facet_oracles() {
    bool ok = true;
    for (const auto& name : sample_metric_names())
        if (!facet_oracles_agree(load(name))) {
            note("oracles disagree on " + name);
            ok = false;
        }
    std::mt19937 rng(46368);
    for (int trial = 0; trial < 50; ++trial) {
        Metric m = random_strict(4 + trial % 2, rng, 1 + trial % 3);
        if (!facet_oracles_agree(m)) {
            note("oracles disagree on random trial " + std::to_string(trial));
            ok = false;
        }
    }
    criterion(7, "maximal graphs equal hull facets on 81 samples + 50 random", ok);
}

void check_example_pairs() {
    bool ok = true;
    Metric a = load("cone_pair_a");
    Metric b = load("cone_pair_b");
    if (sign_vector(a) != sign_vector(b) || !same_open_cone(a, b)) {
        note("cone pair splits across cones");
        ok = false;
    }
    if (same_tight_span_type(a, b)) {
        note("cone pair shares a subdivision but should not");
        ok = false;
    }
    if (!is_totally_split_decomposable(a) || is_totally_split_decomposable(b)) {
        note("cone pair decomposability differs from expectation");
        ok = false;
    }
    Rat lhs = isolation_index(b, {2, 3}, {1, 5});
    Rat rhs = isolation_index(b, {3, 4}, {1, 5}) + isolation_index(b, {2, 3}, {4, 5});
    if (!(lhs > rhs)) {
        note("published isolation-index inequality fails to be strict");
        ok = false;
    }

    Metric c = load("span_pair_a");
    Metric d = load("span_pair_b");
    if (!same_tight_span_type(c, d)) {
        note("span pair subdivisions differ");
        ok = false;
    }
    if (!is_simplicial(build_krw(d).hull)) {
        note("second span-pair polytope is not simplicial");
        ok = false;
    }
    int quads = 0;
    for (const auto& f : build_krw(c).hull.facets)
        if (f.vertex_count() == 4) ++quads;
    if (quads != 2) {
        note("first span-pair polytope has " + std::to_string(quads) +
             " quadrilateral facets");
        ok = false;
    }
    criterion(8, "example pairs: cone pair and subdivision pair behave as published",
              ok);
}

void check_free_sums() {
    bool ok = true;
    Metric rho1 = load("cone_pair_a");
    FaceLattice l1 = build_krw(rho1).lattice;
    for (int k = 1; k <= 2; ++k) {
        Metric sum = free_sum(rho1, path_metric(k));
        FaceLattice lk = build_krw(path_metric(k)).lattice;
        FaceLattice ls = build_krw(sum).lattice;
        if (!free_sum_f_check(l1, lk, ls)) {
            note("free-sum product law fails at k=" + std::to_string(k));
            ok = false;
        }
    }
    for (int k = 1; k <= 4; ++k) {
        auto fv = build_krw(path_metric(k)).lattice.f_vector();
        bool cross = static_cast<int>(fv.size()) == k && fv[0] == 2 * k &&
                     fv[k - 1] == (1 << k);
        for (int i = 1; i < k; ++i) {
            // Cross-polytope faces: f_{i-1} = 2^i * C(k, i).
            long long binom = 1;
            for (int j = 0; j < i; ++j) binom = binom * (k - j) / (j + 1);
            if (fv[i - 1] != (1LL << i) * binom) cross = false;
        }
        if (!cross) {
            note("path metric at k=" + std::to_string(k) +
                 " misses the cross-polytope f-vector");
            ok = false;
        }
    }
    criterion(9, "free sums obey the product law; paths give cross polytopes", ok);
}

void check_seven_point_pair() {
    bool ok = true;
    Metric a = free_sum(load("cone_pair_a"), scale(path_metric(2), 12));
    Metric b = free_sum(load("cone_pair_b"), scale(path_metric(2), 840));
    if (a.n != 7 || b.n != 7) {
        note("glued metrics are not on seven points");
        ok = false;
    }
    SignVector sa = sign_vector(a);
    SignVector sb = sign_vector(b);
    if (sa != sb) {
        int diff = 0;
        for (size_t i = 0; i < sa.size(); ++i) diff += sa[i] != sb[i];
        note("seven-point pair splits across cones (" + std::to_string(diff) +
             " of " + std::to_string(sa.size()) + " signs differ)");
        // The hexagonal hyperplane matching (1,2)(3,4)(5,6) against
        // (1,4)(3,6)(5,2) evaluates to d12+d34-d14-d25-d35 on either glued
        // metric: the attached path contributes the same amount to both sides,
        // so the sign is fixed by the five-point parts alone and no choice of
        // path scale can move either metric across this wall.
        auto margin = [](const Metric& m) -> Rat {
            return m.dist(1, 2) + m.dist(3, 4) - m.dist(1, 4) - m.dist(2, 5) -
                   m.dist(3, 5);
        };
        note("separating evaluation d12+d34-d14-d25-d35: " +
             margin(a).get_str() + " versus " + margin(b).get_str());
        ok = false;
    }
    if (!six_point_condition(a) || !six_point_condition(b)) {
        note("a seven-point metric fails the six-point condition");
        ok = false;
    }
    if (!is_totally_split_decomposable(a) || is_totally_split_decomposable(b)) {
        note("seven-point decomposability differs from expectation");
        ok = false;
    }
    criterion(10, "seven-point pair: one cone, six-point holds, one decomposes", ok);
}

void check_property_suites() {
    bool ok = true;
    std::mt19937 rng(75025);

    // Central symmetry and the Euler relation on a spread of lattices.
    std::vector<Metric> lattice_samples;
    for (int i = 1; i <= 4; ++i) lattice_samples.push_back(load("table2_row" + std::to_string(i)));
    lattice_samples.push_back(load("generic5_row1"));
    lattice_samples.push_back(load("table3_1_1"));
    lattice_samples.push_back(load("cone_pair_a"));
    for (int k = 2; k <= 4; ++k) lattice_samples.push_back(path_metric(k));
    for (int trial = 0; trial < 12; ++trial)
        lattice_samples.push_back(random_strict(3 + trial % 3, rng));
    for (size_t i = 0; i < lattice_samples.size(); ++i) {
        KrwPolytope kp = build_krw(lattice_samples[i]);
        if (!lattice_centrally_symmetric(kp)) {
            note("lattice " + std::to_string(i) + " misses central symmetry");
            ok = false;
        }
        if (!euler_relation_holds(kp.lattice)) {
            note("lattice " + std::to_string(i) + " violates the Euler relation");
            ok = false;
        }
    }

    // Admissibility is monotone under subgraphs.
    std::uniform_int_distribution<int> pct(0, 99);
    int monotone_checks = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 4 + trial % 2;
        Metric m = random_strict(n, rng);
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (i != j && pct(rng) < 30) edges.emplace_back(i, j);
        DirectedGraph g(n, edges);
        if (is_admissible(m, g)) {
            for (size_t e = 0; e < g.edges.size(); ++e) {
                auto sub = g.edges;
                sub.erase(sub.begin() + e);
                if (!is_admissible(m, DirectedGraph(n, sub))) ok = false;
                ++monotone_checks;
            }
        } else {
            for (int i = 1; i <= n; ++i)
                for (int j = 1; j <= n; ++j) {
                    if (i == j) continue;
                    auto sup = g.edges;
                    sup.emplace_back(i, j);
                    if (is_admissible(m, DirectedGraph(n, sup))) ok = false;
                    ++monotone_checks;
                }
        }
    }
    if (monotone_checks == 0) ok = false;

    // Split decomposition reassembles the metric and matches the quartet
    // characterization of vanishing residual.
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 4 + trial % 3;
        std::uniform_int_distribution<int> d(10, 20);
        RatVec v(Metric::pair_count(n));
        for (auto& x : v) x = Rat(d(rng)) / (1 + trial % 4);
        Metric m{n, v};
        auto sd = split_decompose(m);
        Metric back{sd.n, sd.residual};
        for (const auto& [sp, w] : sd.summands) back = add(back, scale(split_metric(sp), w));
        if (back.d != m.d) {
            note("decomposition fails to reassemble on trial " + std::to_string(trial));
            ok = false;
        }
        if (is_totally_split_decomposable(m) != sd.residual_zero()) {
            note("decomposability criteria disagree on trial " + std::to_string(trial));
            ok = false;
        }
    }
    criterion(11, "property suites: symmetry, Euler, monotonicity, reassembly", ok);
}

} // namespace

int main() {
    struct Step {
        void (*fn)();
    };
    const std::vector<Step> steps{
        {check_hyperplane_counts}, {check_lineality},       {check_chambers},
        {check_generic_samples},   {check_four_point_samples},
        {check_strict_five_table}, {check_facet_oracles},   {check_example_pairs},
        {check_free_sums},         {check_seven_point_pair}, {check_property_suites},
    };
    auto total = std::chrono::steady_clock::now();
    for (const auto& s : steps) {
        auto start = std::chrono::steady_clock::now();
        try {
            s.fn();
        } catch (const std::exception& e) {
            note(std::string("exception: ") + e.what());
            criterion(-1, "unexpected exception", false);
        }
        std::cout << "      (" << ms_since(start) << " ms)\n";
    }
    // The two corpus-scale counts (the full labeled chamber tally for six
    // points and the triangulation orbit tally) stay out of scope here; only
    // the 105-hyperplane count above is asserted for n = 6.
    std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT")
              << " (" << ms_since(total) << " ms total)\n";
    return failures;
}
