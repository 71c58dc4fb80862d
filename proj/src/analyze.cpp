#include "analyze.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "arrangement.hpp"
#include "classes.hpp"
#include "errors.hpp"
#include "hull.hpp"
#include "json.hpp"
#include "krw.hpp"
#include "tightspan.hpp"

namespace metrofan {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::io_error, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

std::string to_csv(const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += row[i];
        }
        out += '\n';
    }
    return out;
}

Metric load_metric(const std::string& data_dir, const std::string& name) {
    return metric_from_file(data_dir + "/metrics/" + name + ".json");
}

// Distinct sign vectors in the S_n orbit of sv.
std::set<SignVector> sign_orbit(const SignVector& sv, int n) {
    std::set<SignVector> orbit;
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i + 1;
    do {
        orbit.insert(act(sv, sigma, n));
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return orbit;
}

void diff_tables(const std::string& target,
                 const std::vector<std::vector<std::string>>& expected,
                 const std::vector<std::vector<std::string>>& computed,
                 std::vector<std::string>& diffs) {
    if (expected.size() != computed.size()) {
        diffs.push_back(target + ": expected " + std::to_string(expected.size()) +
                        " rows, computed " + std::to_string(computed.size()));
        return;
    }
    const auto& header = expected[0];
    for (size_t r = 1; r < expected.size(); ++r) {
        if (expected[r].size() != computed[r].size()) {
            diffs.push_back(target + " row " + expected[r][0] + ": column count mismatch");
            continue;
        }
        for (size_t c = 0; c < expected[r].size(); ++c)
            if (expected[r][c] != computed[r][c])
                diffs.push_back(target + " row " + expected[r][0] + " col " +
                                (c < header.size() ? header[c] : std::to_string(c)) +
                                ": expected " + expected[r][c] + ", computed " +
                                computed[r][c]);
    }
}

ReproduceResult reproduce_table2(const std::string& data_dir) {
    const auto expected = parse_csv(read_file(data_dir + "/expected/table2.csv"));
    std::vector<std::vector<std::string>> computed(expected.size());
    computed[0] = expected[0];
    parallel_for(expected.size() - 1, [&](size_t idx) {
        const auto& id = expected[idx + 1][0];
        const Metric m = load_metric(data_dir, "table2_row" + id);
        const auto fv = f_vector(build_krw(m).hull);
        std::vector<std::string> row{id};
        for (int f : fv) row.push_back(std::to_string(f));
        computed[idx + 1] = std::move(row);
    });
    ReproduceResult res;
    res.csv = to_csv(computed);
    diff_tables("table2", expected, computed, res.diffs);
    return res;
}

ReproduceResult reproduce_generic5(const std::string& data_dir) {
    const auto expected = parse_csv(read_file(data_dir + "/expected/generic5.csv"));
    std::vector<std::vector<std::string>> computed(expected.size());
    computed[0] = expected[0];
    parallel_for(expected.size() - 1, [&](size_t idx) {
        const auto& id = expected[idx + 1][0];
        const Metric m = load_metric(data_dir, "generic5_row" + id);
        const auto fv = f_vector(build_krw(m).hull);
        const auto sv = sign_vector(m);
        const long long stab = stabilizer(sv, m.n).order();
        const size_t orbit = sign_orbit(sv, m.n).size();
        std::vector<std::string> row{id};
        for (int f : fv) row.push_back(std::to_string(f));
        row.push_back(is_generic(m) ? "true" : "false");
        row.push_back(std::to_string(stab));
        row.push_back(std::to_string(orbit));
        computed[idx + 1] = std::move(row);
    });
    ReproduceResult res;
    res.csv = to_csv(computed);
    diff_tables("generic5", expected, computed, res.diffs);
    return res;
}

ReproduceResult reproduce_table3(const std::string& data_dir) {
    const auto expected = parse_csv(read_file(data_dir + "/expected/table3_strict5.csv"));
    std::vector<std::vector<std::string>> computed(expected.size());
    computed[0] = expected[0];
    parallel_for(expected.size() - 1, [&](size_t idx) {
        std::string id = expected[idx + 1][0];
        std::string file_id = id;
        std::replace(file_id.begin(), file_id.end(), '.', '_');
        const Metric m = load_metric(data_dir, "table3_" + file_id);
        const auto fv = f_vector(build_krw(m).hull);
        const long long stab = stabilizer(sign_vector(m), m.n).order();
        std::vector<std::string> row{id};
        for (int f : fv) row.push_back(std::to_string(f));
        row.push_back(std::to_string(stab));
        computed[idx + 1] = std::move(row);
    });
    ReproduceResult res;
    res.csv = to_csv(computed);
    diff_tables("table3-strict5", expected, computed, res.diffs);
    return res;
}

ReproduceResult reproduce_table1(const std::string& data_dir) {
    const auto expected = parse_csv(read_file(data_dir + "/expected/table1.csv"));
    std::vector<std::vector<std::string>> computed;
    computed.push_back(expected[0]);
    for (size_t r = 1; r < expected.size(); ++r) {
        const int n = std::stoi(expected[r][0]);
        std::vector<std::string> row{expected[r][0]};
        const size_t hp = wasserstein_arrangement(n).size();
        row.push_back(hp == static_cast<size_t>(wasserstein_count(n))
                          ? std::to_string(hp)
                          : "inconsistent");
        if (n >= 6) {
            row.push_back("out_of_scope");
            row.push_back("out_of_scope");
        } else {
            const auto poset = poset_and_charpoly(n);
            std::string unlabeled = "inconsistent";
            if (n == 3) {
                if (poset.chambers == 1) unlabeled = "1";
            } else if (n == 4) {
                const Metric rep = load_metric(data_dir, "table2_row1");
                if (sign_orbit(sign_vector(rep), 4).size() ==
                    static_cast<size_t>(poset.chambers))
                    unlabeled = "1";
            } else {
                std::vector<std::set<SignVector>> orbits(12);
                parallel_for(12, [&](size_t i) {
                    const Metric m =
                        load_metric(data_dir, "generic5_row" + std::to_string(i + 1));
                    orbits[i] = sign_orbit(sign_vector(m), 5);
                });
                bool disjoint = true;
                long long total = 0;
                for (size_t i = 0; i < orbits.size(); ++i) {
                    total += static_cast<long long>(orbits[i].size());
                    for (size_t j = i + 1; j < orbits.size(); ++j)
                        if (orbits[i].count(*orbits[j].begin())) disjoint = false;
                }
                if (disjoint && total == poset.chambers) unlabeled = "12";
            }
            row.push_back(unlabeled);
            row.push_back(std::to_string(poset.chambers));
        }
        computed.push_back(std::move(row));
    }
    ReproduceResult res;
    res.csv = to_csv(computed);
    diff_tables("table1", expected, computed, res.diffs);
    return res;
}

} // namespace

std::string analysis_report_json(const Metric& m, const AnalysisOptions& opt) {
    Json out;
    out["metric"] = Json::parse(metric_to_json(m));
    const MetricClass cls = validate(m);
    out["validity"] = metric_class_name(cls);
    const bool pseudo_ok = cls != MetricClass::not_pseudometric;
    const bool metric_ok =
        cls == MetricClass::metric || cls == MetricClass::strict_metric;
    const bool strict_ok = cls == MetricClass::strict_metric;

    out["generic"] = nullptr;
    out["f_vector"] = nullptr;
    out["simplicial"] = nullptr;
    out["sign_vector"] = nullptr;
    out["classes"] = nullptr;
    out["tight_span_cells"] = nullptr;
    out["stabilizer_order"] = nullptr;

    if (strict_ok) out["generic"] = is_generic(m);
    if (metric_ok && m.n >= 2 && m.n <= 7) {
        const KrwPolytope kp = build_krw(m);
        out["f_vector"] = kp.lattice.f_vector();
        out["simplicial"] = is_simplicial(kp.hull);
    }
    if (pseudo_ok && m.n <= 8) {
        const auto sv = sign_vector(m);
        Json js;
        js["hash"] = sign_vector_hash(sv);
        js["string"] = sign_vector_string(sv);
        out["sign_vector"] = std::move(js);
        if (m.n <= 7) out["stabilizer_order"] = stabilizer(sv, m.n).order();
    }
    if (pseudo_ok) out["classes"] = Json::parse(classes_report_json(m));
    if (pseudo_ok && m.n >= 3 && Metric::pair_count(m.n) <= 64)
        out["tight_span_cells"] = hypersimplex_type(m).maximal_cells.size();
    if (opt.facets) {
        out["facets"] = nullptr;
        if (metric_ok && m.n >= 2 && m.n <= 7)
            out["facets"] = Json::parse(facet_report_json(m));
    }
    return out.dump(2);
}

std::vector<std::pair<std::string, std::string>> facet_dot_files(const Metric& m) {
    const auto graphs = facet_graphs(m);
    int width = 1;
    for (size_t k = graphs.size(); k >= 10; k /= 10) ++width;
    std::vector<std::pair<std::string, std::string>> files;
    for (size_t i = 0; i < graphs.size(); ++i) {
        std::string num = std::to_string(i + 1);
        while (static_cast<int>(num.size()) < width) num.insert(num.begin(), '0');
        files.emplace_back("facet_" + num + ".dot",
                           graph_dot(graphs[i], "facet_" + num));
    }
    return files;
}

std::string compare_report_json(const Metric& m1, const Metric& m2) {
    if (m1.n != m2.n)
        fail(ErrorCode::bad_argument, "cannot compare metrics on different point counts");
    for (const Metric* m : {&m1, &m2})
        if (validate(*m) == MetricClass::not_pseudometric)
            fail(ErrorCode::not_pseudometric, "input is not a pseudometric");
    Json out;
    out["same_wasserstein_cone"] = same_open_cone(m1, m2);
    out["same_tight_span_type"] = same_tight_span_type(m1, m2);
    out["same_f_vector"] =
        f_vector(build_krw(m1).hull) == f_vector(build_krw(m2).hull);
    return out.dump(2);
}

std::string arrangement_stats_json(int n, bool with_count) {
    if (n < 4)
        fail(ErrorCode::bad_argument, "arrangement stats need at least four points");
    if (n > 6)
        fail(ErrorCode::too_large, "hyperplane listing is limited to six points");
    if (with_count && n > 5)
        fail(ErrorCode::too_large, "chamber counting is limited to five points");
    Json out;
    out["n"] = n;
    out["hyperplanes"] = wasserstein_arrangement(n).size();
    out["lineality_dim"] = lineality_dim(n);
    if (with_count) {
        const auto poset = poset_and_charpoly(n);
        out["characteristic_polynomial"] = poset.charpoly;
        out["chambers"] = poset.chambers;
    }
    return out.dump(2);
}

ReproduceResult reproduce(const std::string& target, const std::string& data_dir) {
    if (target == "table1") return reproduce_table1(data_dir);
    if (target == "table2") return reproduce_table2(data_dir);
    if (target == "table3-strict5") return reproduce_table3(data_dir);
    if (target == "generic5") return reproduce_generic5(data_dir);
    fail(ErrorCode::bad_argument,
         "unknown target (use table1, table2, table3-strict5, or generic5)");
}

void parallel_for(size_t count, const std::function<void(size_t)>& fn) {
    size_t workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    if (const char* env = std::getenv("METROFAN_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) workers = std::min<size_t>(workers, v);
    }
    workers = std::min(workers, count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr first_error;
    std::vector<std::thread> pool;
    for (size_t t = 0; t < workers; ++t)
        pool.emplace_back([&] {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace metrofan
