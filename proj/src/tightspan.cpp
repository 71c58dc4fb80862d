#include "tightspan.hpp"

#include <algorithm>
#include <set>

#include "errors.hpp"
#include "hull.hpp"
#include "json.hpp"

namespace metrofan {

RegularSubdivision regular_subdivision(std::vector<RatVec> config, RatVec heights,
                                       std::vector<std::string> labels) {
    if (config.empty())
        fail(ErrorCode::bad_argument, "empty configuration");
    if (config.size() != heights.size())
        fail(ErrorCode::bad_argument, "height count does not match configuration");
    {
        std::set<RatVec> uniq(config.begin(), config.end());
        if (uniq.size() != config.size())
            fail(ErrorCode::bad_argument, "configuration points must be distinct");
    }
    if (labels.empty()) {
        for (size_t i = 0; i < config.size(); ++i)
            labels.push_back(std::to_string(i));
    } else if (labels.size() != config.size()) {
        fail(ErrorCode::bad_argument, "label count does not match configuration");
    }
    if (config.size() == 1)
        fail(ErrorCode::degenerate, "single-point configuration has no subdivision");

    RegularSubdivision rs;
    rs.config = std::move(config);
    rs.labels = std::move(labels);
    rs.heights = std::move(heights);

    std::vector<RatVec> lifted;
    lifted.reserve(rs.config.size());
    for (size_t i = 0; i < rs.config.size(); ++i) {
        RatVec v = rs.config[i];
        v.push_back(rs.heights[i]);
        lifted.push_back(std::move(v));
    }
    Hull h = convex_hull(lifted);

    for (const auto& eq : h.affine_hull)
        if (eq.normal.back() != 0) {
            // The heights are an affine function of the configuration points:
            // nothing is subdivided.
            rs.trivial = true;
            rs.maximal_cells.push_back(rs.config.size() == 64
                                           ? ~uint64_t(0)
                                           : (uint64_t(1) << rs.config.size()) - 1);
            return rs;
        }
    for (const auto& f : h.facets)
        if (f.normal.back() < 0) rs.maximal_cells.push_back(f.incident_points);
    std::sort(rs.maximal_cells.begin(), rs.maximal_cells.end());
    return rs;
}

std::vector<RatVec> hypersimplex_config(int n) {
    std::vector<RatVec> pts;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            RatVec v(n, Rat(0));
            v[i - 1] = 1;
            v[j - 1] = 1;
            pts.push_back(std::move(v));
        }
    return pts;
}

RegularSubdivision hypersimplex_type(const Metric& m) {
    if (m.n < 2)
        fail(ErrorCode::bad_argument, "need at least two points");
    std::vector<std::string> labels;
    for (int i = 1; i <= m.n; ++i)
        for (int j = i + 1; j <= m.n; ++j)
            labels.push_back(std::to_string(i) + "," + std::to_string(j));
    // The tight span is dual to the cells the metric lift touches from below,
    // i.e. the upper cells of the lift; negating the heights lets the lower
    // engine compute them.
    RatVec negated;
    negated.reserve(m.d.size());
    for (const Rat& h : m.d) negated.push_back(-h);
    return regular_subdivision(hypersimplex_config(m.n), negated, std::move(labels));
}

bool same_tight_span_type(const Metric& m1, const Metric& m2) {
    if (m1.n != m2.n)
        fail(ErrorCode::bad_argument, "cannot compare metrics on different point counts");
    return hypersimplex_type(m1).maximal_cells == hypersimplex_type(m2).maximal_cells;
}

std::string subdivision_to_json(const RegularSubdivision& rs) {
    nlohmann::ordered_json out;
    out["config_labels"] = rs.labels;
    std::vector<std::string> hs;
    for (const auto& h : rs.heights) hs.push_back(rat_to_string(h));
    out["heights"] = hs;
    out["trivial"] = rs.trivial;
    out["maximal_cells"] = nlohmann::ordered_json::array();
    for (uint64_t mask : rs.maximal_cells) {
        std::vector<std::string> cell;
        for (size_t i = 0; i < rs.config.size(); ++i)
            if ((mask >> i) & 1) cell.push_back(rs.labels[i]);
        out["maximal_cells"].push_back(cell);
    }
    return out.dump(2);
}

} // namespace metrofan
