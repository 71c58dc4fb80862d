#include "metric.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "errors.hpp"

namespace metrofan {

Metric::Metric(int n_, RatVec d_) : n(n_), d(std::move(d_)) {
    if (n < 1)
        fail(ErrorCode::bad_argument, "metric needs at least one point");
    if (static_cast<int>(d.size()) != pair_count(n))
        fail(ErrorCode::bad_argument, "metric entry count does not match point count");
}

int Metric::pair_index(int n, int i, int j) {
    if (i == j || i < 1 || j < 1 || i > n || j > n)
        fail(ErrorCode::bad_argument, "bad point pair");
    if (i > j)
        std::swap(i, j);
    // Pairs (1,2)..(1,n) come first, then (2,3)..(2,n), etc.
    return (i - 1) * n - i * (i - 1) / 2 + (j - i) - 1;
}

const char* metric_class_name(MetricClass c) {
    switch (c) {
    case MetricClass::not_pseudometric: return "NOT_PSEUDOMETRIC";
    case MetricClass::pseudometric: return "PSEUDOMETRIC";
    case MetricClass::metric: return "METRIC";
    case MetricClass::strict_metric: return "STRICT";
    }
    return "?";
}

MetricClass validate(const Metric& m) {
    bool any_zero = false;
    for (const auto& e : m.d) {
        if (e < 0)
            return MetricClass::not_pseudometric;
        if (e == 0)
            any_zero = true;
    }
    bool any_tight = false;
    for (int i = 1; i <= m.n; i++) {
        for (int j = 1; j <= m.n; j++) {
            if (j == i)
                continue;
            for (int k = j + 1; k <= m.n; k++) {
                if (k == i)
                    continue;
                Rat lhs = m.dist(j, k);
                Rat rhs = m.dist(j, i) + m.dist(i, k);
                if (lhs > rhs)
                    return MetricClass::not_pseudometric;
                if (lhs == rhs)
                    any_tight = true;
            }
        }
    }
    if (any_zero)
        return MetricClass::pseudometric;
    if (any_tight)
        return MetricClass::metric;
    return MetricClass::strict_metric;
}

bool is_pseudometric(const Metric& m) {
    return validate(m) != MetricClass::not_pseudometric;
}

bool is_metric(const Metric& m) {
    auto c = validate(m);
    return c == MetricClass::metric || c == MetricClass::strict_metric;
}

bool is_strict(const Metric& m) {
    return validate(m) == MetricClass::strict_metric;
}

Split::Split(int n_, std::vector<int> side) : n(n_) {
    if (n < 2)
        fail(ErrorCode::bad_argument, "split needs at least two points");
    std::sort(side.begin(), side.end());
    side.erase(std::unique(side.begin(), side.end()), side.end());
    if (side.empty() || static_cast<int>(side.size()) >= n)
        fail(ErrorCode::bad_argument, "split side must be a proper nonempty subset");
    for (int p : side)
        if (p < 1 || p > n)
            fail(ErrorCode::bad_argument, "split side out of range");
    if (std::find(side.begin(), side.end(), 1) != side.end()) {
        part_a = std::move(side);
    } else {
        std::vector<int> in(n + 1, 0);
        for (int p : side)
            in[p] = 1;
        for (int p = 1; p <= n; p++)
            if (!in[p])
                part_a.push_back(p);
    }
}

std::vector<int> Split::part_b() const {
    std::vector<int> in(n + 1, 0);
    for (int p : part_a)
        in[p] = 1;
    std::vector<int> b;
    for (int p = 1; p <= n; p++)
        if (!in[p])
            b.push_back(p);
    return b;
}

std::vector<Split> all_splits(int n) {
    // Enumerate subsets of {2..n} joined with {1}; skip the full set.
    std::vector<Split> out;
    int m = n - 1;
    for (unsigned mask = 0; mask + 1 < (1u << m); mask++) {
        std::vector<int> side = {1};
        for (int b = 0; b < m; b++)
            if (mask & (1u << b))
                side.push_back(b + 2);
        out.emplace_back(n, side);
    }
    return out;
}

Metric split_metric(const Split& s) {
    std::vector<int> in_a(s.n + 1, 0);
    for (int p : s.part_a)
        in_a[p] = 1;
    RatVec d;
    d.reserve(Metric::pair_count(s.n));
    for (int i = 1; i <= s.n; i++)
        for (int j = i + 1; j <= s.n; j++)
            d.push_back(in_a[i] != in_a[j] ? Rat(1) : Rat(0));
    return Metric(s.n, std::move(d));
}

Metric split_metric(int n, const std::vector<int>& side) {
    return split_metric(Split(n, side));
}

Metric path_metric(int k) {
    if (k < 1)
        fail(ErrorCode::bad_argument, "path metric needs k >= 1");
    int n = k + 1;
    RatVec d;
    d.reserve(Metric::pair_count(n));
    for (int i = 1; i <= n; i++)
        for (int j = i + 1; j <= n; j++)
            d.push_back(Rat(j - i));
    return Metric(n, std::move(d));
}

Metric scale(const Metric& m, const Rat& factor) {
    RatVec d = m.d;
    for (auto& e : d)
        e *= factor;
    return Metric(m.n, std::move(d));
}

Metric add(const Metric& a, const Metric& b) {
    if (a.n != b.n)
        fail(ErrorCode::bad_argument, "add: point counts differ");
    RatVec d = a.d;
    for (size_t i = 0; i < d.size(); i++)
        d[i] += b.d[i];
    return Metric(a.n, std::move(d));
}

Metric free_sum(const Metric& m1, const Metric& m2) {
    if (!is_pseudometric(m1) || !is_pseudometric(m2))
        fail(ErrorCode::not_pseudometric, "free_sum: inputs must be pseudometrics");
    int n1 = m1.n, n2 = m2.n;
    if (n1 < 2 || n2 < 2)
        fail(ErrorCode::bad_argument, "free_sum: both parts need at least two points");
    for (int i = 1; i < n1; i++)
        if (m1.dist(i, n1) == 0)
            fail(ErrorCode::zero_distance, "free_sum: zero distance to the glue point");
    for (int j = 2; j <= n2; j++)
        if (m2.dist(1, j) == 0)
            fail(ErrorCode::zero_distance, "free_sum: zero distance to the glue point");
    int n = n1 + n2 - 1;
    RatVec d;
    d.reserve(Metric::pair_count(n));
    auto value = [&](int i, int j) -> Rat {
        if (j <= n1)
            return m1.dist(i, j);
        if (i > n1)
            return m2.dist(i - n1 + 1, j - n1 + 1);
        if (i == n1)
            return m2.dist(1, j - n1 + 1);
        return m1.dist(i, n1) + m2.dist(1, j - n1 + 1);
    };
    for (int i = 1; i <= n; i++)
        for (int j = i + 1; j <= n; j++)
            d.push_back(value(i, j));
    return Metric(n, std::move(d));
}

Metric permute(const Metric& m, const std::vector<int>& sigma) {
    if (static_cast<int>(sigma.size()) != m.n)
        fail(ErrorCode::bad_argument, "permute: permutation size mismatch");
    auto inv = inverse(sigma);
    RatVec d;
    d.reserve(m.d.size());
    for (int i = 1; i <= m.n; i++)
        for (int j = i + 1; j <= m.n; j++)
            d.push_back(m.dist(inv[i - 1], inv[j - 1]));
    return Metric(m.n, std::move(d));
}

std::vector<int> compose(const std::vector<int>& s, const std::vector<int>& t) {
    std::vector<int> out(t.size());
    for (size_t i = 0; i < t.size(); i++)
        out[i] = s[t[i] - 1];
    return out;
}

std::vector<int> inverse(const std::vector<int>& sigma) {
    std::vector<int> inv(sigma.size());
    std::vector<int> seen(sigma.size(), 0);
    for (size_t i = 0; i < sigma.size(); i++) {
        int v = sigma[i];
        if (v < 1 || v > static_cast<int>(sigma.size()) || seen[v - 1])
            fail(ErrorCode::bad_argument, "not a permutation");
        seen[v - 1] = 1;
        inv[v - 1] = static_cast<int>(i) + 1;
    }
    return inv;
}

namespace {

Rat entry_from_json(const nlohmann::json& e) {
    if (e.is_number_integer())
        return Rat(static_cast<long>(e.get<long long>()));
    if (e.is_string())
        return rat_from_string(e.get<std::string>());
    fail(ErrorCode::parse_error, "metric entries must be integers or 'p/q' strings");
}

} // namespace

Metric metric_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorCode::parse_error, std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("d"))
        fail(ErrorCode::parse_error, "metric JSON needs {\"n\", \"d\"}");
    if (!j["n"].is_number_integer())
        fail(ErrorCode::parse_error, "\"n\" must be an integer");
    int n = j["n"].get<int>();
    if (n < 1 || n > 64)
        fail(ErrorCode::parse_error, "point count out of range");
    if (!j["d"].is_array() || static_cast<int>(j["d"].size()) != Metric::pair_count(n))
        fail(ErrorCode::parse_error, "\"d\" must list n*(n-1)/2 entries in lexicographic pair order");
    RatVec d;
    d.reserve(j["d"].size());
    for (const auto& e : j["d"])
        d.push_back(entry_from_json(e));
    return Metric(n, std::move(d));
}

Metric metric_from_csv(const std::string& text) {
    std::vector<std::vector<Rat>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        // Trim and skip blank lines.
        size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos)
            continue;
        std::vector<Rat> row;
        std::istringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            size_t b = cell.find_first_not_of(" \t\r");
            size_t e = cell.find_last_not_of(" \t\r");
            if (b == std::string::npos)
                fail(ErrorCode::parse_error, "empty CSV cell");
            row.push_back(rat_from_string(cell.substr(b, e - b + 1)));
        }
        rows.push_back(std::move(row));
    }
    int n = static_cast<int>(rows.size());
    if (n < 1)
        fail(ErrorCode::parse_error, "empty CSV matrix");
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != n)
            fail(ErrorCode::parse_error, "CSV matrix must be square");
    for (int i = 0; i < n; i++) {
        if (rows[i][i] != 0)
            fail(ErrorCode::parse_error, "CSV matrix must have zero diagonal");
        for (int j = i + 1; j < n; j++)
            if (rows[i][j] != rows[j][i])
                fail(ErrorCode::parse_error, "CSV matrix must be symmetric");
    }
    RatVec d;
    d.reserve(Metric::pair_count(n));
    for (int i = 0; i < n; i++)
        for (int j = i + 1; j < n; j++)
            d.push_back(rows[i][j]);
    return Metric(n, std::move(d));
}

Metric metric_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        fail(ErrorCode::io_error, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    size_t a = text.find_first_not_of(" \t\r\n");
    if (a != std::string::npos && text[a] == '{')
        return metric_from_json(text);
    return metric_from_csv(text);
}

std::string metric_to_json(const Metric& m) {
    nlohmann::ordered_json j;
    j["n"] = m.n;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& e : m.d)
        arr.push_back(rat_to_string(e));
    j["d"] = std::move(arr);
    return j.dump();
}

} // namespace metrofan
