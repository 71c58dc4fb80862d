#include "arrangement.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

#include "errors.hpp"
#include "json.hpp"

namespace metrofan {

namespace {

constexpr int kMaxArrangementN = 8;

uint64_t cycle_key(const std::vector<int>& c) {
    uint64_t key = 0;
    for (size_t i = 0; i < c.size(); ++i)
        key |= static_cast<uint64_t>(c[i]) << (4 * i);
    return key | (static_cast<uint64_t>(c.size()) << 56);
}

struct ArrangementData {
    std::vector<CycleHyperplane> hyperplanes;
    std::unordered_map<uint64_t, int> index_by_cycle;
};

std::vector<int> sorted_matching(const std::vector<int>& c, bool odd_edges) {
    // Encodes the matching {c[s], c[s+1]}, {c[s+2], c[s+3]}, ... (cyclically)
    // as a sorted list of packed pairs, s = 0 for odd_edges, s = 1 otherwise.
    const size_t m = c.size();
    std::vector<int> pairs;
    for (size_t i = odd_edges ? 0 : 1; i < m + (odd_edges ? 0 : 1); i += 2) {
        int u = c[i % m], v = c[(i + 1) % m];
        if (u > v) std::swap(u, v);
        pairs.push_back(u * 16 + v);
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

CycleHyperplane make_hyperplane(int n, const std::vector<int>& cycle) {
    CycleHyperplane h;
    h.n = n;
    h.k = static_cast<int>(cycle.size()) / 2;
    h.cycle = cycle;
    h.a.resize(h.k);
    h.b.resize(h.k);
    h.a[0] = cycle[0];
    h.b[0] = cycle[1];
    for (int j = 1; j < h.k; ++j) {
        h.a[h.k - j] = cycle[2 * j];
        h.b[h.k - j] = cycle[2 * j + 1];
    }
    h.normal.assign(Metric::pair_count(n), Int(0));
    const int m = 2 * h.k;
    for (int i = 0; i < m; i += 2) {
        h.normal[Metric::pair_index(n, cycle[i], cycle[i + 1])] += 1;
        h.normal[Metric::pair_index(n, cycle[i + 1], cycle[(i + 2) % m])] -= 1;
    }
    return h;
}

const ArrangementData& arrangement_data(int n) {
    if (n < 1 || n > kMaxArrangementN)
        fail(ErrorCode::too_large, "arrangement supported for 1 <= n <= 8, got n=" + std::to_string(n));
    static std::mutex mu;
    static std::map<int, std::unique_ptr<ArrangementData>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    auto data = std::make_unique<ArrangementData>();
    for (int k = 2; 2 * k <= n; ++k) {
        const int m = 2 * k;
        std::vector<int> subset(m);
        std::vector<bool> pick(n, false);
        std::fill(pick.begin(), pick.begin() + m, true);
        // Enumerate supports as sorted subsets of {1..n}.
        std::vector<std::vector<int>> supports;
        do {
            std::vector<int> s;
            for (int i = 0; i < n; ++i)
                if (pick[i]) s.push_back(i + 1);
            supports.push_back(std::move(s));
        } while (std::prev_permutation(pick.begin(), pick.end()));
        for (const auto& s : supports) {
            std::vector<int> rest(s.begin() + 1, s.end());
            std::sort(rest.begin(), rest.end());
            do {
                if (rest.front() > rest.back()) continue; // keep one reflection
                std::vector<int> cycle;
                cycle.reserve(m);
                cycle.push_back(s[0]);
                cycle.insert(cycle.end(), rest.begin(), rest.end());
                data->hyperplanes.push_back(make_hyperplane(n, cycle));
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
    }
    std::sort(data->hyperplanes.begin(), data->hyperplanes.end(),
              [](const CycleHyperplane& x, const CycleHyperplane& y) {
                  if (x.k != y.k) return x.k < y.k;
                  return x.cycle < y.cycle;
              });
    for (size_t i = 0; i < data->hyperplanes.size(); ++i)
        data->index_by_cycle[cycle_key(data->hyperplanes[i].cycle)] = static_cast<int>(i);
    auto& ref = *data;
    cache[n] = std::move(data);
    return ref;
}

void check_permutation(const std::vector<int>& sigma, int n) {
    if (static_cast<int>(sigma.size()) != n)
        fail(ErrorCode::bad_argument, "permutation must list images of 1..n");
    std::vector<bool> seen(n, false);
    for (int v : sigma) {
        if (v < 1 || v > n || seen[v - 1])
            fail(ErrorCode::bad_argument, "not a permutation of 1..n");
        seen[v - 1] = true;
    }
}

} // namespace

const std::vector<CycleHyperplane>& wasserstein_arrangement(int n) {
    return arrangement_data(n).hyperplanes;
}

long long wasserstein_count(int n) {
    long long total = 0;
    for (int k = 2; 2 * k <= n; ++k) {
        long long binom = 1;
        for (int i = 0; i < 2 * k; ++i) binom = binom * (n - i) / (i + 1);
        long long fact = 1;
        for (int i = 2; i < 2 * k; ++i) fact *= i;
        total += binom * fact / 2;
    }
    return total;
}

SignVector sign_vector(const Metric& m) {
    const auto& hps = wasserstein_arrangement(m.n);
    SignVector sv;
    sv.reserve(hps.size());
    for (const auto& h : hps) {
        Rat v(0);
        for (size_t t = 0; t < h.normal.size(); ++t)
            if (h.normal[t] != 0) v += Rat(h.normal[t]) * m.d[t];
        sv.push_back(sgn(v));
    }
    return sv;
}

std::string sign_vector_string(const SignVector& sv) {
    std::string s;
    s.reserve(sv.size());
    for (int v : sv) s.push_back(v > 0 ? '+' : (v < 0 ? '-' : '0'));
    return s;
}

std::string sign_vector_hash(const SignVector& sv) {
    uint64_t h = 14695981039346656037ull;
    for (char c : sign_vector_string(sv)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex;
    out.width(16);
    out.fill('0');
    out << h;
    return out.str();
}

bool same_open_cone(const Metric& m1, const Metric& m2) {
    if (m1.n != m2.n)
        fail(ErrorCode::bad_argument, "cannot compare metrics on different point counts");
    return sign_vector(m1) == sign_vector(m2);
}

std::pair<std::vector<int>, bool> canonicalize_cycle(const std::vector<int>& seq) {
    const size_t m = seq.size();
    if (m < 4 || m % 2 != 0)
        fail(ErrorCode::bad_argument, "cycle must have even length >= 4");
    {
        std::set<int> uniq(seq.begin(), seq.end());
        if (uniq.size() != m)
            fail(ErrorCode::bad_argument, "cycle vertices must be distinct");
    }
    const int minv = *std::min_element(seq.begin(), seq.end());
    std::vector<int> best;
    for (size_t i = 0; i < m; ++i) {
        if (seq[i] != minv) continue;
        for (int dir : {1, -1}) {
            std::vector<int> cand(m);
            for (size_t j = 0; j < m; ++j) {
                long idx = (static_cast<long>(i) + dir * static_cast<long>(j)) % static_cast<long>(m);
                if (idx < 0) idx += static_cast<long>(m);
                cand[j] = seq[idx];
            }
            if (best.empty() || cand < best) best = std::move(cand);
        }
    }
    const bool preserved = sorted_matching(seq, true) == sorted_matching(best, true);
    return {best, preserved};
}

SignVector act(const SignVector& sv, const std::vector<int>& sigma, int n) {
    check_permutation(sigma, n);
    const auto& data = arrangement_data(n);
    if (sv.size() != data.hyperplanes.size())
        fail(ErrorCode::bad_argument, "sign vector length does not match arrangement");
    SignVector out(sv.size(), 0);
    for (size_t i = 0; i < data.hyperplanes.size(); ++i) {
        const auto& h = data.hyperplanes[i];
        std::vector<int> image(h.cycle.size());
        for (size_t j = 0; j < h.cycle.size(); ++j)
            image[j] = sigma[h.cycle[j] - 1];
        auto [canon, preserved] = canonicalize_cycle(image);
        auto it = data.index_by_cycle.find(cycle_key(canon));
        if (it == data.index_by_cycle.end())
            fail(ErrorCode::internal_disagreement, "permuted cycle missing from arrangement");
        out[it->second] = preserved ? sv[i] : -sv[i];
    }
    return out;
}

Stabilizer stabilizer(const SignVector& sv, int n) {
    Stabilizer st;
    std::vector<int> sigma(n);
    std::iota(sigma.begin(), sigma.end(), 1);
    do {
        if (act(sv, sigma, n) == sv) st.elements.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));

    std::set<std::vector<int>> generated;
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 1);
    generated.insert(id);
    for (const auto& e : st.elements) {
        if (generated.count(e)) continue;
        st.generators.push_back(e);
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<std::vector<int>> current(generated.begin(), generated.end());
            for (const auto& g : current)
                for (const auto& h : st.generators) {
                    std::vector<int> gh(n);
                    for (int i = 0; i < n; ++i) gh[i] = g[h[i] - 1];
                    if (generated.insert(gh).second) grew = true;
                }
        }
    }
    return st;
}

std::string permutation_cycles(const std::vector<int>& sigma) {
    const int n = static_cast<int>(sigma.size());
    std::vector<bool> seen(n, false);
    std::string out;
    for (int i = 1; i <= n; ++i) {
        if (seen[i - 1] || sigma[i - 1] == i) continue;
        out += '(';
        int j = i;
        bool first = true;
        while (!seen[j - 1]) {
            seen[j - 1] = true;
            if (!first) out += ' ';
            out += std::to_string(j);
            first = false;
            j = sigma[j - 1];
        }
        out += ')';
    }
    return out.empty() ? "id" : out;
}

int lineality_dim(int n) { return lineality(n).dimension; }

Lineality lineality(int n) {
    const auto& hps = wasserstein_arrangement(n);
    const int pc = Metric::pair_count(n);
    std::vector<IntVec> rows;
    for (const auto& h : hps) rows.push_back(h.normal);
    Lineality lin;
    lin.dimension = pc - rank_int_rows(rows, pc);

    // Elementary splits: the i-th vector has entry 1 on every pair containing i.
    std::vector<IntVec> splits(n, IntVec(pc, Int(0)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (j != i) splits[i - 1][Metric::pair_index(n, std::min(i, j), std::max(i, j))] = 1;
    bool on_all = true;
    for (const auto& s : splits)
        for (const auto& h : hps) {
            Int dot(0);
            for (int t = 0; t < pc; ++t)
                if (h.normal[t] != 0) dot += h.normal[t] * s[t];
            if (dot != 0) { on_all = false; break; }
        }
    lin.splits_span = on_all && rank_int_rows(splits, pc) == lin.dimension;
    return lin;
}

IntersectionPoset poset_and_charpoly(int n) {
    if (n >= 6)
        fail(ErrorCode::too_large, "intersection poset limited to n <= 5");
    const auto& hps = wasserstein_arrangement(n);
    const int nh = static_cast<int>(hps.size());
    const int dim = Metric::pair_count(n);

    auto subset_rank = [&](uint32_t mask) {
        std::vector<IntVec> rows;
        for (int i = 0; i < nh; ++i)
            if (mask & (1u << i)) rows.push_back(hps[i].normal);
        return rank_int_rows(rows, dim);
    };
    auto closure = [&](uint32_t mask) {
        int r = subset_rank(mask);
        uint32_t closed = mask;
        for (int i = 0; i < nh; ++i) {
            if (closed & (1u << i)) continue;
            if (subset_rank(mask | (1u << i)) == r) closed |= 1u << i;
        }
        return std::make_pair(closed, r);
    };

    std::map<uint32_t, int> rank_of; // flat mask -> rank
    rank_of[0] = 0;
    std::vector<uint32_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<uint32_t> next;
        for (uint32_t f : frontier)
            for (int i = 0; i < nh; ++i) {
                if (f & (1u << i)) continue;
                auto [closed, r] = closure(f | (1u << i));
                if (rank_of.emplace(closed, r).second) next.push_back(closed);
            }
        frontier = std::move(next);
    }

    IntersectionPoset p;
    p.n = n;
    for (const auto& [mask, r] : rank_of)
        p.flats.push_back({mask, r, 0});
    std::sort(p.flats.begin(), p.flats.end(), [](const PosetFlat& x, const PosetFlat& y) {
        if (x.rank != y.rank) return x.rank < y.rank;
        return x.hyperplanes < y.hyperplanes;
    });
    for (size_t i = 0; i < p.flats.size(); ++i) {
        if (p.flats[i].rank == 0) {
            p.flats[i].mobius = 1;
            continue;
        }
        long long sum = 0;
        for (size_t j = 0; j < i; ++j) {
            const uint32_t g = p.flats[j].hyperplanes;
            const uint32_t f = p.flats[i].hyperplanes;
            if (g != f && (g & f) == g) sum += p.flats[j].mobius;
        }
        p.flats[i].mobius = -sum;
    }
    p.charpoly.assign(dim + 1, 0);
    for (const auto& f : p.flats)
        p.charpoly[dim - f.rank] += f.mobius;
    long long at_minus_one = 0;
    long long pow = 1;
    for (int i = 0; i <= dim; ++i) {
        at_minus_one += p.charpoly[i] * pow;
        pow = -pow;
    }
    p.chambers = at_minus_one < 0 ? -at_minus_one : at_minus_one;
    return p;
}

std::string arrangement_to_json(int n) {
    const auto& hps = wasserstein_arrangement(n);
    nlohmann::ordered_json out;
    out["n"] = n;
    out["count"] = hps.size();
    out["hyperplanes"] = nlohmann::ordered_json::array();
    for (size_t i = 0; i < hps.size(); ++i) {
        nlohmann::ordered_json h;
        h["id"] = i;
        h["k"] = hps[i].k;
        h["cycle"] = hps[i].cycle;
        h["a"] = hps[i].a;
        h["b"] = hps[i].b;
        std::vector<long long> normal;
        for (const auto& c : hps[i].normal) normal.push_back(c.get_si());
        h["normal"] = normal;
        out["hyperplanes"].push_back(std::move(h));
    }
    return out.dump(2);
}

std::string poset_to_json(const IntersectionPoset& p) {
    nlohmann::ordered_json out;
    out["n"] = p.n;
    out["flats"] = nlohmann::ordered_json::array();
    for (const auto& f : p.flats) {
        nlohmann::ordered_json jf;
        std::vector<int> ids;
        for (int i = 0; i < 32; ++i)
            if (f.hyperplanes & (1u << i)) ids.push_back(i);
        jf["hyperplanes"] = ids;
        jf["rank"] = f.rank;
        jf["mobius"] = f.mobius;
        out["flats"].push_back(std::move(jf));
    }
    out["charpoly"] = p.charpoly;
    out["chambers"] = p.chambers;
    return out.dump(2);
}

} // namespace metrofan
