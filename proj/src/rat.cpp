#include "rat.hpp"

#include <cctype>

#include "errors.hpp"

namespace metrofan {

Rat rat_from_string(const std::string& s) {
    if (s.empty())
        fail(ErrorCode::parse_error, "empty rational literal");
    // mpq_class accepts forms like "1/0" and whitespace-laden strings; validate
    // the shape first so errors surface as parse errors, not GMP aborts.
    size_t i = 0;
    auto expect_integer = [&](size_t from) -> size_t {
        size_t j = from;
        if (j < s.size() && (s[j] == '+' || s[j] == '-'))
            j++;
        size_t digits = 0;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
            j++;
            digits++;
        }
        if (digits == 0)
            fail(ErrorCode::parse_error, "bad rational literal: " + s);
        return j;
    };
    i = expect_integer(0);
    if (i != s.size()) {
        if (s[i] != '/')
            fail(ErrorCode::parse_error, "bad rational literal: " + s);
        i = expect_integer(i + 1);
        if (i != s.size())
            fail(ErrorCode::parse_error, "bad rational literal: " + s);
    }
    Rat r;
    if (r.set_str(s, 10) != 0)
        fail(ErrorCode::parse_error, "bad rational literal: " + s);
    if (r.get_den() == 0)
        fail(ErrorCode::parse_error, "zero denominator: " + s);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1)
        return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

// Clears denominators row by row; row scaling preserves rank and solutions of
// the associated homogeneous systems.
std::vector<IntVec> integer_rows(const RatMatrix& m) {
    std::vector<IntVec> rows(m.rows);
    for (int i = 0; i < m.rows; i++) {
        Int lcm = 1;
        for (int j = 0; j < m.cols; j++)
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        rows[i].resize(m.cols);
        for (int j = 0; j < m.cols; j++)
            rows[i][j] = m.at(i, j).get_num() * (lcm / m.at(i, j).get_den());
    }
    return rows;
}

// Bareiss fraction-free elimination; returns the rank, destroys `rows`.
int bareiss_rank(std::vector<IntVec>& rows, int cols) {
    int n = static_cast<int>(rows.size());
    int r = 0;
    Int prev = 1;
    for (int c = 0; c < cols && r < n; c++) {
        int pivot = -1;
        for (int i = r; i < n; i++) {
            if (rows[i][c] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0)
            continue;
        std::swap(rows[r], rows[pivot]);
        for (int i = r + 1; i < n; i++) {
            for (int j = c + 1; j < cols; j++) {
                Int t = rows[r][c] * rows[i][j] - rows[i][c] * rows[r][j];
                mpz_divexact(rows[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            rows[i][c] = 0;
        }
        prev = rows[r][c];
        r++;
    }
    return r;
}

} // namespace

int rank(const RatMatrix& m) {
    auto rows = integer_rows(m);
    return bareiss_rank(rows, m.cols);
}

int rank_int_rows(const std::vector<IntVec>& rows, int cols) {
    auto copy = rows;
    return bareiss_rank(copy, cols);
}

std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b) {
    if (static_cast<int>(b.size()) != a.rows)
        fail(ErrorCode::bad_argument, "solve: dimension mismatch");
    int n = a.rows, m = a.cols;
    RatMatrix w(n, m + 1);
    for (int i = 0; i < n; i++) {
        for (int j = 0; j < m; j++)
            w.at(i, j) = a.at(i, j);
        w.at(i, m) = b[i];
    }
    std::vector<int> pivot_col(n, -1);
    int r = 0;
    for (int c = 0; c < m && r < n; c++) {
        int p = -1;
        for (int i = r; i < n; i++) {
            if (w.at(i, c) != 0) {
                p = i;
                break;
            }
        }
        if (p < 0)
            continue;
        for (int j = 0; j <= m; j++)
            std::swap(w.at(r, j), w.at(p, j));
        Rat inv = w.at(r, c);
        for (int j = c; j <= m; j++)
            w.at(r, j) /= inv;
        for (int i = 0; i < n; i++) {
            if (i == r || w.at(i, c) == 0)
                continue;
            Rat f = w.at(i, c);
            for (int j = c; j <= m; j++)
                w.at(i, j) -= f * w.at(r, j);
        }
        pivot_col[r] = c;
        r++;
    }
    for (int i = r; i < n; i++)
        if (w.at(i, m) != 0)
            return std::nullopt;
    RatVec x(m, Rat(0));
    for (int i = 0; i < r; i++)
        x[pivot_col[i]] = w.at(i, m);
    return x;
}

void make_primitive(IntVec& v) {
    Int g = 0;
    for (const auto& e : v)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t());
    if (g == 0 || g == 1)
        return;
    for (auto& e : v)
        mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), g.get_mpz_t());
}

IntVec primitive_direction(const RatVec& v) {
    Int lcm = 1;
    for (const auto& e : v)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.get_den().get_mpz_t());
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); i++)
        out[i] = v[i].get_num() * (lcm / v[i].get_den());
    make_primitive(out);
    return out;
}

std::optional<IntHyperplane> affine_normal(const std::vector<RatVec>& points) {
    if (points.empty())
        return std::nullopt;
    int d = static_cast<int>(points[0].size());
    // Solve for (normal, offset) with normal . p = offset for all points: the
    // nullspace of the homogenized point matrix [p | -1].
    RatMatrix m(static_cast<int>(points.size()), d + 1);
    for (int i = 0; i < m.rows; i++) {
        for (int j = 0; j < d; j++)
            m.at(i, j) = points[i][j];
        m.at(i, d) = Rat(-1);
    }
    // Gauss-Jordan to RREF, then read the nullspace.
    int n = m.rows, cols = d + 1;
    std::vector<int> pivot_of_col(cols, -1);
    int r = 0;
    for (int c = 0; c < cols && r < n; c++) {
        int p = -1;
        for (int i = r; i < n; i++) {
            if (m.at(i, c) != 0) {
                p = i;
                break;
            }
        }
        if (p < 0)
            continue;
        for (int j = 0; j < cols; j++)
            std::swap(m.at(r, j), m.at(p, j));
        Rat inv = m.at(r, c);
        for (int j = c; j < cols; j++)
            m.at(r, j) /= inv;
        for (int i = 0; i < n; i++) {
            if (i == r || m.at(i, c) == 0)
                continue;
            Rat f = m.at(i, c);
            for (int j = c; j < cols; j++)
                m.at(i, j) -= f * m.at(r, j);
        }
        pivot_of_col[c] = r;
        r++;
    }
    // Affine span is a hyperplane iff the nullspace is 1-dimensional, i.e.
    // exactly one free column, and the normal part is nonzero.
    if (cols - r != 1)
        return std::nullopt;
    int free_col = -1;
    for (int c = 0; c < cols; c++) {
        if (pivot_of_col[c] < 0) {
            free_col = c;
            break;
        }
    }
    RatVec sol(cols, Rat(0));
    sol[free_col] = Rat(1);
    for (int c = 0; c < cols; c++) {
        int pr = pivot_of_col[c];
        if (pr >= 0)
            sol[c] = -m.at(pr, free_col);
    }
    RatVec normal_part(sol.begin(), sol.begin() + d);
    bool nonzero = false;
    for (const auto& e : normal_part)
        if (e != 0)
            nonzero = true;
    if (!nonzero)
        return std::nullopt;
    // Jointly scale (normal, offset) to primitive integers, first nonzero of
    // the normal positive.
    IntVec scaled = primitive_direction(sol);
    for (const auto& e : scaled) {
        if (e == 0)
            continue;
        if (e < 0)
            for (auto& f : scaled)
                f = -f;
        break;
    }
    IntHyperplane h;
    h.normal.assign(scaled.begin(), scaled.begin() + d);
    h.offset = scaled[d];
    return h;
}

int affine_dim(const std::vector<RatVec>& points) {
    if (points.empty())
        return -1;
    int d = static_cast<int>(points[0].size());
    RatMatrix m(static_cast<int>(points.size()) - 1, d);
    for (int i = 1; i < static_cast<int>(points.size()); i++)
        for (int j = 0; j < d; j++)
            m.at(i - 1, j) = points[i][j] - points[0][j];
    if (m.rows == 0)
        return 0;
    return rank(m);
}

Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); i++)
        s += a[i] * b[i];
    return s;
}

Int dot_int(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); i++)
        s += a[i] * b[i];
    return s;
}

} // namespace metrofan
