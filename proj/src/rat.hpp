// Exact rational and integer linear algebra: canonical rationals backed by GMP,
// dense rational matrices, fraction-free rank, linear solve, and primitive
// integer normals of affine hyperplanes.

#ifndef METROFAN_RAT_HPP
#define METROFAN_RAT_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace metrofan {

// mpq_class is kept canonical (lowest terms, positive denominator) by GMP as
// long as values are built through arithmetic or rat_from_string.
using Rat = mpq_class;
using Int = mpz_class;

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

// Parses "p" or "p/q" with optional sign; rejects q = 0 and garbage.
Rat rat_from_string(const std::string& s);

// Canonical text form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& r);

struct RatMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Rat> data; // row-major

    RatMatrix() = default;
    RatMatrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * c, Rat(0)) {}

    Rat& at(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
    const Rat& at(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }
};

// Rank over Q. Row-scales to integers, then runs fraction-free (Bareiss)
// elimination so all intermediate values stay integral.
int rank(const RatMatrix& m);

// Rank of an integer matrix given as rows; rows may have different lengths
// only if the caller is broken, so all must equal cols.
int rank_int_rows(const std::vector<IntVec>& rows, int cols);

// One solution of A x = b, or nullopt if inconsistent.
std::optional<RatVec> solve(const RatMatrix& a, const RatVec& b);

// Divides an integer vector by the gcd of its entries; zero vectors stay zero.
void make_primitive(IntVec& v);

// Scales a rational vector to a primitive integer vector (same direction).
IntVec primitive_direction(const RatVec& v);

struct IntHyperplane {
    IntVec normal; // primitive, first nonzero entry positive
    Int offset;    // normal . x = offset on the hyperplane
};

// The affine span of the given d-dimensional points, provided it is a
// hyperplane (affine dimension d-1). Returns nullopt otherwise.
std::optional<IntHyperplane> affine_normal(const std::vector<RatVec>& points);

// Affine dimension of a point set (-1 for the empty set, 0 for a single point).
int affine_dim(const std::vector<RatVec>& points);

Rat dot(const RatVec& a, const RatVec& b);
Int dot_int(const IntVec& a, const IntVec& b);

} // namespace metrofan

#endif
