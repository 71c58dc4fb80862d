// The arrangement of even-cycle hyperplanes on metric space coordinates:
// generation in canonical order, sign vectors, the symmetric-group action,
// lineality, and the intersection poset with its characteristic polynomial.

#ifndef METROFAN_ARRANGEMENT_HPP
#define METROFAN_ARRANGEMENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "metric.hpp"
#include "rat.hpp"

namespace metrofan {

// A hyperplane indexed by an even cycle v_1..v_2k on distinct points of [n]
// (k >= 2). The canonical vertex sequence is the lexicographically least
// rotation/reflection (v_1 minimal, v_2 < v_2k). Edges at odd positions
// {v_1,v_2}, {v_3,v_4}, ... carry coefficient +1, the others -1; this fixes
// the orientation, and for k = 2 it reproduces the pairing convention where
// the b-tuple starts with its smaller element.
struct CycleHyperplane {
    int n = 0;
    int k = 0;
    std::vector<int> cycle; // 2k vertices, canonical
    std::vector<int> a, b;  // tuples with +1 on {a_i,b_i}, -1 on {a_i,b_{i+1}}
    IntVec normal;          // dense, length n*(n-1)/2, lex pair order
};

// All hyperplanes for n points in canonical order (by k, then cycle);
// empty for n < 4. Cached per n; limited to n <= 7.
const std::vector<CycleHyperplane>& wasserstein_arrangement(int n);

long long wasserstein_count(int n); // closed form, for cross-checking

using SignVector = std::vector<int>; // entries -1, 0, +1

// Entry per hyperplane: sign of normal . d. Defined for any symmetric input,
// pseudometrics included.
SignVector sign_vector(const Metric& m);

std::string sign_vector_string(const SignVector& sv); // '+', '-', '0'
std::string sign_vector_hash(const SignVector& sv);   // fnv1a-64 hex of the string

bool same_open_cone(const Metric& m1, const Metric& m2);

// Canonical form of an arbitrary even-cycle vertex sequence, plus whether the
// alternating edge coloring survives (true) or flips (false).
std::pair<std::vector<int>, bool> canonicalize_cycle(const std::vector<int>& seq);

// Action of sigma on sign vectors: permutes hyperplane slots and flips
// orientations so that act(sign_vector(m), sigma) == sign_vector(permute(m, sigma)).
SignVector act(const SignVector& sv, const std::vector<int>& sigma, int n);

// All sigma in S_n fixing the sign vector, in lexicographic order, plus a
// small generating set.
struct Stabilizer {
    std::vector<std::vector<int>> elements;
    std::vector<std::vector<int>> generators;
    long long order() const { return static_cast<long long>(elements.size()); }
};

Stabilizer stabilizer(const SignVector& sv, int n);

std::string permutation_cycles(const std::vector<int>& sigma); // "(1 3)(4 5)"

// Dimension of the common lineality space of all hyperplanes.
int lineality_dim(int n);

// Nullspace dimension plus a check that the n elementary split vectors lie on
// every hyperplane and span the lineality space.
struct Lineality {
    int dimension = 0;
    bool splits_span = false;
};

Lineality lineality(int n);

struct PosetFlat {
    uint32_t hyperplanes = 0; // all hyperplanes containing the flat
    int rank = 0;
    long long mobius = 0;
};

struct IntersectionPoset {
    int n = 0;
    std::vector<PosetFlat> flats;    // top flat first, then by rank
    std::vector<long long> charpoly; // coefficient of t^i at index i
    long long chambers = 0;
};

// Full intersection poset with Moebius function, characteristic polynomial,
// and chamber count; refuses n >= 6 where the flat count explodes.
IntersectionPoset poset_and_charpoly(int n);

std::string arrangement_to_json(int n);
std::string poset_to_json(const IntersectionPoset& p);

} // namespace metrofan

#endif
