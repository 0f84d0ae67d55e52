#pragma once
// Test-only oracles and deterministic random generators. The oracles are
// deliberately naive (full permutation expansion, direct enumeration) so
// that the production algorithms are checked against independent code.

#include "recfrac/matrix.hpp"
#include "recfrac/rational.hpp"
#include "recfrac/triangular.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace recfrac::testing {

// Determinant by the full permutation expansion (n! terms); usable up to
// order ~8.
inline Rational det_by_permutations(const SquareMatrix& m) {
    const int n = m.order();
    if (n == 0) return Rational(1);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Rational total = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
                    ++inversions;
        Rational prod = inversions % 2 == 0 ? 1 : -1;
        for (int i = 0; i < n; ++i) prod *= m.at(i, perm[static_cast<std::size_t>(i)]);
        total += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Uniform rational with numerator in [lo, hi] and denominator in
// [1, denom_max].
inline Rational random_rational(std::mt19937& rng, long lo, long hi, long denom_max = 1) {
    std::uniform_int_distribution<long> num(lo, hi);
    std::uniform_int_distribution<long> den(1, denom_max);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937& rng, long lo, long hi, long denom_max = 1) {
    for (;;) {
        Rational v = random_rational(rng, lo, hi, denom_max);
        if (v != 0) return v;
    }
}

inline TriMatrix random_tri_matrix(std::mt19937& rng, int order, long lo, long hi,
                                   long denom_max = 1) {
    TriMatrix A(order);
    for (int i = 1; i <= order; ++i)
        for (int j = 1; j <= i; ++j) A.a(i, j) = random_rational(rng, lo, hi, denom_max);
    return A;
}

inline SquareMatrix random_square_matrix(std::mt19937& rng, int order, long lo, long hi,
                                         long denom_max = 1) {
    SquareMatrix M(order);
    for (int i = 0; i < order; ++i)
        for (int j = 0; j < order; ++j) M.at(i, j) = random_rational(rng, lo, hi, denom_max);
    return M;
}

} // namespace recfrac::testing
