#pragma once

#include <cstdlib>
#include <vector>

#include "rational.hpp"

namespace hilbertforge {

/*
 * Fraction-free (Bareiss) Gaussian elimination over the integers.
 *
 * Every intermediate entry is a minor of the input matrix, so the division
 * in the update step is exact and no rationals appear. Row swaps are fine;
 * columns without a pivot below the current row are skipped, which keeps the
 * rank-profile form.
 */
inline long rank_exact(std::vector<std::vector<Int>> m) {
    if (m.empty()) return 0;
    const size_t rows = m.size();
    const size_t cols = m[0].size();
    size_t r = 0;
    Int prev(1);
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) std::swap(m[pivot], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                m[i][j] = (m[i][j] * m[r][c] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return static_cast<long>(r);
}

inline constexpr long kModularRankPrime = 32003;

/// Rank of the matrix reduced mod p. A lower bound on the true rank; equal
/// for all but finitely many primes, hence "probabilistic". Never used by
/// verification paths.
inline long rank_mod_p(std::vector<std::vector<long>> m, long p = kModularRankPrime) {
    if (m.empty()) return 0;
    const size_t rows = m.size();
    const size_t cols = m[0].size();
    auto norm = [p](long v) {
        v %= p;
        return v < 0 ? v + p : v;
    };
    for (auto& row : m)
        for (auto& v : row) v = norm(v);
    // modular inverse by Fermat
    auto inv = [p](long a) {
        long result = 1, base = a, e = p - 2;
        while (e > 0) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return result;
    };
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) std::swap(m[pivot], m[r]);
        long pinv = inv(m[r][c]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            long f = m[i][c] * pinv % p;
            for (size_t j = c; j < cols; ++j) m[i][j] = norm(m[i][j] - f * m[r][j]);
        }
        ++r;
    }
    return static_cast<long>(r);
}

}  // namespace hilbertforge
