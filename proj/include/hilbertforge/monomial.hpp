#pragma once

#include <functional>
#include <numeric>
#include <vector>

#include "compositions.hpp"
#include "rational.hpp"

namespace hilbertforge {

/// A monomial in K[x_1..x_n]: entry i is the exponent of x_i.
using ExponentVector = std::vector<int>;

inline int total_degree(const ExponentVector& e) {
    return std::accumulate(e.begin(), e.end(), 0);
}

/// Componentwise a <= b, i.e. the monomial a divides b.
inline bool divides(const ExponentVector& a, const ExponentVector& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

/// Componentwise max: the lcm monomial.
inline ExponentVector lcm_exponents(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline ExponentVector add_exponents(const ExponentVector& a, const ExponentVector& b) {
    ExponentVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

/// dim_K S_t = C(t + n - 1, n - 1), the number of degree-t monomials.
inline Int monomial_space_dimension(int n, long t) {
    if (t < 0) return Int(0);
    return binomial(t + n - 1, n - 1);
}

/// Streams every degree-t monomial of K[x_1..x_n] in ascending lexicographic
/// order (the vector passed to fn is reused between calls).
inline void for_each_monomial_of_degree(int n, int t,
                                        const std::function<void(const ExponentVector&)>& fn) {
    for (const auto& e : WeakCompositions(t, n)) fn(e);
}

}  // namespace hilbertforge
