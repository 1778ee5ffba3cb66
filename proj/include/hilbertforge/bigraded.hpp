#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "compositions.hpp"
#include "hilbert_series.hpp"
#include "monomial_ideal.hpp"

namespace hilbertforge {

/// A = K[x_1..x_n, y_1..y_m] with deg x_i = (1,0) and deg y_j = (p_j, 1).
struct BigradedAlgebra {
    int n = 1;
    int m = 1;
    std::vector<int> weights;  // p_1..p_m

    BigradedAlgebra(int n_, int m_, std::vector<int> p) : n(n_), m(m_), weights(std::move(p)) {
        if (n < 1 || m < 1) throw std::invalid_argument("bigraded algebra needs n, m >= 1");
        if (static_cast<int>(weights.size()) != m)
            throw std::invalid_argument("weight count differs from m");
        for (int w : weights)
            if (w < 0) throw std::invalid_argument("negative weight");
    }
};

/// Bidegree twist A(-a, -b).
struct BigradedShift {
    long a = 0;
    long b = 0;
};

/// Multiset of twists c with multiplicities: the strand decomposes as the
/// direct sum of S(-c) over the entries.
using ShiftMultiset = std::map<long, long>;

/// Twists of the k-th strand of A(-a,-b): {p.beta + a : |beta| = k - b}.
/// Empty when k < b.
inline ShiftMultiset strand_decomposition(const BigradedAlgebra& A, const BigradedShift& shift,
                                          long k) {
    ShiftMultiset out;
    for (const auto& beta : WeakCompositions(k - shift.b, A.m)) {
        long c = shift.a;
        for (int i = 0; i < A.m; ++i) c += static_cast<long>(A.weights[i]) * beta[i];
        ++out[c];
    }
    return out;
}

/// sum over |beta| = total of C(p.beta + a, j), streamed.
inline Int composition_binomial_sum(const std::vector<int>& weights, long a, long total, long j) {
    Int acc(0);
    for (const auto& beta : WeakCompositions(total, static_cast<int>(weights.size()))) {
        long c = a;
        for (size_t i = 0; i < weights.size(); ++i) c += static_cast<long>(weights[i]) * beta[i];
        acc += binomial(c, j);
    }
    return acc;
}

/// Whether j indexes a coefficient of the iterate-th Hilbert polynomial of a
/// nonempty strand (an n-dimensional free module).
inline bool strand_coefficient_in_range(const BigradedAlgebra& A, int iterate, long j) {
    return j >= 0 && j <= static_cast<long>(A.n) + iterate - 1;
}

/// e^i_j of the strand A(-a,-b)_k, as the composition sum of binomials.
/// Out-of-range j yields 0, matching the convention that a polynomial has no
/// coefficients beyond its basis; callers that care can test
/// strand_coefficient_in_range first.
inline Int strand_coefficient(const BigradedAlgebra& A, const BigradedShift& shift, long k,
                              int iterate, long j) {
    if (k < shift.b) return Int(0);
    if (!strand_coefficient_in_range(A, iterate, j)) return Int(0);
    return composition_binomial_sum(A.weights, shift.a, k - shift.b, j);
}

/// Sandwich bounds C(k-b+m-1, m-1) * C(p_min/max (k-b) + a, j); the strand
/// coefficient always lies between them, with equality exactly for constant
/// weights.
inline std::pair<Int, Int> strand_coefficient_bounds(const BigradedAlgebra& A,
                                                     const BigradedShift& shift, long k, long j) {
    if (k < shift.b) return {Int(0), Int(0)};
    long kb = k - shift.b;
    auto [pmin, pmax] = std::minmax_element(A.weights.begin(), A.weights.end());
    Int count = binomial(kb + A.m - 1, A.m - 1);
    Int lower = count * binomial(static_cast<long>(*pmin) * kb + shift.a, j);
    Int upper = count * binomial(static_cast<long>(*pmax) * kb + shift.a, j);
    return {lower, upper};
}

/// Hilbert series of the strand: sum over the twist multiset of t^c/(1-t)^n.
inline HilbertSeries strand_hilbert_series(const BigradedAlgebra& A, const BigradedShift& shift,
                                           long k) {
    ShiftMultiset dec = strand_decomposition(A, shift, k);
    if (dec.empty()) return HilbertSeries::zero(A.n);
    long lo = dec.begin()->first;
    long hi = dec.rbegin()->first;
    std::vector<Int> num(static_cast<size_t>(hi - lo) + 1, Int(0));
    for (const auto& [c, mult] : dec) num[static_cast<size_t>(c - lo)] = mult;
    return HilbertSeries(A.n, lo, Polynomial<Int>(std::move(num)));
}

/// The k-th strand of the Rees module of I is I^k; kept as a named operation
/// so power strands and free strands go through the same scan pipeline.
inline MonomialIdeal rees_strand(const MonomialIdeal& I, long k,
                                 long cap = kDefaultEnumerationCap) {
    return I.power(k, cap);
}

}  // namespace hilbertforge
