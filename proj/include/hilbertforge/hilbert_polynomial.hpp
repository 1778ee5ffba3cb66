#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hilbert_series.hpp"
#include "polynomial.hpp"

namespace hilbertforge {

/// The iterate-th iterated Hilbert polynomial in the signed binomial basis:
///
///   P(x) = sum_{j=0}^{D-1} (-1)^j e[j] * C(x + D - j - 1, D - j - 1),
///
/// with D = dim + iterate. P(k) equals the iterated Hilbert function for all
/// large k. The zero polynomial has degree -1 (empty e, dim -1).
struct HilbertPolynomial {
    int iterate = 0;
    int dim = 0;
    std::vector<Rat> e;

    int order() const { return dim + iterate; }
    int degree() const { return e.empty() ? -1 : order() - 1; }

    /// Exact evaluation at an arbitrary integer, via generalized binomials.
    Rat evaluate(long x) const {
        Rat acc(0);
        int d_exp = order();
        for (size_t j = 0; j < e.size(); ++j) {
            long c = d_exp - static_cast<long>(j) - 1;
            Rat term = e[j] * Rat(binomial(x + c, c));
            if (j % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        return acc;
    }
};

/// Coefficient e_j read from the h-vector: e_j = sum_c h_c * C(c, j), summing
/// over the absolute degrees c carried by the entries. For an offset-0
/// h-vector this is the classical triangular relation, and vanishes for
/// j > s automatically.
inline Int e_from_h(const HVector& h, long j) {
    Int acc(0);
    for (size_t r = 0; r < h.entries.size(); ++r)
        acc += h.entries[r] * binomial(h.offset + static_cast<long>(r), j);
    return acc;
}

/// Inverse transform: h_i = sum_{j=i}^{s} (-1)^{j-i} C(j, i) e_j, offset 0.
inline HVector h_from_e(const std::vector<Int>& e) {
    long s = static_cast<long>(e.size()) - 1;
    std::vector<Int> h(e.size(), Int(0));
    for (long i = 0; i <= s; ++i) {
        Int acc(0);
        for (long j = i; j <= s; ++j) {
            Int term = binomial(j, i) * e[j];
            if ((j - i) % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        h[i] = acc;
    }
    while (!h.empty() && h.back() == 0) h.pop_back();
    return HVector{0, std::move(h)};
}

/// The coefficient e_j of a module given by its series, for any j >= 0. For
/// j within the iterate-i polynomial's range this is e^i_j (the value is
/// independent of i); beyond every range it is the common value of all high
/// enough iterates.
inline Rat iterated_coefficient(const HilbertSeries& hs, long j) {
    return Rat(e_from_h(hs.h_vector(), j));
}

/// Builds the iterate-th Hilbert polynomial of the module with series hs.
/// Raising the iterate passes from denominator exponent d+i-1 to d+i; the
/// reduced numerator is unchanged, the coefficient list gains one entry.
inline HilbertPolynomial hilbert_polynomial(const HilbertSeries& hs, int iterate) {
    if (iterate < 0) throw std::invalid_argument("negative iterate");
    if (hs.is_zero()) return HilbertPolynomial{iterate, -1, {}};
    int d = hs.dimension();
    HVector h = hs.h_vector();
    int d_exp = d + iterate;
    std::vector<Rat> e;
    e.reserve(std::max(d_exp, 0));
    for (int j = 0; j < d_exp; ++j) e.emplace_back(e_from_h(h, j));
    return HilbertPolynomial{iterate, d, std::move(e)};
}

/// Finite difference (delta P)(x) = P(x) - P(x-1). In the binomial basis each
/// C(x+c, c) drops to C(x+c-1, c-1), so the representation loses its last
/// coefficient and the order decreases by one.
inline HilbertPolynomial delta(const HilbertPolynomial& P) {
    HilbertPolynomial q = P;
    if (!q.e.empty()) q.e.pop_back();
    if (q.iterate > 0)
        --q.iterate;
    else
        --q.dim;
    return q;
}

/// Recovers the coefficient list by iterated numeric differences at -1:
/// e_j = (-1)^j (delta^{D-j-1} P)(-1), with each difference expanded as the
/// alternating sum over actual evaluations of P. Independent of the stored
/// representation apart from the ability to evaluate.
inline std::vector<Rat> extract_coefficients(const HilbertPolynomial& P) {
    int d_exp = P.order();
    std::vector<Rat> out;
    if (P.e.empty()) return out;
    out.reserve(d_exp);
    for (int j = 0; j < d_exp; ++j) {
        long s = d_exp - j - 1;
        Rat acc(0);
        for (long r = 0; r <= s; ++r) {
            Rat term = Rat(binomial(s, r)) * P.evaluate(-1 - r);
            if (r % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        if (j % 2 != 0) acc = -acc;
        out.push_back(acc);
    }
    return out;
}

/// e^i_j values of one module, indexed by (iterate, j) with j < dim+iterate.
struct CoefficientTable {
    int dim = 0;
    std::map<std::pair<int, int>, Rat> entries;

    bool has(int iterate, int j) const { return entries.count({iterate, j}) > 0; }
    const Rat& at(int iterate, int j) const { return entries.at({iterate, j}); }
};

/// Rows 0..max_iterate, each recomputed through its own polynomial and the
/// difference formula, so the equality of overlapping rows is a genuine
/// cross-check rather than a construction artifact.
inline CoefficientTable coefficient_table(const HilbertSeries& hs, int max_iterate) {
    CoefficientTable t;
    t.dim = hs.dimension();
    for (int i = 0; i <= max_iterate; ++i) {
        auto coeffs = extract_coefficients(hilbert_polynomial(hs, i));
        for (size_t j = 0; j < coeffs.size(); ++j)
            t.entries.emplace(std::make_pair(i, static_cast<int>(j)), coeffs[j]);
    }
    return t;
}

/// Closed form of F(k) = sum_{j=0}^{k} P(j), one degree higher than P.
/// Works by peeling P into the basis C(x+c, c) and lifting each element to
/// C(k+c+1, c+1).
inline Polynomial<Rat> power_sum_polynomial(const Polynomial<Rat>& P) {
    Polynomial<Rat> rest = P;
    Polynomial<Rat> out;
    while (!rest.is_zero()) {
        long c = rest.degree();
        Rat fact(1);
        for (long r = 2; r <= c; ++r) fact *= Rat(r);
        Rat u = rest.coeff(static_cast<int>(c)) * fact;  // lead of C(x+c,c) is 1/c!
        rest = rest - binomial_of_linear(Rat(1), Rat(c), c) * u;
        out = out + binomial_of_linear(Rat(1), Rat(c + 1), c + 1) * u;
    }
    return out;
}

}  // namespace hilbertforge
