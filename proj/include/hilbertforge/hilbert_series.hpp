#pragma once

#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "monomial_ideal.hpp"
#include "polynomial.hpp"

namespace hilbertforge {

/// Coefficient vector (h_0, ..., h_s) of the reduced series numerator. The
/// offset is the degree of h_0, so modules generated away from degree 0 keep
/// an exact description instead of being renormalized.
struct HVector {
    long offset = 0;
    std::vector<Int> entries;

    int s() const { return static_cast<int>(entries.size()) - 1; }
    bool operator==(const HVector& o) const = default;
};

/// Hilbert series t^shift * numerator(t) / (1-t)^n of a graded module over
/// K[x_1..x_n]. Normal form: the numerator has nonzero constant term (leading
/// zeros are folded into the Laurent shift) unless the series is zero.
class HilbertSeries {
public:
    HilbertSeries(int n, long shift, Polynomial<Int> numerator)
        : n_(n), shift_(shift), num_(std::move(numerator)) {
        if (n < 1) throw std::invalid_argument("series needs n >= 1");
        normalize();
    }

    static HilbertSeries zero(int n) { return HilbertSeries(n, 0, Polynomial<Int>()); }

    /// The free module S itself: 1 / (1-t)^n.
    static HilbertSeries free_module(int n) {
        return HilbertSeries(n, 0, Polynomial<Int>::constant(Int(1)));
    }

    /// The twist S(-c): t^c / (1-t)^n.
    static HilbertSeries twisted_free(int n, long c) {
        return HilbertSeries(n, c, Polynomial<Int>::constant(Int(1)));
    }

    int vars() const { return n_; }
    long shift() const { return shift_; }
    const Polynomial<Int>& numerator() const { return num_; }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const HilbertSeries& o) const {
        return n_ == o.n_ && shift_ == o.shift_ && num_ == o.num_;
    }

    HilbertSeries operator+(const HilbertSeries& o) const { return combine(o, false); }
    HilbertSeries operator-(const HilbertSeries& o) const { return combine(o, true); }

    /// Krull dimension, read off as the pole order at t = 1; the zero module
    /// has dimension -1 by convention.
    int dimension() const {
        if (is_zero()) return -1;
        return n_ - one_minus_t_multiplicity(num_);
    }

    /// Reduced numerator over (1-t)^dimension.
    HVector h_vector() const {
        if (is_zero()) return HVector{};
        Polynomial<Int> q;
        one_minus_t_multiplicity(num_, &q);
        return HVector{shift_, q.coeffs()};
    }

    /// Exact value of the iterated Hilbert function H_iterate(M, k); iterate
    /// 0 is the Hilbert function itself, each further iterate takes partial
    /// sums over all degrees <= k.
    Int hilbert_function(long k, int iterate = 0) const {
        if (is_zero()) return Int(0);
        long dExp = n_ + iterate;
        Int acc(0);
        const auto& cs = num_.coeffs();
        for (size_t r = 0; r < cs.size(); ++r) {
            long a = k - shift_ - static_cast<long>(r);
            if (a < 0) continue;
            acc += cs[r] * binomial(a + dExp - 1, dExp - 1);
        }
        return acc;
    }

private:
    HilbertSeries combine(const HilbertSeries& o, bool subtract) const {
        if (n_ != o.n_) throw std::invalid_argument("series over different rings");
        long s = std::min(shift_, o.shift_);
        Polynomial<Int> a = num_.shifted(static_cast<int>(shift_ - s));
        Polynomial<Int> b = o.num_.shifted(static_cast<int>(o.shift_ - s));
        return HilbertSeries(n_, s, subtract ? a - b : a + b);
    }

    void normalize() {
        if (num_.is_zero()) {
            shift_ = 0;
            return;
        }
        const auto& cs = num_.coeffs();
        size_t lead = 0;
        while (lead < cs.size() && cs[lead] == 0) ++lead;
        if (lead > 0) {
            shift_ += static_cast<long>(lead);
            num_ = Polynomial<Int>(std::vector<Int>(cs.begin() + lead, cs.end()));
        }
    }

    int n_;
    long shift_;
    Polynomial<Int> num_;
};

namespace detail {

/// Generators with pairwise disjoint supports form a regular sequence, so the
/// quotient numerator is the product of (1 - t^deg g). Covers the zero ideal
/// (empty product), the unit ideal (1 - t^0 = 0), single generators, and sets
/// of pure powers in distinct variables.
inline bool has_disjoint_supports(const MonomialIdeal& I) {
    std::vector<int> seen(I.vars(), 0);
    for (const auto& g : I.generators())
        for (int v = 0; v < I.vars(); ++v)
            if (g[v] > 0 && ++seen[v] > 1) return false;
    return true;
}

inline Polynomial<Int> regular_sequence_numerator(const MonomialIdeal& I) {
    Polynomial<Int> acc = Polynomial<Int>::constant(Int(1));
    for (const auto& g : I.generators()) {
        std::vector<Int> f(static_cast<size_t>(total_degree(g)) + 1, Int(0));
        f.front() = 1;
        f.back() -= 1;
        acc = acc * Polynomial<Int>(std::move(f));
    }
    return acc;
}

using SeriesMemo = std::map<std::vector<ExponentVector>, Polynomial<Int>>;

/// Numerator of HS(S/I) over (1-t)^n by pivot splitting:
///   HS(S/I) = HS(S/(I : x_v)) * t + HS(S/(I + (x_v))),
/// where x_v is the variable occurring in the most generators. When no
/// variable occurs twice the supports are disjoint and the product formula
/// applies, so the pivot always hits at least two generators and the total
/// generator degree strictly drops on both branches.
inline Polynomial<Int> quotient_numerator(const MonomialIdeal& I, SeriesMemo& memo) {
    if (has_disjoint_supports(I)) return regular_sequence_numerator(I);

    auto it = memo.find(I.generators());
    if (it != memo.end()) return it->second;

    std::vector<long> occurrence(I.vars(), 0);
    for (const auto& g : I.generators())
        for (int v = 0; v < I.vars(); ++v)
            if (g[v] > 0) ++occurrence[v];
    int pivot = 0;
    for (int v = 1; v < I.vars(); ++v)
        if (occurrence[v] > occurrence[pivot]) pivot = v;

    Polynomial<Int> colon = quotient_numerator(I.colon_variable(pivot), memo);
    Polynomial<Int> sum = quotient_numerator(I.plus_variable(pivot), memo);
    Polynomial<Int> result = colon.shifted(1) + sum;
    memo.emplace(I.generators(), result);
    return result;
}

}  // namespace detail

/// Hilbert series of the quotient S/I, exact.
inline HilbertSeries quotient_series(const MonomialIdeal& I) {
    detail::SeriesMemo memo;
    return HilbertSeries(I.vars(), 0, detail::quotient_numerator(I, memo));
}

/// Hilbert series of the ideal I itself: HS(S) - HS(S/I).
inline HilbertSeries ideal_series(const MonomialIdeal& I) {
    return HilbertSeries::free_module(I.vars()) - quotient_series(I);
}

}  // namespace hilbertforge
