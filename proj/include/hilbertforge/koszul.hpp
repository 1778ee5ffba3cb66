#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "hilbert_polynomial.hpp"
#include "hilbert_series.hpp"
#include "monomial_ideal.hpp"
#include "rank.hpp"
#include "scan.hpp"

namespace hilbertforge {

/// The degree-t monomials of an ideal, lex sorted: a K-basis of its degree-t
/// graded piece.
struct GradedPieceBasis {
    int degree = 0;
    std::vector<ExponentVector> monomials;

    long dim() const { return static_cast<long>(monomials.size()); }
};

inline GradedPieceBasis graded_piece(const MonomialIdeal& I, int t,
                                     long cap = kDefaultEnumerationCap) {
    if (t < 0) throw std::invalid_argument("negative degree");
    GradedPieceBasis b;
    b.degree = t;
    if (I.is_zero()) return b;
    Int space = monomial_space_dimension(I.vars(), t);
    if (space > cap) throw EnumerationCapError(space, cap);
    for (const auto& m : WeakCompositions(t, I.vars()))
        if (I.contains(m)) b.monomials.push_back(m);
    return b;
}

/// Graded Betti numbers of one power: entries (l, t) -> beta_{l,t}(I^k).
struct BettiTable {
    long k = 1;
    std::map<int, std::map<int, long>> rows;

    long beta(int l, int t) const {
        auto rit = rows.find(l);
        if (rit == rows.end()) return 0;
        auto cit = rit->second.find(t);
        return cit == rit->second.end() ? 0 : cit->second;
    }

    std::map<int, long> row(int l) const {
        auto rit = rows.find(l);
        return rit == rows.end() ? std::map<int, long>{} : rit->second;
    }
};

enum class RankMode { exact, modular_probabilistic };

namespace detail {

inline std::vector<std::vector<int>> subsets_of_size(int n, int l) {
    std::vector<std::vector<int>> out;
    if (l < 0 || l > n) return out;
    std::vector<int> cur(l);
    for (int i = 0; i < l; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        int i = l - 1;
        while (i >= 0 && cur[i] == n - l + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int r = i + 1; r < l; ++r) cur[r] = cur[r - 1] + 1;
    }
    return out;
}

inline long monomial_index(const GradedPieceBasis& basis, const ExponentVector& m) {
    auto it = std::lower_bound(basis.monomials.begin(), basis.monomials.end(), m);
    if (it == basis.monomials.end() || *it != m)
        throw std::logic_error("monomial missing from graded piece");
    return static_cast<long>(it - basis.monomials.begin());
}

/// Degree-t strand of the Koszul differential d_l over the coefficients J:
/// columns indexed by (subset S of size l, monomial of J_{t-l}), rows by
/// (subset of size l-1, monomial of J_{t-l+1}), with
/// d(e_S (x) v) = sum_r (-1)^{r+1} e_{S \ s_r} (x) x_{s_r} v.
inline std::vector<std::vector<Int>> koszul_strand_matrix(
    int n, const std::vector<GradedPieceBasis>& bases, int t, int l) {
    const auto cols_sets = subsets_of_size(n, l);
    const auto rows_sets = subsets_of_size(n, l - 1);
    std::map<std::vector<int>, long> row_set_index;
    for (size_t i = 0; i < rows_sets.size(); ++i) row_set_index[rows_sets[i]] = static_cast<long>(i);

    const GradedPieceBasis* source = (t - l >= 0 && t - l < static_cast<int>(bases.size()))
                                         ? &bases[t - l]
                                         : nullptr;
    const GradedPieceBasis* target = (t - l + 1 >= 0 && t - l + 1 < static_cast<int>(bases.size()))
                                         ? &bases[t - l + 1]
                                         : nullptr;
    const long src_mon = source ? source->dim() : 0;
    const long tgt_mon = target ? target->dim() : 0;
    const long n_rows = static_cast<long>(rows_sets.size()) * tgt_mon;
    const long n_cols = static_cast<long>(cols_sets.size()) * src_mon;
    std::vector<std::vector<Int>> m(n_rows, std::vector<Int>(n_cols, Int(0)));
    if (n_rows == 0 || n_cols == 0) return m;

    for (size_t si = 0; si < cols_sets.size(); ++si) {
        const auto& S = cols_sets[si];
        for (long mi = 0; mi < src_mon; ++mi) {
            long col = static_cast<long>(si) * src_mon + mi;
            for (size_t r = 0; r < S.size(); ++r) {
                std::vector<int> rest;
                rest.reserve(S.size() - 1);
                for (size_t q = 0; q < S.size(); ++q)
                    if (q != r) rest.push_back(S[q]);
                ExponentVector prod = source->monomials[mi];
                ++prod[S[r]];
                long row = row_set_index.at(rest) * tgt_mon + monomial_index(*target, prod);
                m[row][col] += (r % 2 == 0) ? 1 : -1;
            }
        }
    }
    return m;
}

inline long strand_rank(const std::vector<std::vector<Int>>& m, RankMode mode) {
    if (m.empty() || m[0].empty()) return 0;
    if (mode == RankMode::exact) return rank_exact(m);
    std::vector<std::vector<long>> reduced(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        reduced[i].reserve(m[i].size());
        for (const auto& v : m[i]) reduced[i].push_back(v.get_si());
    }
    return rank_mod_p(std::move(reduced));
}

/// Betti rows of the ideal J for internal degrees t <= max_t, by exact
/// rank-nullity on every Koszul strand.
inline BettiTable betti_rows(const MonomialIdeal& J, int max_t, long cap, RankMode mode) {
    const int n = J.vars();
    BettiTable bt;
    std::vector<GradedPieceBasis> bases;
    bases.reserve(max_t + 1);
    for (int s = 0; s <= max_t; ++s) bases.push_back(graded_piece(J, s, cap));

    std::vector<Int> choose(n + 2, Int(0));
    for (int l = 0; l <= n; ++l) choose[l] = binomial(n, l);

    for (int t = 0; t <= max_t; ++t) {
        std::vector<long> ranks(n + 2, 0);  // ranks[l] = rank of d_l in degree t
        for (int l = 1; l <= n; ++l)
            ranks[l] = strand_rank(koszul_strand_matrix(n, bases, t, l), mode);
        for (int l = 0; l <= n; ++l) {
            long dim_chain = (t - l >= 0) ? to_long(choose[l] * bases[t - l].dim()) : 0;
            long beta = dim_chain - ranks[l] - ranks[l + 1];
            if (beta < 0) throw std::logic_error("negative homology dimension");
            if (beta > 0) bt.rows[l][t] = beta;
        }
    }
    return bt;
}

}  // namespace detail

/// Graded Betti numbers beta_{l,t}(I^k) = dim Tor_l(S/m, I^k)_t, computed by
/// exact rank-nullity on the Koszul complex of x_1..x_n with coefficients in
/// I^k. Strands beyond the lcm degree of the generators vanish (the Taylor
/// resolution's shifts all divide the lcm), which truncates the computation.
inline BettiTable betti_table(const MonomialIdeal& I, long k, long cap = kDefaultEnumerationCap,
                              RankMode mode = RankMode::exact) {
    if (k < 1) throw std::invalid_argument("betti table needs k >= 1");
    MonomialIdeal J = I.power(k, cap);
    if (J.is_zero()) return BettiTable{k, {}};
    BettiTable bt = detail::betti_rows(J, J.lcm_degree(), cap, mode);
    bt.k = k;
    return bt;
}

/// Betti numbers of I^k in one homological degree: t -> beta_{l,t}.
inline std::map<int, long> koszul_homology_dims(const MonomialIdeal& I, long k, int l,
                                                long cap = kDefaultEnumerationCap,
                                                RankMode mode = RankMode::exact) {
    if (l < 0 || l > I.vars()) throw std::invalid_argument("homological degree out of range");
    return betti_table(I, k, cap, mode).row(l);
}

/// Alternating sum of the Betti rows against the numerator of HS(J): per
/// degree t, sum_l (-1)^l beta_{l,t} must equal the coefficient of t^t in
/// t^shift * numerator(t), since (1-t)^n HS(J) is exactly that polynomial.
/// This pits the Koszul ranks against the independent series recursion.
inline bool euler_characteristic_check(const BettiTable& bt, const MonomialIdeal& power_ideal) {
    HilbertSeries hs = ideal_series(power_ideal);
    int max_t = power_ideal.is_zero() ? 0 : power_ideal.lcm_degree();
    for (int t = 0; t <= max_t; ++t) {
        Int alternating(0);
        for (const auto& [l, row] : bt.rows) {
            auto it = row.find(t);
            if (it == row.end()) continue;
            if (l % 2 == 0)
                alternating += it->second;
            else
                alternating -= it->second;
        }
        Int expected = hs.numerator().coeff(static_cast<int>(t - hs.shift()));
        if (alternating != expected) return false;
    }
    return true;
}

/// e^i_j of the finite-length module Tor_l(S/m, I^k) whose Hilbert function
/// is row l of the table: the row acts as an h-vector concentrated in its
/// degrees, so e_j = sum_t beta_{l,t} C(t, j). The value is the common one of
/// all iterates whose coefficient range reaches j.
inline Rat tor_coefficient(const BettiTable& bt, int l, int /*iterate*/, long j) {
    Int acc(0);
    for (const auto& [t, beta] : bt.row(l)) acc += Int(beta) * binomial(static_cast<long>(t), j);
    return Rat(acc);
}

struct BettiScan {
    ScanResult scan;
    KPolynomial fit;
};

/// Scans e^i_j(Tor_l(S/m, I^k)) over k, fits, and checks the generator-count
/// degree bound.
inline BettiScan scan_betti(const MonomialIdeal& I, int l, int iterate, long j, long k_max,
                            int window = 3, long cap = kDefaultEnumerationCap,
                            RankMode mode = RankMode::exact) {
    BettiScan out;
    out.scan.iterate = iterate;
    out.scan.j = j;
    out.scan.k_min = 1;
    out.scan.k_max = k_max;
    for (long k = 1; k <= k_max; ++k) {
        BettiTable bt;
        try {
            bt = betti_table(I, k, cap, mode);
        } catch (const EnumerationCapError&) {
            out.scan.truncated = true;
            out.scan.k_max = k - 1;
            break;
        }
        auto row = bt.row(l);
        out.scan.values.push_back(tor_coefficient(bt, l, iterate, j));
        out.scan.dims.push_back(row.empty() ? -1 : 0);
    }
    if (out.scan.size() >= window + 2)
        out.fit = newton_fit(out.scan, window);
    else
        out.fit.window = window;  // truncated too short to fit: stays unstable
    if (out.fit.stable) {
        BoundContext ctx;
        ctx.nu = I.num_generators();
        ctx.iterate = iterate;
        ctx.j = j;
        out.fit.verdicts = verify_degree_bounds(out.fit, ctx);
    }
    return out;
}

}  // namespace hilbertforge
