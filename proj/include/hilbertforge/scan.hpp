#pragma once

#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigraded.hpp"
#include "hilbert_polynomial.hpp"
#include "hilbert_series.hpp"
#include "monomial_ideal.hpp"
#include "rank.hpp"

namespace hilbertforge {

/// Values of e^i_j(M_k) over an inclusive k-interval, with the dimensions of
/// the strands alongside. `truncated` marks a scan cut short by the
/// enumeration cap.
struct ScanResult {
    int iterate = 0;
    long j = 0;
    long k_min = 1;
    long k_max = 0;
    std::vector<Rat> values;
    std::vector<int> dims;
    bool truncated = false;

    long size() const { return static_cast<long>(values.size()); }
    long k_at(long idx) const { return k_min + idx; }
};

struct BoundVerdict {
    std::string bound;
    long value = 0;
    int degree = -1;
    bool pass = false;
};

/// An exact polynomial in k fitted to the stable tail of a scan, plus the
/// evidence (stable_from, window) and the degree-bound verdicts.
struct KPolynomial {
    Polynomial<Rat> poly;
    long stable_from = 0;
    int window = 0;
    bool stable = false;
    std::vector<BoundVerdict> verdicts;

    int degree() const { return poly.degree(); }
};

/// Hilbert data of the powers I^k for k = 1..k_max: dimension and h-vector
/// per power. One of these serves every (iterate, j) scan of the same ideal.
struct PowerScanData {
    long k_min = 1;
    long k_max = 0;
    std::vector<int> dims;
    std::vector<HVector> hvectors;
    bool truncated = false;
};

namespace detail {

struct PowerEntry {
    int dim;
    HVector h;
};

inline PowerEntry power_entry(const MonomialIdeal& I, long k, long cap) {
    HilbertSeries hs = ideal_series(rees_strand(I, k, cap));
    return PowerEntry{hs.dimension(), hs.h_vector()};
}

}  // namespace detail

/// Computes the per-power Hilbert data, optionally with one task per k.
/// Assembly is in k order, so results are deterministic for any thread
/// count. A cap breach at some k truncates the scan there.
inline PowerScanData power_scan_data(const MonomialIdeal& I, long k_max,
                                     long cap = kDefaultEnumerationCap, int threads = 1) {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    PowerScanData out;
    out.k_min = 1;
    out.k_max = k_max;
    if (threads <= 1) {
        for (long k = 1; k <= k_max; ++k) {
            try {
                auto e = detail::power_entry(I, k, cap);
                out.dims.push_back(e.dim);
                out.hvectors.push_back(std::move(e.h));
            } catch (const EnumerationCapError&) {
                out.truncated = true;
                out.k_max = k - 1;
                break;
            }
        }
        return out;
    }
    std::vector<std::future<detail::PowerEntry>> futures;
    futures.reserve(k_max);
    for (long k = 1; k <= k_max; ++k)
        futures.push_back(
            std::async(std::launch::async, [&I, k, cap] { return detail::power_entry(I, k, cap); }));
    for (long k = 1; k <= k_max; ++k) {
        try {
            auto e = futures[k - 1].get();
            if (out.truncated) continue;  // drain remaining futures
            out.dims.push_back(e.dim);
            out.hvectors.push_back(std::move(e.h));
        } catch (const EnumerationCapError&) {
            if (!out.truncated) {
                out.truncated = true;
                out.k_max = k - 1;
            }
        }
    }
    return out;
}

/// One (iterate, j) scan read off precomputed power data. Records 0 when j
/// falls outside the iterate-th polynomial's coefficient range for that k.
inline ScanResult scan_from_power_data(const PowerScanData& data, int iterate, long j) {
    ScanResult s;
    s.iterate = iterate;
    s.j = j;
    s.k_min = data.k_min;
    s.k_max = data.k_max;
    s.truncated = data.truncated;
    for (size_t idx = 0; idx < data.hvectors.size(); ++idx) {
        int d = data.dims[idx];
        bool in_range = j <= static_cast<long>(d) + iterate - 1;
        s.values.push_back(in_range ? Rat(e_from_h(data.hvectors[idx], j)) : Rat(0));
        s.dims.push_back(d);
    }
    return s;
}

inline ScanResult scan_power_coefficients(const MonomialIdeal& I, int iterate, long j, long k_max,
                                          long cap = kDefaultEnumerationCap, int threads = 1) {
    return scan_from_power_data(power_scan_data(I, k_max, cap, threads), iterate, j);
}

/// Scan of the free-strand coefficients e^i_j(A(-a,-b)_k) for k = 1..k_max.
/// Strands below the twist are the zero module (dimension -1, value 0).
inline ScanResult scan_strand_coefficients(const BigradedAlgebra& A, const BigradedShift& shift,
                                           int iterate, long j, long k_max) {
    ScanResult s;
    s.iterate = iterate;
    s.j = j;
    s.k_min = 1;
    s.k_max = k_max;
    for (long k = 1; k <= k_max; ++k) {
        s.values.emplace_back(strand_coefficient(A, shift, k, iterate, j));
        s.dims.push_back(k < shift.b ? -1 : A.n);
    }
    return s;
}

/// Exact Newton forward-difference fit. Finds the largest scan suffix whose
/// difference table terminates (some row of order D+1 is identically zero)
/// with at least `window` confirming points beyond the D+1 support points,
/// and returns the interpolating polynomial in k. Anything less stays
/// unstable; no extrapolation.
inline KPolynomial newton_fit(const ScanResult& scan, int window = 3) {
    if (window < 1) throw std::invalid_argument("window must be >= 1");
    if (scan.size() < window + 2) throw std::invalid_argument("scan too short for the window");
    const long n = scan.size();
    for (long start = 0; start < n; ++start) {
        const long len = n - start;
        std::vector<Rat> row(scan.values.begin() + start, scan.values.end());
        bool all_zero = true;
        for (const auto& v : row)
            if (v != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) {
            if (len < window) continue;
            KPolynomial fit;
            fit.stable_from = scan.k_at(start);
            fit.window = window;
            fit.stable = true;
            return fit;  // the zero polynomial, degree -1
        }
        std::vector<Rat> leading;  // top-left table column: delta^r at the suffix start
        leading.push_back(row.front());
        long terminated_at = -1;  // order of the first identically-zero row
        for (long r = 1; r < len; ++r) {
            for (long idx = 0; idx + 1 < static_cast<long>(row.size()); ++idx)
                row[idx] = row[idx + 1] - row[idx];
            row.pop_back();
            bool zero_row = true;
            for (const auto& v : row)
                if (v != 0) {
                    zero_row = false;
                    break;
                }
            if (zero_row) {
                terminated_at = r;
                break;
            }
            leading.push_back(row.front());
        }
        if (terminated_at < 0) continue;
        long deg = terminated_at - 1;
        if (len - (deg + 1) < window) continue;
        Polynomial<Rat> poly;
        long base = scan.k_at(start);
        for (long r = 0; r <= deg; ++r)
            poly = poly + binomial_of_linear(Rat(1), Rat(-base), r) * leading[r];
        for (long idx = start; idx < n; ++idx) {
            if (poly(Rat(scan.k_at(idx))) != scan.values[idx])
                throw std::logic_error("newton fit failed to reproduce scanned values");
        }
        KPolynomial fit;
        fit.poly = std::move(poly);
        fit.stable_from = base;
        fit.window = window;
        fit.stable = true;
        return fit;
    }
    KPolynomial fit;
    fit.window = window;
    fit.stable = false;
    return fit;
}

/// What a fitted degree is checked against. Optional members switch the
/// individual verdicts on.
struct BoundContext {
    std::optional<long> m;    // y-variable count of the ambient bigraded algebra
    std::optional<long> nu;   // minimal generator count of the ideal
    std::optional<long> ell;  // analytic spread, equigenerated ideals only
    std::optional<long> ldim; // stabilized strand dimension, for the vanishing clause
    int iterate = 0;
    long j = 0;
};

inline std::vector<BoundVerdict> verify_degree_bounds(const KPolynomial& fit,
                                                      const BoundContext& ctx) {
    std::vector<BoundVerdict> out;
    int deg = fit.degree();
    auto push = [&](const std::string& name, long value) {
        out.push_back(BoundVerdict{name, value, deg, deg <= value});
    };
    if (ctx.m) push("m+j-1", *ctx.m + ctx.j - 1);
    if (ctx.nu) push("nu+j-1", *ctx.nu + ctx.j - 1);
    if (ctx.ell) push("ell+j-1", *ctx.ell + ctx.j - 1);
    if (ctx.ldim && ctx.j > *ctx.ldim + ctx.iterate - 1)
        out.push_back(BoundVerdict{"vanishing", -1, deg, deg == -1});
    return out;
}

/// Analytic spread of an equigenerated monomial ideal: the rank of the
/// matrix whose rows are the generator exponent vectors.
inline long fiber_dimension(const MonomialIdeal& I) {
    if (!I.is_equigenerated())
        throw std::domain_error("analytic spread by exponent rank needs an equigenerated ideal");
    std::vector<std::vector<Int>> rows;
    rows.reserve(I.generators().size());
    for (const auto& g : I.generators()) rows.emplace_back(g.begin(), g.end());
    return rank_exact(std::move(rows));
}

struct StabilizationResult {
    long k0 = 0;
    bool determined = false;
};

/// Least k0 with dim M_k constant on [k0, k_max]; undetermined when the
/// constant tail is shorter than the confirmation window.
inline StabilizationResult detect_stabilization(const ScanResult& scan, int window = 3) {
    StabilizationResult r;
    if (scan.dims.empty()) return r;
    long idx = static_cast<long>(scan.dims.size()) - 1;
    while (idx > 0 && scan.dims[idx - 1] == scan.dims.back()) --idx;
    r.k0 = scan.k_at(idx);
    r.determined = static_cast<long>(scan.dims.size()) - idx >= window;
    return r;
}

}  // namespace hilbertforge
