#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hilbertforge {

/// Arbitrary-precision integer and rational scalars. All arithmetic in the
/// library is exact; floats never appear.
using Int = mpz_class;
using Rat = mpq_class;

/// Binomial coefficient C(c, j) for an arbitrary integer upper argument,
/// via the falling factorial c(c-1)...(c-j+1) / j!. C(c, 0) = 1; j < 0 gives 0.
inline Int binomial(const Int& c, long j) {
    if (j < 0) return Int(0);
    if (j == 0) return Int(1);
    Int num(1);
    for (long r = 0; r < j; ++r) num *= c - r;
    Int fact(1);
    for (long r = 2; r <= j; ++r) fact *= r;
    return num / fact;  // exact: j! divides any product of j consecutive integers
}

inline Int binomial(long c, long j) { return binomial(Int(c), j); }

inline std::string to_string(const Int& z) { return z.get_str(); }

/// Canonical "p" or "p/q" in lowest terms with q > 0. This is the wire format
/// for rationals everywhere (JSON, CSV, tables).
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline Rat parse_rational(const std::string& s) {
    try {
        Rat q(s);
        if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational: '" + s + "'");
    }
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline long to_long(const Int& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer out of long range: " + z.get_str());
    return z.get_si();
}

}  // namespace hilbertforge
