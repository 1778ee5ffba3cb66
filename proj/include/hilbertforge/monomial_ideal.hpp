#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "monomial.hpp"

namespace hilbertforge {

/// Default ceiling on exhaustive enumerations (monomials of a degree, or
/// generator multisets of a power). Exceeding it raises, never truncates.
inline constexpr long kDefaultEnumerationCap = 10'000'000;

class EnumerationCapError : public std::runtime_error {
public:
    EnumerationCapError(const Int& required, long cap)
        : std::runtime_error("enumeration of " + required.get_str() + " objects exceeds cap " +
                             std::to_string(cap)),
          required_(required),
          cap_(cap) {}

    const Int& required() const { return required_; }
    long cap() const { return cap_; }

private:
    Int required_;
    long cap_;
};

/// A monomial ideal of K[x_1..x_n], kept as its unique minimal generating
/// set, sorted lexicographically. The zero ideal has no generators; the unit
/// ideal's single generator is the monomial 1.
class MonomialIdeal {
public:
    static MonomialIdeal zero(int n) { return MonomialIdeal(n, {}); }

    static MonomialIdeal unit(int n) { return MonomialIdeal(n, {ExponentVector(n, 0)}); }

    /// Builds the ideal generated by `gens`, reduced to the minimal set.
    static MonomialIdeal make(int n, std::vector<ExponentVector> gens) {
        if (n < 1) throw std::invalid_argument("ring needs at least one variable");
        for (const auto& g : gens) {
            if (static_cast<int>(g.size()) != n)
                throw std::invalid_argument("generator arity differs from ring arity");
            for (int e : g)
                if (e < 0) throw std::invalid_argument("negative exponent in generator");
        }
        return MonomialIdeal(n, minimalize(std::move(gens)));
    }

    int vars() const { return n_; }
    const std::vector<ExponentVector>& generators() const { return gens_; }
    long num_generators() const { return static_cast<long>(gens_.size()); }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && total_degree(gens_[0]) == 0; }

    bool operator==(const MonomialIdeal& o) const { return n_ == o.n_ && gens_ == o.gens_; }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

    /// Membership test: some generator divides m.
    bool contains(const ExponentVector& m) const {
        if (static_cast<int>(m.size()) != n_)
            throw std::invalid_argument("monomial arity differs from ring arity");
        for (const auto& g : gens_)
            if (divides(g, m)) return true;
        return false;
    }

    /// Minimal generators of I^k, enumerated as k-fold sums of generators.
    /// I^0 is the unit ideal.
    MonomialIdeal power(long k, long cap = kDefaultEnumerationCap) const {
        if (k < 0) throw std::invalid_argument("negative ideal power");
        if (k == 0) return unit(n_);
        if (is_zero()) return zero(n_);
        if (k == 1) return *this;
        Int combos = WeakCompositions::count(k, static_cast<int>(gens_.size()));
        if (combos > cap) throw EnumerationCapError(combos, cap);
        std::vector<ExponentVector> out;
        for (const auto& mult : WeakCompositions(k, static_cast<int>(gens_.size()))) {
            ExponentVector acc(n_, 0);
            for (size_t i = 0; i < gens_.size(); ++i)
                for (int c = 0; c < n_; ++c) acc[c] += mult[i] * gens_[i][c];
            out.push_back(std::move(acc));
        }
        return MonomialIdeal(n_, minimalize(std::move(out)));
    }

    /// Number of degree-t monomials lying in the ideal, by exhaustive
    /// enumeration of all C(t+n-1, n-1) monomials of S_t.
    Int count_monomials_of_degree(long t, long cap = kDefaultEnumerationCap) const {
        if (t < 0) throw std::invalid_argument("negative degree");
        if (is_zero()) return Int(0);
        Int space = monomial_space_dimension(n_, t);
        if (space > cap) throw EnumerationCapError(space, cap);
        Int cnt(0);
        for (const auto& m : WeakCompositions(t, n_))
            if (contains(m)) ++cnt;
        return cnt;
    }

    /// Componentwise max over all minimal generators.
    ExponentVector lcm_of_generators() const {
        if (is_zero()) throw std::domain_error("lcm of the zero ideal");
        ExponentVector acc(n_, 0);
        for (const auto& g : gens_) acc = lcm_exponents(acc, g);
        return acc;
    }

    int lcm_degree() const { return total_degree(lcm_of_generators()); }

    /// degree -> number of minimal generators of that degree.
    std::map<int, long> generator_degree_histogram() const {
        std::map<int, long> h;
        for (const auto& g : gens_) ++h[total_degree(g)];
        return h;
    }

    bool is_equigenerated() const {
        if (is_zero()) return false;
        int d = total_degree(gens_[0]);
        for (const auto& g : gens_)
            if (total_degree(g) != d) return false;
        return true;
    }

    /// I : x_v, the colon ideal by a single variable.
    MonomialIdeal colon_variable(int v) const {
        std::vector<ExponentVector> out = gens_;
        for (auto& g : out)
            if (g[v] > 0) --g[v];
        return MonomialIdeal(n_, minimalize(std::move(out)));
    }

    /// I + (x_v).
    MonomialIdeal plus_variable(int v) const {
        std::vector<ExponentVector> out = gens_;
        ExponentVector var(n_, 0);
        var[v] = 1;
        out.push_back(std::move(var));
        return MonomialIdeal(n_, minimalize(std::move(out)));
    }

    /// The unique minimal generating set of the ideal generated by `gens`:
    /// drop every monomial strictly divisible by another, dedupe, sort.
    static std::vector<ExponentVector> minimalize(std::vector<ExponentVector> gens) {
        std::sort(gens.begin(), gens.end(),
                  [](const ExponentVector& a, const ExponentVector& b) {
                      int da = total_degree(a), db = total_degree(b);
                      if (da != db) return da < db;
                      return a < b;
                  });
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<ExponentVector> kept;
        for (auto& g : gens) {
            bool redundant = false;
            for (const auto& h : kept) {
                if (divides(h, g)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) kept.push_back(std::move(g));
        }
        std::sort(kept.begin(), kept.end());
        return kept;
    }

private:
    MonomialIdeal(int n, std::vector<ExponentVector> minimal_gens)
        : n_(n), gens_(std::move(minimal_gens)) {}

    int n_;
    std::vector<ExponentVector> gens_;
};

}  // namespace hilbertforge
