#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace hilbertforge {

/// Dense univariate polynomial with exact coefficients, stored lowest degree
/// first. The zero polynomial has an empty coefficient list and degree -1.
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }

    T coeff(int d) const {
        if (d < 0 || d >= static_cast<int>(c_.size())) return T(0);
        return c_[d];
    }

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial operator+(const Polynomial& o) const {
        std::vector<T> r(std::max(c_.size(), o.c_.size()), T(0));
        for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Polynomial(std::move(r));
    }

    Polynomial operator-() const {
        std::vector<T> r(c_);
        for (auto& v : r) v = -v;
        return Polynomial(std::move(r));
    }

    Polynomial operator-(const Polynomial& o) const { return *this + (-o); }

    Polynomial operator*(const Polynomial& o) const {
        if (is_zero() || o.is_zero()) return Polynomial();
        std::vector<T> r(c_.size() + o.c_.size() - 1, T(0));
        for (size_t i = 0; i < c_.size(); ++i)
            for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Polynomial(std::move(r));
    }

    Polynomial operator*(const T& s) const {
        std::vector<T> r(c_);
        for (auto& v : r) v = v * s;
        return Polynomial(std::move(r));
    }

    /// Multiplication by t^s (s >= 0).
    Polynomial shifted(int s) const {
        if (is_zero()) return Polynomial();
        std::vector<T> r(c_.size() + static_cast<size_t>(s), T(0));
        std::copy(c_.begin(), c_.end(), r.begin() + s);
        return Polynomial(std::move(r));
    }

    /// Horner evaluation.
    T operator()(const T& x) const {
        T acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    std::vector<T> c_;
};

/// p(t) * (1 - t).
template <class T>
Polynomial<T> multiply_one_minus_t(const Polynomial<T>& p) {
    return p - p.shifted(1);
}

/// Exact quotient p(t) / (1 - t); valid only when p(1) = 0. The quotient's
/// coefficients are the prefix sums of p's.
template <class T>
bool divide_one_minus_t(const Polynomial<T>& p, Polynomial<T>& quotient) {
    if (p.is_zero()) {
        quotient = Polynomial<T>();
        return true;
    }
    std::vector<T> q;
    q.reserve(p.coeffs().size());
    T run(0);
    for (const auto& c : p.coeffs()) {
        run += c;
        q.push_back(run);
    }
    if (q.back() != T(0)) return false;  // remainder p(1)
    q.pop_back();
    quotient = Polynomial<T>(std::move(q));
    return true;
}

/// Multiplicity of the root t = 1, i.e. the largest e with (1-t)^e | p.
template <class T>
int one_minus_t_multiplicity(const Polynomial<T>& p, Polynomial<T>* reduced = nullptr) {
    Polynomial<T> cur = p;
    int e = 0;
    Polynomial<T> q;
    while (!cur.is_zero() && divide_one_minus_t(cur, q)) {
        cur = q;
        ++e;
    }
    if (reduced) *reduced = cur;
    return e;
}

/// C(a*x + b, j) expanded in the monomial basis of x, exact over Q.
inline Polynomial<Rat> binomial_of_linear(const Rat& a, const Rat& b, long j) {
    Polynomial<Rat> acc = Polynomial<Rat>::constant(Rat(1));
    for (long r = 0; r < j; ++r) {
        Polynomial<Rat> lin(std::vector<Rat>{b - Rat(r), a});
        acc = acc * lin;
    }
    Rat fact(1);
    for (long r = 2; r <= j; ++r) fact *= Rat(r);
    return acc * (Rat(1) / fact);
}

}  // namespace hilbertforge
