#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mbar/errors.hpp"
#include "mbar/poly.hpp"
#include "mbar/rational.hpp"

namespace mbar {

// Coefficient-ring hooks. A ring R needs default construction as zero,
// +, -, *, multiplication by Rat and an is_zero test.
inline bool ring_is_zero(const Rat& r) { return r == 0; }
template <class V>
bool ring_is_zero(const DensePoly<V>& p) { return p.is_zero(); }

// Truncated power series sum_{i=0}^{N} c_i x^i; every result is exact
// modulo x^{N+1}.
template <class R>
class TruncSeries {
public:
    explicit TruncSeries(std::size_t order = 0) : c_(order + 1) {}
    TruncSeries(std::size_t order, std::vector<R> cs) : c_(std::move(cs)) { c_.resize(order + 1); }

    static TruncSeries constant(std::size_t order, const R& c) {
        TruncSeries s(order);
        s.c_[0] = c;
        return s;
    }
    static TruncSeries variable(std::size_t order) {
        TruncSeries s(order);
        if (order >= 1) s.c_[1] = R(Rat(1));
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const R& operator[](std::size_t i) const { return c_[i]; }
    R& operator[](std::size_t i) { return c_[i]; }
    R coeff(std::size_t i) const { return i < c_.size() ? c_[i] : R(); }
    const std::vector<R>& coeffs() const { return c_; }

    TruncSeries truncate(std::size_t order) const {
        return TruncSeries(order, std::vector<R>(c_.begin(), c_.begin() + std::min(c_.size(), order + 1)));
    }

    TruncSeries& operator+=(const TruncSeries& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    TruncSeries& operator-=(const TruncSeries& o) {
        check(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    TruncSeries& operator*=(const Rat& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }
    friend TruncSeries operator+(TruncSeries a, const TruncSeries& b) { return a += b; }
    friend TruncSeries operator-(TruncSeries a, const TruncSeries& b) { return a -= b; }
    friend TruncSeries operator-(TruncSeries a) {
        for (auto& x : a.c_) x = R() - x;
        return a;
    }
    friend TruncSeries operator*(TruncSeries a, const Rat& s) { return a *= s; }
    friend TruncSeries operator*(const Rat& s, TruncSeries a) { return a *= s; }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        a.check(b);
        const std::size_t n = a.order();
        TruncSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (ring_is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (ring_is_zero(b.c_[j])) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    TruncSeries& operator*=(const TruncSeries& o) { return *this = *this * o; }
    // Multiply every coefficient by a ring element.
    TruncSeries scaled(const R& s) const {
        TruncSeries r(order());
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
        return r;
    }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }
    friend bool operator!=(const TruncSeries& a, const TruncSeries& b) { return !(a == b); }

    // d/dx; the result has order N-1 (order 0 stays order 0 and is zero).
    TruncSeries derivative() const {
        const std::size_t n = order() == 0 ? 0 : order() - 1;
        TruncSeries r(n);
        for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rat(static_cast<long>(i));
        return r;
    }
    // Antiderivative with zero constant term; the result has order N+1.
    TruncSeries integrate() const {
        TruncSeries r(order() + 1);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + 1] = c_[i] * Rat(1, static_cast<long>(i + 1));
        return r;
    }
    // x * f, keeping order N.
    TruncSeries shift_up() const {
        TruncSeries r(order());
        for (std::size_t i = 0; i + 1 < c_.size(); ++i) r.c_[i + 1] = c_[i];
        return r;
    }

    bool constant_is_zero() const { return ring_is_zero(c_[0]); }

private:
    void check(const TruncSeries& o) const {
        if (o.c_.size() != c_.size()) throw DomainError("truncation orders differ");
    }
    std::vector<R> c_;
};

// 1/(1+s) for s with zero constant term.
template <class R>
TruncSeries<R> series_inv_one_plus(const TruncSeries<R>& s) {
    if (!s.constant_is_zero()) throw DomainError("series_inv_one_plus: constant term must be zero");
    const std::size_t n = s.order();
    TruncSeries<R> r(n);
    r[0] = R(Rat(1));
    for (std::size_t i = 1; i <= n; ++i) {
        R acc;
        for (std::size_t j = 1; j <= i; ++j) acc += s[j] * r[i - j];
        r[i] = R() - acc;
    }
    return r;
}

// log(1+s) = integral of s'/(1+s).
template <class R>
TruncSeries<R> series_log1p(const TruncSeries<R>& s) {
    if (!s.constant_is_zero()) throw DomainError("series_log1p: constant term must be zero");
    const std::size_t n = s.order();
    if (n == 0) return TruncSeries<R>(0);
    TruncSeries<R> q = s.derivative() * series_inv_one_plus(s).truncate(n - 1);
    return q.integrate();
}

// exp(s), from E' = s'E.
template <class R>
TruncSeries<R> series_exp(const TruncSeries<R>& s) {
    if (!s.constant_is_zero()) throw DomainError("series_exp: constant term must be zero");
    const std::size_t n = s.order();
    TruncSeries<R> e(n);
    e[0] = R(Rat(1));
    for (std::size_t i = 1; i <= n; ++i) {
        R acc;
        for (std::size_t k = 1; k <= i; ++k) {
            if (ring_is_zero(s[k])) continue;
            acc += (s[k] * e[i - k]) * Rat(static_cast<long>(k));
        }
        e[i] = acc * Rat(1, static_cast<long>(i));
    }
    return e;
}

// Multiplicative inverse of a Rat series with nonzero constant term.
TruncSeries<Rat> series_inverse(const TruncSeries<Rat>& s);

// (1+x)^m for any integer m, truncated at order N.
TruncSeries<Rat> binomial_series(long m, std::size_t order);
// log(1+x) truncated at order N.
TruncSeries<Rat> log1p_x(std::size_t order);
// Composition f(g) for g with zero constant term.
TruncSeries<Rat> series_compose(const TruncSeries<Rat>& f, const TruncSeries<Rat>& g);

std::string to_string(const TruncSeries<Rat>& s, const char* var = "x");

}  // namespace mbar
