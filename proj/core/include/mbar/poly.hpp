#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "mbar/rational.hpp"

namespace mbar {

struct KappaVar {
    static constexpr const char* symbol = "κ";
};
struct XVar {
    static constexpr const char* symbol = "x";
};
struct SVar {
    static constexpr const char* symbol = "s";
};

// Dense univariate polynomial over Rat; coeffs()[i] is the coefficient of
// var^i. Trailing zeros are always trimmed, so the zero polynomial has no
// coefficients and degree -1.
template <class Var>
class DensePoly {
public:
    DensePoly() = default;
    DensePoly(const Rat& c) : c_{c} { trim(); }  // NOLINT(google-explicit-constructor)
    DensePoly(long c) : DensePoly(Rat(c)) {}    // NOLINT(google-explicit-constructor)
    DensePoly(std::initializer_list<Rat> cs) : c_(cs) { trim(); }
    explicit DensePoly(std::vector<Rat> cs) : c_(std::move(cs)) { trim(); }

    static DensePoly monomial(std::size_t degree, const Rat& c = 1) {
        std::vector<Rat> cs(degree + 1);
        cs[degree] = c;
        return DensePoly(std::move(cs));
    }
    static DensePoly var() { return monomial(1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rat>& coeffs() const { return c_; }
    Rat operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    DensePoly& operator+=(const DensePoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    DensePoly& operator-=(const DensePoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    DensePoly& operator*=(const Rat& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& x : c_) x *= s;
        return *this;
    }
    DensePoly& operator*=(const DensePoly& o) { return *this = *this * o; }

    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
    friend DensePoly operator-(DensePoly a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }
    friend DensePoly operator*(DensePoly a, const Rat& s) { return a *= s; }
    friend DensePoly operator*(const Rat& s, DensePoly a) { return a *= s; }
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return DensePoly(std::move(r));
    }
    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

    DensePoly derivative() const {
        std::vector<Rat> r;
        for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(c_[i] * Rat(static_cast<long>(i)));
        return DensePoly(std::move(r));
    }
    // Antiderivative with zero constant term.
    DensePoly integrate() const {
        if (c_.empty()) return {};
        std::vector<Rat> r(c_.size() + 1);
        for (std::size_t i = 0; i < c_.size(); ++i) r[i + 1] = c_[i] / Rat(static_cast<long>(i + 1));
        return DensePoly(std::move(r));
    }
    Rat eval(const Rat& x) const {
        Rat acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    // p(var + a)
    DensePoly shift(const Rat& a) const {
        DensePoly r;
        DensePoly lin{a, Rat(1)};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * lin + DensePoly(*it);
        return r;
    }

    // "-1/240 + 13/288 κ - 1/6 κ^2 + 5/24 κ^3"
    std::string to_string() const {
        if (c_.empty()) return "0";
        std::string out;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            Rat mag = abs(c_[i]);
            if (first) {
                if (c_[i] < 0) out += "-";
            } else {
                out += c_[i] < 0 ? " - " : " + ";
            }
            first = false;
            bool unit = mag == 1 && i > 0;
            if (!unit) out += mbar::to_string(mag);
            if (i > 0) {
                if (!unit) out += " ";
                out += Var::symbol;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rat> c_;
};

using KPoly = DensePoly<KappaVar>;
using XPoly = DensePoly<XVar>;
using SPoly = DensePoly<SVar>;

// Antiderivative in κ with zero constant term.
inline KPoly integrate_kappa(const KPoly& p) { return p.integrate(); }

}  // namespace mbar
