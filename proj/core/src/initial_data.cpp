#include "mbar/initial_data.hpp"

#include "mbar/errors.hpp"

namespace mbar {

Rat chi_open(int g, int n) {
    require_stable(g, n);
    Rat r = Rat(2 * g - 1) * bernoulli(static_cast<unsigned>(2 * g));
    r *= Rat(factorial(static_cast<unsigned>(2 * g + n - 3)));
    r /= Rat(factorial(static_cast<unsigned>(2 * g)));
    return n % 2 == 0 ? r : Rat(-r);
}

VertexWeight vertex_weight(int g, int n) { return {chi_open(g, n), 2 - 2 * g - n}; }

VSeries::VSeries(int n, int order) : n_(n), order_(order) {
    if (n < 0 || order < 0) throw DomainError("v_series: need n >= 0 and order >= 0");
    for (int g = 0;; ++g) {
        const int e = 2 - 2 * g - n;
        if (-e > order) break;
        if (is_stable(g, n)) terms_.emplace(e, chi_open(g, n));
    }
}

Rat VSeries::coeff(int z_exponent) const {
    auto it = terms_.find(z_exponent);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::pair<int, Rat> VSeries::leading() const {
    if (terms_.empty()) throw DomainError("v_series: truncation order too small for a nonzero term");
    return *terms_.rbegin();
}

std::map<int, Rat> VSeries::derivative() const {
    std::map<int, Rat> d;
    for (const auto& [e, c] : terms_) d.emplace(e - 1, c * Rat(e));
    return d;
}

TruncSeries<Rat> VSeries::to_w_series() const {
    TruncSeries<Rat> s(static_cast<std::size_t>(order_));
    for (const auto& [e, c] : terms_) s[static_cast<std::size_t>(-e)] = c;
    return s;
}

VSeries v_series(int n, int order) { return VSeries(n, order); }

}  // namespace mbar
