#pragma once

#include <random>

#include "mbar/poly.hpp"
#include "mbar/series.hpp"

namespace gen {

inline std::mt19937_64& rng() {
    static std::mt19937_64 engine(20240611);
    return engine;
}

inline long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline mbar::Rat rat(long span = 30) {
    mbar::Rat r(integer(-span, span), integer(1, span));
    r.canonicalize();
    return r;
}

inline mbar::KPoly kpoly(int max_degree = 5) {
    std::vector<mbar::Rat> cs(static_cast<std::size_t>(integer(0, max_degree + 1)));
    for (auto& c : cs) c = rat();
    return mbar::KPoly(std::move(cs));
}

inline mbar::TruncSeries<mbar::Rat> series(std::size_t order, bool zero_constant = false) {
    mbar::TruncSeries<mbar::Rat> s(order);
    for (std::size_t i = zero_constant ? 1 : 0; i <= order; ++i) s[i] = rat(9);
    return s;
}

inline mbar::TruncSeries<mbar::KPoly> kseries(std::size_t order, bool zero_constant = false) {
    mbar::TruncSeries<mbar::KPoly> s(order);
    for (std::size_t i = zero_constant ? 1 : 0; i <= order; ++i) s[i] = kpoly(2);
    return s;
}

}  // namespace gen
