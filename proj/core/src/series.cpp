#include "mbar/series.hpp"

namespace mbar {

TruncSeries<Rat> series_inverse(const TruncSeries<Rat>& s) {
    if (s[0] == 0) throw DomainError("series_inverse: constant term must be nonzero");
    const std::size_t n = s.order();
    TruncSeries<Rat> r(n);
    const Rat inv0 = 1 / s[0];
    r[0] = inv0;
    for (std::size_t i = 1; i <= n; ++i) {
        Rat acc = 0;
        for (std::size_t j = 1; j <= i; ++j) acc += s[j] * r[i - j];
        r[i] = -acc * inv0;
    }
    return r;
}

TruncSeries<Rat> binomial_series(long m, std::size_t order) {
    TruncSeries<Rat> r(order);
    r[0] = 1;
    for (std::size_t i = 1; i <= order; ++i) {
        r[i] = r[i - 1] * Rat(m - static_cast<long>(i) + 1) / Rat(static_cast<long>(i));
    }
    return r;
}

TruncSeries<Rat> log1p_x(std::size_t order) {
    TruncSeries<Rat> r(order);
    for (std::size_t i = 1; i <= order; ++i) {
        r[i] = Rat(i % 2 == 1 ? 1 : -1, static_cast<long>(i));
    }
    return r;
}

TruncSeries<Rat> series_compose(const TruncSeries<Rat>& f, const TruncSeries<Rat>& g) {
    if (g[0] != 0) throw DomainError("series_compose: inner series must have zero constant term");
    const std::size_t n = g.order();
    TruncSeries<Rat> r(n);
    // Horner from the top coefficient of f.
    for (std::size_t i = std::min(f.order(), n) + 1; i-- > 0;) {
        r = r * g;
        r[0] += f[i];
    }
    return r;
}

std::string to_string(const TruncSeries<Rat>& s, const char* var) {
    std::string out;
    for (std::size_t i = 0; i <= s.order(); ++i) {
        if (s[i] == 0) continue;
        if (!out.empty()) out += s[i] < 0 ? " - " : " + ";
        else if (s[i] < 0) out += "-";
        out += to_string(Rat(abs(s[i])));
        if (i > 0) out += std::string(" ") + var + (i > 1 ? "^" + std::to_string(i) : "");
    }
    out += (out.empty() ? "" : " + ") + std::string("O(") + var + "^" + std::to_string(s.order() + 1) + ")";
    return out;
}

}  // namespace mbar
