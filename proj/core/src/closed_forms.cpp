#include "mbar/closed_forms.hpp"

#include <mutex>

#include "mbar/errors.hpp"

namespace mbar {

Rat elem_sym(int l, const std::vector<Rat>& values) {
    if (l < 0 || l > static_cast<int>(values.size())) return 0;
    std::vector<Rat> e(static_cast<std::size_t>(l) + 1);
    e[0] = 1;
    for (const Rat& v : values) {
        for (int j = l; j >= 1; --j) e[j] += e[j - 1] * v;
    }
    return e[l];
}

std::vector<Rat> int_range(long lo, long hi) {
    std::vector<Rat> r;
    for (long v = lo; v <= hi; ++v) r.emplace_back(v);
    return r;
}

ExpPolyInS::ExpPolyInS(std::map<int, SPoly> blocks) {
    for (auto& [m, p] : blocks) add(m, p);
}

SPoly ExpPolyInS::block(int m) const {
    auto it = blocks_.find(m);
    return it == blocks_.end() ? SPoly() : it->second;
}

void ExpPolyInS::add(int m, const SPoly& p) {
    if (p.is_zero()) return;
    SPoly& slot = blocks_[m];
    slot += p;
    if (slot.is_zero()) blocks_.erase(m);
}

ExpPolyInS& ExpPolyInS::operator+=(const ExpPolyInS& o) {
    for (const auto& [m, p] : o.blocks_) add(m, p);
    return *this;
}

ExpPolyInS operator*(ExpPolyInS a, const Rat& c) {
    ExpPolyInS r;
    for (const auto& [m, p] : a.blocks_) r.add(m, p * c);
    return r;
}

ExpPolyInS ExpPolyInS::derivative() const {
    ExpPolyInS r;
    for (const auto& [m, p] : blocks_) r.add(m, p.derivative() + p * Rat(m));
    return r;
}

ExpPolyInS ExpPolyInS::shifted(int d) const {
    ExpPolyInS r;
    for (const auto& [m, p] : blocks_) r.add(m + d, p);
    return r;
}

Rat ExpPolyInS::at_minus_one() const {
    Rat v = 0;
    for (const auto& [m, p] : blocks_) v += p.eval(Rat(-1));
    return v;
}

TruncSeries<Rat> ExpPolyInS::to_x_series(std::size_t order) const {
    TruncSeries<Rat> s = log1p_x(order);
    s[0] = -1;
    TruncSeries<Rat> total(order);
    for (const auto& [m, p] : blocks_) {
        TruncSeries<Rat> ps(order);
        TruncSeries<Rat> spow = TruncSeries<Rat>::constant(order, 1);
        for (std::size_t l = 0; l < p.coeffs().size(); ++l) {
            if (l > 0) spow = spow * s;
            ps += spow * p.coeffs()[l];
        }
        total += binomial_series(m, order) * ps;
    }
    return total;
}

ExpPolyInS solve_s_ode(const ExpPolyInS& rhs, long c) {
    ExpPolyInS y;
    for (const auto& [m, r] : rhs.blocks()) {
        const long lambda = m + c;
        if (lambda == 0) {
            y.add(m, r.integrate());
            continue;
        }
        // p' + lambda p = r  =>  p = sum_i (-1)^i r^{(i)} / lambda^{i+1}
        SPoly p;
        SPoly d = r;
        Rat scale = Rat(1) / Rat(lambda);
        while (!d.is_zero()) {
            p += d * scale;
            d = d.derivative();
            scale /= -Rat(lambda);
        }
        y.add(m, p);
    }
    y.add(static_cast<int>(-c), SPoly(-y.at_minus_one()));
    return y;
}

ExpPolyInS s_ode_step(const ExpPolyInS& prev, int k, long c) {
    const ExpPolyInS dp = prev.derivative();
    ExpPolyInS rhs = dp + dp.shifted(-1) * Rat(-1) + prev * Rat(k - 1);
    return solve_s_ode(rhs, c);
}

namespace {

SPoly from_terms(const std::map<int, Rat>& t) {
    if (t.empty()) return {};
    std::vector<Rat> cs(static_cast<std::size_t>(t.rbegin()->first) + 1);
    for (const auto& [l, c] : t) cs[static_cast<std::size_t>(l)] = c;
    return SPoly(std::move(cs));
}

Rat inv_fact(int n) { return Rat(1) / Rat(factorial(static_cast<unsigned>(n))); }

// sum_{j=lo}^{hi} f(j), empty when hi < lo
template <class F>
Rat range_sum(long lo, long hi, F f) {
    Rat s = 0;
    for (long j = lo; j <= hi; ++j) s += f(j);
    return s;
}

ExpPolyInS genus0_blocks(int k, bool flipped) {
    ExpPolyInS r;
    for (int m = -2; m <= k - 2; ++m) {
        std::map<int, Rat> t;
        const auto vals = int_range(1 - m, k - m - 1);
        for (int l = 0; l <= k - m - 1; ++l) t[l] = elem_sym(l + m, vals) * inv_fact(m + 2) * inv_fact(l);
        r.add(flipped ? m : -m, from_terms(t));
    }
    return r;
}

}  // namespace

ExpPolyInS a_k_closed_form(int k) {
    if (k < 0) throw DomainError("a_k_closed_form: k must be nonnegative");
    if (k == 0) {
        // 1/2 (1+x)^2 log(1+x) - x/2 - 3x^2/4 = -1/4 + e^{s+1} + e^{2(s+1)} (-1/4 + s/2)
        return ExpPolyInS({{0, SPoly(make_rat(-1, 4))}, {1, SPoly(1)}, {2, SPoly{make_rat(-1, 4), make_rat(1, 2)}}});
    }
    if (k == 1) {
        // 1/2 + (1+x)(log(1+x) - 1) + 1/2 (1+x)^2 (log(1+x) - 1)^2
        return ExpPolyInS(
            {{0, SPoly(make_rat(1, 2))}, {1, SPoly::monomial(1)}, {2, SPoly::monomial(2, make_rat(1, 2))}});
    }
    return genus0_blocks(k, false);
}

ExpPolyInS a_k_closed_form_flipped(int k) {
    if (k < 2) throw DomainError("a_k_closed_form_flipped: k must be at least 2");
    return genus0_blocks(k, true);
}

TruncSeries<Rat> a_k_series(int k, std::size_t order) { return a_k_closed_form(k).to_x_series(order); }

namespace {

// (1+x) y' + shift y = x prev' + (k-1) prev + extra, y(0) = 0
TruncSeries<Rat> x_ode_step(const TruncSeries<Rat>& prev, int k, long shift) {
    const std::size_t n = prev.order();
    TruncSeries<Rat> rhs = prev * Rat(k - 1);
    for (std::size_t i = 1; i <= n; ++i) rhs[i] += prev[i] * Rat(static_cast<long>(i));
    TruncSeries<Rat> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        y[i + 1] = (rhs[i] - y[i] * Rat(static_cast<long>(i) + shift)) / Rat(static_cast<long>(i + 1));
    }
    return y;
}

}  // namespace

TruncSeries<Rat> a_k_series_ode(int k, std::size_t order) {
    if (k < 0) throw DomainError("a_k_series_ode: k must be nonnegative");
    TruncSeries<Rat> a = a_k_closed_form(0).to_x_series(order);
    for (int j = 1; j <= k; ++j) a = x_ode_step(a, j, -2);
    return a;
}

ExpPolyInS c_k_closed_form(int k, BlockSource src) {
    if (k < 0) throw DomainError("c_k_closed_form: k must be nonnegative");
    if (k == 0) return ExpPolyInS({{0, SPoly{Rat(1), Rat(1)}}});
    ExpPolyInS r;
    {
        std::map<int, Rat> t;
        const auto vals = int_range(1, k - 1);
        for (int l = 1; l <= k; ++l) t[l] = elem_sym(l - 1, vals) * inv_fact(l);
        r.add(0, from_terms(t));
    }
    for (int m = 1; m <= k; ++m) {
        std::map<int, Rat> t;
        const auto vals = int_range(1 - m, k - m - 1);
        if (src == BlockSource::Printed) {
            for (int l = 0; l <= k - m - 1; ++l) t[l] = elem_sym(l, vals) * inv_fact(m) * inv_fact(l);
        } else {
            for (int l = 0; l <= k - m; ++l) t[l] = elem_sym(l + m - 1, vals) * inv_fact(m) * inv_fact(l);
        }
        r.add(-m, from_terms(t));
    }
    return r;
}

ExpPolyInS d_k_closed_form(int k, BlockSource src) {
    if (k < 0) throw DomainError("d_k_closed_form: k must be nonnegative");
    if (k == 0) return {};
    if (k == 1) return ExpPolyInS({{0, SPoly{Rat(1), Rat(1)}}});
    ExpPolyInS r;
    {
        std::map<int, Rat> t;
        for (int l = 2; l <= k; ++l) {
            t[l] = range_sum(1, k - l + 1, [&](long j) -> Rat { return Rat(j * j) * elem_sym(l - 2, int_range(j + 1, k - 1)); }) *
                   inv_fact(l);
        }
        t[0] += Rat(1, k);
        t[1] += Rat(k);
        r.add(0, from_terms(t));
    }
    {
        // The printed inner bound is k - l; the exact solution needs k - l - 1.
        const long shift = src == BlockSource::Printed ? 0 : 1;
        std::map<int, Rat> t;
        for (int l = 1; l <= k - 2; ++l) {
            t[l] = range_sum(0, k - l - shift,
                             [&](long j) -> Rat { return Rat(j * j) * elem_sym(l - 1, int_range(j + 1, k - 2)); }) *
                   inv_fact(l);
        }
        t[0] += Rat(k - 1);
        r.add(-1, from_terms(t));
    }
    for (int m = 2; m <= k - 1; ++m) {
        const Rat sign = Rat(m % 2 == 1 ? 1 : -1, m);  // (-1)^{m+1} / m
        std::vector<Rat> inv;
        for (int i = 1; i <= m - 1; ++i) inv.emplace_back(1, i);
        std::map<int, Rat> t;
        for (int l = 0; l <= k - m - 1; ++l) {
            Rat v = 0;
            for (int h = 0; h <= m - 1; ++h) {
                const Rat eh = elem_sym(h, inv) * (h % 2 == 0 ? 1 : -1);
                v += eh * range_sum(1, k - l - m - h, [&](long j) -> Rat {
                         return Rat(j * j) * elem_sym(l - 1 + h, int_range(j + 1, k - m - 1));
                     });
            }
            t[l] = sign * v * inv_fact(l);
        }
        t[0] += sign * Rat(k - m);
        r.add(-m, from_terms(t));
    }
    return r;
}

namespace {

// The alternative printed form of d_{k,-m}, m >= 2, through the auxiliary
// polynomials d~_{k,-m}.
SPoly d_tilde(int k, int m) {
    if (m == 2) {
        std::map<int, Rat> t;
        for (int l = 0; l <= k - 3; ++l) {
            const auto vals = [&](long j) { return int_range(j + 1, k - 3); };
            Rat a = range_sum(1, k - l - 2, [&](long j) -> Rat { return Rat(j * j) * elem_sym(l - 1, vals(j)); });
            Rat b = range_sum(1, k - l - 3, [&](long j) -> Rat { return Rat(j * j) * elem_sym(l, vals(j)); });
            t[l] = (a - b) * inv_fact(l);
        }
        return from_terms(t);
    }
    const SPoly prev = d_tilde(k - 1, m - 1);
    return prev - prev.derivative() * Rat(1, m - 1);
}

ExpPolyInS d_k_tilde_form(int k) {
    ExpPolyInS r = d_k_closed_form(k, BlockSource::Corrected);
    for (int m = 2; m <= k - 1; ++m) {
        const Rat sign = Rat(m % 2 == 1 ? 1 : -1, m);
        SPoly block = (SPoly(Rat(k - m)) + d_tilde(k, m)) * sign;
        r.add(-m, r.block(-m) * Rat(-1));
        r.add(-m, block);
    }
    return r;
}

}  // namespace

TruncSeries<Rat> b_k_series(int k, std::size_t order) {
    return (c_k_closed_form(k) * make_rat(-1, 12) + d_k_closed_form(k) * make_rat(1, 2)).to_x_series(order);
}

namespace {

void require_gkp(int g, int k, int p) {
    if (g < 2) throw DomainError("A_{g,k}^p requires g >= 2");
    if (p < 0 || p > 3 * g - 3) {
        throw DomainError("A_{g,k}^p requires 0 <= p <= 3g-3, got p = " + std::to_string(p));
    }
    if (k < 0) throw DomainError("A_{g,k}^p requires k >= 0");
}

}  // namespace

ExpPolyInS a_gkp_closed_form(int g, int k, int p, int variant) {
    require_gkp(g, k, p);
    const int c = 2 - 2 * g;
    if (k < p) return {};
    if (k == p) return ExpPolyInS({{c, SPoly(1)}});
    ExpPolyInS r;
    for (int m = 0; m <= k - p; ++m) {
        std::map<int, Rat> d;
        if (p == 0) {
            if (m == 0) {
                const auto vals = int_range(3 - 2 * g, k + 1 - 2 * g);
                for (int l = 1; l <= k; ++l) d[l] = Rat(c) * elem_sym(l - 1, vals) * inv_fact(l);
            } else {
                const auto vals = int_range(3 - 2 * g - m, k + 1 - 2 * g - m);
                for (int l = 0; l <= k - m; ++l) d[l] = Rat(c) * inv_fact(m) * elem_sym(l + m - 1, vals) * inv_fact(l);
            }
        } else if (p == 1) {
            const auto vals = int_range(3 - 2 * g - m, k + 1 - 2 * g - m);
            for (int l = 0; l <= k - m - 1; ++l) d[l] = elem_sym(l + m, vals) * inv_fact(m) * inv_fact(l);
        } else if (p == 2) {
            auto inner = [&](int l, int h) -> Rat {
                return range_sum(4 - 2 * g, k - l - 2 * g + 2 - m - h, [&](long j) -> Rat {
                    return Rat(j * (j + 2 * g - 3)) * elem_sym(l - 1 + h, int_range(j + 1, k - 2 * g - m + 1));
                });
            };
            if (m == 0) {
                for (int l = 1; l <= k - 2; ++l) d[l] = inner(l, 0) * inv_fact(l);
                d[0] += Rat(k - 1);
            } else {
                const auto ev = int_range(2 * g - 2, 2 * g - 3 + m);
                const Rat sm = Rat(m % 2 == 0 ? 1 : -1);
                for (int l = 0; l <= k - 2 - m; ++l) {
                    Rat v = 0;
                    for (int h = 0; h <= m; ++h) v += Rat(h % 2 == 0 ? 1 : -1) * elem_sym(m - h, ev) * inner(l, h);
                    d[l] = sm * inv_fact(m) * v * inv_fact(l);
                }
                d[0] += sm * binomial(2 * g - 3 + m, m) * Rat(k - 1 - m);
            }
        } else if (variant == 1) {
            const auto ev = int_range(2 * g - 2, 2 * g - 3 + m);
            const Rat sm = Rat(m % 2 == 0 ? 1 : -1);
            for (int l = 0; l <= k - p - m; ++l) {
                Rat v = 0;
                for (int h = 0; h <= m; ++h) {
                    v += Rat(h % 2 == 0 ? 1 : -1) * elem_sym(m - h, ev) *
                         range_sum(p + 1 - 2 * g, k - l - 2 * g + 1 - m - h, [&](long j) -> Rat {
                             return binomial(j + 2 * g - 3, p - 2) *
                                    elem_sym(l + h, int_range(j + 1, k - 2 * g - m + 1));
                         });
                }
                d[l] = sm * inv_fact(m) * v * inv_fact(l);
            }
        } else {
            for (int l = 0; l <= k - p - m; ++l) {
                d[l] = range_sum(p + 1 - 2 * g, k + 1 - 2 * g - m - l, [&](long j) -> Rat {
                           auto vals = int_range(3 - 2 * g - m, 2 - 2 * g);
                           auto tail = int_range(j + 1, k + 1 - 2 * g - m);
                           vals.insert(vals.end(), tail.begin(), tail.end());
                           return binomial(j + 2 * g - 3, p - 2) * elem_sym(m + l, vals);
                       }) *
                       inv_fact(m) * inv_fact(l);
            }
        }
        r.add(c - m, from_terms(d));
    }
    return r;
}

ExpPolyInS a_gkp_exact(int g, int k, int p) {
    require_gkp(g, k, p);
    if (k < p) return {};
    ExpPolyInS a({{2 - 2 * g, SPoly(1)}});
    for (int j = p + 1; j <= k; ++j) a = s_ode_step(a, j, 2 * g - 2);
    return a;
}

TruncSeries<Rat> a_gkp_series(int g, int k, int p, std::size_t order) {
    return a_gkp_closed_form(g, k, p).to_x_series(order);
}

KPoly chi_tilde_closed_form(int g, int n, ChiTable& table) {
    require_stable(g, n);
    const int dim = 3 * g - 3 + n;
    const auto N = static_cast<std::size_t>(n);
    std::vector<Rat> cs;
    for (int k = 0; k <= dim; ++k) {
        if (g == 0) {
            cs.push_back(a_k_series(k, N)[N]);
        } else if (g == 1) {
            cs.push_back(b_k_series(k, N)[N]);
        } else {
            Rat v = 0;
            for (int p = 0; p <= 3 * g - 3; ++p) v += a_gkp_series(g, k, p, N)[N] * table.coeff(g, 0, p);
            cs.push_back(v);
        }
    }
    return KPoly(std::move(cs));
}

namespace {

void diff_blocks(const std::string& family, int k, const ExpPolyInS& printed, const ExpPolyInS& exact,
                 std::vector<BlockMismatch>& out) {
    std::map<int, bool> keys;
    for (const auto& [m, p] : printed.blocks()) keys[m] = true;
    for (const auto& [m, p] : exact.blocks()) keys[m] = true;
    for (const auto& [m, unused] : keys) {
        if (printed.block(m) != exact.block(m)) out.push_back({family, k, m});
    }
}

}  // namespace

std::vector<BlockMismatch> audit_genus0_blocks(int k_max) {
    std::vector<BlockMismatch> out;
    ExpPolyInS exact = a_k_closed_form(0);
    for (int k = 1; k <= k_max; ++k) {
        exact = s_ode_step(exact, k, -2);
        diff_blocks("A", k, a_k_closed_form(k), exact, out);
        if (k >= 2) diff_blocks("A_flipped", k, a_k_closed_form_flipped(k), exact, out);
    }
    return out;
}

std::vector<BlockMismatch> audit_genus1_blocks(int k_max) {
    std::vector<BlockMismatch> out;
    ExpPolyInS c_exact = c_k_closed_form(0);
    ExpPolyInS d_exact = d_k_closed_form(1);
    for (int k = 1; k <= k_max; ++k) {
        c_exact = s_ode_step(c_exact, k, 0);
        diff_blocks("c", k, c_k_closed_form(k, BlockSource::Printed), c_exact, out);
        diff_blocks("c_corrected", k, c_k_closed_form(k, BlockSource::Corrected), c_exact, out);
        if (k >= 2) {
            d_exact = s_ode_step(d_exact, k, 0);
            diff_blocks("d", k, d_k_closed_form(k, BlockSource::Printed), d_exact, out);
            diff_blocks("d_corrected", k, d_k_closed_form(k, BlockSource::Corrected), d_exact, out);
            diff_blocks("d_tilde", k, d_k_tilde_form(k), d_exact, out);
        }
    }
    return out;
}

std::vector<BlockMismatch> audit_gkp_blocks(int g, int k_max) {
    std::vector<BlockMismatch> out;
    for (int p = 0; p <= 3 * g - 3; ++p) {
        for (int k = p; k <= k_max; ++k) {
            const ExpPolyInS exact = a_gkp_exact(g, k, p);
            const std::string fam = "A_{" + std::to_string(g) + ",k}^" + std::to_string(p);
            diff_blocks(fam, k, a_gkp_closed_form(g, k, p, 1), exact, out);
            if (p >= 3) diff_blocks(fam + " (second form)", k, a_gkp_closed_form(g, k, p, 2), exact, out);
        }
    }
    return out;
}

namespace {

std::mutex shor_mutex;
std::map<std::pair<int, int>, XPoly> shor_memo;

}  // namespace

XPoly shor_q(int n, int k) {
    if (n < 1 || k < -1) throw DomainError("shor_q requires n >= 1 and k >= -1");
    if (k == -1) return {};
    if (n == 1) return k == 0 ? XPoly(1) : XPoly();
    {
        std::lock_guard lock(shor_mutex);
        auto it = shor_memo.find({n, k});
        if (it != shor_memo.end()) return it->second;
    }
    XPoly q = XPoly{Rat(n - 1), Rat(1)} * shor_q(n - 1, k) + shor_q(n - 1, k - 1) * Rat(n + k - 2);
    std::lock_guard lock(shor_mutex);
    return shor_memo.emplace(std::make_pair(n, k), std::move(q)).first->second;
}

Rat ramanujan_psi(int k, int r, const Rat& x) {
    if (r < 0 || k < 1 || k > r + 1) {
        throw DomainError("ramanujan_psi requires 1 <= k <= r+1, got k = " + std::to_string(k) +
                          ", r = " + std::to_string(r));
    }
    return shor_q(r + 1, k - 1).eval(x - Rat(r + 1));
}

}  // namespace mbar
