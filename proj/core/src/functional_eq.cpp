#include "mbar/functional_eq.hpp"

#include <sstream>

namespace mbar {

namespace {

const KPoly kKappa = KPoly::var();

YSeries y_series(std::size_t order) { return YSeries::variable(order); }
YSeries one(std::size_t order) { return YSeries::constant(order, KPoly(1)); }

std::string first_nonzero(const YSeries& r) {
    for (std::size_t i = 0; i <= r.order(); ++i) {
        if (!r[i].is_zero()) {
            std::ostringstream os;
            os << "y^" << i << ": " << r[i].to_string();
            return os.str();
        }
    }
    return {};
}

bool is_zero(const YSeries& r) {
    for (std::size_t i = 0; i <= r.order(); ++i)
        if (!r[i].is_zero()) return false;
    return true;
}

}  // namespace

YSeries solve_chi0(int order) {
    if (order < 1) throw DomainError("solve_chi0: order must be >= 1");
    const auto n = static_cast<std::size_t>(order);
    std::vector<KPoly> c(n + 1);
    c[1] = KPoly(1);
    // [y^m] of (1 + y - kappa chi) chi' = 1 + chi, solved for c_{m+1}.
    for (std::size_t m = 1; m < n; ++m) {
        KPoly acc = c[m] * Rat(1 - static_cast<long>(m));
        KPoly conv;
        for (std::size_t i = 1; i <= m; ++i) conv += c[i] * c[m - i + 1] * Rat(static_cast<long>(m - i + 1));
        acc += kKappa * conv;
        c[m + 1] = acc * Rat(1, static_cast<long>(m + 1));
    }
    return YSeries(n, std::move(c));
}

YSeries chi0_implicit_residual(const YSeries& chi) {
    const std::size_t n = chi.order();
    const YSeries onep = one(n) + chi;
    return (onep * series_log1p(chi)).scaled(kKappa) - chi.scaled(kKappa + KPoly(1)) + y_series(n);
}

YSeries chi0_derivative_residual(const YSeries& chi) {
    const std::size_t n = chi.order() - 1;
    const YSeries c = chi.truncate(n);
    const YSeries denom = one(n) + y_series(n) - c.scaled(kKappa);
    return denom * chi.derivative() - (one(n) + c);
}

YSeries phi_series(ChiTable& table, int g, int order) {
    if (g < 0) throw DomainError("phi_series: genus must be >= 0");
    if (g == 0) return solve_chi0(order);
    const auto N = static_cast<std::size_t>(order);
    YSeries r(N);
    for (std::size_t i = 0; i <= N; ++i) {
        const int n = static_cast<int>(i) + 1;
        r[i] = table.chi_tilde(g, n) * kKappa * Rat(n);
    }
    return r;
}

TruncSeries<Rat> eval_kappa(const YSeries& s, const Rat& kappa) {
    TruncSeries<Rat> r(s.order());
    for (std::size_t i = 0; i <= s.order(); ++i) r[i] = s[i].eval(kappa);
    return r;
}

YSeries genus1_residual(ChiTable& table, int order) {
    const auto N = static_cast<std::size_t>(order);
    const YSeries chi = solve_chi0(order + 1);
    const YSeries psi = phi_series(table, 1, order);
    const YSeries c = chi.truncate(N);
    const YSeries lhs = (one(N) + y_series(N) - c.scaled(kKappa)) * psi;
    const YSeries rhs = chi.derivative().scaled(kKappa * kKappa * Rat(1, 2)) - YSeries::constant(N, kKappa * Rat(1, 12));
    return lhs - rhs;
}

YSeries phi_residual(ChiTable& table, int g, int order) {
    if (g < 1) throw DomainError("phi_residual: genus must be >= 1");
    const auto N = static_cast<std::size_t>(order);
    const int P = order + 2;
    std::vector<YSeries> phi;
    for (int h = 0; h <= g; ++h) phi.push_back(phi_series(table, h, P));

    const YSeries dg = phi[g].derivative().truncate(N);
    YSeries lhs = (one(N) + y_series(N)) * dg + phi[g].truncate(N) * Rat(2 * g - 1);
    YSeries rhs = phi[g - 1].derivative().derivative().scaled(kKappa * kKappa * Rat(1, 2));
    YSeries quad(N);
    for (int g1 = 0; g1 <= g; ++g1) quad += phi[g1].derivative().truncate(N) * phi[g - g1].truncate(N);
    rhs += quad.scaled(kKappa);
    return lhs - rhs;
}

CheckResult check_manin(int order) {
    CheckResult res;
    const TruncSeries<Rat> chi = eval_kappa(solve_chi0(order), Rat(1));
    const auto N = chi.order();
    TruncSeries<Rat> onep = TruncSeries<Rat>::constant(N, Rat(1)) + chi;
    TruncSeries<Rat> r = onep * series_log1p(chi) - chi * Rat(2) + TruncSeries<Rat>::variable(N);
    for (std::size_t i = 0; i <= N; ++i) {
        if (r[i] != 0) {
            res.ok = false;
            res.failures.push_back("manin residual at y^" + std::to_string(i) + ": " + to_string(r[i]));
            break;
        }
    }
    ChiTable& table = default_table();
    for (int n = 3; n <= order + 1; ++n) {
        const Rat want = table.chi_mbar(0, n) / Rat(factorial(n - 1));
        if (chi[static_cast<std::size_t>(n - 1)] != want) {
            res.ok = false;
            res.failures.push_back("coefficient of y^" + std::to_string(n - 1) + " is " +
                                   to_string(chi[static_cast<std::size_t>(n - 1)]) + ", expected " + to_string(want));
        }
    }
    return res;
}

CheckResult check_genus1(ChiTable& table, int order) {
    CheckResult res;
    const YSeries r = genus1_residual(table, order);
    if (!is_zero(r)) {
        res.ok = false;
        res.failures.push_back("genus 1 residual at " + first_nonzero(r));
    }
    return res;
}

CheckResult check_phi_hierarchy(ChiTable& table, int g_max, int order) {
    if (g_max < 1) throw DomainError("check_phi_hierarchy: g_max must be >= 1");
    CheckResult res;
    for (int g = 1; g <= g_max; ++g) {
        const YSeries r = phi_residual(table, g, order);
        if (!is_zero(r)) {
            res.ok = false;
            res.failures.push_back("g=" + std::to_string(g) + " residual at " + first_nonzero(r));
        }
        const YSeries phi = phi_series(table, g, order);
        for (std::size_t i = 0; i <= phi.order(); ++i) {
            const int n = static_cast<int>(i) + 1;
            if (phi[i].degree() != 3 * g - 2 + n) {
                res.ok = false;
                res.failures.push_back("g=" + std::to_string(g) + " degree of y^" + std::to_string(i) + " coefficient is " +
                                       std::to_string(phi[i].degree()));
            }
        }
    }
    return res;
}

bool verify_manin(int order) { return check_manin(order).ok; }
bool verify_genus1(int order) { return check_genus1(default_table(), order).ok; }
bool verify_phi_hierarchy(int g_max, int order) { return check_phi_hierarchy(default_table(), g_max, order).ok; }

}  // namespace mbar
