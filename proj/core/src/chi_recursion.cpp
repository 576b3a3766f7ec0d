#include "mbar/chi_recursion.hpp"

#include "mbar/errors.hpp"
#include "mbar/initial_data.hpp"

namespace mbar {

const char* to_string(Provenance p) {
    switch (p) {
        case Provenance::Base: return "base";
        case Provenance::Quadratic: return "quadratic";
        case Provenance::Linear: return "linear";
        case Provenance::GenusOperator: return "genus_operator";
    }
    return "unknown";
}

namespace {

// (c + kappa^2 d/dkappa) p
KPoly dilaton_op(const Rat& c, const KPoly& p) { return c * p + KPoly::monomial(2) * p.derivative(); }

}  // namespace

std::optional<KPoly> ChiTable::find(const std::map<Key, std::pair<KPoly, Provenance>>& m, Key k) const {
    std::lock_guard lock(mutex_);
    auto it = m.find(k);
    if (it == m.end()) return std::nullopt;
    return it->second.first;
}

KPoly ChiTable::store(std::map<Key, std::pair<KPoly, Provenance>>& m, Key k, KPoly p, Provenance prov) {
    std::lock_guard lock(mutex_);
    auto [it, inserted] = m.emplace(k, std::make_pair(std::move(p), prov));
    return it->second.first;
}

KPoly ChiTable::add_point(int g, int n, const KPoly& p) {
    KPoly r = dilaton_op(Rat(2 - 2 * g - n), p) + KPoly::monomial(1, Rat(n)) * p;
    return r * Rat(1, n + 1);
}

KPoly ChiTable::chi_tilde(int g, int n) {
    require_stable(g, n);
    if (auto hit = find(table_, {g, n})) return *hit;
    KPoly p;
    Provenance prov = Provenance::Linear;
    if (g == 0 && n == 3) {
        p = KPoly(Rat(1, 6));
        prov = Provenance::Base;
    } else if (g == 1 && n == 1) {
        p = KPoly{Rat(-1, 12), Rat(1, 2)};
        prov = Provenance::Base;
    } else if (g == 2 && n == 0) {
        p = chi_tilde_quadratic(2, 0);
        prov = Provenance::Quadratic;
    } else if (g >= 3 && n == 0) {
        return chi_tilde_g0(g);
    } else {
        p = add_point(g, n - 1, chi_tilde(g, n - 1));
    }
    return store(table_, {g, n}, std::move(p), prov);
}

KPoly ChiTable::chi_tilde_linear(int g, int n) {
    require_stable(g, n);
    if (g == 0 && n == 3) return KPoly(Rat(1, 6));
    if (g == 1 && n == 1) return KPoly{Rat(-1, 12), Rat(1, 2)};
    if (n == 0) {
        if (g == 2) return chi_tilde_quadratic(2, 0);
        return chi_tilde_g0(g);
    }
    // Walk up from the base row without consulting the production memo.
    const int n0 = g == 0 ? 3 : (g == 1 ? 1 : 0);
    KPoly p = chi_tilde_linear(g, n0);
    for (int m = n0; m < n; ++m) p = add_point(g, m, p);
    return p;
}

KPoly ChiTable::chi_tilde_quadratic(int g, int n) {
    require_stable(g, n);
    if (auto hit = find(quadratic_, {g, n})) return *hit;
    KPoly integrand;
    if (is_stable(g - 1, n + 2)) {
        integrand += Rat((n + 2) * (n + 1)) * chi_tilde_quadratic(g - 1, n + 2);
    }
    for (int g1 = 0; g1 <= g; ++g1) {
        for (int n1 = 1; n1 <= n + 1; ++n1) {
            const int g2 = g - g1;
            const int n2 = n + 2 - n1;
            if (!is_stable(g1, n1) || !is_stable(g2, n2)) continue;
            integrand += Rat(n1 * n2) * (chi_tilde_quadratic(g1, n1) * chi_tilde_quadratic(g2, n2));
        }
    }
    KPoly p = integrate_kappa(integrand) * Rat(1, 2);
    p += KPoly(chi_open(g, n) / Rat(factorial(static_cast<unsigned>(n))));
    return store(quadratic_, {g, n}, std::move(p), Provenance::Quadratic);
}

KPoly ChiTable::chi_tilde_g0(int g) {
    if (g < 3) throw DomainError("chi_tilde_g0 requires g >= 3, got g = " + std::to_string(g));
    if (auto hit = find(table_, {g, 0})) return *hit;
    const KPoly prev = chi_tilde(g - 1, 0);
    const KPoly inner = dilaton_op(Rat(4 - 2 * g), prev);
    KPoly integrand = dilaton_op(Rat(3 - 2 * g) - Rat(1, 6), inner) + KPoly::monomial(1, 2) * inner;
    for (int r = 2; r <= g - 2; ++r) {
        integrand += dilaton_op(Rat(2 - 2 * r), chi_tilde(r, 0)) *
                     dilaton_op(Rat(2 - 2 * g + 2 * r), chi_tilde(g - r, 0));
    }
    const unsigned twog = static_cast<unsigned>(2 * g);
    KPoly p = integrate_kappa(integrand) * Rat(1, 2);
    p += KPoly(bernoulli(twog) / Rat(2 * g * (2 * g - 2)));
    return store(table_, {g, 0}, std::move(p), Provenance::GenusOperator);
}

RefinedChi ChiTable::chi_refined(int g, int n) { return {chi_tilde(g, n), 2 - 2 * g - n}; }

Rat ChiTable::chi_mbar(int g, int n) {
    return Rat(factorial(static_cast<unsigned>(n))) * chi_tilde(g, n).eval(Rat(1));
}

Rat ChiTable::coeff(int g, int n, int k) {
    if (!is_stable(g, n) || k < 0) return 0;
    return chi_tilde(g, n)[static_cast<std::size_t>(k)];
}

TruncSeries<KPoly> ChiTable::chi_point_generating(int g, int n_max, bool weighted) {
    if (g < 0 || n_max < 0) throw DomainError("chi_point_generating: need g >= 0 and n_max >= 0");
    const int top = 2 * g - 2 + n_max;
    if (top < 1) throw DomainError("chi_point_generating: no stable (g,n) with n <= n_max");
    TruncSeries<KPoly> s(static_cast<std::size_t>(top));
    for (int n = 0; n <= n_max; ++n) {
        if (!is_stable(g, n)) continue;
        KPoly p = chi_tilde(g, n);
        if (weighted) p *= Rat(factorial(static_cast<unsigned>(n)));
        s[static_cast<std::size_t>(2 * g - 2 + n)] = p;
    }
    return s;
}

CoefficientFormulaReport ChiTable::compare_g0_coefficient_formula(int g_max) {
    CoefficientFormulaReport report;
    std::map<int, KPoly> rows;
    auto a = [&](int r, int k) -> Rat {
        if (k < 0) return 0;
        auto it = rows.find(r);
        if (it == rows.end()) it = rows.emplace(r, chi_tilde(r, 0)).first;
        return it->second[static_cast<std::size_t>(k)];
    };
    std::map<std::pair<int, int>, Rat> formula;
    auto af = [&](int r, int k) -> Rat {
        if (k < 0) return 0;
        if (r == 2) return a(2, k);
        auto it = formula.find({r, k});
        return it == formula.end() ? Rat(0) : it->second;
    };
    for (int g = 3; g <= g_max; ++g) {
        for (int k = 0; k <= 3 * g - 3; ++k) {
            Rat v;
            if (k == 0) {
                v = bernoulli(static_cast<unsigned>(2 * g)) / Rat(2 * g * (2 * g - 2));
            } else {
                const Rat c1 = Rat(17, 6) - Rat(2 * g);
                const Rat c2 = Rat(4 - 2 * g);
                Rat s = c1 * c2 * af(g - 1, k - 1);
                s += (Rat(k) * c2 + Rat(k - 2) * c1) * af(g - 1, k - 2);
                s += Rat(k * k - 3 * k) * af(g - 1, k - 3);
                for (int r = 2; r <= g - 2; ++r) {
                    const Rat p = Rat(2 - 2 * r);
                    const Rat q = Rat(2 - 2 * g + 2 * r);
                    for (int l = 0; l <= k - 1; ++l) s += p * q * af(r, l) * af(g - r, k - 1 - l);
                    for (int l = 0; l <= k - 2; ++l) {
                        const int m = k - 2 - l;
                        s += (Rat(m) * p + Rat(l) * q) * af(r, l) * af(g - r, m);
                    }
                    for (int l = 0; l <= k - 3; ++l) {
                        const int m = k - 3 - l;
                        s += Rat(l * m) * af(r, l) * af(g - r, m);
                    }
                }
                v = s / Rat(2 * k);
            }
            formula[{g, k}] = v;
            if (v != a(g, k)) {
                report.agree = false;
                report.mismatches.emplace_back(g, k);
            }
        }
    }
    return report;
}

std::optional<Provenance> ChiTable::provenance(int g, int n) const {
    std::lock_guard lock(mutex_);
    auto it = table_.find({g, n});
    if (it == table_.end()) return std::nullopt;
    return it->second.second;
}

std::map<std::pair<int, int>, std::pair<KPoly, Provenance>> ChiTable::snapshot() const {
    std::lock_guard lock(mutex_);
    return table_;
}

void ChiTable::insert(int g, int n, const KPoly& p, Provenance prov) {
    require_stable(g, n);
    store(table_, {g, n}, p, prov);
}

ChiTable& default_table() {
    static ChiTable table;
    return table;
}

}  // namespace mbar
