#pragma once

#include <string>
#include <vector>

#include "mbar/chi_recursion.hpp"
#include "mbar/poly.hpp"
#include "mbar/series.hpp"

namespace mbar {

// Power series in y with polynomial-in-kappa coefficients.
using YSeries = TruncSeries<KPoly>;

// Genus-0 series chi(y, kappa) = y + sum_n n kappa y^{n-1} chi~_{0,n}, solved
// from (1 + y - kappa chi) chi' = 1 + chi with chi(0) = 0. Needs order >= 1.
YSeries solve_chi0(int order);

// kappa (1+chi) log(1+chi) - (kappa+1) chi + y
YSeries chi0_implicit_residual(const YSeries& chi);
// (1 + y - kappa chi) chi' - (1 + chi), at order N-1
YSeries chi0_derivative_residual(const YSeries& chi);

// phi_g = sum_{n>=1} n kappa y^{n-1} chi~_{g,n} read from the table, g >= 1.
// phi_0 is solve_chi0(order).
YSeries phi_series(ChiTable& table, int g, int order);

// Specialize kappa to a value.
TruncSeries<Rat> eval_kappa(const YSeries& s, const Rat& kappa);

// (1 + y - kappa chi) psi - (kappa^2/2 chi' - kappa/12), psi = phi_1.
YSeries genus1_residual(ChiTable& table, int order);
// (y+1) phi_g' + (2g-1) phi_g - kappa^2/2 phi_{g-1}'' - kappa sum phi_{g1}' phi_{g2}
YSeries phi_residual(ChiTable& table, int g, int order);

struct CheckResult {
    bool ok = true;
    std::vector<std::string> failures;
};

CheckResult check_manin(int order);
CheckResult check_genus1(ChiTable& table, int order);
CheckResult check_phi_hierarchy(ChiTable& table, int g_max, int order);

bool verify_manin(int order);
bool verify_genus1(int order);
bool verify_phi_hierarchy(int g_max, int order);

}  // namespace mbar
