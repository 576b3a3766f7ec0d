#include <doctest.h>

#include "gen.hpp"
#include "mbar/chi_recursion.hpp"
#include "mbar/errors.hpp"
#include "mbar/functional_eq.hpp"

using namespace mbar;

namespace {

const KPoly k1 = KPoly::var();

bool all_zero(const YSeries& s) {
    for (std::size_t i = 0; i <= s.order(); ++i)
        if (!s[i].is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("solve_chi0 low coefficients") {
    const YSeries chi = solve_chi0(12);
    CHECK(chi[0].is_zero());
    CHECK(chi[1] == KPoly(1));
    CHECK(chi[2] == KPoly{0, make_rat(1, 2)});
    CHECK(chi[3] == KPoly{0, make_rat(-1, 6), make_rat(1, 2)});
    CHECK_THROWS_AS(solve_chi0(0), DomainError);
}

TEST_CASE("solve_chi0 reproduces the recursion table") {
    ChiTable table;
    const YSeries chi = solve_chi0(12);
    for (int n = 3; n <= 13; ++n) CHECK(chi[static_cast<std::size_t>(n - 1)] == table.chi_tilde_quadratic(0, n) * k1 * Rat(n));
}

TEST_CASE("both genus 0 equations hold for the same series") {
    const YSeries chi = solve_chi0(12);
    CHECK(all_zero(chi0_implicit_residual(chi)));
    CHECK(all_zero(chi0_derivative_residual(chi)));
}

TEST_CASE("residuals detect a perturbed coefficient") {
    for (int trial = 0; trial < 10; ++trial) {
        YSeries chi = solve_chi0(10);
        const auto i = static_cast<std::size_t>(gen::integer(2, 10));
        KPoly bump = gen::kpoly(3);
        if (bump.is_zero()) bump = KPoly(1);
        chi[i] += bump;
        CHECK_FALSE(all_zero(chi0_implicit_residual(chi)));
        CHECK_FALSE(all_zero(chi0_derivative_residual(chi)));
    }
}

TEST_CASE("Manin specialization") {
    const TruncSeries<Rat> chi = eval_kappa(solve_chi0(12), Rat(1));
    CHECK(chi[2] == make_rat(1, 2));
    CHECK(chi[4] == make_rat(7, 24));
    CHECK(chi[9] == make_rat(153946, 362880));
    CHECK(verify_manin(12));
    CHECK(check_manin(12).failures.empty());
}

TEST_CASE("genus 1 identity") {
    ChiTable table;
    const YSeries psi = phi_series(table, 1, 8);
    CHECK(psi[0] == KPoly{0, make_rat(-1, 12), make_rat(1, 2)});
    CHECK(all_zero(genus1_residual(table, 8)));
    CHECK(verify_genus1(8));

    // psi(y,1) = sum chi(Mbar_{1,n}) y^{n-1}/(n-1)!
    const std::vector<Rat> row = {make_rat(5, 12), make_rat(1, 2),     make_rat(17, 12),   make_rat(35, 6),
                                  make_rat(389, 12), make_rat(1349, 6), make_rat(22489, 12), make_rat(36459, 2)};
    const TruncSeries<Rat> at1 = eval_kappa(psi, Rat(1));
    for (std::size_t i = 0; i < row.size(); ++i) CHECK(at1[i] * Rat(factorial(static_cast<long>(i))) == row[i]);
}

TEST_CASE("phi hierarchy through genus 3") {
    ChiTable table;
    for (int g = 1; g <= 3; ++g) CHECK(all_zero(phi_residual(table, g, 6)));
    const CheckResult res = check_phi_hierarchy(table, 3, 6);
    CHECK(res.ok);
    CHECK(res.failures.empty());
    CHECK(verify_phi_hierarchy(3, 6));
    CHECK_THROWS_AS(phi_residual(table, 0, 6), DomainError);
}

TEST_CASE("phi hierarchy at y^0 for genus 2, assembled by hand") {
    ChiTable t;
    // phi_g(0) = kappa chi~_{g,1}, phi_g'(0) = 2 kappa chi~_{g,2}, phi_g''(0) = 6 kappa chi~_{g,3}
    const KPoly lhs = k1 * t.chi_tilde(2, 2) * Rat(2) + k1 * t.chi_tilde(2, 1) * Rat(3);
    const KPoly phi1 = k1 * t.chi_tilde(1, 1);
    const KPoly dphi1 = k1 * t.chi_tilde(1, 2) * Rat(2);
    const KPoly ddphi1 = k1 * t.chi_tilde(1, 3) * Rat(6);
    const KPoly phi2 = k1 * t.chi_tilde(2, 1);
    // phi_0(0) = 0, phi_0'(0) = 1
    const KPoly rhs = k1 * k1 * ddphi1 * make_rat(1, 2) + k1 * (phi2 + dphi1 * phi1);
    CHECK(lhs == rhs);
    CHECK(phi_residual(t, 2, 6)[0].is_zero());
}

TEST_CASE("hierarchy rejects a corrupted table entry") {
    ChiTable t;
    t.insert(2, 3, t.chi_tilde_quadratic(2, 3) + KPoly(1), Provenance::Quadratic);
    CHECK_FALSE(check_phi_hierarchy(t, 2, 6).ok);
}

TEST_CASE("phi coefficient degrees") {
    ChiTable t;
    for (int g = 1; g <= 3; ++g) {
        const YSeries phi = phi_series(t, g, 5);
        for (std::size_t i = 0; i <= 5; ++i) CHECK(phi[i].degree() == 3 * g - 1 + static_cast<int>(i));
    }
}
