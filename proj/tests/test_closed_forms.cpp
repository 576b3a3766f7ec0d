#include <doctest.h>

#include <algorithm>

#include "gen.hpp"
#include "mbar/chi_recursion.hpp"
#include "mbar/closed_forms.hpp"
#include "mbar/errors.hpp"

using namespace mbar;

namespace {

bool has(const std::vector<BlockMismatch>& v, const std::string& fam) {
    return std::any_of(v.begin(), v.end(), [&](const BlockMismatch& b) { return b.family == fam; });
}

}  // namespace

TEST_CASE("elementary symmetric polynomials") {
    CHECK(elem_sym(0, {}) == 1);
    CHECK(elem_sym(0, int_range(1, 5)) == 1);
    CHECK(elem_sym(2, int_range(1, 3)) == 11);
    CHECK(elem_sym(-1, int_range(1, 3)) == 0);
    CHECK(elem_sym(4, int_range(1, 3)) == 0);
    // e_l(1..k-1) are unsigned Stirling numbers of the first kind
    CHECK(elem_sym(2, int_range(1, 4)) == 35);
    for (int i = 0; i < 20; ++i) {
        std::vector<Rat> v;
        for (int j = 0; j < 5; ++j) v.push_back(gen::rat());
        // prod (1 + v_i) = sum_l e_l
        Rat prod = 1, sum = 0;
        for (const auto& x : v) prod *= 1 + x;
        for (int l = 0; l <= 5; ++l) sum += elem_sym(l, v);
        CHECK(prod == sum);
    }
}

TEST_CASE("ExpPolyInS expansion") {
    // e^{s+1} = 1 + x
    CHECK(ExpPolyInS({{1, SPoly(1)}}).to_x_series(4) == binomial_series(1, 4));
    // s + 1 = log(1+x)
    CHECK(ExpPolyInS({{0, SPoly{Rat(1), Rat(1)}}}).to_x_series(6) == log1p_x(6));
    ExpPolyInS a({{2, SPoly{Rat(1), Rat(3)}}, {-1, SPoly::monomial(2)}});
    CHECK(a.derivative().to_x_series(6) ==
          [&] {
              // d/ds = (1+x) d/dx
              auto f = a.to_x_series(7).derivative();
              return f + f.shift_up();
          }());
}

TEST_CASE("s-space ODE solver") {
    // y' - 2y = 0 with y(-1) = 0 forces y = 0
    CHECK(solve_s_ode(ExpPolyInS(), -2).blocks().empty());
    // y' = 1, y(-1) = 0  =>  y = s + 1
    CHECK(solve_s_ode(ExpPolyInS({{0, SPoly(1)}}), 0) == ExpPolyInS({{0, SPoly{Rat(1), Rat(1)}}}));
    auto y = solve_s_ode(ExpPolyInS({{3, SPoly{Rat(2), Rat(-1), Rat(5)}}}), 1);
    CHECK(y.at_minus_one() == 0);
    CHECK(y.derivative() + y * Rat(1) == ExpPolyInS({{3, SPoly{Rat(2), Rat(-1), Rat(5)}}}));
}

TEST_CASE("A_k coefficients") {
    CHECK(a_k_series(0, 5)[3] == make_rat(1, 6));
    CHECK(a_k_series(1, 5)[4] == make_rat(1, 8));
    CHECK(a_k_series(2, 6)[5] == make_rat(1, 8));
    ChiTable t;
    for (int k = 0; k <= 11; ++k) {
        auto s = a_k_series(k, 14);
        auto o = a_k_series_ode(k, 14);
        CHECK(s == o);
        for (int n = 0; n <= 14; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            CHECK(s[static_cast<std::size_t>(n)] == t.coeff(0, n, k));
        }
    }
}

TEST_CASE("printed s-expansions of A_0 .. A_4") {
    const auto h = [](long p, long q) { return make_rat(p, q); };
    CHECK(a_k_closed_form(2) ==
          ExpPolyInS({{0, SPoly{h(1, 2), h(1, 2)}}, {1, SPoly{h(0, 1), h(1, 1), h(1, 1)}},
                      {2, SPoly{h(0, 1), h(0, 1), h(1, 2), h(1, 2)}}}));
    CHECK(a_k_closed_form(3) ==
          ExpPolyInS({{-1, SPoly(h(1, 6))},
                      {0, SPoly{h(1, 2), h(3, 2), h(1, 2)}},
                      {1, SPoly{h(0, 1), h(1, 1), h(5, 2), h(1, 1)}},
                      {2, SPoly{h(0, 1), h(0, 1), h(1, 2), h(7, 6), h(1, 2)}}}));
    CHECK(a_k_closed_form(4) ==
          ExpPolyInS({{-2, SPoly(h(-1, 24))},
                      {-1, SPoly{h(1, 2), h(1, 3)}},
                      {0, SPoly{h(1, 2), h(3, 1), h(11, 4), h(1, 2)}},
                      {1, SPoly{h(0, 1), h(1, 1), h(9, 2), h(13, 3), h(1, 1)}},
                      {2, SPoly{h(0, 1), h(0, 1), h(1, 2), h(2, 1), h(47, 24), h(1, 2)}}}));
}

TEST_CASE("genus 0 audit: the (1+x)^{-m} form is exact, the flipped reading is not") {
    auto audit = audit_genus0_blocks(10);
    CHECK(!has(audit, "A"));
    CHECK(has(audit, "A_flipped"));
}

TEST_CASE("B_k coefficients") {
    CHECK(b_k_series(0, 3)[1] == make_rat(-1, 12));
    CHECK(b_k_series(1, 3)[1] == make_rat(1, 2));
    CHECK(b_k_series(2, 4)[3] == make_rat(-5, 8));
    ChiTable t;
    for (int k = 0; k <= 12; ++k) {
        auto s = b_k_series(k, 12);
        for (int n = 1; n <= 12; ++n) {
            CAPTURE(k);
            CAPTURE(n);
            CHECK(s[static_cast<std::size_t>(n)] == t.coeff(1, n, k));
        }
        CHECK(s[0] == 0);
    }
}

TEST_CASE("genus 1 audit flags exactly the misprinted blocks") {
    auto audit = audit_genus1_blocks(10);
    CHECK(!has(audit, "c_corrected"));
    CHECK(!has(audit, "d_corrected"));
    CHECK(!has(audit, "d_tilde"));
    for (const auto& b : audit) {
        CAPTURE(b.family);
        CAPTURE(b.k);
        CAPTURE(b.exponent);
        if (b.family == "c") CHECK(b.exponent < 0);
        if (b.family == "d") CHECK(b.exponent == -1);
    }
    // d_{k,-1} first goes wrong at k = 3 (the extra j = k - l term is nonzero)
    CHECK(std::find(audit.begin(), audit.end(), BlockMismatch{"d", 3, -1}) != audit.end());
    CHECK(std::find(audit.begin(), audit.end(), BlockMismatch{"c", 2, -2}) != audit.end());
}

TEST_CASE("A_{g,k}^p boundary cases") {
    CHECK(a_gkp_series(2, 3, 3, 4)[0] == 1);
    CHECK(a_gkp_series(3, 4, 4, 4) == binomial_series(-4, 4));
    for (int p = 1; p <= 3; ++p) {
        for (int k = 0; k < p; ++k) CHECK(a_gkp_series(2, k, p, 5) == TruncSeries<Rat>(5));
    }
    CHECK_THROWS_AS(a_gkp_series(1, 2, 0, 3), DomainError);
    CHECK_THROWS_AS(a_gkp_series(2, 2, 4, 3), DomainError);
    CHECK(a_gkp_series(2, 4, 0, 5)[0] == 0);
}

TEST_CASE("A_{g,k}^p printed forms are exact") {
    for (int g = 2; g <= 4; ++g) CHECK(audit_gkp_blocks(g, 3 * g + 3).empty());
}

TEST_CASE("A_{g,k}^p assembly reproduces a_{g,n}^k") {
    ChiTable t;
    const std::pair<int, int> cases[] = {{2, 8}, {3, 6}};
    for (auto [g, nmax] : cases) {
        for (int k = 0; k <= 3 * g - 3 + nmax; ++k) {
            TruncSeries<Rat> total(static_cast<std::size_t>(nmax));
            for (int p = 0; p <= 3 * g - 3; ++p) total += a_gkp_series(g, k, p, nmax) * t.coeff(g, 0, p);
            for (int n = 0; n <= nmax; ++n) {
                CAPTURE(g);
                CAPTURE(k);
                CAPTURE(n);
                CHECK(total[static_cast<std::size_t>(n)] == t.coeff(g, n, k));
            }
        }
    }
    auto a21 = TruncSeries<Rat>(2);
    for (int p = 0; p <= 3; ++p) a21 += a_gkp_series(2, 4, p, 2) * t.coeff(2, 0, p);
    CHECK(a21[1] == make_rat(5, 8));
}

TEST_CASE("Shor polynomials") {
    CHECK(shor_q(1, 0) == XPoly(1));
    CHECK(shor_q(2, 0) == XPoly{Rat(1), Rat(1)});
    CHECK(shor_q(2, 1) == XPoly(1));
    CHECK(shor_q(3, 1) == XPoly{Rat(4), Rat(3)});
    CHECK(shor_q(3, 1).eval(Rat(-1)) == 1);
    CHECK(shor_q(5, -1).is_zero());
    CHECK(shor_q(1, 3).is_zero());
    for (int n = 1; n <= 12; ++n) {
        XPoly sum;
        for (int k = 0; k <= n - 1; ++k) sum += shor_q(n, k);
        XPoly want(1);
        for (int i = 0; i < n - 1; ++i) want *= XPoly{Rat(n), Rat(1)};
        CHECK(sum == want);
    }
}

TEST_CASE("Shor values against genus 0 coefficients") {
    ChiTable t;
    for (int n = 3; n <= 12; ++n) {
        for (int k = 0; k <= n - 3; ++k) {
            Rat lhs = Rat(factorial(static_cast<unsigned>(n))) * t.coeff(0, n, k);
            if ((k + n + 1) % 2 == 1) lhs = -lhs;
            CHECK(lhs == shor_q(n - 1, k + 1).eval(Rat(-1)));
            CHECK(lhs == ramanujan_psi(k + 2, n - 2, Rat(n - 2)));
        }
    }
}

TEST_CASE("Ramanujan polynomials") {
    CHECK(ramanujan_psi(2, 2, Rat(2)) == 1);
    CHECK(ramanujan_psi(1, 0, gen::rat()) == 1);
    CHECK(ramanujan_psi(3, 3, Rat(3)) == 10);
    CHECK_THROWS_AS(ramanujan_psi(0, 3, Rat(1)), DomainError);
    CHECK_THROWS_AS(ramanujan_psi(5, 3, Rat(1)), DomainError);
    // Berndt recursion at random rational points; psi_0 and psi_{r+1}(r-1) vanish
    auto psi = [](int k, int r, const Rat& x) -> Rat {
        if (k < 1 || k > r + 1) return 0;
        return ramanujan_psi(k, r, x);
    };
    for (int trial = 0; trial < 100; ++trial) {
        const Rat x = gen::rat(50);
        const int r = static_cast<int>(gen::integer(1, 10));
        const int k = static_cast<int>(gen::integer(1, r + 1));
        CHECK(psi(k, r, x) == (x - Rat(r + k - 1)) * psi(k, r - 1, x) + Rat(r + k - 2) * psi(k - 1, r - 1, x));
    }
}

TEST_CASE("chi~_{g,n} from the closed forms") {
    ChiTable t;
    for (int n = 3; n <= 9; ++n) CHECK(chi_tilde_closed_form(0, n, t) == t.chi_tilde_linear(0, n));
    for (int n = 1; n <= 7; ++n) CHECK(chi_tilde_closed_form(1, n, t) == t.chi_tilde_linear(1, n));
    for (int n = 0; n <= 5; ++n) CHECK(chi_tilde_closed_form(2, n, t) == t.chi_tilde(2, n));
    CHECK_THROWS_AS(chi_tilde_closed_form(1, 0, t), DomainError);
}
