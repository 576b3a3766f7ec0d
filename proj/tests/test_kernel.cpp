#include <doctest.h>

#include "gen.hpp"
#include "mbar/errors.hpp"
#include "mbar/poly.hpp"
#include "mbar/rational.hpp"
#include "mbar/series.hpp"

using namespace mbar;

TEST_CASE("rationals stay in lowest terms") {
    Rat r = make_rat(6, -4);
    CHECK(r.get_num() == -3);
    CHECK(r.get_den() == 2);
    CHECK(to_string(r) == "-3/2");
    CHECK(to_string(make_rat(8, 4)) == "2");
    CHECK(parse_rat(" -3/2 ") == r);
    CHECK(parse_rat("+17") == Rat(17));
    CHECK_THROWS_AS(parse_rat("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rat("abc"), DomainError);
    CHECK_THROWS_AS(parse_rat("1/-2"), DomainError);
}

TEST_CASE("to_string round-trips") {
    for (int i = 0; i < 200; ++i) {
        Rat r = gen::rat(100000);
        CHECK(parse_rat(to_string(r)) == r);
    }
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == make_rat(-1, 2));
    CHECK(bernoulli(2) == make_rat(1, 6));
    CHECK(bernoulli(4) == make_rat(-1, 30));
    CHECK(bernoulli(12) == make_rat(-691, 2730));
    for (unsigned m = 1; m < 20; ++m) CHECK(bernoulli(2 * m + 1) == 0);
}

TEST_CASE("binomials and factorials") {
    CHECK(factorial(10) == 3628800);
    CHECK(double_factorial_odd(7) == 105);
    CHECK(double_factorial_odd(-1) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(-2, 3) == -4);
    CHECK(binomial(3, 5) == 0);
}

TEST_CASE("kpoly basics") {
    KPoly p{Rat(0), Rat(0), Rat(0)};
    CHECK(p.is_zero());
    CHECK(p.degree() == -1);
    KPoly chi20{make_rat(-1, 240), make_rat(13, 288), make_rat(-1, 6), make_rat(5, 24)};
    CHECK(chi20.to_string() == "-1/240 + 13/288 κ - 1/6 κ^2 + 5/24 κ^3");
    CHECK(KPoly{Rat(0), Rat(-1)}.to_string() == "-κ");
    CHECK(KPoly().to_string() == "0");
    CHECK(chi20.eval(1) == make_rat(119, 1440));
    CHECK(KPoly{Rat(1), Rat(2)}.shift(Rat(1)) == KPoly{Rat(3), Rat(2)});
}

TEST_CASE("integrate_kappa") {
    CHECK(integrate_kappa(KPoly(1)) == KPoly::monomial(1));
    CHECK(integrate_kappa(KPoly()).is_zero());
    KPoly in{make_rat(13, 288), make_rat(-1, 3), make_rat(5, 8)};
    KPoly out{Rat(0), make_rat(13, 288), make_rat(-1, 6), make_rat(5, 24)};
    CHECK(integrate_kappa(in) == out);
}

TEST_CASE("kpoly ring axioms and calculus on random inputs") {
    for (int i = 0; i < 100; ++i) {
        KPoly a = gen::kpoly(), b = gen::kpoly(), c = gen::kpoly();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a - a == KPoly());
        CHECK((a * b).derivative() == a.derivative() * b + a * b.derivative());
        CHECK(a.integrate().derivative() == a);
        KPoly a0 = a - KPoly(a[0]);
        CHECK(a0.derivative().integrate() == a0);
        Rat x = gen::rat();
        CHECK((a * b).eval(x) == a.eval(x) * b.eval(x));
    }
}

TEST_CASE("series_log1p and series_exp") {
    auto x = TruncSeries<Rat>::variable(3);
    auto l = series_log1p(x);
    CHECK(l[1] == 1);
    CHECK(l[2] == make_rat(-1, 2));
    CHECK(l[3] == make_rat(1, 3));
    CHECK(series_log1p(TruncSeries<Rat>(3)) == TruncSeries<Rat>(3));
    CHECK(l == log1p_x(3));
    auto e = series_exp(l);
    auto one = TruncSeries<Rat>::constant(3, 1);
    CHECK(e - one == x);
    CHECK_THROWS_AS(series_log1p(one), DomainError);
    CHECK_THROWS_AS(series_exp(one), DomainError);
}

TEST_CASE("exp and log1p are inverse on random series") {
    for (int i = 0; i < 30; ++i) {
        const std::size_t n = static_cast<std::size_t>(gen::integer(1, 8));
        auto s = gen::series(n, true);
        auto one = TruncSeries<Rat>::constant(n, 1);
        CHECK(series_exp(series_log1p(s)) == one + s);
        CHECK(series_log1p(series_exp(s) - one) == s);
    }
    for (int i = 0; i < 10; ++i) {
        auto s = gen::kseries(5, true);
        auto one = TruncSeries<KPoly>::constant(5, KPoly(1));
        CHECK(series_exp(series_log1p(s)) == one + s);
    }
}

TEST_CASE("series ring axioms") {
    for (int i = 0; i < 50; ++i) {
        auto a = gen::series(6), b = gen::series(6), c = gen::series(6);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (a[0] != 0) CHECK(a * series_inverse(a) == TruncSeries<Rat>::constant(6, 1));
        CHECK(a.integrate().derivative() == a);
    }
    auto a = gen::series(3);
    CHECK_THROWS_AS(a + gen::series(4), DomainError);
}

TEST_CASE("binomial series and composition") {
    auto b = binomial_series(-2, 4);
    CHECK(b[0] == 1);
    CHECK(b[1] == -2);
    CHECK(b[2] == 3);
    CHECK(b[4] == 5);
    CHECK(binomial_series(3, 5) * binomial_series(-3, 5) == TruncSeries<Rat>::constant(5, 1));
    // exp(log(1+x)) = 1+x
    TruncSeries<Rat> expx(6);
    for (std::size_t i = 0; i <= 6; ++i) expx[i] = Rat(1) / Rat(factorial(static_cast<unsigned>(i)));
    CHECK(series_compose(expx, log1p_x(6)) == binomial_series(1, 6));
}
