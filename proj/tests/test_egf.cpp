#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "changhee/egf.hpp"
#include "changhee/errors.hpp"
#include "oracle.hpp"

using namespace changhee;

namespace {

EgfSeries from_rationals(const std::vector<Rational>& v) {
    EgfSeries s(v.size() - 1);
    for (std::size_t n = 0; n < v.size(); ++n) s[n] = XLPoly(v[n]);
    return s;
}

EgfSeries exp_series(std::size_t order, long sign) {
    EgfSeries s(order);
    for (std::size_t n = 0; n <= order; ++n) s[n] = XLPoly(n % 2 == 1 ? sign : 1L);
    return s;
}

// (2+t)/2
EgfSeries half_two_plus_t(std::size_t order) {
    EgfSeries s(order);
    s[0] = XLPoly(1);
    s[1] = XLPoly(Rational(1, 2));
    return s;
}

// (-1)^n n!/2^n
EgfSeries changhee_numbers(std::size_t order) {
    EgfSeries s(order);
    for (unsigned n = 0; n <= order; ++n) s[n] = XLPoly(oracle::to_rational(oracle::changhee_number(n)));
    return s;
}

}  // namespace

TEST_CASE("egf_mul") {
    SUBCASE("e^t times e^-t is 1") {
        CHECK(egf_mul(exp_series(10, 1), exp_series(10, -1)) == EgfSeries::one(10));
    }
    SUBCASE("unit") {
        EgfSeries a(6);
        for (unsigned n = 0; n <= 6; ++n) {
            XLPoly p(1);
            for (unsigned i = 0; i < n; ++i) p = p * (XLPoly::x() - XLPoly::lambda() * Rational(static_cast<long>(i)));
            a[n] = p;
        }
        CHECK(egf_mul(a, EgfSeries::one(6)) == a);
    }
    SUBCASE("(2/(2+t))^2 against brute-force convolution") {
        // oracle: plain binomial convolution of the geometric-series numbers
        std::vector<oracle::Q> c(3);
        mpz_class binom[3][3] = {{1, 0, 0}, {1, 1, 0}, {1, 2, 1}};
        for (unsigned n = 0; n <= 2; ++n)
            for (unsigned k = 0; k <= n; ++k)
                c[n] += binom[n][k] * oracle::changhee_number(k) * oracle::changhee_number(n - k);
        CHECK(c[0] == 1);
        CHECK(c[1] == -1);
        CHECK(c[2] == oracle::q(3, 2));
        const auto sq = egf_mul(changhee_numbers(2), changhee_numbers(2));
        CHECK(sq == from_rationals({Rational(1), Rational(-1), Rational(3, 2)}));
    }
    SUBCASE("order mismatch is an error") {
        CHECK_THROWS_AS(egf_mul(EgfSeries::one(3), EgfSeries::one(4)), OrderMismatch);
    }
}

TEST_CASE("egf_mul matches the serial reference kernel") {
    oracle::Gen gen(5);
    for (int i = 0; i < 30; ++i) {
        const auto a = gen.series(8, 2), b = gen.series(8, 2);
        CHECK(egf_mul(a, b) == egf_mul_serial(a, b));
    }
}

TEST_CASE("egf_reciprocal") {
    CHECK(egf_reciprocal(half_two_plus_t(12)) == changhee_numbers(12));
    CHECK(egf_reciprocal(EgfSeries::one(5)) == EgfSeries::one(5));

    oracle::Gen gen(17);
    for (int i = 0; i < 25; ++i) {
        const auto a = gen.unit_series(8, 2);
        CHECK(egf_reciprocal(egf_reciprocal(a)) == a);
    }

    EgfSeries bad(3);
    CHECK_THROWS_AS(egf_reciprocal(bad), NonUnit);
    bad[0] = XLPoly::lambda();
    CHECK_THROWS_AS(egf_reciprocal(bad), NonUnit);
    bad[0] = XLPoly::x() + XLPoly(1);
    CHECK_THROWS_AS(egf_reciprocal(bad), NonUnit);
}

TEST_CASE("egf_pow") {
    oracle::Gen gen(23);
    const auto a = gen.series(6, 1);
    CHECK(egf_pow(a, 1) == a);
    CHECK(egf_pow(a, 0) == EgfSeries::one(6));
    CHECK(egf_pow(changhee_numbers(2), 2) == from_rationals({Rational(1), Rational(-1), Rational(3, 2)}));
    for (int t = 0; t < 10; ++t) {
        const auto b = gen.series(6, 1);
        const auto i = static_cast<unsigned>(gen.integer(0, 3)), j = static_cast<unsigned>(gen.integer(0, 3));
        CHECK(egf_pow(b, i + j) == egf_mul(egf_pow(b, i), egf_pow(b, j)));
    }
}

TEST_CASE("egf_log1p and egf_expm1") {
    const auto l = egf_log1p(6);
    CHECK(l[0].is_zero());
    CHECK(l[1] == XLPoly(1));
    CHECK(l[2] == XLPoly(-1));
    CHECK(l[3] == XLPoly(2));
    CHECK(l[4] == XLPoly(-6));
    const auto e = egf_expm1(6);
    CHECK(e[0].is_zero());
    CHECK(e[5] == XLPoly(1));
    CHECK(egf_compose(egf_expm1(10), egf_log1p(10)) == EgfSeries::t(10));
    CHECK(egf_compose(egf_log1p(10), egf_expm1(10)) == EgfSeries::t(10));
}

TEST_CASE("egf_compose") {
    oracle::Gen gen(31);
    const auto f = gen.series(7, 2);
    CHECK(egf_compose(f, EgfSeries::t(7)) == f);

    // e^t o log(1+t) = 1 + t
    EgfSeries one_plus_t = EgfSeries::one(9);
    one_plus_t[1] = XLPoly(1);
    CHECK(egf_compose(exp_series(9, 1), egf_log1p(9)) == one_plus_t);

    // Changhee numbers composed with e^t - 1 give the Euler numbers; the
    // oracle is the reciprocal of (e^t + 1)/2 expanded via exp.
    const auto euler = egf_compose(changhee_numbers(8), egf_expm1(8));
    const auto expected = oracle::euler(8, 0);
    for (unsigned n = 0; n <= 8; ++n) CHECK(euler[n] == XLPoly(oracle::to_rational(expected[n])));

    EgfSeries bad_inner = EgfSeries::t(4);
    bad_inner[0] = XLPoly(1);
    CHECK_THROWS_AS(egf_compose(f, egf_truncate(bad_inner, 4)), CompositionDomain);
}

TEST_CASE("composition is associative") {
    oracle::Gen gen(37);
    for (int i = 0; i < 12; ++i) {
        const auto f = gen.series(8, 1);
        const auto g = gen.zero_constant_series(8, 1);
        const auto h = gen.zero_constant_series(8, 1);
        CHECK(egf_compose(egf_compose(f, g), h) == egf_compose(f, egf_compose(g, h)));
    }
}

TEST_CASE("lambda_binomial_series") {
    SUBCASE("u = t, y = x gives the lambda-falling factorials") {
        const auto s = lambda_binomial_series(EgfSeries::t(6), XLPoly::x(), 6);
        for (unsigned n = 0; n <= 6; ++n) CHECK(s[n] == lambda_falling_of(XLPoly::x(), n));
    }
    SUBCASE("u = log(1+t), y = 1 at order 2") {
        const auto s = lambda_binomial_series(egf_log1p(2), XLPoly(1), 2);
        CHECK(s[0] == XLPoly(1));
        CHECK(s[1] == XLPoly(1));
        CHECK(s[2] == -XLPoly::lambda());
    }
    SUBCASE("y = 0 is the constant series") {
        CHECK(lambda_binomial_series(egf_log1p(5), XLPoly(), 5) == EgfSeries::one(5));
    }
    SUBCASE("nonzero constant term is rejected") {
        CHECK_THROWS_AS(lambda_binomial_series(EgfSeries::one(3), XLPoly::x(), 3), CompositionDomain);
    }
    SUBCASE("exponent law") {
        oracle::Gen gen(41);
        for (int i = 0; i < 10; ++i) {
            const auto u = gen.zero_constant_series(6, 1);
            const auto y1 = gen.xl_poly(2, 1), y2 = gen.xl_poly(2, 1);
            CHECK(lambda_binomial_series(u, y1 + y2, 6) ==
                  egf_mul(lambda_binomial_series(u, y1, 6), lambda_binomial_series(u, y2, 6)));
        }
    }
}

TEST_CASE("reciprocal round trip on random units") {
    oracle::Gen gen(43);
    for (int i = 0; i < 40; ++i) {
        const auto order = static_cast<std::size_t>(gen.integer(0, 12));
        const auto a = gen.unit_series(order, 2);
        CHECK(egf_mul(a, egf_reciprocal(a)) == EgfSeries::one(order));
    }
}

TEST_CASE("truncation coherence") {
    oracle::Gen gen(47);
    const std::size_t big = 9, small = 5;
    const auto a = gen.unit_series(big, 1), b = gen.series(big, 1);
    const auto g = gen.zero_constant_series(big, 1);
    auto cut = [&](const EgfSeries& s) { return egf_truncate(s, small); };

    CHECK(cut(egf_mul(a, b)) == egf_mul(cut(a), cut(b)));
    CHECK(cut(egf_reciprocal(a)) == egf_reciprocal(cut(a)));
    CHECK(cut(egf_pow(b, 3)) == egf_pow(cut(b), 3));
    CHECK(cut(egf_compose(b, g)) == egf_compose(cut(b), cut(g)));
    CHECK(cut(egf_log1p(big)) == egf_log1p(small));
    CHECK(cut(egf_expm1(big)) == egf_expm1(small));
    CHECK(cut(lambda_binomial_series(g, XLPoly::x(), big)) == lambda_binomial_series(g, XLPoly::x(), small));
    CHECK_THROWS_AS(egf_truncate(a, big + 1), OrderMismatch);
}
