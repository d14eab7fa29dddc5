// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "changhee/egf.hpp"
#include "changhee/identities.hpp"
#include "changhee/padic.hpp"
#include "changhee/sequences.hpp"
#include "oracle.hpp"

using namespace changhee;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream note;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) note << what;
        ok = ok && cond;
    }
};

struct Criterion {
    int number;
    std::string title;
    double limit_s;  // 0 = no runtime bound
    std::function<void(Outcome&)> body;
};

IdentityParams with_d(unsigned d) { return {std::nullopt, d, std::nullopt}; }
IdentityParams with_r(unsigned r) { return {r, std::nullopt, std::nullopt}; }

void check_identity(Outcome& o, IdentityTag tag, unsigned max_n, const IdentityParams& params = {}) {
    const auto rep = verify(tag, max_n, params);
    std::string label(identity_name(tag));
    if (params.r) label += " r=" + std::to_string(*params.r);
    if (params.d) label += " d=" + std::to_string(*params.d);
    if (params.k) label += " k=" + std::to_string(*params.k);
    if (!rep.passed) label += " fails at n=" + std::to_string(rep.witness->n);
    o.require(rep.passed, label);
}

void ac1(Outcome& o) {
    const auto ch = deg_changhee2_table(2);
    o.require(eval_x(ch[0], Rational(0)) == LambdaPoly(1), "Ch_0");
    o.require(eval_x(ch[1], Rational(0)) == LambdaPoly(Rational(-1, 2)), "Ch_1");
    o.require(eval_x(ch[2], Rational(0)) == LambdaPoly({Rational(1, 2), Rational(1, 2)}), "Ch_2");
}

void ac2(Outcome& o) {
    check_identity(o, IdentityTag::T2_2, 24);
    check_identity(o, IdentityTag::T2_3, 24);
    const auto ch = deg_changhee2_table(24);
    const auto de = deg_euler_table(24);
    o.require(stirling1_transform(stirling2_transform(ch)) == ch, "S1 after S2 on Ch");
    o.require(stirling2_transform(stirling1_transform(de)) == de, "S2 after S1 on E");
}

void ac3(Outcome& o) {
    for (auto tag : {IdentityTag::T2_4, IdentityTag::T2_5, IdentityTag::T2_7}) check_identity(o, tag, 24);
    for (unsigned d : {1u, 3u, 5u}) check_identity(o, IdentityTag::T2_8, 16, with_d(d));
}

void ac4(Outcome& o) {
    for (unsigned d : {1u, 3u, 5u}) check_identity(o, IdentityTag::T2_6_DERIVED, 12, with_d(d));
    const auto printed = verify(IdentityTag::T2_6_PRINTED, 12, with_d(3));
    o.require(!printed.passed && printed.witness.has_value(), "printed form should fail at d=3");
    if (printed.witness) {
        o.require(printed.witness->n == 1, "witness n");
        o.require(printed.witness->lhs == XLPoly(Rational(-1, 2)), "witness lhs");
        o.require(printed.witness->rhs == XLPoly(Rational(-3, 2)), "witness rhs");
    }
}

void ac5(Outcome& o) {
    for (unsigned r = 1; r <= 3; ++r) {
        for (auto tag : {IdentityTag::T2_9, IdentityTag::T2_10, IdentityTag::T2_11, IdentityTag::T2_12,
                         IdentityTag::R_REMARK})
            check_identity(o, tag, 12, with_r(r));
        for (unsigned k = 0; k <= r; ++k) check_identity(o, IdentityTag::T2_13, 12, {r, std::nullopt, k});
        // three-way: both sides of T2_11 against the order-r degenerate Euler polynomials
        const auto target = deg_euler_r_table(12, r);
        const auto ch_r = changhee_r_table(12, r);
        const auto s2d = stirling2_deg_triangle(12);
        for (unsigned n = 0; n <= 12; ++n) {
            XLPoly side;
            for (unsigned m = 0; m <= n; ++m) side += ch_r[m] * s2d[n][m];
            o.require(side == target[n], "T2_11 three-way at n=" + std::to_string(n));
        }
    }
}

void ac6(Outcome& o) {
    const auto sum = stirling2_deg_triangle(16);
    const auto series = stirling2_deg_triangle_series(16);
    o.require(sum == series, "sum vs series");
    for (unsigned m = 0; m <= 16; ++m)
        for (unsigned n = 0; n <= m; ++n)
            o.require(sum[m][n].eval(Rational(0)) == stirling2(m, n), "lambda -> 0 gives S2");
    check_identity(o, IdentityTag::EQ45_VS_EQ43, 16);
    for (unsigned r = 1; r <= 3; ++r) check_identity(o, IdentityTag::EQ51, 12, with_r(r));
}

void ac7(Outcome& o) {
    for (auto tag : {IdentityTag::LIMIT_CH2, IdentityTag::LIMIT_EULER, IdentityTag::LIMIT_KKS})
        check_identity(o, tag, 16);
    // classical numbers against the geometric series 1/(1 + t/2)
    const auto ch = changhee_table(16);
    oracle::Ops geom(17);
    for (std::size_t n = 0; n <= 16; ++n) geom[n] = n == 0 ? oracle::Q(1) : oracle::Q(-geom[n - 1] / 2);
    const auto geom_egf = oracle::to_egf(geom);
    for (unsigned n = 0; n <= 16; ++n) {
        const Rational value = eval_x(ch[n], Rational(0)).constant_term();
        o.require(value == oracle::to_rational(geom_egf[n]), "Ch_n vs geometric series");
        o.require(value == oracle::to_rational(oracle::changhee_number(n)), "Ch_n vs closed form");
    }
}

void ac8(Outcome& o) {
    const auto eu = euler_table(6);
    const auto ch = changhee_table(6);
    const auto de = deg_euler_table(6);
    auto number = [](const XLPoly& p, long l) { return eval_x(eval_lambda(p, Rational(l)), Rational(0)).constant_term(); };
    for (unsigned p : {3u, 5u})
        for (unsigned n = 0; n <= 6; ++n) {
            std::vector<Integrand> fs{Integrand::monomial(n), Integrand::falling(n)};
            std::vector<Rational> targets{number(eu[n], 0), number(ch[n], 0)};
            for (long l : {1L, 2L, 5L}) {
                fs.push_back(Integrand::lambda_falling(n, l));
                targets.push_back(number(de[n], l));
            }
            for (std::size_t i = 0; i < fs.size(); ++i) {
                Integer previous;
                for (unsigned N = 1; N <= 6; ++N) {
                    const auto level = FermionicLevel::make(p, N);
                    const Integer s = fermionic_sum(level, fs[i]);
                    const auto tag = std::string(integrand_name(fs[i].kind)) + " n=" + std::to_string(n) +
                                     " p=" + std::to_string(p) + " N=" + std::to_string(N);
                    o.require(padic_valuation(Rational(s) - targets[i], p).at_least(N), "congruence " + tag);
                    if (N > 1) o.require(padic_valuation(Rational(Integer(s - previous)), p).at_least(N - 1), "inter-level " + tag);
                    previous = s;
                }
            }
        }
}

void ac9(Outcome& o) {
    oracle::Gen gen(20261017);
    int cases = 0;
    for (int i = 0; i < 200; ++i) {
        const auto order = static_cast<std::size_t>(gen.integer(0, 12));
        const auto a = gen.unit_series(order, 1);
        o.require(egf_mul(a, egf_reciprocal(a)) == EgfSeries::one(order), "reciprocal round trip");
        o.require(egf_reciprocal(egf_reciprocal(a)) == a, "double reciprocal");
        ++cases;
    }
    for (int i = 0; i < 200; ++i) {
        const auto order = static_cast<std::size_t>(gen.integer(0, 12));
        const auto f = gen.series(order, 1);
        const auto back = egf_compose(egf_compose(f, egf_log1p(order)), egf_expm1(order));
        o.require(back == f, "compose with log1p then expm1");
        ++cases;
    }
    for (int i = 0; i < 150; ++i) {
        const auto order = static_cast<std::size_t>(gen.integer(0, 12));
        const auto u = gen.zero_constant_series(order, 1);
        const auto y1 = gen.xl_poly(2, 1), y2 = gen.xl_poly(2, 1);
        o.require(lambda_binomial_series(u, y1 + y2, order) ==
                      egf_mul(lambda_binomial_series(u, y1, order), lambda_binomial_series(u, y2, order)),
                  "lambda binomial exponent law");
        ++cases;
    }
    o.require(cases >= 500, "case count");
    o.note << (o.ok ? "" : "; ") << cases << " cases";
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "Ch_{0,1,2} numbers", 1, ac1},
        {2, "degenerate Euler <-> Changhee Stirling transforms, n <= 24", 10, ac2},
        {3, "expansion, complementarity, shift identities", 30, ac3},
        {4, "distribution formula adjudication", 0, ac4},
        {5, "order-r suite, r <= 3, n <= 12", 60, ac5},
        {6, "degenerate Stirling routes and order-r closed form", 0, ac6},
        {7, "lambda -> 0 limits and classical Changhee numbers", 0, ac7},
        {8, "fermionic p-adic sums, p in {3,5}, n, N <= 6", 60, ac8},
        {9, "kernel properties on randomized series", 0, ac9},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Outcome o;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.body(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_s > 0 && secs >= c.limit_s) o.require(false, "over the time limit");
        failed += !o.ok;
        std::printf("[%s] AC%d %s (%.2fs%s%s)%s%s\n", o.ok ? "PASS" : "FAIL", c.number, c.title.c_str(), secs,
                    c.limit_s > 0 ? ", limit " : "", c.limit_s > 0 ? std::to_string(static_cast<int>(c.limit_s)).append("s").c_str() : "",
                    o.note.str().empty() ? "" : ": ", o.note.str().c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
