#include "changhee/identities.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <string>
#include <utility>

#include "changhee/errors.hpp"
#include "changhee/padic.hpp"
#include "changhee/sequences.hpp"

namespace changhee {

namespace {

constexpr std::array<std::pair<IdentityTag, std::string_view>, 22> kNames{{
    {IdentityTag::EQ12A, "eq12a"},
    {IdentityTag::EQ12B, "eq12b"},
    {IdentityTag::T2_1, "t2_1"},
    {IdentityTag::T2_2, "t2_2"},
    {IdentityTag::T2_3, "t2_3"},
    {IdentityTag::T2_4, "t2_4"},
    {IdentityTag::T2_5, "t2_5"},
    {IdentityTag::T2_6_PRINTED, "t2_6_printed"},
    {IdentityTag::T2_6_DERIVED, "t2_6_derived"},
    {IdentityTag::T2_7, "t2_7"},
    {IdentityTag::T2_8, "t2_8"},
    {IdentityTag::T2_9, "t2_9"},
    {IdentityTag::T2_10, "t2_10"},
    {IdentityTag::T2_11, "t2_11"},
    {IdentityTag::T2_12, "t2_12"},
    {IdentityTag::EQ51, "eq51"},
    {IdentityTag::T2_13, "t2_13"},
    {IdentityTag::R_REMARK, "r_remark"},
    {IdentityTag::EQ45_VS_EQ43, "eq45_vs_eq43"},
    {IdentityTag::LIMIT_CH2, "limit_ch2"},
    {IdentityTag::LIMIT_EULER, "limit_euler"},
    {IdentityTag::LIMIT_KKS, "limit_kks"},
}};

using Seq = std::vector<XLPoly>;

IdentityReport compare(IdentityTag tag, unsigned max_n, const IdentityParams& params, const Seq& lhs,
                       const Seq& rhs) {
    IdentityReport report{tag, max_n, params, true, std::nullopt};
    for (unsigned n = 0; n <= max_n; ++n) {
        if (lhs[n] != rhs[n]) {
            report.passed = false;
            report.witness = Witness{n, lhs[n], rhs[n]};
            break;
        }
    }
    return report;
}

Seq at_x(const Seq& seq, const Rational& v) {
    Seq out;
    out.reserve(seq.size());
    for (const auto& p : seq) out.emplace_back(eval_x(p, v));
    return out;
}

Seq at_lambda(const Seq& seq, const Rational& v) {
    Seq out;
    out.reserve(seq.size());
    for (const auto& p : seq) out.push_back(eval_lambda(p, v));
    return out;
}

Seq scaled(Seq seq, const Rational& c) {
    for (auto& p : seq) p *= c;
    return seq;
}

// sum_k C(n,k) left[k] right[n-k]
Seq binomial_convolution(const Seq& left, const Seq& right) {
    const auto max_n = static_cast<unsigned>(left.size() - 1);
    Seq out(left.size());
    for (unsigned n = 0; n <= max_n; ++n)
        for (unsigned k = 0; k <= n; ++k) out[n] += left[k] * right[n - k] * Rational(binomial(n, k));
    return out;
}

// int (x+y)_{l,lambda} dmu_{-1}(y): expand the product in powers of y, then
// apply the moment functional y^j -> E_j.
Seq integrated_lambda_falling(unsigned max_n) {
    Seq out(max_n + 1);
    std::vector<XLPoly> in_y{XLPoly(1)};
    for (unsigned l = 0; l <= max_n; ++l) {
        out[l] = fermionic_integral(in_y);
        // multiply by (y + x - l lambda)
        const XLPoly shift = XLPoly::x() - XLPoly::lambda() * Rational(static_cast<long>(l));
        std::vector<XLPoly> next(in_y.size() + 1);
        for (std::size_t j = 0; j < in_y.size(); ++j) {
            next[j + 1] += in_y[j];
            next[j] += in_y[j] * shift;
        }
        in_y = std::move(next);
    }
    return out;
}

// sum_m d^m sum_a (-1)^a E_{m,lambda/d}(arg(a)) S1(n,m)
Seq distribution_sum(unsigned max_n, unsigned d, bool with_argument) {
    const Seq euler = deg_euler_table(max_n);
    const Rational inv_d(1, static_cast<long>(d));
    Seq inner(max_n + 1);
    for (unsigned m = 0; m <= max_n; ++m) {
        const XLPoly scaled_euler = subst_lambda_scaled(euler[m], inv_d);
        LambdaPoly acc;
        for (unsigned a = 0; a < d; ++a) {
            const Rational arg = with_argument ? Rational(static_cast<long>(a), static_cast<long>(d)) : Rational(0);
            LambdaPoly term = eval_x(scaled_euler, arg);
            if (a % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        inner[m] = XLPoly(acc * pow(Rational(static_cast<long>(d)), m));
    }
    return stirling1_transform(inner);
}

// sum_k C(n,k) B_k numbers[n-k], B_k = sum_m (x)_{m,lambda} S1(k,m)
Seq expansion_over_numbers(const Seq& numbers) {
    const auto max_n = static_cast<unsigned>(numbers.size() - 1);
    return binomial_convolution(stirling1_transform(lambda_falling_table(max_n)), numbers);
}

Seq kronecker_two(unsigned max_n) {
    Seq out(max_n + 1);
    out[0] = XLPoly(2);
    return out;
}

IdentityReport check_t2_11(unsigned max_n, const IdentityParams& params) {
    const unsigned r = *params.r;
    const auto s2deg = stirling2_deg_triangle(max_n);
    const Seq changhee_r = changhee_r_table(max_n, r);
    Seq via_deg_stirling(max_n + 1);
    for (unsigned n = 0; n <= max_n; ++n)
        for (unsigned m = 0; m <= n; ++m) via_deg_stirling[n] += changhee_r[m] * XLPoly(s2deg[n][m]);
    const Seq via_stirling = stirling2_transform(deg_changhee2_r_table(max_n, r));
    const Seq euler_r = deg_euler_r_table(max_n, r);

    auto first = compare(IdentityTag::T2_11, max_n, params, via_deg_stirling, via_stirling);
    if (!first.passed) return first;
    return compare(IdentityTag::T2_11, max_n, params, via_deg_stirling, euler_r);
}

IdentityReport check_stirling_routes(unsigned max_n, const IdentityParams& params) {
    const auto by_sum = stirling2_deg_triangle(max_n);
    const auto by_series = stirling2_deg_triangle_series(max_n);
    const auto s2 = stirling2_triangle(max_n);
    IdentityReport report{IdentityTag::EQ45_VS_EQ43, max_n, params, true, std::nullopt};
    for (unsigned m = 0; m <= max_n && report.passed; ++m) {
        for (unsigned n = 0; n <= m; ++n) {
            if (by_sum[m][n] != by_series[m][n]) {
                report.passed = false;
                report.witness = Witness{m, XLPoly(by_sum[m][n]), XLPoly(by_series[m][n])};
                break;
            }
            const LambdaPoly limit(by_sum[m][n].eval(Rational(0)));
            if (limit != LambdaPoly(s2[m][n])) {
                report.passed = false;
                report.witness = Witness{m, XLPoly(limit), XLPoly(s2[m][n])};
                break;
            }
        }
    }
    return report;
}

IdentityParams normalize(IdentityTag tag, const IdentityParams& in) {
    IdentityParams out;
    if (uses_r(tag)) {
        if (!in.r) throw InvalidParams(std::string(identity_name(tag)) + " needs r");
        if (*in.r == 0) throw InvalidParams("order r must be >= 1");
        out.r = in.r;
    }
    if (uses_k(tag)) {
        if (!in.k) throw InvalidParams(std::string(identity_name(tag)) + " needs k");
        if (*in.k > *out.r) throw InvalidParams("k must satisfy 0 <= k <= r");
        out.k = in.k;
    }
    if (uses_d(tag)) {
        if (!in.d) throw InvalidParams(std::string(identity_name(tag)) + " needs d");
        if (*in.d == 0 || *in.d % 2 == 0) throw InvalidParams("d must be an odd positive integer");
        out.d = in.d;
    }
    return out;
}

}  // namespace

std::string_view identity_name(IdentityTag tag) {
    for (const auto& [t, name] : kNames)
        if (t == tag) return name;
    return "?";
}

std::optional<IdentityTag> parse_identity_name(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (const auto& [t, n] : kNames)
        if (n == lower) return t;
    return std::nullopt;
}

bool uses_d(IdentityTag tag) {
    return tag == IdentityTag::T2_6_PRINTED || tag == IdentityTag::T2_6_DERIVED || tag == IdentityTag::T2_8;
}

bool uses_r(IdentityTag tag) {
    switch (tag) {
        case IdentityTag::T2_9:
        case IdentityTag::T2_10:
        case IdentityTag::T2_11:
        case IdentityTag::T2_12:
        case IdentityTag::EQ51:
        case IdentityTag::T2_13:
        case IdentityTag::R_REMARK: return true;
        default: return false;
    }
}

bool uses_k(IdentityTag tag) { return tag == IdentityTag::T2_13; }

bool expected_to_fail(IdentityTag tag) { return tag == IdentityTag::T2_6_PRINTED; }

IdentityReport verify(IdentityTag tag, unsigned max_n, const IdentityParams& raw) {
    const IdentityParams params = normalize(tag, raw);
    auto cmp = [&](const Seq& lhs, const Seq& rhs) { return compare(tag, max_n, params, lhs, rhs); };

    switch (tag) {
        case IdentityTag::EQ12A:
            return cmp(changhee_table(max_n), stirling1_transform(euler_table(max_n)));
        case IdentityTag::EQ12B:
            return cmp(euler_table(max_n), stirling2_transform(changhee_table(max_n)));
        case IdentityTag::T2_1:
            return cmp(deg_changhee2_table(max_n), stirling1_transform(integrated_lambda_falling(max_n)));
        case IdentityTag::T2_2:
            return cmp(deg_changhee2_table(max_n), stirling1_transform(deg_euler_table(max_n)));
        case IdentityTag::T2_3:
            return cmp(deg_euler_table(max_n), stirling2_transform(deg_changhee2_table(max_n)));
        case IdentityTag::T2_4: {
            const Seq ch = deg_changhee2_table(max_n);
            return cmp(ch, expansion_over_numbers(at_x(ch, Rational(0))));
        }
        case IdentityTag::T2_5: {
            const Seq ch = deg_changhee2_table(max_n);
            Seq lhs = at_x(ch, Rational(1));
            const Seq at0 = at_x(ch, Rational(0));
            for (unsigned n = 0; n <= max_n; ++n) lhs[n] += at0[n];
            return cmp(lhs, kronecker_two(max_n));
        }
        case IdentityTag::T2_6_PRINTED:
        case IdentityTag::T2_6_DERIVED:
            return cmp(at_x(deg_changhee2_table(max_n), Rational(0)),
                       distribution_sum(max_n, *params.d, tag == IdentityTag::T2_6_DERIVED));
        case IdentityTag::T2_7: {
            const Seq ch = deg_changhee2_table(max_n);
            Seq lhs(max_n + 1);
            for (unsigned n = 0; n <= max_n; ++n) lhs[n] = shift_x(ch[n], Rational(1)) + ch[n];
            return cmp(lhs, scaled(stirling1_transform(lambda_falling_table(max_n)), Rational(2)));
        }
        case IdentityTag::T2_8: {
            const unsigned d = *params.d;
            const Seq ch = deg_changhee2_table(max_n);
            Seq lhs = at_x(ch, Rational(static_cast<long>(d)));
            const Seq at0 = at_x(ch, Rational(0));
            for (unsigned n = 0; n <= max_n; ++n) lhs[n] += at0[n];
            const Seq falling = lambda_falling_table(max_n);
            Seq alternating(max_n + 1);
            for (unsigned a = 0; a < d; ++a) {
                const Seq at_a = at_x(falling, Rational(static_cast<long>(a)));
                for (unsigned m = 0; m <= max_n; ++m) {
                    if (a % 2 == 0)
                        alternating[m] += at_a[m];
                    else
                        alternating[m] -= at_a[m];
                }
            }
            return cmp(lhs, scaled(stirling1_transform(alternating), Rational(2)));
        }
        case IdentityTag::T2_9:
            return cmp(deg_changhee2_r_table(max_n, *params.r),
                       stirling1_transform(deg_euler_r_table(max_n, *params.r)));
        case IdentityTag::T2_10:
            return cmp(deg_euler_r_table(max_n, *params.r),
                       stirling2_transform(deg_changhee2_r_table(max_n, *params.r)));
        case IdentityTag::T2_11:
            return check_t2_11(max_n, params);
        case IdentityTag::T2_12:
            return cmp(at_x(deg_changhee2_r_table(max_n, *params.r), Rational(0)),
                       stirling1_transform(deg_euler_r_numbers_closed(max_n, *params.r)));
        case IdentityTag::EQ51:
            return cmp(at_x(deg_euler_r_table(max_n, *params.r), Rational(0)),
                       deg_euler_r_numbers_closed(max_n, *params.r));
        case IdentityTag::T2_13: {
            const unsigned r = *params.r, k = *params.k;
            const Seq numbers_k = at_x(deg_changhee2_r_table(max_n, k), Rational(0));
            return cmp(deg_changhee2_r_table(max_n, r),
                       binomial_convolution(numbers_k, deg_changhee2_r_table(max_n, r - k)));
        }
        case IdentityTag::R_REMARK: {
            const Seq ch = deg_changhee2_r_table(max_n, *params.r);
            return cmp(ch, expansion_over_numbers(at_x(ch, Rational(0))));
        }
        case IdentityTag::EQ45_VS_EQ43:
            return check_stirling_routes(max_n, params);
        case IdentityTag::LIMIT_CH2:
            return cmp(at_lambda(deg_changhee2_table(max_n), Rational(0)), changhee_table(max_n));
        case IdentityTag::LIMIT_EULER:
            return cmp(at_lambda(deg_euler_table(max_n), Rational(0)), euler_table(max_n));
        case IdentityTag::LIMIT_KKS:
            return cmp(at_lambda(kks_deg_changhee_table(max_n), Rational(0)), changhee_table(max_n));
    }
    throw InvalidParams("unknown identity tag");
}

std::vector<IdentityReport> verify_grid(const std::vector<IdentityTag>& tags, unsigned max_n,
                                        const std::vector<unsigned>& d_set,
                                        const std::vector<unsigned>& r_set) {
    std::vector<unsigned> ds = d_set, rs = r_set;
    std::sort(ds.begin(), ds.end());
    ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
    std::sort(rs.begin(), rs.end());
    rs.erase(std::unique(rs.begin(), rs.end()), rs.end());

    std::vector<IdentityTag> sorted_tags = tags;
    std::sort(sorted_tags.begin(), sorted_tags.end());
    sorted_tags.erase(std::unique(sorted_tags.begin(), sorted_tags.end()), sorted_tags.end());

    std::vector<std::pair<IdentityTag, IdentityParams>> jobs;
    for (auto tag : sorted_tags) {
        std::vector<IdentityParams> grid{IdentityParams{}};
        if (uses_r(tag)) {
            std::vector<IdentityParams> next;
            for (unsigned r : rs) {
                if (uses_k(tag)) {
                    for (unsigned k = 0; k <= r; ++k) next.push_back({r, std::nullopt, k});
                } else {
                    next.push_back({r, std::nullopt, std::nullopt});
                }
            }
            grid = std::move(next);
        }
        if (uses_d(tag)) {
            std::vector<IdentityParams> next;
            for (const auto& g : grid)
                for (unsigned d : ds) next.push_back({g.r, d, g.k});
            grid = std::move(next);
        }
        for (const auto& g : grid) jobs.emplace_back(tag, g);
    }
    // Validate before any evaluation so a bad grid fails as a whole.
    for (const auto& [tag, params] : jobs) normalize(tag, params);

    std::vector<IdentityReport> reports(jobs.size());
    const long count = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < count; ++i) {
        const auto& [tag, params] = jobs[static_cast<std::size_t>(i)];
        reports[static_cast<std::size_t>(i)] = verify(tag, max_n, params);
    }
    return reports;
}

std::vector<IdentityReport> verify_all(unsigned max_n, const std::vector<unsigned>& d_set,
                                       const std::vector<unsigned>& r_set) {
    return verify_grid(std::vector<IdentityTag>(std::begin(kAllIdentities), std::end(kAllIdentities)), max_n,
                       d_set, r_set);
}

T26Adjudication adjudicate_t26(unsigned max_n, const std::vector<unsigned>& d_set) {
    if (d_set.empty()) throw InvalidParams("adjudicate_t26 needs at least one d");
    std::optional<IdentityReport> derived, printed;
    for (unsigned d : d_set) {
        IdentityParams params{std::nullopt, d, std::nullopt};
        auto der = verify(IdentityTag::T2_6_DERIVED, max_n, params);
        auto pri = verify(IdentityTag::T2_6_PRINTED, max_n, params);
        if (!derived || derived->passed) derived = std::move(der);
        if (!printed || printed->passed) printed = std::move(pri);
    }
    return {std::move(*derived), std::move(*printed)};
}

}  // namespace changhee
