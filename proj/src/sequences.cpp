#include "changhee/sequences.hpp"

#include <array>
#include <string>
#include <utility>

#include "changhee/errors.hpp"

namespace changhee {

// ---------------------------------------------------------------------------
// Stirling numbers

RationalTriangle stirling1_triangle(unsigned max_n) {
    RationalTriangle s(max_n + 1);
    s[0] = {Rational(1)};
    for (unsigned n = 0; n < max_n; ++n) {
        auto& next = s[n + 1];
        next.assign(n + 2, Rational());
        const Rational minus_n(-static_cast<long>(n));
        for (unsigned k = 0; k <= n; ++k) {
            next[k + 1] += s[n][k];
            next[k].add_product(minus_n, s[n][k]);
        }
    }
    return s;
}

RationalTriangle stirling2_triangle(unsigned max_n) {
    RationalTriangle s(max_n + 1);
    s[0] = {Rational(1)};
    for (unsigned n = 0; n < max_n; ++n) {
        auto& next = s[n + 1];
        next.assign(n + 2, Rational());
        for (unsigned k = 0; k <= n; ++k) {
            next[k + 1] += s[n][k];
            next[k].add_product(Rational(static_cast<long>(k)), s[n][k]);
        }
    }
    return s;
}

Rational stirling1(unsigned n, unsigned k) {
    if (k > n) return Rational();
    return stirling1_triangle(n)[n][k];
}

Rational stirling2(unsigned n, unsigned k) {
    if (k > n) return Rational();
    return stirling2_triangle(n)[n][k];
}

LambdaTriangle stirling2_deg_triangle(unsigned max_m) {
    const auto s1 = stirling1_triangle(max_m);
    const auto s2 = stirling2_triangle(max_m);
    LambdaTriangle out(max_m + 1);
    for (unsigned m = 0; m <= max_m; ++m) {
        out[m].resize(m + 1);
        for (unsigned n = 0; n <= m; ++n) {
            // index i = m - l is the lambda power
            std::vector<Rational> coeffs(m - n + 1);
            for (unsigned l = n; l <= m; ++l) coeffs[m - l] = s2[l][n] * s1[m][l];
            out[m][n] = LambdaPoly(std::move(coeffs));
        }
    }
    return out;
}

LambdaTriangle stirling2_deg_triangle_series(unsigned max_m) {
    const EgfSeries base = egf_sub(degenerate_exp(max_m), EgfSeries::one(max_m));
    LambdaTriangle out(max_m + 1);
    for (unsigned m = 0; m <= max_m; ++m) out[m].resize(m + 1);
    // power = base^n / n!
    EgfSeries power = EgfSeries::one(max_m);
    for (unsigned n = 0; n <= max_m; ++n) {
        if (n > 0) power = egf_scale(egf_mul(power, base), Rational(1, static_cast<long>(n)));
        for (unsigned m = n; m <= max_m; ++m) {
            if (!power[m].is_x_free())
                throw CrossCheckFailure("degenerate Stirling series picked up an x term");
            out[m][n] = power[m].coeff(0);
        }
    }
    return out;
}

LambdaPoly stirling2_deg(unsigned m, unsigned n) {
    if (n > m) return LambdaPoly();
    return stirling2_deg_triangle(m)[m][n];
}

std::vector<XLPoly> stirling1_transform(const std::vector<XLPoly>& seq) {
    if (seq.empty()) return {};
    const auto max_n = static_cast<unsigned>(seq.size() - 1);
    const auto s1 = stirling1_triangle(max_n);
    std::vector<XLPoly> out(seq.size());
    for (unsigned n = 0; n <= max_n; ++n)
        for (unsigned l = 0; l <= n; ++l)
            if (!s1[n][l].is_zero()) out[n] += seq[l] * s1[n][l];
    return out;
}

std::vector<XLPoly> stirling2_transform(const std::vector<XLPoly>& seq) {
    if (seq.empty()) return {};
    const auto max_n = static_cast<unsigned>(seq.size() - 1);
    const auto s2 = stirling2_triangle(max_n);
    std::vector<XLPoly> out(seq.size());
    for (unsigned n = 0; n <= max_n; ++n)
        for (unsigned l = 0; l <= n; ++l)
            if (!s2[n][l].is_zero()) out[n] += seq[l] * s2[n][l];
    return out;
}

// ---------------------------------------------------------------------------
// Building-block series

EgfSeries degenerate_exp(std::size_t order) {
    return lambda_binomial_series(EgfSeries::t(order), XLPoly(1), order);
}

EgfSeries degenerate_exp_log1p(std::size_t order) {
    return lambda_binomial_series(egf_log1p(order), XLPoly(1), order);
}

namespace {

// 2 / (g + 1) = 1 / ((g + 1)/2)
EgfSeries two_over_one_plus(const EgfSeries& g) {
    return egf_reciprocal(egf_scale(egf_add(g, EgfSeries::one(g.order())), Rational(1, 2)));
}

std::vector<XLPoly> to_vector(const EgfSeries& s) { return s.coeffs(); }

}  // namespace

EgfSeries degenerate_euler_factor(std::size_t order) { return two_over_one_plus(degenerate_exp(order)); }

EgfSeries degenerate_changhee2_factor(std::size_t order) {
    return two_over_one_plus(degenerate_exp_log1p(order));
}

// ---------------------------------------------------------------------------
// Polynomial sequences

std::vector<XLPoly> falling_table(unsigned max_n) {
    std::vector<XLPoly> out(max_n + 1);
    out[0] = XLPoly(1);
    for (unsigned n = 1; n <= max_n; ++n)
        out[n] = out[n - 1] * XLPoly({LambdaPoly(Rational(-static_cast<long>(n - 1))), LambdaPoly(1)});
    return out;
}

std::vector<XLPoly> lambda_falling_table(unsigned max_n) {
    std::vector<XLPoly> out(max_n + 1);
    out[0] = XLPoly(1);
    for (unsigned n = 1; n <= max_n; ++n) {
        LambdaPoly shift({Rational(0), Rational(-static_cast<long>(n - 1))});
        out[n] = out[n - 1] * XLPoly({shift, LambdaPoly(1)});
    }
    return out;
}

XLPoly lambda_falling(unsigned n) { return lambda_falling_table(n).back(); }

std::vector<XLPoly> euler_table(unsigned max_n) {
    // (e^t + 1)/2 has a_0 = 1, a_n = 1/2
    EgfSeries half_exp_plus_one(max_n);
    half_exp_plus_one[0] = XLPoly(1);
    for (unsigned n = 1; n <= max_n; ++n) half_exp_plus_one[n] = XLPoly(Rational(1, 2));
    EgfSeries exp_xt(max_n);
    XLPoly power(1);
    for (unsigned n = 0; n <= max_n; ++n) {
        exp_xt[n] = power;
        power = power * XLPoly::x();
    }
    return to_vector(egf_mul(egf_reciprocal(half_exp_plus_one), exp_xt));
}

XLPoly euler(unsigned n) { return euler_table(n).back(); }

std::vector<XLPoly> deg_euler_r_table(unsigned max_n, unsigned r) {
    const EgfSeries x_part = lambda_binomial_series(EgfSeries::t(max_n), XLPoly::x(), max_n);
    return to_vector(egf_mul(egf_pow(degenerate_euler_factor(max_n), r), x_part));
}

std::vector<XLPoly> deg_euler_table(unsigned max_n) { return deg_euler_r_table(max_n, 1); }

std::vector<XLPoly> deg_euler_r_numbers_closed(unsigned max_n, unsigned r) {
    if (r == 0) throw InvalidParams("order r must be >= 1");
    const auto s2deg = stirling2_deg_triangle(max_n);
    std::vector<XLPoly> out(max_n + 1);
    for (unsigned n = 0; n <= max_n; ++n) {
        LambdaPoly acc;
        for (unsigned m = 0; m <= n; ++m) {
            Rational w(Integer(factorial(m) * binomial(r + m - 1, m)), Integer(Integer(1) << m));
            if (m % 2 == 1) w = -w;
            acc += s2deg[n][m] * w;
        }
        out[n] = XLPoly(acc);
    }
    return out;
}

XLPoly deg_euler(unsigned n) { return deg_euler_table(n).back(); }

XLPoly deg_euler_r(unsigned n, unsigned r) {
    if (r == 0) throw InvalidParams("order r must be >= 1");
    return deg_euler_r_table(n, r).back();
}

namespace {

// 2/(2+t)
EgfSeries changhee_factor(unsigned order) {
    EgfSeries half_two_plus_t(order);
    half_two_plus_t[0] = XLPoly(1);
    if (order >= 1) half_two_plus_t[1] = XLPoly(Rational(1, 2));
    return egf_reciprocal(half_two_plus_t);
}

}  // namespace

std::vector<XLPoly> changhee_r_table(unsigned max_n, unsigned r) {
    // (1+t)^x has EGF coefficients (x)_n
    EgfSeries one_plus_t_x(falling_table(max_n));
    return to_vector(egf_mul(egf_pow(changhee_factor(max_n), r), one_plus_t_x));
}

std::vector<XLPoly> changhee_table(unsigned max_n) { return changhee_r_table(max_n, 1); }

std::vector<XLPoly> changhee_table_via_euler(unsigned max_n) {
    return stirling1_transform(euler_table(max_n));
}

XLPoly changhee(unsigned n) { return changhee_table(n).back(); }

XLPoly changhee_r(unsigned n, unsigned r) {
    if (r == 0) throw InvalidParams("order r must be >= 1");
    return changhee_r_table(n, r).back();
}

std::vector<XLPoly> deg_changhee2_r_table(unsigned max_n, unsigned r) {
    const EgfSeries x_part = lambda_binomial_series(egf_log1p(max_n), XLPoly::x(), max_n);
    return to_vector(egf_mul(egf_pow(degenerate_changhee2_factor(max_n), r), x_part));
}

std::vector<XLPoly> deg_changhee2_table(unsigned max_n) { return deg_changhee2_r_table(max_n, 1); }

std::vector<XLPoly> deg_changhee2_r_via_euler(unsigned max_n, unsigned r) {
    return stirling1_transform(deg_euler_r_table(max_n, r));
}

XLPoly deg_changhee2(unsigned n) { return deg_changhee2_table(n).back(); }

XLPoly deg_changhee2_r(unsigned n, unsigned r) {
    if (r == 0) throw InvalidParams("order r must be >= 1");
    return deg_changhee2_r_table(n, r).back();
}

std::vector<XLPoly> kks_deg_changhee_table(unsigned max_n) {
    // v = log(1 + lambda t)/lambda: a_n = (-1)^{n-1} (n-1)! lambda^{n-1}
    EgfSeries v(max_n);
    for (unsigned n = 1; n <= max_n; ++n) {
        std::vector<Rational> c(n);
        Integer f = factorial(n - 1);
        c[n - 1] = Rational(n % 2 == 1 ? f : Integer(-f));
        v[n] = XLPoly(LambdaPoly(std::move(c)));
    }
    // 2 lambda / (2 lambda + log(1 + lambda t)) = 1 / (1 + v/2)
    const EgfSeries factor = egf_reciprocal(egf_add(EgfSeries::one(max_n), egf_scale(v, Rational(1, 2))));
    // (1 + v)^x = sum_m (x)_m v^m / m!
    const EgfSeries x_part = egf_compose(EgfSeries(falling_table(max_n)), v);
    return to_vector(egf_mul(factor, x_part));
}

XLPoly kks_deg_changhee(unsigned n) { return kks_deg_changhee_table(n).back(); }

// ---------------------------------------------------------------------------
// Tables

namespace {

constexpr std::array<std::pair<SeqTag, std::string_view>, 13> kSeqNames{{
    {SeqTag::S1, "s1"},
    {SeqTag::S2, "s2"},
    {SeqTag::S2_DEG, "s2-deg"},
    {SeqTag::FALLING, "falling"},
    {SeqTag::LAMBDA_FALLING, "lambda-falling"},
    {SeqTag::EULER, "euler"},
    {SeqTag::DEG_EULER, "deg-euler"},
    {SeqTag::DEG_EULER_R, "deg-euler-r"},
    {SeqTag::CHANGHEE, "changhee"},
    {SeqTag::CHANGHEE_R, "changhee-r"},
    {SeqTag::DEG_CHANGHEE2, "deg-changhee2"},
    {SeqTag::DEG_CHANGHEE2_R, "deg-changhee2-r"},
    {SeqTag::KKS_DEG_CHANGHEE, "kks-deg-changhee"},
}};

void require_equal(const std::vector<XLPoly>& primary, const std::vector<XLPoly>& oracle,
                   std::string_view what) {
    for (std::size_t n = 0; n < primary.size(); ++n)
        if (primary[n] != oracle[n])
            throw CrossCheckFailure(std::string(what) + ": routes disagree at n = " + std::to_string(n));
}

std::vector<XLPoly> at_x_zero(const std::vector<XLPoly>& seq) {
    std::vector<XLPoly> out;
    out.reserve(seq.size());
    for (const auto& p : seq) out.emplace_back(eval_x(p, Rational(0)));
    return out;
}

std::vector<std::vector<XLPoly>> lift(const RationalTriangle& t) {
    std::vector<std::vector<XLPoly>> out(t.size());
    for (std::size_t n = 0; n < t.size(); ++n)
        for (const auto& v : t[n]) out[n].emplace_back(v);
    return out;
}

std::vector<std::vector<XLPoly>> lift(const LambdaTriangle& t) {
    std::vector<std::vector<XLPoly>> out(t.size());
    for (std::size_t n = 0; n < t.size(); ++n)
        for (const auto& v : t[n]) out[n].emplace_back(v);
    return out;
}

}  // namespace

bool has_order(SeqTag tag) {
    return tag == SeqTag::DEG_EULER_R || tag == SeqTag::CHANGHEE_R || tag == SeqTag::DEG_CHANGHEE2_R;
}

bool is_triangle(SeqTag tag) { return tag == SeqTag::S1 || tag == SeqTag::S2 || tag == SeqTag::S2_DEG; }

std::string_view seq_name(SeqTag tag) {
    for (const auto& [t, name] : kSeqNames)
        if (t == tag) return name;
    return "?";
}

std::optional<SeqTag> parse_seq_name(std::string_view name) {
    for (const auto& [t, n] : kSeqNames)
        if (n == name) return t;
    return std::nullopt;
}

SequenceId SequenceId::make(SeqTag tag, unsigned r) {
    if (has_order(tag) && r == 0) throw InvalidParams("order r must be >= 1");
    return SequenceId{tag, has_order(tag) ? r : 1};
}

SeqTable seq_table(SequenceId id, unsigned max_n, unsigned cap) {
    if (max_n > cap)
        throw CapExceeded("max_n " + std::to_string(max_n) + " exceeds cap " + std::to_string(cap));
    id = SequenceId::make(id.tag, id.r);
    SeqTable table{id, max_n, {}, {}};

    switch (id.tag) {
        case SeqTag::S1: {
            const auto s1 = stirling1_triangle(max_n);
            // defining expansion: (x)_n = sum_k S1(n,k) x^k
            const auto falling = falling_table(max_n);
            for (unsigned n = 0; n <= max_n; ++n)
                for (unsigned k = 0; k <= n; ++k)
                    if (falling[n].coeff(k) != LambdaPoly(s1[n][k]))
                        throw CrossCheckFailure("S1 disagrees with the expansion of (x)_n");
            table.triangle = lift(s1);
            break;
        }
        case SeqTag::S2: {
            const auto s2 = stirling2_triangle(max_n);
            // defining expansion: x^n = sum_k S2(n,k) (x)_k
            const auto falling = falling_table(max_n);
            XLPoly power(1);
            for (unsigned n = 0; n <= max_n; ++n) {
                XLPoly acc;
                for (unsigned k = 0; k <= n; ++k) acc += falling[k] * s2[n][k];
                if (acc != power) throw CrossCheckFailure("S2 disagrees with the expansion of x^n");
                power = power * XLPoly::x();
            }
            table.triangle = lift(s2);
            break;
        }
        case SeqTag::S2_DEG: {
            const auto by_sum = stirling2_deg_triangle(max_n);
            if (by_sum != stirling2_deg_triangle_series(max_n))
                throw CrossCheckFailure("degenerate Stirling sum and series routes disagree");
            table.triangle = lift(by_sum);
            break;
        }
        case SeqTag::FALLING:
            table.values = falling_table(max_n);
            break;
        case SeqTag::LAMBDA_FALLING:
            table.values = lambda_falling_table(max_n);
            require_equal(falling_table(max_n),
                          [&] {
                              std::vector<XLPoly> v;
                              for (const auto& p : table.values) v.push_back(eval_lambda(p, Rational(1)));
                              return v;
                          }(),
                          "lambda-falling at lambda = 1");
            break;
        case SeqTag::EULER:
            table.values = euler_table(max_n);
            break;
        case SeqTag::DEG_EULER:
        case SeqTag::DEG_EULER_R: {
            const unsigned r = id.tag == SeqTag::DEG_EULER ? 1 : id.r;
            table.values = deg_euler_r_table(max_n, r);
            require_equal(at_x_zero(table.values), deg_euler_r_numbers_closed(max_n, r),
                          "degenerate Euler numbers vs closed form");
            break;
        }
        case SeqTag::CHANGHEE:
            table.values = changhee_table(max_n);
            require_equal(table.values, changhee_table_via_euler(max_n), "Changhee vs Euler transform");
            break;
        case SeqTag::CHANGHEE_R:
            table.values = changhee_r_table(max_n, id.r);
            break;
        case SeqTag::DEG_CHANGHEE2:
        case SeqTag::DEG_CHANGHEE2_R: {
            const unsigned r = id.tag == SeqTag::DEG_CHANGHEE2 ? 1 : id.r;
            table.values = deg_changhee2_r_table(max_n, r);
            require_equal(table.values, deg_changhee2_r_via_euler(max_n, r),
                          "degenerate Changhee (second kind) vs degenerate Euler transform");
            break;
        }
        case SeqTag::KKS_DEG_CHANGHEE: {
            table.values = kks_deg_changhee_table(max_n);
            std::vector<XLPoly> limit;
            for (const auto& p : table.values) limit.push_back(eval_lambda(p, Rational(0)));
            require_equal(limit, changhee_table(max_n), "Kwon-Kim-Seo lambda -> 0 limit");
            break;
        }
    }
    return table;
}

}  // namespace changhee
