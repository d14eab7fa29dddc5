#include "changhee/padic.hpp"

#include <algorithm>
#include <string>

#include "changhee/errors.hpp"
#include "changhee/sequences.hpp"

namespace changhee {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

FermionicLevel FermionicLevel::make(unsigned p, unsigned N, unsigned M) {
    if (p > 97 || p == 2 || !is_prime(p))
        throw InvalidParams("p must be an odd prime <= 97, got " + std::to_string(p));
    if (N < 1) throw InvalidParams("level N must be >= 1");
    return FermionicLevel{p, N, M};
}

Integer FermionicLevel::modulus() const {
    Integer m;
    mpz_ui_pow_ui(m.get_mpz_t(), p, N);
    return m;
}

namespace {

std::vector<Integer> poly_mul_linear(const std::vector<Integer>& a, const Integer& root) {
    // a(x) * (x - root)
    std::vector<Integer> out(a.size() + 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i + 1] += a[i];
        out[i] -= a[i] * root;
    }
    return out;
}

// p(x + s) by repeated synthetic division
std::vector<Integer> taylor_shift(std::vector<Integer> c, long s) {
    const Integer shift(s);
    const std::size_t n = c.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = n - 1; j > i; --j) c[j - 1] += shift * c[j];
    return c;
}

}  // namespace

std::vector<Integer> Integrand::coefficients() const {
    std::vector<Integer> c{Integer(1)};
    for (unsigned i = 0; i < n; ++i) {
        switch (kind) {
            case IntegrandKind::MONOMIAL: c = poly_mul_linear(c, 0); break;
            case IntegrandKind::FALLING: c = poly_mul_linear(c, Integer(i)); break;
            case IntegrandKind::LAMBDA_FALLING:
                c = poly_mul_linear(c, Integer(static_cast<long>(i)) * lambda);
                break;
        }
    }
    return shift == 0 ? c : taylor_shift(std::move(c), shift);
}

Integer Integrand::operator()(const Integer& x) const {
    auto c = coefficients();
    return eval_integer_poly(c, x);
}

std::string_view integrand_name(IntegrandKind kind) {
    switch (kind) {
        case IntegrandKind::MONOMIAL: return "monomial";
        case IntegrandKind::FALLING: return "falling";
        case IntegrandKind::LAMBDA_FALLING: return "lambda-falling";
    }
    return "?";
}

std::optional<IntegrandKind> parse_integrand_name(std::string_view name) {
    for (auto k : {IntegrandKind::MONOMIAL, IntegrandKind::FALLING, IntegrandKind::LAMBDA_FALLING})
        if (integrand_name(k) == name) return k;
    return std::nullopt;
}

Integer eval_integer_poly(std::span<const Integer> coeffs, const Integer& x) {
    Integer acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

namespace {

Integer alternating_range(std::span<const Integer> coeffs, unsigned long begin, unsigned long end) {
    Integer acc, v, x;
    for (unsigned long i = begin; i < end; ++i) {
        x = i;
        v = eval_integer_poly(coeffs, x);
        if (i % 2 == 0)
            acc += v;
        else
            acc -= v;
    }
    return acc;
}

unsigned long term_count(const FermionicLevel& level) {
    Integer m = level.modulus();
    if (!m.fits_ulong_p()) throw CapExceeded("p^N does not fit a machine word");
    return m.get_ui();
}

}  // namespace

Integer fermionic_sum_serial(const FermionicLevel& level, std::span<const Integer> coeffs) {
    return alternating_range(coeffs, 0, term_count(level));
}

Integer fermionic_sum(const FermionicLevel& level, std::span<const Integer> coeffs) {
    const unsigned long total = term_count(level);
    constexpr unsigned long kChunk = 4096;
    const long chunks = static_cast<long>((total + kChunk - 1) / kChunk);
    std::vector<Integer> partial(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(static)
    for (long c = 0; c < chunks; ++c) {
        const unsigned long begin = static_cast<unsigned long>(c) * kChunk;
        partial[static_cast<std::size_t>(c)] = alternating_range(coeffs, begin, std::min(total, begin + kChunk));
    }
    Integer acc;
    for (const auto& s : partial) acc += s;
    return acc;
}

Integer fermionic_sum(const FermionicLevel& level, const Integrand& f) {
    auto c = f.coefficients();
    return fermionic_sum(level, c);
}

Valuation padic_valuation(const Rational& r, unsigned p) {
    if (r.is_zero()) return {true, 0};
    auto count = [p](Integer v) {
        long k = 0;
        v = abs(v);
        while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
            mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
            ++k;
        }
        return k;
    };
    return {false, count(r.numerator()) - count(r.denominator())};
}

bool converges_to(const FermionicLevel& level, const Integrand& f, const Rational& target) {
    if (mpz_divisible_ui_p(target.denominator().get_mpz_t(), level.p))
        throw NonIntegralTarget("target " + target.to_string() + " is not p-integral for p = " +
                                std::to_string(level.p));
    const Rational diff = Rational(fermionic_sum(level, f)) - target;
    return padic_valuation(diff, level.p).at_least(level.M);
}

bool shift_identity_check(const FermionicLevel& level, const Integrand& f, long d) {
    if (d <= 0 || d % 2 == 0) throw InvalidParams("shift d must be an odd positive integer");
    const Integer lhs = fermionic_sum(level, f.shifted(d)) + fermionic_sum(level, f);
    const auto c = f.coefficients();
    Integer rhs;
    for (long a = 0; a < d; ++a) {
        Integer v = eval_integer_poly(c, Integer(a));
        if (a % 2 == 0)
            rhs += v;
        else
            rhs -= v;
    }
    rhs *= 2;
    return padic_valuation(Rational(Integer(lhs - rhs)), level.p).at_least(level.N);
}

XLPoly fermionic_integral(std::span<const XLPoly> coeffs_in_y) {
    if (coeffs_in_y.empty()) return XLPoly();
    const auto euler_numbers = euler_table(static_cast<unsigned>(coeffs_in_y.size() - 1));
    XLPoly acc;
    for (std::size_t j = 0; j < coeffs_in_y.size(); ++j)
        acc.add_product(coeffs_in_y[j], XLPoly(eval_x(euler_numbers[j], Rational(0))));
    return acc;
}

}  // namespace changhee
