#pragma once

#include <span>
#include <string_view>
#include <optional>
#include <vector>

#include "changhee/xl_poly.hpp"

namespace changhee {

// Truncation of the fermionic p-adic integral: sum over x = 0 .. p^N - 1,
// compared against limits modulo p^M.
struct FermionicLevel {
    unsigned p = 3;
    unsigned N = 1;
    unsigned M = 1;  // congruence precision exponent

    // p odd prime <= 97, N >= 1
    static FermionicLevel make(unsigned p, unsigned N, unsigned M);
    static FermionicLevel make(unsigned p, unsigned N) { return make(p, N, N); }
    Integer modulus() const;  // p^N
};

bool is_prime(unsigned n);

enum class IntegrandKind { MONOMIAL, FALLING, LAMBDA_FALLING };

// Integer-valued polynomial integrands. `shift` realizes f(x + shift).
struct Integrand {
    IntegrandKind kind = IntegrandKind::MONOMIAL;
    unsigned n = 0;
    long lambda = 1;  // LAMBDA_FALLING only
    long shift = 0;

    static Integrand monomial(unsigned n) { return {IntegrandKind::MONOMIAL, n, 1, 0}; }
    static Integrand falling(unsigned n) { return {IntegrandKind::FALLING, n, 1, 0}; }
    static Integrand lambda_falling(unsigned n, long lambda) {
        return {IntegrandKind::LAMBDA_FALLING, n, lambda, 0};
    }
    Integrand shifted(long d) const {
        Integrand f = *this;
        f.shift += d;
        return f;
    }

    // coefficients of f(x) in ascending powers of x
    std::vector<Integer> coefficients() const;
    Integer operator()(const Integer& x) const;
};

std::string_view integrand_name(IntegrandKind kind);
std::optional<IntegrandKind> parse_integrand_name(std::string_view name);

Integer eval_integer_poly(std::span<const Integer> coeffs, const Integer& x);

// sum_{x=0}^{p^N-1} (-1)^x f(x), exact. The parallel version reduces chunk
// partial sums in a fixed order; fermionic_sum_serial is the reference.
Integer fermionic_sum(const FermionicLevel& level, std::span<const Integer> coeffs);
Integer fermionic_sum(const FermionicLevel& level, const Integrand& f);
Integer fermionic_sum_serial(const FermionicLevel& level, std::span<const Integer> coeffs);

// nu_p(r); infinite for r = 0
struct Valuation {
    bool infinite = false;
    long value = 0;

    bool at_least(long k) const { return infinite || value >= k; }
    friend bool operator==(const Valuation&, const Valuation&) = default;
};

Valuation padic_valuation(const Rational& r, unsigned p);

// fermionic_sum(f) == target (mod p^M). Throws NonIntegralTarget when p
// divides the target's denominator.
bool converges_to(const FermionicLevel& level, const Integrand& f, const Rational& target);

// I_N(f(x + d)) + I_N(f) == 2 sum_{a<d} (-1)^a f(a) (mod p^N), d odd.
bool shift_identity_check(const FermionicLevel& level, const Integrand& f, long d);

// The limit functional y^j -> E_j applied to a polynomial in y whose
// coefficients (ascending in y) live in Q[lambda][x].
XLPoly fermionic_integral(std::span<const XLPoly> coeffs_in_y);

}  // namespace changhee
