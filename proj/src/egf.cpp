#include "changhee/egf.hpp"

#include "changhee/errors.hpp"

namespace changhee {

namespace {

void require_same_order(const EgfSeries& a, const EgfSeries& b) {
    if (a.order() != b.order()) throw OrderMismatch(a.order(), b.order());
}

std::vector<Rational> binomial_row(unsigned n) {
    std::vector<Rational> row(n + 1);
    for (unsigned k = 0; k <= n; ++k) row[k] = Rational(binomial(n, k));
    return row;
}

XLPoly convolution_term(const EgfSeries& a, const EgfSeries& b, std::size_t n) {
    auto row = binomial_row(static_cast<unsigned>(n));
    XLPoly acc;
    for (std::size_t k = 0; k <= n; ++k) {
        if (a[k].is_zero() || b[n - k].is_zero()) continue;
        XLPoly term = a[k] * b[n - k];
        term *= row[k];
        acc += term;
    }
    return acc;
}

}  // namespace

EgfSeries::EgfSeries(std::vector<XLPoly> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw InvalidParams("EgfSeries needs at least one coefficient");
}

EgfSeries EgfSeries::one(std::size_t order) {
    EgfSeries s(order);
    s[0] = XLPoly(1);
    return s;
}

EgfSeries EgfSeries::t(std::size_t order) {
    EgfSeries s(order);
    if (order >= 1) s[1] = XLPoly(1);
    return s;
}

EgfSeries egf_truncate(const EgfSeries& a, std::size_t order) {
    if (order > a.order()) throw OrderMismatch(a.order(), order);
    return EgfSeries(std::vector<XLPoly>(a.coeffs().begin(), a.coeffs().begin() + order + 1));
}

EgfSeries egf_add(const EgfSeries& a, const EgfSeries& b) {
    require_same_order(a, b);
    EgfSeries c = a;
    for (std::size_t n = 0; n <= c.order(); ++n) c[n] += b[n];
    return c;
}

EgfSeries egf_sub(const EgfSeries& a, const EgfSeries& b) {
    require_same_order(a, b);
    EgfSeries c = a;
    for (std::size_t n = 0; n <= c.order(); ++n) c[n] -= b[n];
    return c;
}

EgfSeries egf_scale(const EgfSeries& a, const Rational& k) {
    EgfSeries c = a;
    for (std::size_t n = 0; n <= c.order(); ++n) c[n] *= k;
    return c;
}

EgfSeries egf_mul(const EgfSeries& a, const EgfSeries& b) {
    require_same_order(a, b);
    const auto order = static_cast<long>(a.order());
    EgfSeries c(a.order());
    // high n carries the most work; dynamic scheduling balances the triangle
#pragma omp parallel for schedule(dynamic, 1)
    for (long n = order; n >= 0; --n) c[n] = convolution_term(a, b, static_cast<std::size_t>(n));
    return c;
}

EgfSeries egf_mul_serial(const EgfSeries& a, const EgfSeries& b) {
    require_same_order(a, b);
    EgfSeries c(a.order());
    for (std::size_t n = 0; n <= a.order(); ++n) c[n] = convolution_term(a, b, n);
    return c;
}

EgfSeries egf_reciprocal(const EgfSeries& a) {
    if (!a[0].is_scalar() || a[0].is_zero()) throw NonUnit();
    const Rational inv = Rational(1) / a[0].coeffs()[0].constant_term();
    EgfSeries b(a.order());
    b[0] = XLPoly(inv);
    for (std::size_t n = 1; n <= a.order(); ++n) {
        auto row = binomial_row(static_cast<unsigned>(n));
        XLPoly acc;
        for (std::size_t k = 1; k <= n; ++k) {
            if (a[k].is_zero() || b[n - k].is_zero()) continue;
            XLPoly term = a[k] * b[n - k];
            term *= row[k];
            acc += term;
        }
        acc *= -inv;
        b[n] = std::move(acc);
    }
    return b;
}

EgfSeries egf_pow(const EgfSeries& a, unsigned r) {
    EgfSeries result = EgfSeries::one(a.order());
    EgfSeries base = a;
    while (r > 0) {
        if (r & 1U) result = egf_mul(result, base);
        r >>= 1;
        if (r > 0) base = egf_mul(base, base);
    }
    return result;
}

EgfSeries egf_compose(const EgfSeries& outer, const EgfSeries& inner) {
    if (!inner[0].is_zero()) throw CompositionDomain("egf_compose");
    const std::size_t order = inner.order();
    if (outer.order() < order) throw OrderMismatch(outer.order(), order);
    // power = inner^m / m!, as an EGF; it vanishes below index m
    EgfSeries power = EgfSeries::one(order);
    EgfSeries result(order);
    for (std::size_t m = 0; m <= order; ++m) {
        if (m > 0) power = egf_scale(egf_mul(power, inner), Rational(1, static_cast<long>(m)));
        if (outer[m].is_zero()) continue;
        for (std::size_t n = m; n <= order; ++n) result[n].add_product(outer[m], power[n]);
    }
    return result;
}

EgfSeries egf_log1p(std::size_t order) {
    EgfSeries s(order);
    for (std::size_t n = 1; n <= order; ++n) {
        Integer v = factorial(static_cast<unsigned>(n - 1));
        if (n % 2 == 0) v = -v;
        s[n] = XLPoly(Rational(v));
    }
    return s;
}

EgfSeries egf_expm1(std::size_t order) {
    EgfSeries s(order);
    for (std::size_t n = 1; n <= order; ++n) s[n] = XLPoly(1);
    return s;
}

XLPoly lambda_falling_of(const XLPoly& y, unsigned m) {
    XLPoly acc(1);
    const XLPoly lam = XLPoly::lambda();
    for (unsigned i = 0; i < m; ++i) acc = acc * (y - lam * Rational(static_cast<long>(i)));
    return acc;
}

EgfSeries lambda_binomial_series(const EgfSeries& u, const XLPoly& y, std::size_t order) {
    if (!u[0].is_zero()) throw CompositionDomain("lambda_binomial_series");
    EgfSeries inner = egf_truncate(u, order);
    EgfSeries outer(order);
    const XLPoly lam = XLPoly::lambda();
    XLPoly falling(1);
    for (std::size_t m = 0; m <= order; ++m) {
        outer[m] = falling;
        falling = falling * (y - lam * Rational(static_cast<long>(m)));
    }
    return egf_compose(outer, inner);
}

}  // namespace changhee
