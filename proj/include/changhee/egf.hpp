#pragma once

#include <cstddef>
#include <vector>

#include "changhee/xl_poly.hpp"

namespace changhee {

// Truncated exponential generating function f(t) = sum_{n<=order} a_n t^n/n!.
// The stored coefficients are a_n = n! [t^n] f, so products are binomial
// convolutions and everything stays inside Q[lambda][x].
class EgfSeries {
public:
    explicit EgfSeries(std::size_t order) : coeffs_(order + 1) {}
    explicit EgfSeries(std::vector<XLPoly> coeffs);

    static EgfSeries one(std::size_t order);
    // the series t (a_1 = 1)
    static EgfSeries t(std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    const XLPoly& operator[](std::size_t n) const { return coeffs_[n]; }
    XLPoly& operator[](std::size_t n) { return coeffs_[n]; }
    const std::vector<XLPoly>& coeffs() const { return coeffs_; }

    friend bool operator==(const EgfSeries&, const EgfSeries&) = default;

private:
    std::vector<XLPoly> coeffs_;
};

// Keeps a_0..a_order; order must not exceed a.order().
EgfSeries egf_truncate(const EgfSeries& a, std::size_t order);

EgfSeries egf_add(const EgfSeries& a, const EgfSeries& b);
EgfSeries egf_sub(const EgfSeries& a, const EgfSeries& b);
EgfSeries egf_scale(const EgfSeries& a, const Rational& c);

// Binomial convolution c_n = sum_k C(n,k) a_k b_{n-k}. Orders must match.
// Parallel over n; egf_mul_serial is the reference kernel.
EgfSeries egf_mul(const EgfSeries& a, const EgfSeries& b);
EgfSeries egf_mul_serial(const EgfSeries& a, const EgfSeries& b);

// Requires a_0 to be a nonzero rational (degree 0 in x and lambda).
EgfSeries egf_reciprocal(const EgfSeries& a);

EgfSeries egf_pow(const EgfSeries& a, unsigned r);

// outer(inner(t)); inner must have zero constant term. The result has
// inner's order, and outer must reach at least that order.
EgfSeries egf_compose(const EgfSeries& outer, const EgfSeries& inner);

// log(1+t): a_0 = 0, a_n = (-1)^{n-1} (n-1)!
EgfSeries egf_log1p(std::size_t order);
// e^t - 1: a_0 = 0, a_n = 1
EgfSeries egf_expm1(std::size_t order);

// (y)_{m,lambda} = y (y - lambda) ... (y - (m-1) lambda)
XLPoly lambda_falling_of(const XLPoly& y, unsigned m);

// (1 + lambda v)^{y/lambda} expanded as sum_m (y)_{m,lambda} v^m / m!, with
// v = u(t). Fractional powers are never formed directly; every degenerate
// exponential in the library goes through this expansion.
EgfSeries lambda_binomial_series(const EgfSeries& u, const XLPoly& y, std::size_t order);

}  // namespace changhee
