#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "changhee/lambda_poly.hpp"

namespace changhee {

// Polynomial in x over Q[lambda]; coeffs()[j] is the coefficient of x^j.
// Canonical: no trailing zero coefficient, zero is the empty list. Every
// "number" and "polynomial" of the library lives here (numbers have x-degree
// at most 0).
class XLPoly {
public:
    XLPoly() = default;
    XLPoly(long c) : XLPoly(LambdaPoly(c)) {}        // NOLINT(implicit)
    XLPoly(const Rational& c) : XLPoly(LambdaPoly(c)) {}  // NOLINT(implicit)
    XLPoly(const LambdaPoly& c);                      // NOLINT(implicit)
    explicit XLPoly(std::vector<LambdaPoly> coeffs);
    XLPoly(std::initializer_list<LambdaPoly> coeffs)
        : XLPoly(std::vector<LambdaPoly>(coeffs)) {}

    static XLPoly x() { return XLPoly({LambdaPoly(), LambdaPoly(1)}); }
    static XLPoly lambda() { return XLPoly(LambdaPoly::lambda()); }

    std::span<const LambdaPoly> coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    // max lambda-degree across coefficients, -1 for zero
    int lambda_degree() const;
    bool is_zero() const { return coeffs_.empty(); }
    bool is_x_free() const { return coeffs_.size() <= 1; }
    // degree 0 in both x and lambda
    bool is_scalar() const { return coeffs_.empty() || (coeffs_.size() == 1 && coeffs_[0].is_constant()); }
    LambdaPoly coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : LambdaPoly(); }
    LambdaPoly leading_coeff() const { return coeffs_.empty() ? LambdaPoly() : coeffs_.back(); }

    XLPoly operator-() const;
    XLPoly& operator+=(const XLPoly& o);
    XLPoly& operator-=(const XLPoly& o);
    XLPoly& operator*=(const Rational& c);
    XLPoly& operator*=(const LambdaPoly& c);
    XLPoly& operator*=(const XLPoly& o) { return *this = *this * o; }
    // this += a * b
    void add_product(const XLPoly& a, const XLPoly& b);

    friend XLPoly operator+(XLPoly a, const XLPoly& b) { return a += b; }
    friend XLPoly operator-(XLPoly a, const XLPoly& b) { return a -= b; }
    friend XLPoly operator*(XLPoly a, const Rational& c) { return a *= c; }
    friend XLPoly operator*(const Rational& c, XLPoly a) { return a *= c; }
    friend XLPoly operator*(const XLPoly& a, const XLPoly& b);

    friend bool operator==(const XLPoly&, const XLPoly&) = default;

private:
    void trim();
    std::vector<LambdaPoly> coeffs_;
};

XLPoly poly_add(const XLPoly& a, const XLPoly& b);
XLPoly poly_mul(const XLPoly& a, const XLPoly& b);

// lambda := v in every coefficient
XLPoly eval_lambda(const XLPoly& p, const Rational& v);
// x := v
LambdaPoly eval_x(const XLPoly& p, const Rational& v);
// x := v, where v is itself a polynomial (used for x -> x + 1)
XLPoly compose_x(const XLPoly& p, const XLPoly& v);
XLPoly shift_x(const XLPoly& p, const Rational& c);
// lambda := c * lambda in every coefficient
XLPoly subst_lambda_scaled(const XLPoly& p, const Rational& c);

}  // namespace changhee
