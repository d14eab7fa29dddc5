#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "changhee/rational.hpp"

namespace changhee {

// Dense polynomial in the formal indeterminate lambda over Q.
// coeffs()[i] is the coefficient of lambda^i; there is never a trailing zero,
// so the zero polynomial has an empty coefficient list.
class LambdaPoly {
public:
    LambdaPoly() = default;
    LambdaPoly(long c) : LambdaPoly(Rational(c)) {}  // NOLINT(implicit)
    LambdaPoly(const Rational& c);                   // NOLINT(implicit)
    explicit LambdaPoly(std::vector<Rational> coeffs);
    LambdaPoly(std::initializer_list<Rational> coeffs)
        : LambdaPoly(std::vector<Rational>(coeffs)) {}

    static LambdaPoly lambda() { return LambdaPoly({Rational(0), Rational(1)}); }

    std::span<const Rational> coeffs() const { return coeffs_; }
    // -1 for the zero polynomial
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }
    Rational constant_term() const { return coeff(0); }

    Rational eval(const Rational& v) const;

    LambdaPoly operator-() const;
    LambdaPoly& operator+=(const LambdaPoly& o);
    LambdaPoly& operator-=(const LambdaPoly& o);
    LambdaPoly& operator*=(const Rational& c);
    // this += a * b
    void add_product(const LambdaPoly& a, const LambdaPoly& b);

    friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly& b) { return a += b; }
    friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly& b) { return a -= b; }
    friend LambdaPoly operator*(LambdaPoly a, const Rational& c) { return a *= c; }
    friend LambdaPoly operator*(const Rational& c, LambdaPoly a) { return a *= c; }
    friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);

    friend bool operator==(const LambdaPoly&, const LambdaPoly&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// p(c * lambda). c = 0 is rejected; use eval() to specialize.
LambdaPoly subst_lambda_scaled(const LambdaPoly& p, const Rational& c);

}  // namespace changhee
