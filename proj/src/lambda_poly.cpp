#include "changhee/lambda_poly.hpp"

#include <algorithm>

#include "changhee/errors.hpp"

namespace changhee {

LambdaPoly::LambdaPoly(const Rational& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

LambdaPoly::LambdaPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void LambdaPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational LambdaPoly::eval(const Rational& v) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= v;
        acc += *it;
    }
    return acc;
}

LambdaPoly LambdaPoly::operator-() const {
    LambdaPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LambdaPoly& LambdaPoly::operator+=(const LambdaPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

LambdaPoly& LambdaPoly::operator-=(const LambdaPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

LambdaPoly& LambdaPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

void LambdaPoly::add_product(const LambdaPoly& a, const LambdaPoly& b) {
    if (a.is_zero() || b.is_zero()) return;
    std::size_t n = a.coeffs_.size() + b.coeffs_.size() - 1;
    if (coeffs_.size() < n) coeffs_.resize(n);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            coeffs_[i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
        }
    }
    trim();
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
    LambdaPoly r;
    r.add_product(a, b);
    return r;
}

LambdaPoly subst_lambda_scaled(const LambdaPoly& p, const Rational& c) {
    if (c.is_zero()) throw InvalidScale();
    std::vector<Rational> out(p.coeffs().begin(), p.coeffs().end());
    Rational scale(1);
    for (auto& x : out) {
        x *= scale;
        scale *= c;
    }
    return LambdaPoly(std::move(out));
}

}  // namespace changhee
