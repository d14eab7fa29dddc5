#include "changhee/xl_poly.hpp"

#include <algorithm>

namespace changhee {

XLPoly::XLPoly(const LambdaPoly& c) {
    if (!c.is_zero()) coeffs_.push_back(c);
}

XLPoly::XLPoly(std::vector<LambdaPoly> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void XLPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

int XLPoly::lambda_degree() const {
    int d = -1;
    for (const auto& c : coeffs_) d = std::max(d, c.degree());
    return d;
}

XLPoly XLPoly::operator-() const {
    XLPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

XLPoly& XLPoly::operator+=(const XLPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

XLPoly& XLPoly::operator-=(const XLPoly& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

XLPoly& XLPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

XLPoly& XLPoly::operator*=(const LambdaPoly& c) {
    if (c.is_constant()) return *this *= c.constant_term();
    for (auto& x : coeffs_) x = x * c;
    trim();
    return *this;
}

void XLPoly::add_product(const XLPoly& a, const XLPoly& b) {
    if (a.is_zero() || b.is_zero()) return;
    std::size_t n = a.coeffs_.size() + b.coeffs_.size() - 1;
    if (coeffs_.size() < n) coeffs_.resize(n);
    // Scalar operands are common (series of plain numbers); skip the
    // polynomial product machinery for them.
    if (a.is_scalar() || b.is_scalar()) {
        const XLPoly& s = a.is_scalar() ? a : b;
        const XLPoly& p = a.is_scalar() ? b : a;
        const Rational& c = s.coeffs_[0].coeffs()[0];
        for (std::size_t j = 0; j < p.coeffs_.size(); ++j) {
            LambdaPoly term = p.coeffs_[j];
            term *= c;
            coeffs_[j] += term;
        }
    } else {
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                coeffs_[i + j].add_product(a.coeffs_[i], b.coeffs_[j]);
        }
    }
    trim();
}

XLPoly operator*(const XLPoly& a, const XLPoly& b) {
    XLPoly r;
    r.add_product(a, b);
    return r;
}

XLPoly poly_add(const XLPoly& a, const XLPoly& b) { return a + b; }
XLPoly poly_mul(const XLPoly& a, const XLPoly& b) { return a * b; }

XLPoly eval_lambda(const XLPoly& p, const Rational& v) {
    std::vector<LambdaPoly> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.emplace_back(c.eval(v));
    return XLPoly(std::move(out));
}

LambdaPoly eval_x(const XLPoly& p, const Rational& v) {
    LambdaPoly acc;
    auto cs = p.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        acc *= v;
        acc += *it;
    }
    return acc;
}

XLPoly compose_x(const XLPoly& p, const XLPoly& v) {
    XLPoly acc;
    auto cs = p.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        acc = acc * v;
        acc += XLPoly(*it);
    }
    return acc;
}

XLPoly shift_x(const XLPoly& p, const Rational& c) {
    return compose_x(p, XLPoly({LambdaPoly(c), LambdaPoly(1)}));
}

XLPoly subst_lambda_scaled(const XLPoly& p, const Rational& c) {
    std::vector<LambdaPoly> out;
    out.reserve(p.coeffs().size());
    for (const auto& coeff : p.coeffs()) out.push_back(subst_lambda_scaled(coeff, c));
    return XLPoly(std::move(out));
}

}  // namespace changhee
