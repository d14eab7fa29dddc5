#include "changhee/serialize.hpp"

#include <sstream>

#include "changhee/errors.hpp"

namespace changhee {

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const LambdaPoly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(c.to_string());
    if (out.empty()) out.push_back("0");
    return out;
}

Json to_json(const XLPoly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(to_json(c));
    if (out.empty()) out.push_back(to_json(LambdaPoly()));
    return out;
}

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw ParseError("rational must be a JSON string");
    return Rational::parse(j.get<std::string>());
}

LambdaPoly lambda_poly_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("lambda polynomial must be a JSON array");
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(rational_from_json(c));
    return LambdaPoly(std::move(coeffs));
}

XLPoly xl_poly_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("xl polynomial must be a JSON array");
    std::vector<LambdaPoly> coeffs;
    for (const auto& c : j) coeffs.push_back(lambda_poly_from_json(c));
    return XLPoly(std::move(coeffs));
}

Json to_compact_json(const XLPoly& p) {
    if (p.is_scalar()) return to_json(p.coeff(0).constant_term());
    if (p.is_x_free()) return to_json(p.coeff(0));
    return to_json(p);
}

XLPoly from_compact_json(const Json& j) {
    if (j.is_string()) return XLPoly(rational_from_json(j));
    if (j.is_array() && !j.empty() && j.front().is_array()) return xl_poly_from_json(j);
    return XLPoly(lambda_poly_from_json(j));
}

Json to_json(const IdentityParams& params) {
    Json out = Json::object();
    if (params.r) out["r"] = *params.r;
    if (params.d) out["d"] = *params.d;
    if (params.k) out["k"] = *params.k;
    return out;
}

Json to_json(const IdentityReport& report) {
    Json out;
    out["id"] = std::string(identity_name(report.id));
    Json params = to_json(report.params);
    params["max_n"] = report.max_n;
    out["params"] = std::move(params);
    out["verdict"] = report.passed ? "pass" : "fail";
    if (expected_to_fail(report.id)) out["expected_fail"] = true;
    if (report.witness) {
        out["witness"] = {{"n", report.witness->n},
                          {"lhs", to_json(report.witness->lhs)},
                          {"rhs", to_json(report.witness->rhs)}};
    }
    return out;
}

namespace {

struct Monomial {
    Rational coeff;
    std::size_t lambda_power;
    std::size_t x_power;
};

std::vector<Monomial> monomials(const XLPoly& p) {
    std::vector<Monomial> out;
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
        const auto lc = p.coeffs()[j].coeffs();
        for (std::size_t i = 0; i < lc.size(); ++i)
            if (!lc[i].is_zero()) out.push_back({lc[i], i, j});
    }
    return out;
}

std::string power(std::string_view var, std::size_t e, bool latex) {
    if (e == 0) return "";
    std::string s(var);
    if (e > 1) s += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
    return s;
}

std::string render(const std::vector<Monomial>& terms, bool latex) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        const bool negative = t.coeff.sign() < 0;
        const Rational mag = negative ? -t.coeff : t.coeff;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;

        std::string vars;
        const std::string lam = power(latex ? "\\lambda" : "lambda", t.lambda_power, latex);
        const std::string xs = power("x", t.x_power, latex);
        if (latex) {
            vars = lam + (lam.empty() || xs.empty() ? "" : " ") + xs;
        } else {
            vars = lam + (lam.empty() || xs.empty() ? "" : "*") + xs;
        }
        if (vars.empty()) {
            os << (latex ? to_latex(mag) : mag.to_string());
        } else if (mag.is_one()) {
            os << vars;
        } else {
            os << (latex ? to_latex(mag) + " " : mag.to_string() + "*") << vars;
        }
    }
    return os.str();
}

}  // namespace

std::string to_text(const LambdaPoly& p) { return to_text(XLPoly(p)); }
std::string to_text(const XLPoly& p) { return render(monomials(p), false); }

std::string to_latex(const Rational& r) {
    if (r.denominator() == 1) return r.to_string();
    const Integer num = r.numerator();
    const bool negative = num < 0;
    return std::string(negative ? "-" : "") + "\\frac{" + Integer(abs(num)).get_str() + "}{" +
           r.denominator().get_str() + "}";
}

std::string to_latex(const LambdaPoly& p) { return to_latex(XLPoly(p)); }
std::string to_latex(const XLPoly& p) { return render(monomials(p), true); }

}  // namespace changhee
