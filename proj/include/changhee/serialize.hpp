#pragma once

#include <string>

#include <json.hpp>

#include "changhee/identities.hpp"
#include "changhee/xl_poly.hpp"

namespace changhee {

using Json = nlohmann::ordered_json;

// Wire format: Rational as "p/q" (q omitted when 1), LambdaPoly as an
// ascending array of those strings, XLPoly as an ascending (x-major) array of
// LambdaPoly arrays. Zero is ["0"] and [["0"]] respectively.
Json to_json(const Rational& r);
Json to_json(const LambdaPoly& p);
Json to_json(const XLPoly& p);

Rational rational_from_json(const Json& j);
LambdaPoly lambda_poly_from_json(const Json& j);
XLPoly xl_poly_from_json(const Json& j);

// Smallest faithful shape: a bare string for a scalar, a LambdaPoly array for
// an x-free value, the full XLPoly form otherwise. Used for table values.
Json to_compact_json(const XLPoly& p);
XLPoly from_compact_json(const Json& j);

Json to_json(const IdentityParams& params);
Json to_json(const IdentityReport& report);

// Human-readable renderings, e.g. "1/2 + 1/2*lambda" and "x^2 - lambda*x".
std::string to_text(const LambdaPoly& p);
std::string to_text(const XLPoly& p);
std::string to_latex(const Rational& r);
std::string to_latex(const LambdaPoly& p);
std::string to_latex(const XLPoly& p);

}  // namespace changhee
