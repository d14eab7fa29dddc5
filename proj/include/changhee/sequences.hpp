#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "changhee/egf.hpp"

namespace changhee {

// ---------------------------------------------------------------------------
// Stirling numbers

using RationalTriangle = std::vector<std::vector<Rational>>;

// Rows 0..max_n, row n holds k = 0..n. Built by the triangular recurrences.
RationalTriangle stirling1_triangle(unsigned max_n);
RationalTriangle stirling2_triangle(unsigned max_n);

// Signed, (x)_n = sum_k S1(n,k) x^k. Zero when k > n.
Rational stirling1(unsigned n, unsigned k);
// x^n = sum_k S2(n,k) (x)_k. Zero when k > n.
Rational stirling2(unsigned n, unsigned k);

using LambdaTriangle = std::vector<std::vector<LambdaPoly>>;

// Degenerate Stirling numbers of the second kind S2_lambda(m, n), rows m,
// columns n = 0..m. First route: sum_l S2(l,n) lambda^{m-l} S1(m,l).
LambdaTriangle stirling2_deg_triangle(unsigned max_m);
// Second route: coefficients of ((1+lambda t)^{1/lambda} - 1)^n / n!.
LambdaTriangle stirling2_deg_triangle_series(unsigned max_m);
LambdaPoly stirling2_deg(unsigned m, unsigned n);

// out[n] = sum_l S1(n,l) seq[l]
std::vector<XLPoly> stirling1_transform(const std::vector<XLPoly>& seq);
// out[n] = sum_l S2(n,l) seq[l]
std::vector<XLPoly> stirling2_transform(const std::vector<XLPoly>& seq);

// ---------------------------------------------------------------------------
// Building-block series

// (1 + lambda t)^{1/lambda}
EgfSeries degenerate_exp(std::size_t order);
// (1 + lambda log(1+t))^{1/lambda}
EgfSeries degenerate_exp_log1p(std::size_t order);
// 2 / ((1 + lambda t)^{1/lambda} + 1)
EgfSeries degenerate_euler_factor(std::size_t order);
// 2 / (1 + (1 + lambda log(1+t))^{1/lambda})
EgfSeries degenerate_changhee2_factor(std::size_t order);

// ---------------------------------------------------------------------------
// Polynomial sequences. *_table(max_n) returns values 0..max_n.

std::vector<XLPoly> falling_table(unsigned max_n);
std::vector<XLPoly> lambda_falling_table(unsigned max_n);
XLPoly lambda_falling(unsigned n);

// Euler polynomials, 2/(e^t+1) e^{xt}
std::vector<XLPoly> euler_table(unsigned max_n);
XLPoly euler(unsigned n);

// Carlitz degenerate Euler polynomials of order r (r = 1 is the plain one).
// r = 0 is accepted by the table and yields (x)_{n,lambda}.
std::vector<XLPoly> deg_euler_r_table(unsigned max_n, unsigned r);
std::vector<XLPoly> deg_euler_table(unsigned max_n);
// Closed form at x = 0: sum_m (-1)^m m! C(r+m-1,m) 2^{-m} S2_lambda(n,m)
std::vector<XLPoly> deg_euler_r_numbers_closed(unsigned max_n, unsigned r);
XLPoly deg_euler(unsigned n);
XLPoly deg_euler_r(unsigned n, unsigned r);

// Changhee polynomials, 2/(2+t) (1+t)^x
std::vector<XLPoly> changhee_table(unsigned max_n);
// Ch_n(x) = sum_l S1(n,l) E_l(x)
std::vector<XLPoly> changhee_table_via_euler(unsigned max_n);
XLPoly changhee(unsigned n);
// (2/(2+t))^r (1+t)^x; r = 0 accepted by the table
std::vector<XLPoly> changhee_r_table(unsigned max_n, unsigned r);
XLPoly changhee_r(unsigned n, unsigned r);

// Degenerate Changhee polynomials of the second kind, order r, from the
// generating function (2/(1+(1+lambda log(1+t))^{1/lambda}))^r
// (1+lambda log(1+t))^{x/lambda}. r = 0 accepted by the table.
std::vector<XLPoly> deg_changhee2_r_table(unsigned max_n, unsigned r);
std::vector<XLPoly> deg_changhee2_table(unsigned max_n);
// sum_l S1(n,l) E^{(r)}_{l,lambda}(x)
std::vector<XLPoly> deg_changhee2_r_via_euler(unsigned max_n, unsigned r);
XLPoly deg_changhee2(unsigned n);
XLPoly deg_changhee2_r(unsigned n, unsigned r);

// Degenerate Changhee polynomials of Kwon-Kim-Seo,
// 2 lambda/(2 lambda + log(1+lambda t)) (1 + log(1+lambda t)/lambda)^x.
std::vector<XLPoly> kks_deg_changhee_table(unsigned max_n);
XLPoly kks_deg_changhee(unsigned n);

// ---------------------------------------------------------------------------
// Tables with route cross-checks

enum class SeqTag {
    S1,
    S2,
    S2_DEG,
    FALLING,
    LAMBDA_FALLING,
    EULER,
    DEG_EULER,
    DEG_EULER_R,
    CHANGHEE,
    CHANGHEE_R,
    DEG_CHANGHEE2,
    DEG_CHANGHEE2_R,
    KKS_DEG_CHANGHEE,
};

bool has_order(SeqTag tag);
bool is_triangle(SeqTag tag);
std::string_view seq_name(SeqTag tag);
std::optional<SeqTag> parse_seq_name(std::string_view name);

struct SequenceId {
    SeqTag tag;
    unsigned r = 1;  // meaningful only for the *_R tags

    // Rejects r = 0 for order-r tags.
    static SequenceId make(SeqTag tag, unsigned r = 1);
};

struct SeqTable {
    SequenceId id;
    unsigned max_n = 0;
    std::vector<XLPoly> values;                 // sequences
    std::vector<std::vector<XLPoly>> triangle;  // Stirling families, row n = k 0..n
};

inline constexpr unsigned kDefaultMaxN = 64;

// Emits values by the primary route and runs every available secondary route
// against it. Throws CrossCheckFailure on disagreement, CapExceeded when
// max_n > cap.
SeqTable seq_table(SequenceId id, unsigned max_n, unsigned cap = kDefaultMaxN);

}  // namespace changhee
