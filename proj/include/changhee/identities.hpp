#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "changhee/xl_poly.hpp"

namespace changhee {

// Closed catalog of checkable identities. Each tag has exactly one checker.
enum class IdentityTag {
    EQ12A,          // Ch_n(x) = sum_l E_l(x) S1(n,l)
    EQ12B,          // E_n(x) = sum_l Ch_l(x) S2(n,l)
    T2_1,           // sum_l S1(n,l) int (x+y)_{l,lambda} dmu(y) = Ch_{n,lambda}(x)
    T2_2,           // sum_l S1(n,l) E_{l,lambda}(x) = Ch_{n,lambda}(x)
    T2_3,           // E_{n,lambda}(x) = sum_m Ch_{m,lambda}(x) S2(n,m)
    T2_4,           // expansion over Ch_{n-k,lambda} numbers
    T2_5,           // Ch_{n,lambda}(1) + Ch_{n,lambda} = 2 delta_{n,0}
    T2_6_PRINTED,   // distribution formula without the a/d argument
    T2_6_DERIVED,   // distribution formula with E_{m,lambda/d}(a/d)
    T2_7,           // Ch_{n,lambda}(x+1) + Ch_{n,lambda}(x)
    T2_8,           // Ch_{n,lambda}(d) + Ch_{n,lambda}, d odd
    T2_9,           // order r: Ch^{(r)} = S1-transform of E^{(r)}
    T2_10,          // order r: E^{(r)} = S2-transform of Ch^{(r)}
    T2_11,          // order r: three-way equality through S2_lambda
    T2_12,          // order r numbers: double-sum closed form
    EQ51,           // order r degenerate Euler numbers closed form
    T2_13,          // order r convolution split at k
    R_REMARK,       // order r expansion over Ch^{(r)}_{n-k,lambda} numbers
    EQ45_VS_EQ43,   // degenerate Stirling numbers, sum vs series
    LIMIT_CH2,      // lambda -> 0 of Ch_{n,lambda}(x)
    LIMIT_EULER,    // lambda -> 0 of E_{n,lambda}(x)
    LIMIT_KKS,      // lambda -> 0 of the Kwon-Kim-Seo sequence
};

inline constexpr IdentityTag kAllIdentities[] = {
    IdentityTag::EQ12A,        IdentityTag::EQ12B,       IdentityTag::T2_1,  IdentityTag::T2_2,
    IdentityTag::T2_3,         IdentityTag::T2_4,        IdentityTag::T2_5,  IdentityTag::T2_6_PRINTED,
    IdentityTag::T2_6_DERIVED, IdentityTag::T2_7,        IdentityTag::T2_8,  IdentityTag::T2_9,
    IdentityTag::T2_10,        IdentityTag::T2_11,       IdentityTag::T2_12, IdentityTag::EQ51,
    IdentityTag::T2_13,        IdentityTag::R_REMARK,    IdentityTag::EQ45_VS_EQ43,
    IdentityTag::LIMIT_CH2,    IdentityTag::LIMIT_EULER, IdentityTag::LIMIT_KKS,
};

std::string_view identity_name(IdentityTag tag);
std::optional<IdentityTag> parse_identity_name(std::string_view name);  // case-insensitive

bool uses_d(IdentityTag tag);
bool uses_r(IdentityTag tag);
bool uses_k(IdentityTag tag);
// The printed distribution formula is carried in the catalog as a known-false
// statement; its failures do not count against a run.
bool expected_to_fail(IdentityTag tag);

struct IdentityParams {
    std::optional<unsigned> r;
    std::optional<unsigned> d;
    std::optional<unsigned> k;

    friend bool operator==(const IdentityParams&, const IdentityParams&) = default;
};

struct Witness {
    unsigned n = 0;
    XLPoly lhs;
    XLPoly rhs;
};

struct IdentityReport {
    IdentityTag id = IdentityTag::EQ12A;
    unsigned max_n = 0;
    IdentityParams params;
    bool passed = true;
    std::optional<Witness> witness;  // present iff !passed
};

// Checks the identity as an exact equation in Q[lambda][x] for every
// n <= max_n. Throws InvalidParams for a missing r/d/k, even d, r = 0 or
// k > r; parameters the tag does not use are dropped.
IdentityReport verify(IdentityTag tag, unsigned max_n, const IdentityParams& params = {});

// Every tag in `tags` over the parameter grid: d over d_set, r over r_set and
// k over 0..r where applicable. Order is by tag, then r, k, d.
std::vector<IdentityReport> verify_grid(const std::vector<IdentityTag>& tags, unsigned max_n,
                                        const std::vector<unsigned>& d_set,
                                        const std::vector<unsigned>& r_set);
std::vector<IdentityReport> verify_all(unsigned max_n, const std::vector<unsigned>& d_set,
                                       const std::vector<unsigned>& r_set);

struct T26Adjudication {
    IdentityReport derived;  // first failing d, else the last d checked
    IdentityReport printed;
};

T26Adjudication adjudicate_t26(unsigned max_n, const std::vector<unsigned>& d_set);

}  // namespace changhee
