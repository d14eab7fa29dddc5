#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace changhee::cli {

// Exit codes of the command-line tool.
inline constexpr int kOk = 0;
inline constexpr int kIdentityFailed = 1;  // also: p-adic row below the requested level
inline constexpr int kBadFlags = 2;
inline constexpr int kCrossCheckFailed = 3;

struct Caps {
    unsigned max_n = 64;
    unsigned level = 10;
    unsigned long terms = 1UL << 24;  // p^N for the p-adic command

    // "max_n=<int>,level=<int>,terms=<int>", any subset, in any order
    static Caps from_env_string(const std::string& spec);
};

// Runs the tool. Data goes to `out`, diagnostics to `err`. `env_caps` is the
// value of CHANGHEE_LAB_CAPS, if set.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_caps = std::nullopt);

}  // namespace changhee::cli
