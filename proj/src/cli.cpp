#include "changhee/cli.hpp"

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "changhee/errors.hpp"
#include "changhee/identities.hpp"
#include "changhee/padic.hpp"
#include "changhee/sequences.hpp"
#include "changhee/serialize.hpp"

namespace changhee::cli {

namespace {

enum class Format { JSON, CSV, LATEX };

const std::map<std::string, Format> kFormats{
    {"json", Format::JSON}, {"csv", Format::CSV}, {"latex", Format::LATEX}};

struct TableOptions {
    std::string seq;
    unsigned max_n = 10;
    unsigned r = 1;
    std::string at_x;
    std::string at_lambda;
    Format fmt = Format::JSON;
};

struct VerifyOptions {
    std::vector<std::string> ids{"all"};
    unsigned max_n = 12;
    std::vector<unsigned> d{1, 3, 5};
    std::vector<unsigned> r{1, 2, 3};
    Format fmt = Format::JSON;
};

struct PadicOptions {
    unsigned p = 3;
    unsigned n_max = 6;
    unsigned level = 2;
    std::string integrand = "monomial";
    long lambda = 1;
    Format fmt = Format::JSON;
};

// Raised for flag combinations CLI11 cannot reject on its own.
struct BadFlags : Error {
    using Error::Error;
};

XLPoly specialize(XLPoly p, const std::optional<Rational>& x, const std::optional<Rational>& lambda) {
    if (lambda) p = eval_lambda(p, *lambda);
    if (x) p = XLPoly(eval_x(p, *x));
    return p;
}

std::optional<Rational> parse_optional_rational(const std::string& text, const char* flag) {
    if (text.empty()) return std::nullopt;
    try {
        return Rational::parse(text);
    } catch (const ParseError& e) {
        throw BadFlags(std::string(flag) + ": " + e.what());
    }
}

std::string latex_row_end() { return " \\\\\n"; }

int cmd_table(const TableOptions& o, const Caps& caps, std::ostream& out) {
    const auto tag = parse_seq_name(o.seq);
    if (!tag) throw BadFlags("unknown sequence '" + o.seq + "'");
    if (has_order(*tag) && o.r == 0) throw BadFlags("--r must be >= 1");
    if (o.max_n > caps.max_n)
        throw BadFlags("--max-n " + std::to_string(o.max_n) + " exceeds cap " + std::to_string(caps.max_n));
    const auto at_x = parse_optional_rational(o.at_x, "--at-x");
    const auto at_lambda = parse_optional_rational(o.at_lambda, "--at-lambda");

    const SeqTable table = seq_table(SequenceId::make(*tag, o.r), o.max_n, caps.max_n);
    const bool triangle = is_triangle(*tag);

    std::vector<std::vector<XLPoly>> rows;
    if (triangle) {
        for (const auto& row : table.triangle) {
            rows.emplace_back();
            for (const auto& v : row) rows.back().push_back(specialize(v, at_x, at_lambda));
        }
    } else {
        for (const auto& v : table.values) rows.push_back({specialize(v, at_x, at_lambda)});
    }

    switch (o.fmt) {
        case Format::JSON: {
            Json doc;
            doc["seq"] = o.seq;
            doc["max_n"] = o.max_n;
            if (has_order(*tag)) doc["r"] = o.r;
            if (at_x) doc["at_x"] = at_x->to_string();
            if (at_lambda) doc["at_lambda"] = at_lambda->to_string();
            Json values = Json::array();
            for (const auto& row : rows) {
                if (triangle) {
                    Json r = Json::array();
                    for (const auto& v : row) r.push_back(to_compact_json(v));
                    values.push_back(std::move(r));
                } else {
                    values.push_back(to_compact_json(row[0]));
                }
            }
            doc["values"] = std::move(values);
            out << doc.dump() << '\n';
            break;
        }
        case Format::CSV: {
            if (!triangle) out << "n,value\n";
            for (std::size_t n = 0; n < rows.size(); ++n) {
                if (!triangle) out << n << ',';
                for (std::size_t k = 0; k < rows[n].size(); ++k) out << (k ? "," : "") << to_text(rows[n][k]);
                out << '\n';
            }
            break;
        }
        case Format::LATEX: {
            out << "\\begin{tabular}{" << (triangle ? "r" + std::string(rows.size(), 'c') : "rl") << "}\n";
            for (std::size_t n = 0; n < rows.size(); ++n) {
                out << n;
                for (const auto& v : rows[n]) out << " & $" << to_latex(v) << "$";
                out << latex_row_end();
            }
            out << "\\end{tabular}\n";
            break;
        }
    }
    return kOk;
}

std::string params_text(const IdentityReport& rep) {
    std::string s = "max_n=" + std::to_string(rep.max_n);
    if (rep.params.r) s += ";r=" + std::to_string(*rep.params.r);
    if (rep.params.k) s += ";k=" + std::to_string(*rep.params.k);
    if (rep.params.d) s += ";d=" + std::to_string(*rep.params.d);
    return s;
}

int cmd_verify(const VerifyOptions& o, const Caps& caps, std::ostream& out) {
    if (o.max_n > caps.max_n)
        throw BadFlags("--max-n " + std::to_string(o.max_n) + " exceeds cap " + std::to_string(caps.max_n));
    std::vector<IdentityTag> tags;
    for (const auto& id : o.ids) {
        if (id == "all") {
            tags.assign(std::begin(kAllIdentities), std::end(kAllIdentities));
            continue;
        }
        auto tag = parse_identity_name(id);
        if (!tag) throw BadFlags("unknown identity '" + id + "'");
        tags.push_back(*tag);
    }
    std::vector<IdentityReport> reports;
    try {
        reports = verify_grid(tags, o.max_n, o.d, o.r);
    } catch (const InvalidParams& e) {
        throw BadFlags(e.what());
    }

    bool ok = true;
    std::size_t passed = 0, expected_failures = 0;
    for (const auto& rep : reports) {
        if (rep.passed)
            ++passed;
        else if (expected_to_fail(rep.id))
            ++expected_failures;
        else
            ok = false;
    }

    switch (o.fmt) {
        case Format::JSON: {
            Json doc;
            doc["max_n"] = o.max_n;
            Json list = Json::array();
            for (const auto& rep : reports) list.push_back(to_json(rep));
            doc["reports"] = std::move(list);
            doc["summary"] = {{"total", reports.size()},
                              {"passed", passed},
                              {"failed", reports.size() - passed},
                              {"expected_failures", expected_failures},
                              {"ok", ok}};
            out << doc.dump() << '\n';
            break;
        }
        case Format::CSV: {
            out << "id,params,verdict,n,lhs,rhs\n";
            for (const auto& rep : reports) {
                out << identity_name(rep.id) << ',' << params_text(rep) << ','
                    << (rep.passed ? "pass" : (expected_to_fail(rep.id) ? "fail-expected" : "fail"));
                if (rep.witness)
                    out << ',' << rep.witness->n << ',' << to_text(rep.witness->lhs) << ','
                        << to_text(rep.witness->rhs);
                else
                    out << ",,,";
                out << '\n';
            }
            break;
        }
        case Format::LATEX: {
            out << "\\begin{tabular}{llll}\n";
            for (const auto& rep : reports) {
                out << "\\texttt{" << identity_name(rep.id) << "} & " << params_text(rep) << " & "
                    << (rep.passed ? "pass" : (expected_to_fail(rep.id) ? "fail (expected)" : "fail"));
                if (rep.witness)
                    out << " & $n=" << rep.witness->n << ":\\ " << to_latex(rep.witness->lhs)
                        << " \\neq " << to_latex(rep.witness->rhs) << "$";
                else
                    out << " & ";
                out << latex_row_end();
            }
            out << "\\end{tabular}\n";
            break;
        }
    }
    return ok ? kOk : kIdentityFailed;
}

struct PadicRow {
    unsigned n;
    Integer sum;
    Rational target;
    Valuation valuation;
    bool pass;
};

int cmd_padic(const PadicOptions& o, const Caps& caps, std::ostream& out) {
    const auto kind = parse_integrand_name(o.integrand);
    if (!kind) throw BadFlags("unknown integrand '" + o.integrand + "'");
    if (o.level > caps.level)
        throw BadFlags("--level " + std::to_string(o.level) + " exceeds cap " + std::to_string(caps.level));
    if (o.n_max > caps.max_n)
        throw BadFlags("--n-max " + std::to_string(o.n_max) + " exceeds cap " + std::to_string(caps.max_n));
    FermionicLevel level;
    try {
        level = FermionicLevel::make(o.p, o.level, o.level);
    } catch (const InvalidParams& e) {
        throw BadFlags(e.what());
    }
    const Integer modulus = level.modulus();
    if (!modulus.fits_ulong_p() || modulus.get_ui() > caps.terms)
        throw BadFlags("p^level = " + modulus.get_str() + " terms exceeds cap " + std::to_string(caps.terms));

    std::vector<XLPoly> targets;
    switch (*kind) {
        case IntegrandKind::MONOMIAL: targets = euler_table(o.n_max); break;
        case IntegrandKind::FALLING: targets = changhee_table(o.n_max); break;
        case IntegrandKind::LAMBDA_FALLING: {
            for (const auto& p : deg_euler_table(o.n_max)) targets.push_back(eval_lambda(p, Rational(o.lambda)));
            break;
        }
    }

    std::vector<PadicRow> rows;
    bool ok = true;
    for (unsigned n = 0; n <= o.n_max; ++n) {
        Integrand f{*kind, n, o.lambda, 0};
        const Integer sum = fermionic_sum(level, f);
        const Rational target = eval_x(targets[n], Rational(0)).constant_term();
        const Valuation v = padic_valuation(Rational(sum) - target, o.p);
        const bool pass = v.at_least(o.level);
        ok = ok && pass;
        rows.push_back({n, sum, target, v, pass});
    }

    auto valuation_text = [](const Valuation& v) { return v.infinite ? std::string("inf") : std::to_string(v.value); };

    switch (o.fmt) {
        case Format::JSON: {
            Json doc;
            doc["p"] = o.p;
            doc["level"] = o.level;
            doc["integrand"] = o.integrand;
            if (*kind == IntegrandKind::LAMBDA_FALLING) doc["lambda"] = o.lambda;
            Json list = Json::array();
            for (const auto& r : rows) {
                Json row;
                row["n"] = r.n;
                row["sum"] = r.sum.get_str();
                row["target"] = r.target.to_string();
                if (r.valuation.infinite)
                    row["valuation"] = "inf";
                else
                    row["valuation"] = r.valuation.value;
                row["pass"] = r.pass;
                list.push_back(std::move(row));
            }
            doc["rows"] = std::move(list);
            doc["ok"] = ok;
            out << doc.dump() << '\n';
            break;
        }
        case Format::CSV: {
            out << "n,sum,target,valuation,pass\n";
            for (const auto& r : rows)
                out << r.n << ',' << r.sum.get_str() << ',' << r.target.to_string() << ','
                    << valuation_text(r.valuation) << ',' << (r.pass ? "pass" : "fail") << '\n';
            break;
        }
        case Format::LATEX: {
            out << "\\begin{tabular}{rrrrl}\n";
            for (const auto& r : rows)
                out << r.n << " & $" << r.sum.get_str() << "$ & $" << to_latex(r.target) << "$ & "
                    << (r.valuation.infinite ? "$\\infty$" : std::to_string(r.valuation.value)) << " & "
                    << (r.pass ? "pass" : "fail") << latex_row_end();
            out << "\\end{tabular}\n";
            break;
        }
    }
    return ok ? kOk : kIdentityFailed;
}

}  // namespace

Caps Caps::from_env_string(const std::string& spec) {
    Caps caps;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("CHANGHEE_LAB_CAPS: expected key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        unsigned long value = 0;
        try {
            value = std::stoul(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw ParseError("CHANGHEE_LAB_CAPS: bad number in '" + item + "'");
        }
        if (key == "max_n")
            caps.max_n = static_cast<unsigned>(value);
        else if (key == "level")
            caps.level = static_cast<unsigned>(value);
        else if (key == "terms")
            caps.terms = value;
        else
            throw ParseError("CHANGHEE_LAB_CAPS: unknown key '" + key + "'");
    }
    return caps;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& env_caps) {
    CLI::App app{"Exact tables and identity checks for degenerate Changhee polynomials of the second kind",
                 "changhee-lab"};
    app.require_subcommand(1);
    bool unsafe_caps = false;
    app.add_flag("--unsafe-caps", unsafe_caps, "Disable the max_n / level / term-count caps");

    TableOptions table;
    auto* table_cmd = app.add_subcommand("table", "Emit a sequence table");
    table_cmd->add_option("--seq", table.seq, "Sequence name (s1, s2, s2-deg, falling, lambda-falling, euler, "
                                              "deg-euler, deg-euler-r, changhee, changhee-r, deg-changhee2, "
                                              "deg-changhee2-r, kks-deg-changhee)")
        ->required();
    table_cmd->add_option("--max-n", table.max_n, "Largest index");
    table_cmd->add_option("--r", table.r, "Order for the *-r sequences");
    table_cmd->add_option("--at-x", table.at_x, "Specialize x to this rational");
    table_cmd->add_option("--at-lambda", table.at_lambda, "Specialize lambda to this rational");
    table_cmd->add_option("--fmt", table.fmt, "json, csv or latex")->transform(CLI::CheckedTransformer(kFormats));
    table_cmd->add_flag("--unsafe-caps", unsafe_caps);

    VerifyOptions verify;
    auto* verify_cmd = app.add_subcommand("verify", "Check catalog identities");
    verify_cmd->add_option("--ids", verify.ids, "Comma-separated identity ids, or 'all'")->delimiter(',');
    verify_cmd->add_option("--max-n", verify.max_n, "Check n = 0..max_n");
    verify_cmd->add_option("--d", verify.d, "Odd d values")->delimiter(',');
    verify_cmd->add_option("--r", verify.r, "Orders r")->delimiter(',');
    verify_cmd->add_option("--fmt", verify.fmt, "json, csv or latex")->transform(CLI::CheckedTransformer(kFormats));
    verify_cmd->add_flag("--unsafe-caps", unsafe_caps);

    PadicOptions padic;
    auto* padic_cmd = app.add_subcommand("padic", "Finite-level fermionic p-adic integral convergence table");
    padic_cmd->add_option("--p", padic.p, "Odd prime <= 97")->required();
    padic_cmd->add_option("--n-max", padic.n_max, "Largest integrand degree");
    padic_cmd->add_option("--level", padic.level, "Level N; congruences are checked mod p^N");
    padic_cmd->add_option("--integrand", padic.integrand, "monomial, falling or lambda-falling");
    padic_cmd->add_option("--lambda", padic.lambda, "Integer lambda for lambda-falling");
    padic_cmd->add_option("--fmt", padic.fmt, "json, csv or latex")->transform(CLI::CheckedTransformer(kFormats));
    padic_cmd->add_flag("--unsafe-caps", unsafe_caps);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadFlags;
    }

    Caps caps;
    try {
        if (env_caps) caps = Caps::from_env_string(*env_caps);
    } catch (const ParseError& e) {
        err << e.what() << '\n';
        return kBadFlags;
    }
    if (unsafe_caps) caps = Caps{~0U, ~0U, ~0UL};

    try {
        if (*table_cmd) return cmd_table(table, caps, out);
        if (*verify_cmd) return cmd_verify(verify, caps, out);
        if (*padic_cmd) return cmd_padic(padic, caps, out);
    } catch (const BadFlags& e) {
        err << "error: " << e.what() << '\n';
        return kBadFlags;
    } catch (const InvalidParams& e) {
        err << "error: " << e.what() << '\n';
        return kBadFlags;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kBadFlags;
    } catch (const CrossCheckFailure& e) {
        err << "internal cross-check failure: " << e.what() << '\n';
        return kCrossCheckFailed;
    }
    return kBadFlags;
}

}  // namespace changhee::cli
