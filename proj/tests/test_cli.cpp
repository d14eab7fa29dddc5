#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "changhee/cli.hpp"
#include "changhee/serialize.hpp"

using namespace changhee;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args, std::optional<std::string> caps = std::nullopt) {
    args.insert(args.begin(), "changhee-lab");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err, caps);
    return {code, out.str(), err.str()};
}

Json json_of(const Result& r) { return Json::parse(r.out); }

int shell_exit(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("table examples") {
    auto r = run({"table", "--seq", "deg-changhee2", "--max-n", "2", "--at-x", "0", "--fmt", "json"});
    CHECK(r.code == cli::kOk);
    CHECK(json_of(r)["values"] == Json::parse(R"(["1","-1/2",["1/2","1/2"]])"));

    r = run({"table", "--seq", "s1", "--max-n", "3", "--fmt", "csv"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == "1\n0,1\n0,-1,1\n0,2,-3,1\n");

    r = run({"table", "--seq", "euler", "--max-n", "0"});
    CHECK(r.code == cli::kOk);
    CHECK(json_of(r)["values"] == Json::parse(R"(["1"])"));
}

TEST_CASE("table specializations and order") {
    auto r = run({"table", "--seq", "deg-changhee2", "--max-n", "2", "--at-x", "0", "--at-lambda", "1"});
    CHECK(json_of(r)["values"] == Json::parse(R"(["1","-1/2","1"])"));
    r = run({"table", "--seq", "changhee-r", "--r", "2", "--max-n", "1", "--at-x", "0"});
    CHECK(r.code == cli::kOk);
    CHECK(json_of(r)["values"][1] == "-1");
    r = run({"table", "--seq", "deg-euler", "--max-n", "3", "--fmt", "latex"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("\\lambda") != std::string::npos);
}

TEST_CASE("verify examples") {
    auto r = run({"verify", "--ids", "all", "--max-n", "12", "--d", "1,3,5", "--r", "1,2"});
    CHECK(r.code == cli::kOk);
    const auto j = json_of(r);
    bool saw_expected_fail = false;
    for (const auto& rep : j["reports"])
        if (rep["id"] == "t2_6_printed" && rep["verdict"] == "fail") {
            saw_expected_fail = true;
            CHECK(rep["expected_fail"] == true);
        }
    CHECK(saw_expected_fail);
    CHECK(j["summary"]["ok"] == true);

    r = run({"verify", "--ids", "t2_5", "--max-n", "24"});
    CHECK(r.code == cli::kOk);

    r = run({"verify", "--ids", "t2_8", "--max-n", "8", "--d", "3", "--fmt", "csv"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("t2_8") != std::string::npos);
    CHECK(r.out.find(",pass,") != std::string::npos);

    r = run({"verify", "--ids", "t2_6_printed", "--max-n", "4", "--d", "3", "--fmt", "csv"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out.find("fail-expected") != std::string::npos);
}

TEST_CASE("padic examples") {
    auto r = run({"padic", "--p", "3", "--n-max", "2", "--level", "2", "--integrand", "falling"});
    CHECK(r.code == cli::kOk);
    auto row = json_of(r)["rows"][2];
    CHECK(row["sum"] == "32");
    CHECK(row["target"] == "1/2");
    CHECK(row["valuation"].get<long>() >= 2);

    r = run({"padic", "--p", "3", "--n-max", "0", "--level", "1", "--integrand", "monomial"});
    CHECK(json_of(r)["rows"][0]["valuation"] == "inf");

    r = run({"padic", "--p", "5", "--n-max", "4", "--level", "3", "--integrand", "monomial"});
    CHECK(r.code == cli::kOk);
    for (const auto& rw : json_of(r)["rows"]) CHECK(rw["pass"] == true);

    r = run({"padic", "--p", "5", "--n-max", "3", "--level", "2", "--integrand", "lambda-falling", "--lambda", "2"});
    CHECK(r.code == cli::kOk);
}

TEST_CASE("bad flags exit 2") {
    CHECK(run({"table", "--seq", "nope"}).code == cli::kBadFlags);
    CHECK(run({"table"}).code == cli::kBadFlags);
    CHECK(run({"table", "--seq", "euler", "--at-x", "1/0"}).code == cli::kBadFlags);
    CHECK(run({"table", "--seq", "changhee-r", "--r", "0"}).code == cli::kBadFlags);
    CHECK(run({"verify", "--ids", "t2_99"}).code == cli::kBadFlags);
    CHECK(run({"verify", "--ids", "t2_8", "--d", "2"}).code == cli::kBadFlags);
    CHECK(run({"padic", "--p", "4"}).code == cli::kBadFlags);
    CHECK(run({"padic", "--p", "3", "--integrand", "cosine"}).code == cli::kBadFlags);
    CHECK(run({"table", "--seq", "euler", "--fmt", "yaml"}).code == cli::kBadFlags);
    CHECK(run({"frobnicate"}).code == cli::kBadFlags);
    const auto r = run({"table", "--seq", "nope"});
    CHECK(r.out.empty());
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("caps") {
    CHECK(run({"table", "--seq", "falling", "--max-n", "65"}).code == cli::kBadFlags);
    CHECK(run({"table", "--seq", "falling", "--max-n", "65", "--unsafe-caps"}).code == cli::kOk);
    CHECK(run({"table", "--seq", "falling", "--max-n", "65"}, "max_n=70").code == cli::kOk);
    CHECK(run({"table", "--seq", "falling", "--max-n", "8"}, "max_n=4").code == cli::kBadFlags);
    CHECK(run({"padic", "--p", "3", "--level", "11"}).code == cli::kBadFlags);
    CHECK(run({"padic", "--p", "97", "--level", "4", "--n-max", "0"}).code == cli::kBadFlags);  // 97^4 terms
    CHECK(run({"table", "--seq", "falling"}, "bogus").code == cli::kBadFlags);

    const auto caps = cli::Caps::from_env_string("level=3,max_n=5");
    CHECK(caps.level == 3);
    CHECK(caps.max_n == 5);
    CHECK(caps.terms == cli::Caps{}.terms);
}

TEST_CASE("output is deterministic and JSON round-trips") {
    const std::vector<std::vector<std::string>> cmds = {
        {"table", "--seq", "kks-deg-changhee", "--max-n", "6"},
        {"table", "--seq", "s2-deg", "--max-n", "5"},
        {"verify", "--ids", "all", "--max-n", "6", "--d", "1,3", "--r", "1,2"},
        {"padic", "--p", "3", "--n-max", "4", "--level", "3", "--integrand", "falling"},
    };
    for (const auto& c : cmds) {
        const auto a = run(c), b = run(c);
        CHECK(a.out == b.out);
        const auto j = Json::parse(a.out);
        CHECK(j.dump() + "\n" == a.out);
    }
    // table values decode back to polynomials that re-encode identically
    const auto j = json_of(run({"table", "--seq", "deg-changhee2", "--max-n", "5"}));
    for (const auto& v : j["values"]) CHECK(to_compact_json(from_compact_json(v)) == v);
}

TEST_CASE("the binary honours the exit-code contract") {
    const std::string bin = CHANGHEE_LAB_PATH;
    const std::string quiet = " >/dev/null 2>&1";
    CHECK(shell_exit(bin + " table --seq euler --max-n 3" + quiet) == 0);
    CHECK(shell_exit(bin + " table --seq nope" + quiet) == 2);
    CHECK(shell_exit(bin + " verify --ids t2_6_printed,t2_6_derived --d 3 --max-n 4" + quiet) == 0);
    CHECK(shell_exit("CHANGHEE_LAB_CAPS=max_n=2 " + bin + " table --seq euler --max-n 3" + quiet) == 2);
    CHECK(shell_exit(bin + " padic --p 3 --n-max 2 --level 2" + quiet) == 0);
}
