#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

using json = nlohmann::json;

namespace {

struct CmdResult {
    int exit_code = -1;
    std::string output;
};

CmdResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd =
        std::string(APNKIT_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult res;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) res.output.append(buf, got);
    const int rc = pclose(pipe);
    res.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

std::string first_line(const std::string& text) {
    return text.substr(0, text.find('\n'));
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

// every leaf of the emitted JSON must be a string or a boolean; integers as
// decimal strings survive any consumer
bool leaves_are_strings_or_bools(const json& j) {
    if (j.is_object() || j.is_array()) {
        for (const auto& item : j)
            if (!leaves_are_strings_or_bools(item)) return false;
        return true;
    }
    return j.is_string() || j.is_boolean();
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("delta: prints the uniformity, exit codes per contract") {
    const CmdResult ok = run_cli("delta -p 3 -n 5 -d 134");
    CHECK(ok.exit_code == 0);
    CHECK(first_line(ok.output) == "2");

    const CmdResult linear = run_cli("delta -p 3 -n 5 -d 1");
    CHECK(linear.exit_code == 0);
    CHECK(first_line(linear.output) == "243");

    CHECK(run_cli("delta -p 4 -n 2 -d 3").exit_code == 2);   // 4 is not prime
    CHECK(run_cli("delta -p 3 -n 5 -d 242").exit_code == 2); // d > q-2
    CHECK(run_cli("delta -p 3 -n 5 -d xyz").exit_code == 2);
    CHECK(run_cli("delta -p 3 -n 5").exit_code == 2); // missing -d

    const CmdResult spec = run_cli("delta -p 3 -n 5 -d 134 --full-spectrum");
    CHECK(spec.exit_code == 0);
    CHECK(contains(spec.output, "histogram"));
    CHECK(contains(spec.output, "2 -> "));
}

TEST_CASE("delta: JSON round-trips byte-identically") {
    const CmdResult res = run_cli("delta -p 3 -n 5 -d 134 --json");
    REQUIRE(res.exit_code == 0);
    const json j = json::parse(res.output);
    CHECK(j.dump(2) + "\n" == res.output);
    CHECK(j["delta"] == "2");
    CHECK(j["d"] == "134");
    CHECK(j["p"] == "3");
    CHECK(leaves_are_strings_or_bools(j));
}

TEST_CASE("coset output") {
    const CmdResult res = run_cli("coset -p 3 -n 5 -d 134");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "{134,160,206,230,238}"));
    CHECK(contains(res.output, "representative: 134"));

    const CmdResult j = run_cli("coset -p 3 -n 7 -d 224 --json");
    REQUIRE(j.exit_code == 0);
    const json parsed = json::parse(j.output);
    CHECK(parsed.dump(2) + "\n" == j.output);
    bool has656 = false;
    for (const auto& e : parsed["coset"]) has656 = has656 || e == "656";
    CHECK(has656);
}

TEST_CASE("hermite certificates") {
    const CmdResult a = run_cli("hermite -p 3 -n 7 -d 820 -t 26");
    CHECK(a.exit_code == 0);
    CHECK(contains(a.output, "C = 1 (mod 3)"));
    CHECK(contains(a.output, "not a permutation"));

    const CmdResult b = run_cli("hermite -p 3 -n 5 -d 134 -t 2");
    CHECK(b.exit_code == 0);
    CHECK(contains(b.output, "C = 1"));

    CHECK(run_cli("hermite -p 3 -n 5 -d 134 -t 3").exit_code == 2); // t = 0 mod p
    CHECK(run_cli("hermite -p 3 -n 5 -d 134 -t 0").exit_code == 2);
}

TEST_CASE("family generation and checking") {
    const CmdResult a = run_cli("family conj13 -n 7 --check");
    CHECK(a.exit_code == 0);
    CHECK(contains(a.output, "d = 40"));
    CHECK(contains(a.output, "delta = 2"));
    CHECK(contains(a.output, "APN"));

    const CmdResult b = run_cli("family thm110 -n 3 -l 2 --check");
    CHECK(b.exit_code == 0);
    CHECK(contains(b.output, "d = 83"));
    CHECK(contains(b.output, "delta = 2"));

    const CmdResult c = run_cli("family zw -p 3 -n 7 -k 2 -u 3");
    CHECK(c.exit_code == 0);
    CHECK(contains(c.output, "d = 656"));
    CHECK(contains(c.output, "coset representative: 224"));

    CHECK(run_cli("family cor33 -n 7 -l 2").exit_code == 2); // congruence fails
    CHECK(run_cli("family conj13").exit_code == 2);          // missing -n
    CHECK(run_cli("family nosuch -n 5").exit_code == 2);

    // q = 3^11 exceeds the brute-force guard: generate fine, skip the check
    const CmdResult big = run_cli("family conj14 -n 11 --check");
    CHECK(big.exit_code == 0);
    CHECK(contains(big.output, "d = 66430"));
    CHECK(contains(big.output, "check skipped"));

    const CmdResult j = run_cli("family conj14 -n 5 --check --json");
    REQUIRE(j.exit_code == 0);
    const json parsed = json::parse(j.output);
    CHECK(parsed.dump(2) + "\n" == j.output);
    CHECK(parsed["d"] == "212");
    CHECK(parsed["coset_representative"] == "152");
    CHECK(parsed["check"]["apn"] == true);
}

TEST_CASE("verify-table: all rows pass, failures are detected") {
    const CmdResult all = run_cli("verify-table");
    CHECK(all.exit_code == 0);
    for (const char* label : {"row I:", "row II:", "row III:", "row IV:", "row V:", "row VI:",
                              "row VII:"})
        CHECK(contains(all.output, label));
    CHECK(contains(all.output, "overall: PASS"));

    const CmdResult only = run_cli("verify-table --only VI");
    CHECK(only.exit_code == 0);
    CHECK(contains(only.output, "row VI:"));
    CHECK_FALSE(contains(only.output, "row VII:"));

    // negative control: a deliberately corrupted expected coset must fail
    const CmdResult bad = run_cli("verify-table --corrupt II");
    CHECK(bad.exit_code == 1);
    CHECK(contains(bad.output, "FAIL"));

    CHECK(run_cli("verify-table --only XYZ").exit_code == 2);
}

TEST_CASE("verify-table: machine formats") {
    const CmdResult j = run_cli("verify-table --json");
    REQUIRE(j.exit_code == 0);
    const json parsed = json::parse(j.output);
    CHECK(parsed.dump(2) + "\n" == j.output);
    CHECK(parsed["overall"] == true);
    CHECK(parsed["rows"].size() == 7);
    CHECK(leaves_are_strings_or_bools(parsed));

    const CmdResult c = run_cli("verify-table --csv");
    REQUIRE(c.exit_code == 0);
    CHECK(first_line(c.output) == "label,p,n,d,expected_coset,computed_coset,delta,pass");
    CHECK(contains(c.output, "VI,5,3,14,14 70 102,14 70 102,2,pass"));
}

TEST_CASE("search: reference classes at desk scale") {
    const CmdResult a = run_cli("search -p 5 -n 3 --delta-max 2");
    CHECK(a.exit_code == 0);
    CHECK(contains(a.output, "d = 14"));
    CHECK(contains(a.output, "d = 43"));

    const CmdResult b = run_cli("search -p 3 -n 5 --delta-max 2");
    CHECK(b.exit_code == 0);
    CHECK(contains(b.output, "d = 134"));
    CHECK(contains(b.output, "d = 152"));

    const CmdResult tiny = run_cli("search -p 3 -n 1 --delta-max 3");
    CHECK(tiny.exit_code == 0);
    CHECK(contains(tiny.output, "d = 1"));

    CHECK(run_cli("search -p 3 -n 11 --delta-max 2").exit_code == 2); // q > 10^5

    const CmdResult csv = run_cli("search -p 5 -n 3 --delta-max 2 --csv");
    CHECK(csv.exit_code == 0);
    CHECK(first_line(csv.output) == "representative,coset,gcd,delta");
    CHECK(contains(csv.output, "14,14 70 102,2,2"));

    const CmdResult j = run_cli("search -p 5 -n 3 --delta-max 2 --json");
    REQUIRE(j.exit_code == 0);
    const json parsed = json::parse(j.output);
    CHECK(parsed.dump(2) + "\n" == j.output);
    CHECK(parsed["classes"].size() == 6);
    CHECK(leaves_are_strings_or_bools(parsed));

    const CmdResult hj = run_cli("hermite -p 3 -n 5 -d 134 -t 2 --json");
    REQUIRE(hj.exit_code == 0);
    const json hparsed = json::parse(hj.output);
    CHECK(hparsed.dump(2) + "\n" == hj.output);
    CHECK(hparsed["c"] == "1");
    CHECK(hparsed["certifies_not_permutation"] == true);
}

TEST_CASE("field-info") {
    const CmdResult res = run_cli("field-info -p 3 -n 5");
    CHECK(res.exit_code == 0);
    CHECK(contains(res.output, "q = 243"));
    CHECK(contains(res.output, "x^5 + 2*x^4 + 1"));

    const CmdResult alt = run_cli("field-info -p 3 -n 5 --modulus 1,2,0,0,0,1");
    CHECK(alt.exit_code == 0);
    CHECK(contains(alt.output, "x^5 + 2*x + 1"));

    CHECK(run_cli("field-info -p 3 -n 5 --modulus 1,1,0,0,0,1").exit_code == 2); // reducible

    const CmdResult j = run_cli("field-info -p 3 -n 5 --json");
    REQUIRE(j.exit_code == 0);
    const json parsed = json::parse(j.output);
    CHECK(parsed.dump(2) + "\n" == j.output);
    CHECK(parsed["q"] == "243");
}

TEST_CASE("identical invocations produce identical bytes") {
    for (const std::string args :
         {std::string("verify-table --json"), std::string("search -p 5 -n 3 --delta-max 2 --json"),
          std::string("delta -p 3 -n 5 -d 134 --full-spectrum")}) {
        const CmdResult a = run_cli(args);
        const CmdResult b = run_cli(args);
        REQUIRE(a.exit_code == b.exit_code);
        REQUIRE(a.output == b.output);
    }
}

TEST_CASE("usage errors exit with 2, help with 0") {
    CHECK(run_cli("", true).exit_code == 2);          // no subcommand
    CHECK(run_cli("nosuchcmd", true).exit_code == 2); // unknown subcommand
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_SUITE_END();
