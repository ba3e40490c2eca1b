/* Contract test for the command-line driver: spawns the real binary and
 * inspects exit codes and report bytes. */

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

#ifndef PODLES_CLI_PATH
#error "PODLES_CLI_PATH must point at the built binary"
#endif

namespace {

int g_failures = 0;

void check(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failures;
        std::fprintf(stderr, "FAIL: %s\n", what.c_str());
    }
}

/* Run `args` appended to the binary path; capture stdout, return exit code. */
int run(const std::string& args, std::string& out) {
    std::string cmd = std::string(PODLES_CLI_PATH) + " " + args;
    out.clear();
    FILE* p = popen(cmd.c_str(), "r");
    if (!p)
        return -1;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0)
        out.append(buf, n);
    int status = pclose(p);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == '\n') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty())
        out.push_back(cur);
    return out;
}

std::vector<std::string> fields_of(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line + ",") {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

void test_exit_codes() {
    std::string out;
    check(run("--help >/dev/null 2>&1", out) == 0, "--help exits 0");
    check(run(">/dev/null 2>&1", out) == 2, "missing subcommand exits 2");
    check(run("verify --q 2 --s 1 2>/dev/null", out) == 2, "q outside (0,1) exits 2");
    check(run("verify --q 1/2 --s 0 2>/dev/null", out) == 2, "s = 0 exits 2");
    check(run("pair --q 1x2 --s 1 2>/dev/null", out) == 2, "malformed q exits 2");
    check(run("pair --q 1/2 --s 1 --format yaml 2>/dev/null", out) == 2, "unknown format exits 2");
    check(run("verify --q 1/2 --s 1 --suites symbolic,bogus 2>/dev/null", out) == 2,
          "unknown suite exits 2");
    check(run("pair --q 1/2 --s 1 --trunc 8 2>/dev/null", out) == 2, "trunc below 16 exits 2");
    check(run("pair --q 1/2 --s 1 --tol -1 2>/dev/null", out) == 2, "negative tol exits 2");

    /* a tolerance too coarse to certify integrality must flag rows and exit 1 */
    int code = run("pair --q 4/5 --s 2 --n-max 1 --tol 2.0 2>/dev/null", out);
    check(code == 1, "uncertified rows exit 1");
    check(out.find(",0\n") != std::string::npos, "uncertified rows are flagged");
}

void test_pair_csv() {
    std::string out;
    int code = run("pair --q 1/2 --s 1 --n-max 3 2>/dev/null", out);
    check(code == 0, "pair exits 0");
    auto ls = lines_of(out);
    check(ls.size() == 15, "header plus 14 rows at n-max 3");
    check(ls[0] == "N,form,q,s,pair_rho,pair_rho_tail,pair_eps,certified", "csv header");
    check(ls[1] == "-3,E,1/2,1,-3,0,1,1", "gluing row is integer-exact");

    /* row plan: E then Q per winding, P1 after Q at N = 1 */
    std::vector<std::string> forms, ns;
    for (size_t i = 1; i < ls.size(); ++i) {
        auto f = fields_of(ls[i]);
        check(f.size() == 8, "row has 8 fields");
        ns.push_back(f[0]);
        forms.push_back(f[1]);
        check(f[2] == "1/2" && f[3] == "1", "parameters echoed per row");
        double rho = std::strtod(f[4].c_str(), nullptr);
        check(std::abs(rho - std::strtod(f[0].c_str(), nullptr)) < 1e-6,
              "rho column equals the winding");
        check(f[6] == "1", "eps column is exactly 1");
        check(f[7] == "1", "row certified");
    }
    std::vector<std::string> want_forms = {"E", "Q", "E", "Q", "E", "Q", "E",
                                           "E", "Q", "P1", "E", "Q", "E", "Q"};
    std::vector<std::string> want_ns = {"-3", "-3", "-2", "-2", "-1", "-1", "0",
                                        "1", "1", "1", "2", "2", "3", "3"};
    check(forms == want_forms, "form order");
    check(ns == want_ns, "winding order");

    code = run("pair --q 1/2 --s 1 --n-max 0 2>/dev/null", out);
    ls = lines_of(out);
    check(code == 0 && ls.size() == 2, "n-max 0 emits a single row");
    check(ls[1] == "0,E,1/2,1,0,0,1,1", "trivial winding row");
}

void test_pair_json() {
    std::string out;
    int code = run("pair --q 1/2 --s 1 --n-max 1 --format json 2>/dev/null", out);
    check(code == 0, "json pair exits 0");
    auto doc = nlohmann::json::parse(out, nullptr, false);
    check(!doc.is_discarded(), "output parses as json");
    if (doc.is_discarded())
        return;
    check(doc["q"] == "1/2" && doc["s"] == "1", "parameters serialized as rational strings");
    auto rows = doc["rows"];
    check(rows.is_array() && rows.size() == 6, "six rows at n-max 1");
    bool saw_q1 = false;
    for (const auto& r : rows) {
        check(r["N"].is_number_integer() && r["form"].is_string(), "row keys");
        for (const char* key : {"pair_rho", "pair_eps"}) {
            const auto& p = r[key];
            check(p.contains("value") && p.contains("tail_bound") && p.contains("rounded") &&
                      p.contains("gap") && p.contains("certified"),
                  "pairing report shape");
            check(p["certified"] == true, "row certified in json");
        }
        if (r["N"] == 1 && r["form"] == "Q") {
            saw_q1 = true;
            check(r["pair_rho"]["rounded"] == 1, "Q1 rho rounds to 1");
            check(r["pair_eps"]["value"] == 1.0, "Q1 eps is 1");
        }
    }
    check(saw_q1, "Q row present at N=1");
}

void test_verify() {
    std::string out;
    int code = run("verify --q 1/2 --s 1 --n-max 2 --trunc 64 2>/dev/null", out);
    check(code == 0, "full verify exits 0");
    auto ls = lines_of(out);
    check(ls.size() >= 2 && ls[0] == "suite,check,residual,pass", "verify csv header");
    for (size_t i = 1; i < ls.size(); ++i)
        check(ls[i].size() > 2 && ls[i].substr(ls[i].size() - 2) == ",1",
              "all verify rows pass");

    code = run("verify --q 1/2 --s 1 --n-max 3 --suites symbolic 2>/dev/null", out);
    ls = lines_of(out);
    check(code == 0 && ls.size() == 1 + 14 * 3, "symbolic suite emits 14 lines per level");

    code = run("verify --q 1/2 --s 1 --n-max 1 --suites operator --format json 2>/dev/null", out);
    auto doc = nlohmann::json::parse(out, nullptr, false);
    check(code == 0 && !doc.is_discarded(), "verify json parses");
    if (!doc.is_discarded()) {
        check(doc["checks"].is_array() && !doc["checks"].empty(), "verify json has checks");
        for (const auto& c : doc["checks"])
            check(c["pass"] == true && c["suite"] == "operator", "operator checks pass");
    }
}

void test_determinism_and_out() {
    std::string a, b;
    run("pair --q 3/10 --s 1/2 --n-max 2 2>/dev/null", a);
    run("pair --q 3/10 --s 1/2 --n-max 2 2>/dev/null", b);
    check(!a.empty() && a == b, "pair output is byte-identical across runs");

    std::string path = "/tmp/podles_cli_out_test.csv";
    std::string out;
    int code = run("pair --q 3/10 --s 1/2 --n-max 2 --out " + path + " 2>/dev/null", out);
    check(code == 0 && out.empty(), "--out suppresses stdout");
    FILE* f = std::fopen(path.c_str(), "rb");
    check(f != nullptr, "--out file written");
    if (f) {
        std::string file_text;
        char buf[4096];
        size_t n;
        while ((n = fread(buf, 1, sizeof buf, f)) > 0)
            file_text.append(buf, n);
        std::fclose(f);
        check(file_text == a, "--out file matches stdout bytes");
        std::remove(path.c_str());
    }

    /* decimals are accepted but echoed back as the rational actually used */
    run("pair --q 0.3 --s 0.5 --n-max 0 2>&1 >/dev/null", out);
    check(out.find("3/10") != std::string::npos && out.find("1/2") != std::string::npos,
          "decimal conversion echoed on stderr");
}

}  // namespace

int main() {
    test_exit_codes();
    test_pair_csv();
    test_pair_json();
    test_verify();
    test_determinism_and_out();
    if (g_failures == 0) {
        std::printf("cli contract: all checks passed\n");
        return 0;
    }
    std::printf("cli contract: %d check(s) FAILED\n", g_failures);
    return 1;
}
