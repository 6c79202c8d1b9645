// Acceptance suite: runs every criterion at its stated tolerance (all exact)
// and prints one PASS/FAIL line per criterion. Criterion 10 exercises the
// CLI binary, whose path is argv[1].

#include "qoc/qoc.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

using namespace qoc;
using json = nlohmann::json;

namespace {

int g_failures = 0;

void criterion(int index, const std::string& name, double time_limit_s,
               const std::function<std::string()>& body) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
        detail = body();
        ok = detail.empty();
    } catch (const std::exception& e) {
        ok = false;
        detail = e.what();
    }
    double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && time_limit_s > 0 && secs > time_limit_s) {
        ok = false;
        detail = "exceeded time limit of " + std::to_string(time_limit_s) + "s";
    }
    if (!ok) ++g_failures;
    std::printf("%s criterion-%d %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", index,
                name.c_str(), secs, detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

std::string suite_or_empty(const SuiteResult& r) { return r.ok ? "" : r.detail; }

struct CmdResult {
    int exit_code = -1;
    std::string out;
};

CmdResult run_cmd(const std::string& cmd) {
    CmdResult r;
    FILE* p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!p) return r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string cli_contract(const std::string& cli) {
    // JSON byte-stability across two runs of the criterion-1 queries.
    for (int q = 0; q <= 4; ++q)
        for (const char* tw : {"O", "T"}) {
            std::string cmd = cli + " group --theory icoh --n 4 -q " + std::to_string(q) +
                              " --twist " + tw + " --format json";
            CmdResult first = run_cmd(cmd);
            CmdResult second = run_cmd(cmd);
            if (first.exit_code != 0) return "group query failed: " + cmd;
            if (first.out != second.out) return "JSON output not byte-stable: " + cmd;
        }

    // Spot-check the twisted q=3 JSON content.
    CmdResult spot =
        run_cmd(cli + " group --theory icoh --n 4 -q 3 --twist T --format json");
    json j = json::parse(spot.out);
    if (j["torsion_rank"] != 2) return "torsion_rank != 2 in twisted q=3 report";
    if (j["basis"] != json::array({"bT(1)^3", "bT(c2)"}))
        return "twisted q=3 basis mismatch";

    // Parse/print round-trip on 100 generated expressions.
    SuiteParams prm;
    SuiteResult rt = suites::expr_roundtrip_suite(prm);
    if (!rt.ok) return rt.detail;

    // Exit-code semantics: 0 success, 1 evaluation/check failure, 2 usage.
    if (run_cmd(cli + " check --suite bsl4c-golden").exit_code != 0)
        return "expected exit 0 from a passing check";
    if (run_cmd(cli + " group --theory chow --n 4 -q 1 --twist T").exit_code != 2)
        return "expected exit 2 for an invalid theory/twist combination";
    if (run_cmd(cli + " group --theory icoh --n 4").exit_code != 2)
        return "expected exit 2 for a missing degree";
    if (run_cmd(cli + " eval --theory witt --field symbolic --n 4 \"p2 + p2\"").exit_code != 1)
        return "expected exit 1 for symbolic coefficient arithmetic";
    if (run_cmd(cli + " eval --theory icoh --n 4 \"bT(c2)^2 + b(c2)^2 + bT(1)^2*p2\"")
            .exit_code != 0)
        return "expected exit 0 for the golden evaluation";
    return "";
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    SuiteParams dflt;

    criterion(1, "bsl4c-golden-table", 1.0, [&] {
        return suite_or_empty(suites::bsl4c_golden_suite(dflt));
    });

    criterion(2, "golden-relation", 0, [&] {
        EvalConfig cfg{Theory::ICoh, 4, WittModel{Field::RealClosed}};
        Value v = eval_string("bT(c2)^2 + b(c2)^2 + bT(1)^2*p2", cfg);
        return v.is_zero() ? "" : "relation does not evaluate to zero";
    });

    criterion(3, "steenrod-suite", 30.0, [&] {
        SuiteParams prm;
        prm.n = 6;
        prm.qmax = 12;
        for (auto fn : {suites::sq2_nilpotent_suite, suites::sq2_derivation_suite,
                        suites::sq2_twist_suite}) {
            SuiteResult r = fn(prm);
            if (!r.ok) return r.detail;
        }
        SuiteParams nat = prm;
        nat.qmax = 10;
        return suite_or_empty(suites::sq2_naturality_suite(nat));
    });

    criterion(4, "kernel-lemmas", 0, [&] {
        SuiteParams prm;
        prm.n = 6;
        prm.qmax = 10;
        return suite_or_empty(suites::kernel_subring_suite(prm));
    });

    criterion(5, "product-path-equivalence", 0, [&] {
        SuiteParams prm;
        prm.n = 6;
        prm.qmax = 12;
        return suite_or_empty(suites::product_formula_suite(prm));
    });

    criterion(6, "chow-presentation-oracle", 0, [&] {
        SuiteParams prm;
        prm.n = 6;
        prm.qmax = 12;
        return suite_or_empty(suites::localization_suite(prm));
    });

    criterion(7, "chow-witt-group-oracle", 60.0, [&] {
        SuiteParams prm;
        prm.n = 5;
        prm.qmax = 10;
        return suite_or_empty(suites::cw_groups_suite(prm));
    });

    criterion(8, "characteristic-class-reductions", 0, [&]() -> std::string {
        WittModel real{Field::RealClosed};
        Space s = Space::bslnc(4);
        ChowWittClass p2 = pontryagin_class(real, 4, 1);
        PolyZ c2 = PolyZ::generator(s, s.c_index(2));
        PolyZ c3 = PolyZ::generator(s, s.c_index(3));
        PolyZ c4 = PolyZ::generator(s, s.c_index(4));
        PolyZ th = PolyZ::generator(s, s.theta_index());
        if (p2.ch_part() != c2 * c2 + c4.scaled(2) - (th * c3).scaled(4))
            return "chPart(p2) != c2^2 + 2c4 - 4*th*c3";
        PolyF2 c2f = PolyF2::generator(s, s.c_index(2));
        if (mod2_reduce(p2.ch_part()) != c2f * c2f || rho(p2.i_part()) != c2f * c2f)
            return "mod-2 reduction of p2 is not rho(p2) = c2^2";
        euler_class(real, 4);   // validates (e4, c4)
        theta_euler(real, 4);   // validates (beta_T(1), th)
        return "";
    });

    criterion(9, "torsion-dimension-identity", 0, [&] {
        SuiteParams prm;
        prm.n = 6;
        prm.qmax = 12;
        return suite_or_empty(suites::torsion_dim_suite(prm));
    });

    criterion(10, "cli-contract", 0, [&]() -> std::string {
        if (cli.empty()) return "CLI path not supplied (argv[1])";
        return cli_contract(cli);
    });

    if (g_failures) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
