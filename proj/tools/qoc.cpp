// Command-line front end: group/table/basis queries, expression evaluation
// and the oracle check suites, with text and JSON output.
//
// Exit codes: 0 success, 1 check or evaluation failure, 2 usage error.

#include "qoc/checks.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using json = nlohmann::ordered_json;
using namespace qoc;

namespace {

struct Options {
    std::string theory = "chow";
    int n = 4;
    int q = -1;
    int qmax = -1;
    std::string twist = "O";
    std::string field = "real";
    std::string format = "text";
    std::string suite = "all";
    uint64_t seed = 0x5eed;
    std::string expr;
};

WittModel parse_field(const std::string& f) {
    if (f == "real") return WittModel{Field::RealClosed};
    if (f == "quadclosed") return WittModel{Field::QuadClosed};
    if (f == "symbolic") return WittModel{Field::Symbolic};
    throw input_error("unknown field model '" + f + "'");
}

Twist parse_twist(const std::string& t) {
    if (t == "O") return Twist::O;
    if (t == "T") return Twist::T;
    throw input_error("twist must be O or T");
}

Theory parse_theory(const std::string& t) {
    auto th = theory_from_name(t);
    if (!th) throw input_error("unknown theory '" + t + "'");
    return *th;
}

void validate_combo(Theory th, Twist tw) {
    if ((th == Theory::Chow || th == Theory::Ch) && tw == Twist::T)
        throw input_error("chow theories carry no twist");
}

json report_json(const GroupReport& r) {
    auto opt = [](int v) { return v < 0 ? json(nullptr) : json(v); };
    json j;
    j["theory"] = r.theory;
    j["n"] = r.n;
    j["degree"] = r.degree;
    j["twist"] = r.twist;
    j["field"] = r.field;
    j["gw_rank"] = opt(r.gw_rank);
    j["z_rank"] = opt(r.z_rank);
    j["torsion_rank"] = opt(r.torsion_rank);
    j["w_rank"] = opt(r.w_rank);
    j["free_rank"] = opt(r.free_rank);
    j["two_torsion"] = r.two_torsion;
    j["basis"] = r.basis;
    j["mode"] = r.mode;
    j["group"] = r.group_str();
    j["notes"] = r.notes;
    return j;
}

GroupReport one_group(const Options& opt) {
    Theory th = parse_theory(opt.theory);
    Twist tw = parse_twist(opt.twist);
    WittModel model = parse_field(opt.field);
    validate_combo(th, tw);
    if (opt.q < 0) throw input_error("degree -q is required");
    switch (th) {
        case Theory::Chow:
        case Theory::Ch: {
            GroupReport r;
            r.theory = theory_name(th);
            r.n = opt.n;
            r.degree = opt.q;
            r.twist = "O";
            r.field = opt.field;
            Space s = Space::bslnc(opt.n);
            std::vector<Monomial> basis = chow_basis(s, opt.q);
            r.free_rank = static_cast<int>(basis.size());
            if (th == Theory::Ch) {
                r.torsion_rank = r.free_rank;  // F2-rank
                r.free_rank = -1;
            }
            for (const Monomial& m : basis) r.basis.push_back(m.str(s));
            return r;
        }
        case Theory::Witt: return witt_group(model, opt.n, opt.q, tw);
        case Theory::ICoh: return icoh_group(model, opt.n, opt.q, tw);
        case Theory::CHW: {
            GroupMode mode = model.field == Field::Symbolic ? GroupMode::Symbolic
                                                            : GroupMode::Instantiated;
            return cw_group(model, opt.n, opt.q, tw, mode);
        }
    }
    throw internal_error("unhandled theory");
}

int cmd_group(const Options& opt) {
    GroupReport r = one_group(opt);
    if (opt.format == "json")
        std::cout << report_json(r).dump(2) << "\n";
    else
        std::cout << r.text() << "\n";
    return 0;
}

int cmd_table(const Options& opt) {
    if (opt.qmax < 0) throw input_error("--qmax is required for table");
    int q0 = opt.q < 0 ? 0 : opt.q;
    json arr = json::array();
    for (int q = q0; q <= opt.qmax; ++q) {
        Options o = opt;
        o.q = q;
        GroupReport r = one_group(o);
        if (opt.format == "json")
            arr.push_back(report_json(r));
        else
            std::cout << r.text() << "\n";
    }
    if (opt.format == "json") std::cout << arr.dump(2) << "\n";
    return 0;
}

int cmd_basis(const Options& opt) {
    GroupReport r = one_group(opt);
    if (opt.format == "json") {
        json j;
        j["theory"] = r.theory;
        j["n"] = r.n;
        j["degree"] = r.degree;
        j["twist"] = r.twist;
        j["basis"] = r.basis;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const std::string& b : r.basis) std::cout << b << "\n";
    }
    return 0;
}

int cmd_check(const Options& opt) {
    SuiteParams prm;
    prm.n = opt.n;
    prm.qmax = opt.qmax;
    prm.seed = opt.seed;
    prm.model = parse_field(opt.field);
    std::vector<SuiteResult> results;
    if (opt.suite == "all") {
        SuiteParams defaults;  // per-suite default ranges
        defaults.seed = opt.seed;
        defaults.model = prm.model;
        results = run_all_suites(defaults);
    } else {
        results.push_back(run_suite(opt.suite, prm));
    }
    bool all_ok = true;
    json arr = json::array();
    for (const SuiteResult& r : results) {
        all_ok = all_ok && r.ok;
        if (opt.format == "json") {
            json j;
            j["suite"] = r.name;
            j["ok"] = r.ok;
            j["detail"] = r.detail;
            arr.push_back(j);
        } else {
            std::ostringstream line;
            line << (r.ok ? "PASS " : "FAIL ") << r.name;
            if (!r.detail.empty()) line << " -- " << r.detail;
            std::cout << line.str() << "\n";
        }
    }
    if (opt.format == "json") std::cout << arr.dump(2) << "\n";
    return all_ok ? 0 : 1;
}

int cmd_eval(const Options& opt) {
    EvalConfig cfg;
    cfg.theory = parse_theory(opt.theory);
    cfg.n = opt.n;
    cfg.model = parse_field(opt.field);
    ExprPtr e = parse_expr(opt.expr);
    Value v = eval_expr(e, cfg);
    if (opt.format == "json") {
        json j;
        j["theory"] = theory_name(cfg.theory);
        j["n"] = cfg.n;
        j["field"] = cfg.model.name();
        j["expr"] = print_expr(e);
        j["zero"] = v.is_zero();
        j["value"] = v.str();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << v.str() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"characteristic-class calculator for quadratically oriented bundles"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd, bool needs_theory) {
        if (needs_theory)
            cmd->add_option("--theory", opt.theory, "chow | ch | witt | icoh | chw");
        cmd->add_option("--n", opt.n, "bundle rank n >= 1");
        cmd->add_option("-q,--degree", opt.q, "cohomological degree");
        cmd->add_option("--qmax", opt.qmax, "top degree for sweeps");
        cmd->add_option("--twist", opt.twist, "O | T");
        cmd->add_option("--field", opt.field, "real | quadclosed | symbolic");
        cmd->add_option("--format", opt.format, "text | json");
    };

    CLI::App* group = app.add_subcommand("group", "one cohomology group");
    add_common(group, true);
    CLI::App* table = app.add_subcommand("table", "sweep a degree range");
    add_common(table, true);
    CLI::App* basis = app.add_subcommand("basis", "list a monomial/torsion basis");
    add_common(basis, true);
    CLI::App* check = app.add_subcommand("check", "run an oracle suite");
    add_common(check, false);
    check->add_option("--suite", opt.suite, "suite name or 'all'");
    check->add_option("--seed", opt.seed, "RNG seed for randomized suites");
    CLI::App* eval = app.add_subcommand("eval", "evaluate a class expression");
    add_common(eval, true);
    eval->add_option("expr", opt.expr, "expression, e.g. \"bT(c2)^2 + b(c2)^2\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (group->parsed()) return cmd_group(opt);
        if (table->parsed()) return cmd_table(opt);
        if (basis->parsed()) return cmd_basis(opt);
        if (check->parsed()) return cmd_check(opt);
        if (eval->parsed()) return cmd_eval(opt);
    } catch (const input_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
