// Command-line interface: classify normal-form or user-supplied metrics,
// integrate geodesics on the cover of E_0(2), and run the verification
// suite.
//
// Exit codes: 0 success, 1 verification-check failure, 2 usage/input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "liesym/io.hpp"
#include "liesym/liesym.hpp"
#include "liesym/verify.hpp"

namespace {

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag_seed) {
    if (flag_seed) return *flag_seed;
    if (const char* env = std::getenv("LIESYM_SEED")) return std::strtoull(env, nullptr, 10);
    return 42;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw liesym::Error("cannot open output file: " + path);
    return file;
}

int cmd_classify(const std::string& group, const std::string& json_path,
                 const std::optional<double>& mu, const std::optional<double>& nu,
                 const std::optional<double>& lambda, const std::optional<double>& dpar,
                 double tol, const std::string& out_path) {
    using namespace liesym;
    std::ofstream file;
    std::ostream& os = open_output(file, out_path);

    if (!json_path.empty()) {
        std::ifstream in(json_path);
        if (!in) throw Error("cannot open input file: " + json_path);
        json j = json::parse(in);
        const MetricLieAlgebra mla = algebra_from_json(j);
        const ClassificationVerdict v = classify(mla, std::nullopt, tol);
        json params;
        params["source"] = json_path;
        os << verdict_to_json(v, j.value("group", std::string("custom")), params).dump() << "\n";
        return 0;
    }

    HaLeeMetric hl;
    if (group == "R3")
        hl.group = GroupName::R3;
    else if (group == "E0tilde2")
        hl.group = GroupName::E0tilde2;
    else if (group == "SU2")
        hl.group = GroupName::SU2;
    else if (group == "GI")
        hl.group = GroupName::GI;
    else if (group == "G0")
        hl.group = GroupName::G0;
    else if (group == "GD")
        hl.group = GroupName::GD;
    else
        throw ParamOutOfRange("unknown group: " + group);
    hl.mu = mu;
    hl.nu = nu;
    hl.lambda = lambda;
    hl.d = dpar;

    const ClassificationVerdict v = classify_halee(hl, tol);
    json params;
    if (mu) params["mu"] = *mu;
    if (nu) params["nu"] = *nu;
    if (lambda) params["lambda"] = *lambda;
    if (dpar) params["D"] = *dpar;
    os << verdict_to_json(v, group, params).dump() << "\n";
    return 0;
}

int cmd_geodesic(double nu, double v1, double v2, double v3, double t_end, double step,
                 const std::string& out_path) {
    using namespace liesym;
    std::ofstream file;
    std::ostream& os = open_output(file, out_path);
    const AlgebraVector v{v1, v2, v3};
    const GeodesicPath path = integrate_geodesic(nu, v, t_end, step);
    const double dev = write_geodesic_csv(os, nu, v, path);
    std::cerr << "max_deviation " << dev << "\n";
    return 0;
}

int cmd_verify(const std::string& only, const std::optional<double>& tol,
               const std::optional<std::uint64_t>& seed_flag, const std::string& out_path) {
    using namespace liesym;
    VerifyOptions opt;
    opt.seed = resolve_seed(seed_flag);
    opt.tol_override = tol;
    opt.only = only;

    const std::vector<CheckResult> results = run_verification(opt);
    bool all_pass = true;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.check_id << "  measured=" << r.measured
                  << " tolerance=" << r.tolerance
                  << (r.detail.empty() ? "" : "  (" + r.detail + ")") << "\n";
    }

    json report;
    report["seed"] = opt.seed;
    if (opt.tol_override) report["tol_override"] = *opt.tol_override;
    if (!opt.only.empty()) report["only"] = opt.only;
    json checks = json::array();
    for (const auto& r : results) {
        json c;
        c["check_id"] = r.check_id;
        c["module"] = r.module;
        c["claim"] = r.claim;
        c["status"] = r.pass ? "pass" : "fail";
        c["measured"] = r.measured;
        c["expected"] = r.expected;
        c["tolerance"] = r.tolerance;
        if (!r.detail.empty()) c["detail"] = r.detail;
        checks.push_back(c);
    }
    report["checks"] = checks;
    report["all_pass"] = all_pass;
    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) throw Error("cannot open output file: " + out_path);
        file << report.dump(2) << "\n";
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Local symmetry of left-invariant metrics on 3-dimensional Lie groups"};
    app.require_subcommand(1);

    // classify
    auto* classify_cmd = app.add_subcommand(
        "classify", "Classify a normal-form metric or a JSON algebra record");
    std::string group, json_path, out_path;
    std::optional<double> mu, nu, lambda, dpar, tol_flag;
    classify_cmd->add_option("--group", group, "R3|E0tilde2|SU2|GI|G0|GD");
    classify_cmd->add_option("--json", json_path, "algebra record file");
    classify_cmd->add_option("--mu", mu, "parameter mu");
    classify_cmd->add_option("--nu", nu, "parameter nu");
    classify_cmd->add_option("--lambda", lambda, "parameter lambda");
    classify_cmd->add_option("--D", dpar, "parameter D of the GD family");
    classify_cmd->add_option("--tol", tol_flag, "local-symmetry tolerance (default 1e-9)");
    classify_cmd->add_option("--out", out_path, "output path (default stdout)");

    // geodesic
    auto* geod_cmd = app.add_subcommand(
        "geodesic", "Integrate a geodesic and compare with the closed form (CSV)");
    double g_nu = 1.0, g_v1 = 0.0, g_v2 = 0.0, g_v3 = 0.0, g_tend = 1.0, g_step = 1e-3;
    std::string g_out;
    geod_cmd->add_option("--nu", g_nu, "metric parameter nu > 0")->required();
    geod_cmd->add_option("--v1", g_v1, "initial velocity e1 component");
    geod_cmd->add_option("--v2", g_v2, "initial velocity e2 component");
    geod_cmd->add_option("--v3", g_v3, "initial velocity e3 component");
    geod_cmd->add_option("--t-end", g_tend, "integration end time (default 1)");
    geod_cmd->add_option("--step", g_step, "RK4 step (default 1e-3)");
    geod_cmd->add_option("--out", g_out, "output path (default stdout)");

    // verify-paper
    auto* verify_cmd = app.add_subcommand("verify-paper", "Run the verification suite");
    std::string only, v_out;
    std::optional<double> v_tol;
    std::optional<std::uint64_t> v_seed;
    verify_cmd->add_option("--only", only, "substring filter on check ids");
    verify_cmd->add_option("--tol", v_tol, "override every decision tolerance");
    verify_cmd->add_option("--seed", v_seed, "random seed (default 42, env LIESYM_SEED)");
    verify_cmd->add_option("--out", v_out, "write the JSON report to this path");

    std::string fmt_classify = "json", fmt_geod = "csv", fmt_verify = "json";
    classify_cmd->add_option("--format", fmt_classify, "output format (json)")
        ->check(CLI::IsMember({"json"}));
    geod_cmd->add_option("--format", fmt_geod, "output format (csv)")
        ->check(CLI::IsMember({"csv"}));
    verify_cmd->add_option("--format", fmt_verify, "output format (json)")
        ->check(CLI::IsMember({"json"}));

    try {
        app.parse(argc, argv);
        if (classify_cmd->parsed())
            return cmd_classify(group, json_path, mu, nu, lambda, dpar,
                                tol_flag.value_or(liesym::kTolSym), out_path);
        if (geod_cmd->parsed()) return cmd_geodesic(g_nu, g_v1, g_v2, g_v3, g_tend, g_step, g_out);
        if (verify_cmd->parsed()) return cmd_verify(only, v_tol, v_seed, v_out);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const liesym::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
