#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "qladder/report_io.hpp"

using namespace qladder;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int usage_error(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return kExitUsage;
}

void emit(const RunConfig& cfg, const Json& json, const std::string& text,
          const std::string& csv) {
    std::string payload;
    if (cfg.format == "json") payload = json.dump(2) + "\n";
    else if (cfg.format == "csv") payload = csv;
    else payload = text;
    std::cout << payload;
    if (!cfg.out_path.empty()) {
        std::ofstream out(cfg.out_path, std::ios::binary);
        out << payload;
    }
}

int validate(const RunConfig& cfg, const std::string& sqrt_q_text) {
    auto s = parse_rational(sqrt_q_text);
    if (!s) return usage_error("sqrt-q must be a rational p/r");
    if (!(*s > 0 && *s < 1)) return usage_error("sqrt-q must lie in (0,1)");
    if (cfg.nmax < 0 || cfg.nmax > 64) return usage_error("nmax must lie in 0..64");
    if (cfg.family != "sw" && cfg.family != "qlaguerre")
        return usage_error("family must be sw or qlaguerre");
    if (cfg.family == "qlaguerre" && cfg.alpha < 1)
        return usage_error(
            "exact q-Laguerre commands require integer alpha >= 1 (the 1/x residue "
            "integrals diverge otherwise)");
    if (cfg.command == "quadcheck" && cfg.precision_bits < 128)
        return usage_error("precision must be at least 128 bits");
    return kExitOk;
}

int run(const RunConfig& cfg) {
    QContext ctx(cfg.sqrt_q);
    WeightFamily family = family_from_config(cfg);
    if (cfg.command == "table") {
        auto rows = make_table_rows(family, ctx, cfg.nmax);
        emit(cfg, table_json(cfg, rows), table_text(rows), table_csv(rows));
        return kExitOk;
    }
    if (cfg.command == "oracle") {
        auto rows = make_oracle_rows(family, ctx, cfg.nmax);
        emit(cfg, oracle_json(cfg, rows), oracle_text(rows), oracle_csv(rows));
        for (const auto& r : rows)
            if (!r.equal) return kExitFailure;
        return kExitOk;
    }
    if (cfg.command == "verify") {
        VerifierSession session(family, ctx, cfg.nmax);
        VerificationReport report = session.run_suite();
        emit(cfg, verify_json(cfg, report), verify_text(report), verify_csv(report));
        return report.overall_success() ? kExitOk : kExitFailure;
    }
    // quadcheck
    VerifierSession session(family, ctx, std::min(cfg.nmax, 5L));
    auto rows = run_numeric_checks(session, cfg.precision_bits, std::min(cfg.nmax, 4L),
                                   cfg.tol_exp, cfg.tol_exp + 5);
    emit(cfg, quadcheck_json(cfg, rows), quadcheck_text(rows), quadcheck_csv(rows));
    for (const auto& r : rows)
        if (!r.passed) return kExitFailure;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact ladder-operator toolkit for the Stieltjes-Wigert and q-Laguerre "
                 "orthogonal polynomial families"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string sqrt_q_text = "1/2";

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--family", cfg.family, "weight family: sw | qlaguerre")->required();
        sub->add_option("--sqrt-q", sqrt_q_text, "exact square root of q, as p/r in (0,1)")
            ->required();
        sub->add_option("--alpha", cfg.alpha, "q-Laguerre parameter (integer >= 1)");
        sub->add_option("--nmax", cfg.nmax, "largest index n (<= 64)");
        sub->add_option("--format", cfg.format, "output format: text | json | csv")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--out", cfg.out_path, "also write the report to this file");
    };

    CLI::App* table = app.add_subcommand("table", "closed-form coefficient table");
    CLI::App* verify = app.add_subcommand("verify", "run the exact identity suite");
    CLI::App* quadcheck = app.add_subcommand("quadcheck", "numeric integral checks");
    CLI::App* oracle = app.add_subcommand("oracle", "closed forms vs moment oracle");
    for (CLI::App* sub : {table, verify, quadcheck, oracle}) add_common(sub);
    quadcheck->add_option("--precision", cfg.precision_bits, "working precision in bits (>= 128)");
    quadcheck->add_option("--tol-exp", cfg.tol_exp,
                          "relative tolerance exponent (residuals must be < 10^-exp)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    int rc = validate(cfg, sqrt_q_text);
    if (rc != kExitOk) return rc;
    cfg.sqrt_q = *parse_rational(sqrt_q_text);

    try {
        return run(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
