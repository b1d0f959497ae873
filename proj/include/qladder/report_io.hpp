#ifndef QLADDER_REPORT_IO_HPP
#define QLADDER_REPORT_IO_HPP

#include <string>
#include <vector>

#include "json.hpp"
#include "qladder/closed_forms.hpp"
#include "qladder/ladder_verifier.hpp"
#include "qladder/quadrature.hpp"

namespace qladder {

using Json = nlohmann::ordered_json;

/// Parsed command-line configuration (see the CLI for validation rules).
struct RunConfig {
    std::string command;
    std::string family;  // "sw" | "qlaguerre"
    Rational sqrt_q;
    long alpha = 1;
    long nmax = 8;
    unsigned precision_bits = 256;
    int tol_exp = 20;
    std::string format = "text";  // text | json | csv
    std::string out_path;
};

WeightFamily family_from_config(const RunConfig& cfg);

/// One row of the coefficient table, everything as exact rational strings.
struct TableRow {
    long n;
    std::string alpha, beta, R, r, p1, zeta_ratio;
};

/// Closed-form coefficient table for n <= nmax (no oracle involved).
std::vector<TableRow> make_table_rows(const WeightFamily& family, const QContext& ctx, long nmax);

/// Side-by-side oracle vs closed-form comparison.
struct OracleRow {
    long n;
    std::string alpha_oracle, alpha_closed, beta_oracle, beta_closed;
    bool equal;
};
std::vector<OracleRow> make_oracle_rows(const WeightFamily& family, const QContext& ctx, long nmax);

Json config_json(const RunConfig& cfg);
Json table_json(const RunConfig& cfg, const std::vector<TableRow>& rows);
Json oracle_json(const RunConfig& cfg, const std::vector<OracleRow>& rows);
Json verify_json(const RunConfig& cfg, const VerificationReport& report);
Json quadcheck_json(const RunConfig& cfg, const std::vector<NumericCheckRow>& rows);

std::string table_csv(const std::vector<TableRow>& rows);
std::string oracle_csv(const std::vector<OracleRow>& rows);
std::string verify_csv(const VerificationReport& report);
std::string quadcheck_csv(const std::vector<NumericCheckRow>& rows);

std::string table_text(const std::vector<TableRow>& rows);
std::string oracle_text(const std::vector<OracleRow>& rows);
std::string verify_text(const VerificationReport& report);
std::string quadcheck_text(const std::vector<NumericCheckRow>& rows);

}  // namespace qladder

#endif
