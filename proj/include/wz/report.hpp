#pragma once

#include <string>
#include <vector>

#include "wz/checkers.hpp"

namespace wz {

/// Outcome of one CLI invocation. Exit codes: 0 pass/success, 1 verdict
/// fail, 2 usage or parse error, 3 internal inconsistency.
struct CliResult {
    int exit_code = 0;
    std::string human;
    std::string json;
};

/// Run a CLI command (argv without the program name). Never throws;
/// failures are encoded in exit_code and human.
CliResult run_command(const std::vector<std::string>& args);

/// Payload for the machine-readable report. Schema (fixed key order):
/// {"command", "q", "counts", "zeta": {"num", "den"}, "slopes":
///  [{"lambda", "factor_mod_pM", "side"}], "precision", "verdict",
///  "assumptions", "cross_checks"}. Big integers are decimal strings.
struct ReportPayload {
    std::string command;
    BigInt q;
    std::vector<BigInt> counts;
    std::optional<RationalZeta> zeta;
    struct SlopeEntry {
        BigRat lambda;
        std::vector<BigInt> factor;
        std::string side;  // "num" or "den"
    };
    std::vector<SlopeEntry> slopes;
    uint32_t precision = 0;
    std::string verdict = "n/a";
    std::vector<std::string> assumptions;
    std::vector<std::pair<std::string, bool>> cross_checks;
};

std::string emit_report(const ReportPayload& payload);

}  // namespace wz
