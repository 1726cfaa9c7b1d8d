#pragma once

// Machine-readable verification report: one top-level check per acceptance
// criterion, the fitted Fourier constant, both norm evaluations, and the
// adjudication of the claimed ratio to pi.  Serialized as JSON with a stable
// field order and 17-significant-digit floats (lossless binary64 round-trip).

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace thetalab {

struct CheckResult {
    std::string id;
    std::string description;
    double measured = 0.0;
    std::optional<double> expected;  // empty: the artifact itself adjudicates
    double tolerance = 0.0;
    std::string status;  // "pass", "fail", or "adjudicated"

    bool operator==(const CheckResult&) const = default;
};

// Derives status from the fields: pass iff |measured - expected| <= tolerance
// when expected is present, "adjudicated" otherwise.
CheckResult make_check(std::string id, std::string description, double measured,
                       std::optional<double> expected, double tolerance);

struct VerificationReport {
    std::map<std::string, std::string> config_echo;
    std::vector<CheckResult> check_results;
    double fitted_c = 0.0;
    double norm_direct_total = 0.0;
    std::map<int, double> norm_from_residue;  // keyed by p
    double final_ratio_to_pi = 0.0;
    double claimed_ratio = 4.0;
    bool agreement_with_claim = false;
    // Residue of I_p at s = 1 (reference p = 3) under each reading of the
    // constant, and the norm each one forces.
    std::map<std::string, double> residue_candidates;
    std::map<std::string, double> candidate_norms;

    bool operator==(const VerificationReport&) const = default;
};

// JSON text with fields in declaration order; keys of maps sorted.
std::string emit_report(const VerificationReport& report);

void write_report(const VerificationReport& report, const std::string& path);

// Inverse of emit_report; throws std::runtime_error on malformed input.
VerificationReport parse_report(const std::string& text);

}  // namespace thetalab
