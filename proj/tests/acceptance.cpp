// Acceptance gate: runs the ten verification criteria at their contract
// tolerances and prints one pass/fail line per criterion.  Exit status is 0
// iff every criterion passes (3 on a numerical budget failure, 2 on any
// other error).

#include <cstdio>
#include <exception>

#include "thetalab/checks.hpp"
#include "thetalab/common.hpp"

using namespace thetalab;

int main() {
    CheckContext ctx;  // contract defaults: Y = 100, tol_tile 1e-7, tol_ip 1e-6
    FullRun run;
    try {
        run = run_verification(ctx);
    } catch (const budget_error& e) {
        std::fprintf(stderr, "acceptance: numerical budget exhausted: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance: aborted: %s\n", e.what());
        return 2;
    }

    int passed = 0;
    for (const CriterionOutcome& o : run.criteria) {
        passed += o.passed;
        std::printf("[%s] %-3s %s  (measured %.6g, tolerance %g, %.1fs)\n",
                    o.passed ? "PASS" : "FAIL", o.check.id.c_str(), o.check.description.c_str(),
                    o.check.measured, o.check.tolerance, o.seconds);
    }
    const VerificationReport& rep = run.report;
    std::printf("fitted c = %.12g; norm (direct) = %.12g; ratio to pi = %.12g; "
                "claimed ratio = %g; agreement = %s\n",
                rep.fitted_c, rep.norm_direct_total, rep.final_ratio_to_pi, rep.claimed_ratio,
                rep.agreement_with_claim ? "true" : "false");
    bool all = passed == int(run.criteria.size());
    std::printf("%s: %d/%zu criteria passed\n", all ? "ACCEPTED" : "REJECTED", passed,
                run.criteria.size());
    return all ? 0 : 1;
}
