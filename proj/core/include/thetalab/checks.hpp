#pragma once

// The ten verification criteria, shared by the CLI and the acceptance test
// binary.  Each runner returns one top-level CheckResult (ids c1..c10) plus
// the sub-checks it aggregates; compound criteria normalize each sub-residual
// by its tolerance, so the top-level check passes iff every sub-check does.

#include <cstdint>
#include <map>
#include <vector>

#include "thetalab/quadrature.hpp"
#include "thetalab/report.hpp"

namespace thetalab {

struct CheckContext {
    QuadratureSpec spec;
    std::vector<int> p_list = {3, 5, 7};
    std::vector<double> fit_grid = {0.05, 0.1, 0.2, 0.3, 0.5};
    std::uint64_t seed = 20260815;  // seeds the random suites; fixed for reproducibility
};

struct CriterionOutcome {
    CheckResult check;
    std::vector<CheckResult> details;
    double seconds = 0.0;
    bool passed = false;
};

// c1: transformation law, 50 seeded points, relative residual <= 1e-12
CriterionOutcome criterion_transformation_law(const CheckContext& ctx);
// c2: Gamma_0(4)-invariance of F, 20 matrices x 20 points, <= 1e-10
CriterionOutcome criterion_invariance(const CheckContext& ctx);
// c3: Fricke pointwise identity, p in {3,5,7}, 50 points, relative <= 1e-10
CriterionOutcome criterion_fricke_pointwise(const CheckContext& ctx);
// c4: Fourier constant fit: within 1e-8 of an integer, residual <= 1e-9
CriterionOutcome criterion_fourier_constant(const CheckContext& ctx);
// c5: ip_direct vs ip_closed(c_fit) <= 1e-4 relative on s {1.5,2,3} x p {3,5}
CriterionOutcome criterion_ip_agreement(const CheckContext& ctx, double c_fit);
// c6: residue_at_1 on 1/(s-1), zeta(2s-1), radius invariance, ip_closed residue
CriterionOutcome criterion_residue_machinery(const CheckContext& ctx);
// c7: exact index 6p(p+1) for p {3,5,7,11}; lattice extrapolation within 5%
CriterionOutcome criterion_eisenstein_residue(const CheckContext& ctx);

struct NormPipelineNumbers {
    double norm_direct_total = 0.0;  // at ctx.spec.Y
    std::map<int, double> norm_from_residue;
};
// c8: p-independence 1e-8, direct-vs-residue 1e-3 relative, Y-stability 2e-3
CriterionOutcome criterion_norm_consistency(const CheckContext& ctx, double c_fit,
                                            NormPipelineNumbers* numbers = nullptr);
// c9: Gamma_0(36) tiling is 12x the Gamma_0(4) norm within 5%
CriterionOutcome criterion_index_scaling(const CheckContext& ctx);

struct FullRun {
    std::vector<CriterionOutcome> criteria;  // c1..c10 in order
    VerificationReport report;
};

// Runs c1..c9, assembles the report (fitted constant, both norms, candidate
// residues at reference p = 3), and appends the c10 adjudication, which
// passes iff c1..c9 passed and all three candidates are tabulated.
FullRun run_verification(const CheckContext& ctx);

}  // namespace thetalab
