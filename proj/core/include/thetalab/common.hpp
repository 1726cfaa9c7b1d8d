#pragma once

// Shared plumbing for the theta-lab core: the complex value type every module
// trades in, the error taxonomy, and a small deterministic parallel helper.

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace thetalab {

using ComplexValue = std::complex<double>;

// Thrown when an adaptive scheme runs out of its subdivision/evaluation
// budget before reaching the requested tolerance.  The CLI maps this to
// exit code 3.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an argument lands on a pole of Gamma/zeta or violates a
// documented domain restriction.
struct pole_error : std::domain_error {
    explicit pole_error(const std::string& what) : std::domain_error(what) {}
};

// Worker budget for the few parallel sites (lattice sums, tile integrals).
// Resolution order: THETA_LAB_THREADS env var, then set_thread_budget(),
// then hardware concurrency.  Results are chunked deterministically, so the
// worker count never changes a computed value bitwise.
int thread_budget();
void set_thread_budget(int n);  // n <= 0 restores the automatic choice

// Runs fn(i) for i in [0, n) on up to thread_budget() workers and returns the
// per-index results in index order.  Chunking is fixed (independent of the
// worker count) so reductions over the result vector are reproducible.
std::vector<double> parallel_map(int n, const std::function<double(int)>& fn);

inline bool is_finite(ComplexValue v) {
    return std::isfinite(v.real()) && std::isfinite(v.imag());
}

}  // namespace thetalab
