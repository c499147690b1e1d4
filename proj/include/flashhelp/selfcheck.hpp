#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flashhelp/pmf.hpp"

namespace flashhelp {

/// Brute-force reference optimizers over the probability simplex. These share
/// no code with the dual/geometric-family implementations they guard: they
/// evaluate the primal definitions on a dense grid (step 1e-5 for K = 2, a
/// 200 x 200 barycentric grid with local refinement for K = 3).
namespace bruteforce {

/// max H(Q) s.t. -E_Q ln P <= theta. Returns -inf when no grid point is feasible.
double r_of_theta_grid(const Pmf& p, double theta);

/// min D(Q||P) s.t. -E_Q ln P >= theta. Returns +inf when infeasible.
double helper_failure_grid(const Pmf& p, double theta);

/// min D(Q||P) s.t. H(Q) >= h_min. Returns +inf when infeasible.
double min_divergence_entropy_at_least(const Pmf& p, double h_min);

}  // namespace bruteforce

struct SuiteResult {
    std::string name;
    bool pass = false;
    double max_deviation = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

/// Oracle-equivalence suites behind the `verify` command.
SuiteResult suite_dual_vs_grid(int pmfs_k2, int pmfs_k3, std::uint64_t seed);
SuiteResult suite_counting_law(long long t_lo, long long t_hi);
SuiteResult suite_mc_vs_exact(long long trials, std::uint64_t seed);
SuiteResult suite_sandwich_awgn(int grid_points);
SuiteResult suite_wsp_modulo_grid(int cases, std::uint64_t seed);
SuiteResult suite_mac_split_sweep(int cases, std::uint64_t seed);

/// All suites, sized for a quick or a full run. Setting the environment
/// variable FLASHHELP_VERIFY_TAMPER to a suite name zeroes that suite's
/// tolerance (hook for exercising the failure path).
std::vector<SuiteResult> run_verify_suites(bool quick, std::uint64_t seed = 20250901);

}  // namespace flashhelp
