#pragma once

#include <cstdint>
#include <vector>

#include "flashhelp/awgn.hpp"
#include "flashhelp/exponent_value.hpp"
#include "flashhelp/modulo.hpp"
#include "flashhelp/stats.hpp"

namespace flashhelp {

/// Deterministic parallel RNG layout. Every trial index owns an independent
/// stream derived from (master_seed, trial index), so results are identical
/// for a given (master_seed, trials) no matter how many workers run them.
struct RngPlan {
    std::uint64_t master_seed = 0;
    int stream_count = 1;  // 0 selects hardware concurrency
};

/// Stateless mix of (master seed, trial index) into a single engine seed.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);

/// One flash-help AWGN segment: sphere-limited uniform scalar quantizer plus
/// a per-coordinate grid codebook of step Delta within [-A, A].
struct AwgnFlashConfig {
    AwgnParams awgn;
    FlashDesign design;
    long segment_length;     // t >= 1
    double amplitude_bound;  // A >= Delta/2

    AwgnFlashConfig(AwgnParams awgn_, FlashDesign design_, long t, double amplitude);
    double step() const;  // Delta
    long grid_points_per_coord() const;
    double cube_rate_per_coord() const;  // ln(grid points)
};

struct SimResult {
    long long trials = 0;
    long long errors_total = 0;
    long long helper_failures = 0;  // noise outside sphere / set miss / buffer overflow
    long long decode_errors = 0;
    long long power_samples = 0;       // trials contributing to the power report
    double realized_power_sum = 0.0;   // sum over trials of ||x||^2 / t
    double max_abs_residual = 0.0;     // largest quantization residual seen
    long block_length = 0;             // n used for exponent normalization

    double error_rate() const;
    ConfInterval ci95() const;
    double realized_power_mean() const;

    void merge(const SimResult& other);
    bool operator==(const SimResult&) const = default;
};

/// Monte Carlo of the flash segment. Per trial: draw z ~ N(0, sigma2)^t;
/// count a helper failure if ||z||^2 > t*sigma2*(1+s); otherwise quantize z
/// to step-Delta cell centers, send a uniformly drawn grid codeword minus the
/// quantized noise, and decode by nearest-grid-point rounding. Conditioned on
/// the in-sphere event the decode is error-free; the residual bound
/// |z_i - q(z)_i| <= Delta/2 is asserted on every in-sphere trial.
SimResult simulate_flash_awgn(const AwgnFlashConfig& cfg, long long trials, const RngPlan& rng);

/// Fixed-rate helper on the modulo channel: the helper describes exactly the
/// sequences with P(z^t) >= e^(-t*theta); any other draw is a helper failure
/// and the only error source.
SimResult simulate_modulo_fixed(const ModuloParams& mp, double theta, long t,
                                long long trials, const RngPlan& rng);

/// Exact failure probability of the fixed-rate helper by type enumeration.
double exact_error_modulo_fixed(const ModuloParams& mp, double theta, long t);

/// Two-part-code description length for a type: t*H(type) + c*(K-1)*ln(t+1).
double description_length(const std::vector<long long>& counts, long t, int K,
                          double overhead_const);

/// Variable-rate helper: overflow iff the description length reaches the
/// n*R_h buffer. t = round(n*tau).
SimResult simulate_modulo_variable(const ModuloParams& mp, double helper_rate, double tau,
                                   long n, long long trials, const RngPlan& rng,
                                   double overhead_const = 1.0);

/// Exact overflow probability by type enumeration, same length formula as the
/// simulator.
double exact_overflow_modulo(const ModuloParams& mp, double helper_rate, double tau, long n,
                             double overhead_const = 1.0);

struct ExponentEstimate {
    double value = 0.0;  // -ln(p_hat)/n; for censored runs, the rule-of-three lower bound
    double ci_lo = 0.0;
    double ci_hi = 0.0;  // +inf when the upper end is unbounded
    bool censored = false;
    long block_length = 0;
};

/// Empirical exponent -ln(p_hat)/n with the 95% interval mapped through the
/// same transform. Zero-error runs yield a censored lower bound via the rule
/// of three.
ExponentEstimate estimate_exponent(const SimResult& sr, long n);

}  // namespace flashhelp
