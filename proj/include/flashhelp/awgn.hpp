#pragma once

#include <functional>
#include <optional>

#include "flashhelp/exponent_value.hpp"

namespace flashhelp {

/// Additive white Gaussian channel parameters.
struct AwgnParams {
    double power;   // transmit power budget P
    double sigma2;  // noise variance

    AwgnParams(double power_, double sigma2_);
    double gamma() const { return power / sigma2; }  // SNR
};

enum class HelperMode { FixedRate, VariableRate };

/// Design parameters of a flash-help segment: the entire helper budget R_h is
/// spent on a fraction tau of the block, with sphere slack s (fixed-rate mode).
struct FlashDesign {
    double helper_rate;  // R_h, nats per channel use of the full block
    double tau;          // segment fraction, in (0,1)
    double slack;        // s > 0 (fixed-rate); ignored in variable-rate mode
    HelperMode mode = HelperMode::FixedRate;

    FlashDesign(double helper_rate_, double tau_, double slack_,
                HelperMode mode_ = HelperMode::FixedRate);
    /// Quantizer step for this design at noise level sigma2.
    double step(double sigma2) const;
    /// Segment length for block length n: t = round(n*tau), at least 1.
    long segment_length(long n) const;
};

/// c(gamma) = ln(1+gamma)/2, the no-help capacity. Throws for gamma < 0.
double capacity_awgn(double gamma);

/// Capacity with a rate-R_h helper: c(gamma) + R_h.
double helped_capacity(double gamma, double helper_rate);

/// Fixed-rate uniform quantizer step:
/// Delta = sqrt(2*pi*e*sigma2*(1+s)) * exp(-R_h/tau).
double quantizer_step(double sigma2, double slack, double helper_rate, double tau);

/// Variable-rate step (no sphere slack): Delta = sqrt(2*pi*e*sigma2) * exp(-R_h/tau).
double variable_rate_step(double sigma2, double helper_rate, double tau);

struct FlashRate {
    double rate = 0.0;    // R', nats per full block channel use, clamped at 0
    bool clamped = false; // true when the formula value was nonpositive
};

/// Rate carried by the flash segment, per full block length:
/// R' = R_h + (tau/2) * ln(P / (sigma2*(1+s))).
FlashRate flash_rate(double helper_rate, double tau, double slack, double power, double sigma2);

/// Per-segment exponent of the sphere-overshoot event: (s - ln(1+s))/2.
/// The per-block contribution is tau times this value. Throws for s <= 0.
double chernoff_sphere_exponent(double slack);

/// Exponent curve of an ordinary (no help) channel code: nonincreasing,
/// positive below the no-help capacity, zero at and above it.
using ExponentProvider = std::function<ExponentValue(double)>;

/// Random-coding exponent of the iid Gaussian ensemble:
/// max over rho in [0,1] of E0(rho) - rho*R, E0(rho) = (rho/2)*ln(1+gamma/(1+rho)).
/// Exactly Zero for R >= c(gamma).
ExponentValue default_ordinary_exponent(double rate, double gamma);

/// default_ordinary_exponent with gamma bound.
ExponentProvider default_awgn_provider(double gamma);

/// Achievable exponent of the two-segment flash-help scheme with an explicit
/// design (tau, s): min of the per-block sphere branch tau*(s-ln(1+s))/2 and
/// the ordinary branch (1-tau)*Ea(dR/(1-tau)), dR = max(0, R - R').
/// When dR == 0 the ordinary segment carries no data and its branch is Infinite.
ExponentValue achievable_exponent(double rate, double gamma, double helper_rate,
                                  double tau, double slack, const ExponentProvider& provider);

/// Optimized limit of the scheme (tau -> 0, s = B/tau, B -> infinity):
/// Infinite below R_h, provider(R - R_h) at and above it (which is Zero from
/// R_h + c(gamma) on).
ExponentValue achievable_exponent_limit(double rate, double gamma, double helper_rate,
                                        const ExponentProvider& provider);

/// Infimum feasible variance of the change-of-measure noise law:
/// P / (exp(2(R-R_h)) - 1) for R > R_h; nullopt (empty feasible set) otherwise.
std::optional<double> worst_case_variance(double rate, double helper_rate, double power);

/// Weak sphere-packing converse: Infinite for R <= R_h, Zero for
/// R >= R_h + c(gamma), otherwise the Gaussian variance-ratio divergence at
/// v = (exp(2*c(gamma)) - 1) / (exp(2(R-R_h)) - 1).
ExponentValue wsp_awgn(double rate, double gamma, double helper_rate);

}  // namespace flashhelp
