#pragma once

#include <vector>

#include "flashhelp/awgn.hpp"  // ExponentProvider
#include "flashhelp/exponent_value.hpp"
#include "flashhelp/pmf.hpp"

namespace flashhelp {

/// Modulo-K additive channel: Y = X (+) Z over {0,...,K-1}.
struct ModuloParams {
    Pmf noise;
    int alphabet_size() const { return noise.size(); }
};

/// theta_0 = -ln(max_z p_z): below it the helper set is empty.
double theta_feasible_min(const Pmf& p);
/// Saturation threshold on the support of p: mean over support of -ln p_z.
double theta_saturation(const Pmf& p);
/// -ln(min positive p_z): above it every positive-probability sequence qualifies.
double theta_support_max(const Pmf& p);

/// r(theta) = max{ H(Q) : -E_Q ln P <= theta }, computed through its dual
/// min over lambda >= 0 of lambda*theta + ln(sum_z p_z^lambda).
/// NegInfinite ("infeasible") below theta_0; ln|support| at and beyond the
/// saturation threshold. Nondecreasing and concave in theta.
ExponentValue r_of_theta(const Pmf& p, double theta);

/// Minimal theta with r_of_theta(p, theta) >= r, by bisection on the monotone
/// r(theta). Throws when r exceeds ln|support|.
double theta_of_r(const Pmf& p, double r);

/// E(theta) = min{ D(Q||P) : -E_Q ln P >= theta }, per segment sample, via the
/// dual sup over lambda >= 0 of lambda*theta - ln(sum_z p_z^(1-lambda)).
/// Zero for theta <= H(P); Infinite beyond -ln(min positive p_z).
ExponentValue helper_failure_exponent(const Pmf& p, double theta);

/// Variable-rate buffer-overflow exponent, per segment sample:
/// min{ D(Q||P) : H(Q) >= R_h/tau }. Infinite when R_h/tau exceeds
/// ln|support|; Zero when R_h <= tau*H(P). The constrained minimizer lies on
/// the geometric family Q_beta proportional to P^beta, solved by bisection.
ExponentValue overflow_exponent(const Pmf& p, double helper_rate, double tau);

/// Weak sphere-packing converse for the modulo channel:
/// min{ D(Q||P) : I(Q) < R - R_h } with I(Q) = ln K - H(Q).
/// Zero for R >= ln K or R >= R_h + I(P); Infinite for R <= R_h.
ExponentValue wsp_modulo(const Pmf& p, double rate, double helper_rate);

/// Exact ln|{z^t : P(z^t) >= e^(-t*theta)}| by summing type-class sizes
/// (ties included). NegInfinite for an empty set. GuardError when the type
/// enumeration guard trips.
ExponentValue helper_set_log_size(const Pmf& p, long long t, double theta);

/// Random-coding exponent of the modulo channel with uniform input:
/// max over rho in [0,1] of E0(rho) - rho*R,
/// E0(rho) = rho*ln K - (1+rho)*ln(sum_z p_z^(1/(1+rho))).
ExponentValue default_modulo_exponent(double rate, const Pmf& noise);
ExponentProvider default_modulo_provider(const Pmf& noise);

/// tau at which the fixed-rate helper can index every noise sequence.
double modulo_default_tau(int K, double helper_rate);

/// Overall exponent of the fixed-rate scheme: the with-help phase is
/// error-free for tau <= R_h/ln K, so the value is
/// (1-tau) * provider((R - tau*ln K)/(1-tau)), Infinite when R <= tau*ln K.
/// Throws when tau > R_h/ln K (helper cannot index all sequences).
ExponentValue modulo_achievable_exponent(const Pmf& p, double rate, double helper_rate,
                                         double tau, const ExponentProvider& provider);

struct TauSweepPoint {
    double tau;
    ExponentValue value;
};

/// Numeric sweep of modulo_achievable_exponent over tau in (0, R_h/ln K].
std::vector<TauSweepPoint> modulo_achievable_tau_sweep(const Pmf& p, double rate,
                                                       double helper_rate,
                                                       const ExponentProvider& provider,
                                                       int points);

}  // namespace flashhelp
