#include "flashhelp/awgn.hpp"

#include <cmath>
#include <stdexcept>

#include "flashhelp/gaussian.hpp"
#include "flashhelp/optim.hpp"

namespace flashhelp {

namespace {
constexpr double kTwoPiE = 2.0 * 3.141592653589793238462643383279502884 * 2.718281828459045235360287471352662498;
}

AwgnParams::AwgnParams(double power_, double sigma2_) : power(power_), sigma2(sigma2_) {
    if (!(power > 0.0)) throw std::invalid_argument("AwgnParams: power must be > 0");
    if (!(sigma2 > 0.0)) throw std::invalid_argument("AwgnParams: sigma2 must be > 0");
}

FlashDesign::FlashDesign(double helper_rate_, double tau_, double slack_, HelperMode mode_)
    : helper_rate(helper_rate_), tau(tau_), slack(slack_), mode(mode_) {
    if (!(helper_rate >= 0.0)) throw std::invalid_argument("FlashDesign: helper rate must be >= 0");
    if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("FlashDesign: tau must be in (0,1)");
    if (mode == HelperMode::FixedRate && !(slack >= 0.0))
        throw std::invalid_argument("FlashDesign: slack must be >= 0");
}

double FlashDesign::step(double sigma2) const {
    return mode == HelperMode::FixedRate ? quantizer_step(sigma2, slack, helper_rate, tau)
                                         : variable_rate_step(sigma2, helper_rate, tau);
}

long FlashDesign::segment_length(long n) const {
    if (n < 1) throw std::invalid_argument("FlashDesign: block length must be >= 1");
    long t = std::lround(tau * static_cast<double>(n));
    return t < 1 ? 1 : t;
}

double capacity_awgn(double gamma) {
    if (gamma < 0.0) throw std::invalid_argument("capacity_awgn: gamma must be >= 0");
    return 0.5 * std::log1p(gamma);
}

double helped_capacity(double gamma, double helper_rate) {
    if (helper_rate < 0.0) throw std::invalid_argument("helped_capacity: helper rate must be >= 0");
    return capacity_awgn(gamma) + helper_rate;
}

double quantizer_step(double sigma2, double slack, double helper_rate, double tau) {
    if (!(sigma2 > 0.0) || !(tau > 0.0) || slack < 0.0 || helper_rate < 0.0)
        throw std::invalid_argument("quantizer_step: bad arguments");
    return std::sqrt(kTwoPiE * sigma2 * (1.0 + slack)) * std::exp(-helper_rate / tau);
}

double variable_rate_step(double sigma2, double helper_rate, double tau) {
    return quantizer_step(sigma2, 0.0, helper_rate, tau);
}

FlashRate flash_rate(double helper_rate, double tau, double slack, double power, double sigma2) {
    if (!(tau > 0.0) || !(power > 0.0) || !(sigma2 > 0.0) || slack < 0.0 || helper_rate < 0.0)
        throw std::invalid_argument("flash_rate: bad arguments");
    FlashRate out;
    double r = helper_rate + 0.5 * tau * std::log(power / (sigma2 * (1.0 + slack)));
    if (r <= 0.0) {
        out.rate = 0.0;
        out.clamped = true;  // flash segment carries no rate
    } else {
        out.rate = r;
    }
    return out;
}

double chernoff_sphere_exponent(double slack) {
    if (!(slack > 0.0)) throw std::invalid_argument("chernoff_sphere_exponent: s must be > 0");
    return 0.5 * (slack - std::log1p(slack));
}

ExponentValue default_ordinary_exponent(double rate, double gamma) {
    if (rate < 0.0) throw std::invalid_argument("default_ordinary_exponent: rate must be >= 0");
    if (gamma < 0.0) throw std::invalid_argument("default_ordinary_exponent: gamma must be >= 0");
    if (rate >= capacity_awgn(gamma)) return ExponentValue::zero();
    auto e0 = [gamma](double rho) { return 0.5 * rho * std::log1p(gamma / (1.0 + rho)); };
    auto objective = [&](double rho) { return e0(rho) - rho * rate; };
    double rho_star = golden_max(objective, 0.0, 1.0, 1e-10);
    return ExponentValue::finite(std::max(0.0, objective(rho_star)));
}

ExponentProvider default_awgn_provider(double gamma) {
    return [gamma](double rate) { return default_ordinary_exponent(rate, gamma); };
}

ExponentValue achievable_exponent(double rate, double gamma, double helper_rate,
                                  double tau, double slack, const ExponentProvider& provider) {
    if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("achievable_exponent: tau in (0,1)");
    if (!(slack > 0.0)) throw std::invalid_argument("achievable_exponent: slack must be > 0");
    ExponentValue sphere_branch =
        ExponentValue::finite(tau * chernoff_sphere_exponent(slack));
    // flash rate depends on P/sigma2 only
    double flash = flash_rate(helper_rate, tau, slack, gamma, 1.0).rate;
    double delta_rate = rate - flash;
    if (delta_rate <= 0.0) return sphere_branch;  // second segment carries no data
    ExponentValue ordinary_branch = provider(delta_rate / (1.0 - tau)).scaled(1.0 - tau);
    return min(sphere_branch, ordinary_branch);
}

ExponentValue achievable_exponent_limit(double rate, [[maybe_unused]] double gamma,
                                        double helper_rate, const ExponentProvider& provider) {
    if (rate < helper_rate) return ExponentValue::infinite();
    return provider(rate - helper_rate);
}

std::optional<double> worst_case_variance(double rate, double helper_rate, double power) {
    if (!(power > 0.0)) throw std::invalid_argument("worst_case_variance: power must be > 0");
    if (rate <= helper_rate) return std::nullopt;  // empty feasible set
    return power / std::expm1(2.0 * (rate - helper_rate));
}

ExponentValue wsp_awgn(double rate, double gamma, double helper_rate) {
    if (!(gamma > 0.0)) throw std::invalid_argument("wsp_awgn: gamma must be > 0");
    if (rate < 0.0 || helper_rate < 0.0) throw std::invalid_argument("wsp_awgn: negative rate");
    if (rate <= helper_rate) return ExponentValue::infinite();
    if (rate >= helper_rate + capacity_awgn(gamma)) return ExponentValue::zero();
    double v = gamma / std::expm1(2.0 * (rate - helper_rate));
    return ExponentValue::finite(gaussian_kl_variance_ratio(v));
}

}  // namespace flashhelp
