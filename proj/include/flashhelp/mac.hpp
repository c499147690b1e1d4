#pragma once

#include "flashhelp/exponent_value.hpp"

namespace flashhelp {

/// Two-user Gaussian multiple access channel.
struct MacParams {
    double power1;
    double power2;
    double sigma2;

    MacParams(double p1, double p2, double s2);
    double gamma1() const { return power1 / sigma2; }
    double gamma2() const { return power2 / sigma2; }
};

struct RatePair {
    double r1 = 0.0;
    double r2 = 0.0;
};

/// Helper-rate allocation between the two encoders, R_h1 + R_h2 = R_h.
struct HelpSplit {
    double h1 = 0.0;
    double h2 = 0.0;
};

/// No-help capacity region membership (closed region, three inequalities).
bool in_mac_region(const RatePair& rp, const MacParams& mac);

/// Helped capacity region: every constraint shifted up by R_h.
bool in_helped_mac_region(const RatePair& rp, const MacParams& mac, double helper_rate);

struct RcExponent {
    ExponentValue value;
    /// The closed form is stated only for R1, R2 below c(gamma/2); outside
    /// that range the value is still computed but flagged.
    bool within_validity = true;
};

/// Symmetric-power random-coding exponent:
/// min{c(gamma/2)-R1, c(gamma/2)-R2, c(gamma)-R1-R2}, floored at 0.
RcExponent rc_exponent_symmetric(const RatePair& rp, double gamma);

/// Random-coding exponent with pipe-shifted rates. Negative shifted rates
/// clamp to 0; Infinite when both rates ride entirely on their pipes
/// (R1 <= R_h1, R2 <= R_h2, R1+R2 < R_h1+R_h2).
ExponentValue helped_rc_exponent_symmetric(const RatePair& rp, double gamma,
                                           const HelpSplit& split);

/// Closed-form split R_h1 = (R1-R2+R_h)/2, clamped coordinatewise to [0, R_h].
HelpSplit optimal_help_split(const RatePair& rp, double helper_rate);

struct MacWsp {
    ExponentValue e1;  // single-rate branch of user 1
    ExponentValue e2;  // single-rate branch of user 2
    ExponentValue e3;  // sum-rate branch
    ExponentValue value() const { return min(e1, min(e2, e3)); }
};

/// Weak sphere-packing branches. Branch i is Infinite when its rate <= R_h,
/// Zero when its rate >= R_h + c_i, and otherwise the Gaussian variance-ratio
/// divergence at v_i = (exp(2*c_i)-1)/(exp(2*(rate-R_h))-1).
MacWsp wsp_mac_components(const RatePair& rp, const MacParams& mac, double helper_rate);

/// min of the three weak sphere-packing branches.
ExponentValue wsp_mac(const RatePair& rp, const MacParams& mac, double helper_rate);

enum class RateRegime { InfiniteExponent, FiniteExponent, ZeroExponent };

/// InfiniteExponent iff R1+R2 < R_h; ZeroExponent iff outside the helped
/// capacity region; FiniteExponent otherwise.
RateRegime classify_rate_point(const RatePair& rp, const MacParams& mac, double helper_rate);

const char* to_string(RateRegime r);

}  // namespace flashhelp
