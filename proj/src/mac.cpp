#include "flashhelp/mac.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "flashhelp/awgn.hpp"

namespace flashhelp {

MacParams::MacParams(double p1, double p2, double s2) : power1(p1), power2(p2), sigma2(s2) {
    if (!(power1 > 0.0) || !(power2 > 0.0) || !(sigma2 > 0.0))
        throw std::invalid_argument("MacParams: powers and noise variance must be > 0");
}

bool in_mac_region(const RatePair& rp, const MacParams& mac) {
    return in_helped_mac_region(rp, mac, 0.0);
}

bool in_helped_mac_region(const RatePair& rp, const MacParams& mac, double helper_rate) {
    if (helper_rate < 0.0) throw std::invalid_argument("in_helped_mac_region: R_h must be >= 0");
    return rp.r1 <= capacity_awgn(mac.gamma1()) + helper_rate &&
           rp.r2 <= capacity_awgn(mac.gamma2()) + helper_rate &&
           rp.r1 + rp.r2 <= capacity_awgn(mac.gamma1() + mac.gamma2()) + helper_rate;
}

RcExponent rc_exponent_symmetric(const RatePair& rp, double gamma) {
    if (rp.r1 < 0.0 || rp.r2 < 0.0)
        throw std::invalid_argument("rc_exponent_symmetric: rates must be >= 0");
    const double c_half = capacity_awgn(gamma / 2.0);
    const double c_full = capacity_awgn(gamma);
    double v = std::min({c_half - rp.r1, c_half - rp.r2, c_full - rp.r1 - rp.r2});
    RcExponent out;
    out.within_validity = rp.r1 < c_half && rp.r2 < c_half;
    out.value = v <= 0.0 ? ExponentValue::zero() : ExponentValue::finite(v);
    return out;
}

ExponentValue helped_rc_exponent_symmetric(const RatePair& rp, double gamma,
                                           const HelpSplit& split) {
    if (split.h1 < 0.0 || split.h2 < 0.0)
        throw std::invalid_argument("helped_rc_exponent_symmetric: split must be >= 0");
    const double total_help = split.h1 + split.h2;
    if (rp.r1 <= split.h1 && rp.r2 <= split.h2 && rp.r1 + rp.r2 < total_help)
        return ExponentValue::infinite();  // all data rides the pipes
    RatePair shifted{std::max(0.0, rp.r1 - split.h1), std::max(0.0, rp.r2 - split.h2)};
    const double c_half = capacity_awgn(gamma / 2.0);
    const double c_full = capacity_awgn(gamma);
    double sum_shift = std::max(0.0, rp.r1 + rp.r2 - total_help);
    double v = std::min({c_half - shifted.r1, c_half - shifted.r2, c_full - sum_shift});
    return v <= 0.0 ? ExponentValue::zero() : ExponentValue::finite(v);
}

HelpSplit optimal_help_split(const RatePair& rp, double helper_rate) {
    if (helper_rate < 0.0) throw std::invalid_argument("optimal_help_split: R_h must be >= 0");
    double h1 = 0.5 * (rp.r1 - rp.r2 + helper_rate);
    h1 = std::clamp(h1, 0.0, helper_rate);
    return {h1, helper_rate - h1};
}

MacWsp wsp_mac_components(const RatePair& rp, const MacParams& mac, double helper_rate) {
    if (rp.r1 < 0.0 || rp.r2 < 0.0 || helper_rate < 0.0)
        throw std::invalid_argument("wsp_mac: rates must be >= 0");
    // each branch is the single-user bound at its own rate and SNR, so the
    // degenerate cases agree with wsp_awgn bit for bit
    MacWsp out;
    out.e1 = wsp_awgn(rp.r1, mac.gamma1(), helper_rate);
    out.e2 = wsp_awgn(rp.r2, mac.gamma2(), helper_rate);
    out.e3 = wsp_awgn(rp.r1 + rp.r2, mac.gamma1() + mac.gamma2(), helper_rate);
    return out;
}

ExponentValue wsp_mac(const RatePair& rp, const MacParams& mac, double helper_rate) {
    return wsp_mac_components(rp, mac, helper_rate).value();
}

RateRegime classify_rate_point(const RatePair& rp, const MacParams& mac, double helper_rate) {
    if (rp.r1 + rp.r2 < helper_rate) return RateRegime::InfiniteExponent;
    if (!in_helped_mac_region(rp, mac, helper_rate)) return RateRegime::ZeroExponent;
    return RateRegime::FiniteExponent;
}

const char* to_string(RateRegime r) {
    switch (r) {
        case RateRegime::InfiniteExponent: return "infinite";
        case RateRegime::FiniteExponent: return "finite";
        case RateRegime::ZeroExponent: return "zero";
    }
    return "finite";
}

}  // namespace flashhelp
