#include <cmath>
#include <random>

#include "doctest.h"
#include "flashhelp/awgn.hpp"
#include "flashhelp/mac.hpp"

using namespace flashhelp;

namespace {
const MacParams kSym(1.0, 1.0, 1.0);  // gamma1 = gamma2 = 1
}

TEST_CASE("in_mac_region") {
    CHECK(in_mac_region({0.0, 0.0}, kSym));
    // both single-user capacities together exceed the sum constraint
    double c1 = capacity_awgn(1.0);
    CHECK_FALSE(in_mac_region({c1, c1}, kSym));
    CHECK(in_mac_region({c1, 0.0}, kSym));  // closed boundary
}

TEST_CASE("in_helped_mac_region") {
    double c1 = capacity_awgn(1.0);
    for (double r1 : {0.1, 0.3, 0.5}) {
        for (double r2 : {0.0, 0.2, 0.6}) {
            CHECK(in_helped_mac_region({r1, r2}, kSym, 0.0) == in_mac_region({r1, r2}, kSym));
        }
    }
    CHECK(in_helped_mac_region({0.2, 0.0}, kSym, 0.2));  // the pipe alone suffices
    CHECK(in_helped_mac_region({c1 + 0.2, 0.0}, kSym, 0.2));
    CHECK_FALSE(in_helped_mac_region({0.45, 0.45}, kSym, 0.2));  // sum 0.9 > c(2)+0.2
}

TEST_CASE("region nesting") {
    std::mt19937_64 eng(3);
    std::uniform_real_distribution<double> uni(0.0, 0.8);
    for (int i = 0; i < 500; ++i) {
        RatePair rp{uni(eng), uni(eng)};
        if (in_mac_region(rp, kSym)) CHECK(in_helped_mac_region(rp, kSym, 0.1));
        if (in_helped_mac_region(rp, kSym, 0.1)) CHECK(in_helped_mac_region(rp, kSym, 0.25));
    }
}

TEST_CASE("rc_exponent_symmetric") {
    RcExponent e0 = rc_exponent_symmetric({0.0, 0.0}, 1.0);
    CHECK(e0.value.value() == doctest::Approx(0.20273255405408219).epsilon(1e-12));  // c(1/2)
    CHECK(e0.within_validity);

    double c_full = capacity_awgn(1.0);
    CHECK(rc_exponent_symmetric({c_full / 2.0, c_full / 2.0}, 1.0).value.is_zero());

    RcExponent e = rc_exponent_symmetric({0.1, 0.1}, 1.0);
    CHECK(e.value.value() == doctest::Approx(0.10273255405408219).epsilon(1e-12));

    // flagged outside the stated small-rate validity range
    CHECK_FALSE(rc_exponent_symmetric({0.25, 0.1}, 1.0).within_validity);
}

TEST_CASE("helped_rc_exponent_symmetric") {
    CHECK(helped_rc_exponent_symmetric({0.05, 0.04}, 1.0, {0.1, 0.1}).is_infinite());
    ExponentValue e = helped_rc_exponent_symmetric({0.2, 0.2}, 1.0, {0.1, 0.1});
    CHECK(e.value() == doctest::Approx(0.10273255405408219).epsilon(1e-12));
    // symmetric rates with the equal split keep both single-user terms equal
    ExponentValue swapped = helped_rc_exponent_symmetric({0.3, 0.1}, 1.0, {0.15, 0.05});
    ExponentValue original = helped_rc_exponent_symmetric({0.1, 0.3}, 1.0, {0.05, 0.15});
    CHECK(swapped.as_double() == original.as_double());
}

TEST_CASE("swap symmetry") {
    std::mt19937_64 eng(5);
    std::uniform_real_distribution<double> uni(0.0, 0.4);
    for (int i = 0; i < 200; ++i) {
        RatePair rp{uni(eng), uni(eng)};
        HelpSplit sp{uni(eng) * 0.2, uni(eng) * 0.2};
        double a = helped_rc_exponent_symmetric(rp, 1.0, sp).as_double();
        double b = helped_rc_exponent_symmetric({rp.r2, rp.r1}, 1.0, {sp.h2, sp.h1}).as_double();
        CHECK(a == b);
    }
}

TEST_CASE("optimal_help_split") {
    HelpSplit s = optimal_help_split({0.3, 0.3}, 0.2);
    CHECK(s.h1 == 0.1);  // exactly R_h/2
    CHECK(s.h2 == 0.1);
    s = optimal_help_split({0.5, 0.1}, 0.2);  // R1-R2 >= R_h clamps
    CHECK(s.h1 == 0.2);
    CHECK(s.h2 == 0.0);
    s = optimal_help_split({0.3, 0.1}, 0.1);  // formula gives 0.15, clamped
    CHECK(s.h1 == 0.1);
    CHECK(s.h2 == 0.0);
}

TEST_CASE("optimal_help_split matches a numeric sweep") {
    std::mt19937_64 eng(9);
    std::uniform_real_distribution<double> urate(0.0, 0.4);
    std::uniform_real_distribution<double> uhelp(0.02, 0.3);
    for (int c = 0; c < 40; ++c) {
        RatePair rp{urate(eng), urate(eng)};
        double rh = uhelp(eng);
        double closed = helped_rc_exponent_symmetric(rp, 1.0, optimal_help_split(rp, rh)).as_double();
        double best = -1.0;
        for (int i = 0; i <= 1000; ++i) {
            double h1 = rh * (i / 1000.0);
            double h2 = std::max(0.0, rh - h1);
            best = std::max(best, helped_rc_exponent_symmetric(rp, 1.0, {h1, h2}).as_double());
        }
        if (std::isinf(best)) {
            CHECK(std::isinf(closed));
        } else {
            CHECK(closed >= best - 1e-3);
        }
    }
}

TEST_CASE("wsp_mac example values") {
    MacWsp parts = wsp_mac_components({0.3, 0.3}, kSym, 0.2);
    CHECK(parts.e1.value() == doctest::Approx(1.0044418825782374).epsilon(1e-12));
    CHECK(parts.e2.value() == doctest::Approx(1.0044418825782374).epsilon(1e-12));
    CHECK(parts.e3.value() == doctest::Approx(0.071083791041633799).epsilon(1e-12));
    CHECK(wsp_mac({0.3, 0.3}, kSym, 0.2).value() ==
          doctest::Approx(0.071083791041633799).epsilon(1e-12));
}

TEST_CASE("wsp_mac regimes") {
    CHECK(wsp_mac({0.05, 0.05}, kSym, 0.2).is_infinite());
    CHECK(classify_rate_point({0.05, 0.05}, kSym, 0.2) == RateRegime::InfiniteExponent);
    CHECK(wsp_mac({1.0, 1.0}, kSym, 0.2).is_zero());
    CHECK(classify_rate_point({1.0, 1.0}, kSym, 0.2) == RateRegime::ZeroExponent);
    CHECK(classify_rate_point({0.3, 0.3}, kSym, 0.2) == RateRegime::FiniteExponent);
}

TEST_CASE("wsp_mac coincides with the classification away from boundaries") {
    const double rh = 0.2;
    for (int i = 0; i < 80; ++i) {
        for (int j = 0; j < 80; ++j) {
            // offset grid so no point lands exactly on a regime boundary
            RatePair rp{0.0003 + 0.01 * i, 0.0004 + 0.01 * j};
            RateRegime cls = classify_rate_point(rp, kSym, rh);
            ExponentValue w = wsp_mac(rp, kSym, rh);
            if (cls == RateRegime::InfiniteExponent) CHECK(w.is_infinite());
            if (cls == RateRegime::ZeroExponent) CHECK(w.is_zero());
            if (cls == RateRegime::FiniteExponent) {
                CHECK(w.is_finite());
                CHECK_FALSE(w.is_zero());
            }
        }
    }
}

TEST_CASE("wsp_mac nonincreasing along rays") {
    for (double dir1 : {1.0, 0.7, 0.3}) {
        double dir2 = 1.0 - dir1;
        double prev = std::numeric_limits<double>::infinity();
        for (int k = 1; k <= 60; ++k) {
            double scale = 0.02 * k;
            double cur = wsp_mac({dir1 * scale, dir2 * scale}, kSym, 0.15).as_double();
            CHECK(cur <= prev + 1e-12);
            prev = cur;
        }
    }
}

TEST_CASE("converse dominates achievability at the optimal split") {
    std::mt19937_64 eng(17);
    std::uniform_real_distribution<double> uni(0.0, 0.45);
    for (int c = 0; c < 300; ++c) {
        RatePair rp{uni(eng), uni(eng)};
        const double rh = 0.15;
        ExponentValue ach = helped_rc_exponent_symmetric(rp, 1.0, optimal_help_split(rp, rh));
        ExponentValue wsp = wsp_mac(rp, kSym, rh);
        if (ach.is_finite() && wsp.is_finite()) CHECK(ach.as_double() <= wsp.as_double() + 1e-12);
    }
}

TEST_CASE("degenerate MAC recovers the single-user bound bit for bit") {
    MacParams nearly_single(1.0, 1e-12, 1.0);
    for (double r1 : {0.25, 0.4, 0.6}) {
        MacWsp parts = wsp_mac_components({r1, 0.0}, nearly_single, 0.1);
        CHECK(parts.e1.as_double() == wsp_awgn(r1, 1.0, 0.1).as_double());
    }
}
