// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "flashhelp/awgn.hpp"
#include "flashhelp/entropy.hpp"
#include "flashhelp/gaussian.hpp"
#include "flashhelp/mac.hpp"
#include "flashhelp/modulo.hpp"
#include "flashhelp/selfcheck.hpp"
#include "flashhelp/sim.hpp"
#include "flashhelp/stats.hpp"

using namespace flashhelp;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& name, bool pass, const std::string& detail) {
    std::printf("[%s] criterion %2d %-28s %s\n", pass ? "PASS" : "FAIL", criterion, name.c_str(),
                detail.c_str());
    if (!pass) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// 1. flash-help mechanism: in-sphere trials decode error-free
void criterion1() {
    auto t0 = std::chrono::steady_clock::now();
    AwgnFlashConfig cfg(AwgnParams(1.0, 1.0), FlashDesign(0.5, 0.1, 1.0), 64, 1.0);
    SimResult sr = simulate_flash_awgn(cfg, 100000, RngPlan{2024, 0});
    double secs = seconds_since(t0);
    bool pass = sr.decode_errors == 0 && secs < 30.0;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "decode_errors=%lld of %lld trials (%lld in sphere), %.1fs",
                  sr.decode_errors, sr.trials, sr.power_samples, secs);
    report(1, "zero-error-achievability", pass, buf);
}

// 2. exact chi-square tails below the Chernoff bound; Monte Carlo inside
//    the exact 99% intervals
void criterion2() {
    struct Case {
        long t;
        double s;
        double tail;  // frozen high-precision values
    };
    const Case cases[] = {
        {50, 0.5, 0.012596739762499419},  {50, 1.0, 3.4549313829848639e-5},
        {50, 2.0, 6.3152232569339868e-12}, {100, 0.5, 0.00090393204235400909},
        {100, 1.0, 1.1784500720979422e-8}, {100, 2.0, 7.4121008573228768e-22},
        {200, 0.5, 5.9245403354839158e-6}, {200, 1.0, 1.8438936497115742e-15},
        {200, 2.0, 1.4110215102111521e-41}};
    bool pass = true;
    std::string detail;
    const long long trials = 1000000;
    for (const auto& c : cases) {
        double tail = gaussian_sphere_tail(c.t, c.s).prob;
        if (std::abs(tail - c.tail) > 1e-10 * c.tail) pass = false;
        double chern = std::exp(-0.5 * static_cast<double>(c.t) * (c.s - std::log1p(c.s)));
        if (!(tail <= chern)) pass = false;
        AwgnFlashConfig cfg(AwgnParams(1.0, 1.0), FlashDesign(0.5, 0.1, c.s), c.t, 1.0);
        SimResult sr =
            simulate_flash_awgn(cfg, trials, RngPlan{static_cast<std::uint64_t>(77 + c.t), 0});
        CountInterval ci = binomial_central_interval(c.tail, trials, 0.99);
        if (sr.helper_failures < ci.lo || sr.helper_failures > ci.hi) {
            pass = false;
            detail += " t=" + std::to_string(c.t) + " outside";
        }
    }
    report(2, "chernoff-consistency", pass,
           "9 (t,s) points, 1e6 trials each" + (detail.empty() ? "" : ":" + detail));
}

// 3. WSP three-regime structure with a high-precision spot value
void criterion3() {
    const double rh = 0.5, gamma = 1.0;
    const double upper = rh + capacity_awgn(gamma);
    bool pass = true;
    double prev = 0.0;
    bool have_prev = false;
    for (int k = 0; k < 400; ++k) {
        double r = 0.0017 + 0.003 * k;
        ExponentValue w = wsp_awgn(r, gamma, rh);
        if (r < rh && !w.is_infinite()) pass = false;
        if (r > rh && r < upper) {
            if (!w.is_finite() || w.is_zero()) pass = false;
            if (have_prev && !(w.value() < prev)) pass = false;  // strictly decreasing
            prev = w.value();
            have_prev = true;
        }
        if (r >= upper && !w.is_zero()) pass = false;
    }
    double spot = wsp_awgn(0.6, gamma, rh).value();
    bool spot_ok = std::abs(spot - 1.0044418825782374) <= 1e-6;
    if (!spot_ok) pass = false;
    char buf[120];
    std::snprintf(buf, sizeof buf, "400-point grid, E_wsp(0.6)=%.9f (ref 1.004441883)", spot);
    report(3, "wsp-three-regimes", pass, buf);
}

// 4. achievable below WSP everywhere, with coinciding regime boundaries
void criterion4() {
    const double rh = 0.5, gamma = 1.0;
    const double upper = rh + capacity_awgn(gamma);
    auto provider = default_awgn_provider(gamma);
    bool pass = true;
    for (int k = 0; k < 400; ++k) {
        double r = 0.0017 + 0.003 * k;
        ExponentValue ach = achievable_exponent_limit(r, gamma, rh, provider);
        ExponentValue wsp = wsp_awgn(r, gamma, rh);
        if (!(ach <= wsp)) pass = false;
        if (r < rh && !(ach.is_infinite() && wsp.is_infinite())) pass = false;
        if (r > rh && r < upper && !(ach.is_finite() && wsp.is_finite())) pass = false;
        if (r >= upper && !(ach.is_zero() && wsp.is_zero())) pass = false;
    }
    report(4, "achievability-sandwich", pass, "400-point grid, boundaries at R_h and R_h+C0");
}

// 5. dual optimizations match simplex-grid brute force
void criterion5() {
    auto t0 = std::chrono::steady_clock::now();
    SuiteResult res = suite_dual_vs_grid(30, 20, 424242);
    double secs = seconds_since(t0);
    bool pass = res.pass && secs < 120.0;
    char buf[120];
    std::snprintf(buf, sizeof buf, "50 pmfs K in {2,3}, max dev %.2e (tol 2e-3), %.1fs",
                  res.max_deviation, secs);
    report(5, "dual-primal-agreement", pass, buf);
}

// 6. helper-set counting law
void criterion6() {
    const Pmf p({0.9, 0.1});
    double lsize = helper_set_log_size(p, 12, 1.0).value();
    bool pass = std::abs(lsize - 6.6770834612471357) <= 1e-9;  // ln 794
    double r = r_of_theta(p, 1.0).value();
    double worst_c = 0.0;
    for (long long t = 8; t <= 20; ++t) {
        double ls = helper_set_log_size(p, t, 1.0).value();
        double c = std::abs(ls / static_cast<double>(t) - r) * static_cast<double>(t) /
                   std::log(static_cast<double>(t));
        worst_c = std::max(worst_c, c);
    }
    if (worst_c > 2.0) pass = false;
    char buf[120];
    std::snprintf(buf, sizeof buf, "log|set|(t=12)=%.9f (ln 794), fitted C=%.3f <= 2", lsize,
                  worst_c);
    report(6, "counting-law", pass, buf);
}

// 7. exact failure probability equals the binomial sum; Monte Carlo agrees
void criterion7() {
    ModuloParams mp{Pmf({0.9, 0.1})};
    double exact = exact_error_modulo_fixed(mp, 1.0, 12);
    double binom = 0.0;
    for (int k = 5; k <= 12; ++k) {
        double c = std::exp(std::lgamma(13.0) - std::lgamma(k + 1.0) - std::lgamma(13.0 - k));
        binom += c * std::pow(0.1, k) * std::pow(0.9, 12 - k);
    }
    bool pass = std::abs(exact - binom) <= 1e-12;
    const long long trials = 1000000;
    SimResult sr = simulate_modulo_fixed(mp, 1.0, 12, trials, RngPlan{31337, 0});
    CountInterval ci = binomial_central_interval(exact, trials, 0.99);
    if (sr.errors_total < ci.lo || sr.errors_total > ci.hi) pass = false;
    char buf[160];
    std::snprintf(buf, sizeof buf, "exact=%.12g binom=%.12g, MC %lld in [%lld,%lld]", exact,
                  binom, sr.errors_total, ci.lo, ci.hi);
    report(7, "exact-failure-probability", pass, buf);
}

// 8. variable-rate margin: zero overflows and an Infinite exponent
void criterion8() {
    ModuloParams mp{Pmf({0.9, 0.1})};
    const double rh = 0.5, tau = 0.5;
    const long n = 200;
    SimResult sr = simulate_modulo_variable(mp, rh, tau, n, 1000000, RngPlan{515151, 0});
    bool pass = sr.errors_total == 0;
    if (!overflow_exponent(mp.noise, rh, tau).is_infinite()) pass = false;
    char buf[120];
    std::snprintf(buf, sizeof buf, "overflows=%lld of 1e6 trials, exponent infinite=%d",
                  sr.errors_total, overflow_exponent(mp.noise, rh, tau).is_infinite() ? 1 : 0);
    report(8, "overflow-regime", pass, buf);
}

// 9. modulo WSP endpoints and grid-oracle agreement
void criterion9() {
    const Pmf p({0.9, 0.1});
    const double rh = 0.1;
    const double ip = std::log(2.0) - shannon_entropy(p);
    bool pass = true;
    for (double r : {0.0, 0.03, 0.09}) {
        if (!wsp_modulo(p, r, rh).is_infinite()) pass = false;
    }
    for (double r : {rh + ip, rh + ip + 0.05, 0.69}) {
        if (!wsp_modulo(p, r, rh).is_zero()) pass = false;
    }
    double value = wsp_modulo(p, rh + 0.2, rh).value();
    double grid = bruteforce::min_divergence_entropy_at_least(p, std::log(2.0) - 0.2);
    if (std::abs(value - grid) > 2e-3) pass = false;
    char buf[120];
    std::snprintf(buf, sizeof buf, "E(R-R_h=0.2)=%.6f vs grid %.6f (target 0.0400 scale)", value,
                  grid);
    report(9, "modulo-wsp-endpoints", pass, buf);
}

// 10. help-split closed form vs numeric sweep
void criterion10() {
    SuiteResult res = suite_mac_split_sweep(100, 99991);
    bool pass = res.pass;
    HelpSplit s = optimal_help_split({0.27, 0.27}, 0.2);
    if (!(s.h1 == 0.1 && s.h2 == 0.1)) pass = false;  // symmetric case is exact
    char buf[120];
    std::snprintf(buf, sizeof buf, "100 triples, max sweep gain %.2e (tol 1e-3), symmetric (0.1,0.1)",
                  res.max_deviation);
    report(10, "mac-split-optimality", pass, buf);
}

// 11. MAC classification on a 200 x 200 grid
void criterion11() {
    MacParams mac(1.0, 1.0, 1.0);
    const double rh = 0.2;
    bool pass = true;
    for (int i = 0; i < 200; ++i) {
        for (int j = 0; j < 200; ++j) {
            RatePair rp{0.0013 + 0.005 * i, 0.0013 + 0.005 * j};
            RateRegime cls = classify_rate_point(rp, mac, rh);
            bool below_pipe = rp.r1 + rp.r2 < rh;
            if ((cls == RateRegime::InfiniteExponent) != below_pipe) pass = false;
            bool outside = !in_helped_mac_region(rp, mac, rh);
            if ((cls == RateRegime::ZeroExponent) != outside) pass = false;
            ExponentValue w = wsp_mac(rp, mac, rh);
            if (w.is_infinite() != (cls == RateRegime::InfiniteExponent)) pass = false;
            if (w.is_zero() != (cls == RateRegime::ZeroExponent)) pass = false;
        }
    }
    report(11, "mac-classification", pass, "200x200 grid, gamma1=gamma2=1, R_h=0.2");
}

// 12. simulate is byte-identical across worker counts (through the CLI)
void criterion12() {
    const std::string cli = FLASHHELP_CLI_PATH;
    auto run = [&](const std::string& args) {
        std::string cmd = "\"" + cli + "\" " + args + " > /dev/null 2>&1";
        int status = std::system(cmd.c_str());
        return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    };
    int rc1 = run("simulate --scheme modulo-fixed --pmf 0.9,0.1 --theta 1.0 --segment 12 "
                  "--trials 200000 --seed 606 --workers 1 --out acc_w1.jsonl");
    int rc2 = run("simulate --scheme modulo-fixed --pmf 0.9,0.1 --theta 1.0 --segment 12 "
                  "--trials 200000 --seed 606 --workers 4 --out acc_w4.jsonl");
    int rc3 = run("simulate --scheme awgn-flash --gamma 1 --rate-helper 0.5 --tau 0.1 --slack 1 "
                  "--segment 64 --trials 20000 --seed 606 --workers 1 --out acc_f1.jsonl");
    int rc4 = run("simulate --scheme awgn-flash --gamma 1 --rate-helper 0.5 --tau 0.1 --slack 1 "
                  "--segment 64 --trials 20000 --seed 606 --workers 4 --out acc_f4.jsonl");
    bool pass = rc1 == 0 && rc2 == 0 && rc3 == 0 && rc4 == 0;
    std::string a = slurp("acc_w1.jsonl"), b = slurp("acc_w4.jsonl");
    std::string c = slurp("acc_f1.jsonl"), d = slurp("acc_f4.jsonl");
    if (a.empty() || a != b) pass = false;
    if (c.empty() || c != d) pass = false;
    report(12, "simulate-determinism", pass,
           "workers 1 vs 4, modulo-fixed and awgn-flash JSON lines identical");
}

}  // namespace

int main() {
    auto t0 = std::chrono::steady_clock::now();
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    std::printf("acceptance: %s (%.1fs total)\n", g_failures == 0 ? "all criteria passed"
                                                                  : "FAILURES present",
                seconds_since(t0));
    return g_failures == 0 ? 0 : 1;
}
