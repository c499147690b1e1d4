#include "flashhelp/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <sstream>

#include "flashhelp/awgn.hpp"
#include "flashhelp/entropy.hpp"
#include "flashhelp/gaussian.hpp"
#include "flashhelp/mac.hpp"
#include "flashhelp/modulo.hpp"
#include "flashhelp/sim.hpp"
#include "flashhelp/stats.hpp"

namespace flashhelp {

namespace bruteforce {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double entropy_of(const double* q, int K) {
    double h = 0.0;
    for (int i = 0; i < K; ++i) h -= xlogx(q[i]);
    return h;
}

// -E_Q ln P; +inf when Q puts mass outside the support of p
double mean_neg_logp(const double* q, const Pmf& p) {
    double c = 0.0;
    for (int i = 0; i < p.size(); ++i) {
        if (q[i] == 0.0) continue;
        if (p[i] == 0.0) return kInf;
        c -= q[i] * std::log(p[i]);
    }
    return c;
}

double divergence(const double* q, const Pmf& p) {
    double d = 0.0;
    for (int i = 0; i < p.size(); ++i) {
        if (q[i] == 0.0) continue;
        if (p[i] == 0.0) return kInf;
        d += q[i] * std::log(q[i] / p[i]);
    }
    return std::max(0.0, d);
}

// Maximize score(q) over the simplex grid; NaN scores are infeasible.
// K=2 scans q0 at step 1e-5; K=3 scans a 200x200 barycentric grid and then
// refines twice around the incumbent.
template <class Score>
double simplex_grid_max(int K, const Score& score) {
    double best = -kInf;
    if (K == 2) {
        const int n = 100000;
        double q[2];
        for (int i = 0; i <= n; ++i) {
            q[0] = static_cast<double>(i) / n;
            q[1] = 1.0 - q[0];
            double s = score(q);
            if (!std::isnan(s)) best = std::max(best, s);
        }
        return best;
    }
    if (K != 3) throw std::invalid_argument("simplex_grid_max: K must be 2 or 3");
    const int n = 200;
    double step = 1.0 / n;
    double b0 = 0.0, b1 = 0.0;
    double q[3];
    // q2 = 1 - q0 - q1 can round a hair below zero on the simplex edge;
    // clamp it so log terms stay well defined
    auto try_point = [&](double q0, double q1) {
        double q2 = 1.0 - q0 - q1;
        if (q2 < -1e-12) return;
        q[0] = q0;
        q[1] = q1;
        q[2] = std::max(0.0, q2);
        double s = score(q);
        if (!std::isnan(s) && s > best) {
            best = s;
            b0 = q0;
            b1 = q1;
        }
    };
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n - i; ++j)
            try_point(static_cast<double>(i) / n, static_cast<double>(j) / n);
    for (int pass = 0; pass < 2; ++pass) {
        const double lo0 = std::max(0.0, b0 - 2.5 * step);
        const double hi0 = std::min(1.0, b0 + 2.5 * step);
        const double lo1 = std::max(0.0, b1 - 2.5 * step);
        const double hi1 = std::min(1.0, b1 + 2.5 * step);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j)
                try_point(lo0 + (hi0 - lo0) * static_cast<double>(i) / n,
                          lo1 + (hi1 - lo1) * static_cast<double>(j) / n);
        step = (hi0 - lo0) / n;
    }
    return best;
}

}  // namespace

double r_of_theta_grid(const Pmf& p, double theta) {
    return simplex_grid_max(p.size(), [&](const double* q) {
        return mean_neg_logp(q, p) <= theta ? entropy_of(q, p.size())
                                            : std::numeric_limits<double>::quiet_NaN();
    });
}

double helper_failure_grid(const Pmf& p, double theta) {
    double neg = simplex_grid_max(p.size(), [&](const double* q) {
        double c = mean_neg_logp(q, p);
        if (c < theta || c == kInf) return std::numeric_limits<double>::quiet_NaN();
        return -divergence(q, p);
    });
    return -neg;
}

double min_divergence_entropy_at_least(const Pmf& p, double h_min) {
    double neg = simplex_grid_max(p.size(), [&](const double* q) {
        if (entropy_of(q, p.size()) < h_min) return std::numeric_limits<double>::quiet_NaN();
        double d = divergence(q, p);
        if (d == kInf) return std::numeric_limits<double>::quiet_NaN();
        return -d;
    });
    return -neg;
}

}  // namespace bruteforce

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Pmf random_pmf(std::mt19937_64& eng, int K) {
    // exponential weights, floored away from zero, last entry closes the sum
    std::uniform_real_distribution<double> uni(0.05, 1.0);
    std::vector<double> w(static_cast<std::size_t>(K));
    double sum = 0.0;
    for (auto& x : w) {
        x = uni(eng);
        sum += x;
    }
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        w[i] /= sum;
        acc += w[i];
    }
    w.back() = 1.0 - acc;
    return Pmf(w);
}

std::string format_dev(double dev) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << dev;
    return os.str();
}

}  // namespace

SuiteResult suite_dual_vs_grid(int pmfs_k2, int pmfs_k3, std::uint64_t seed) {
    SuiteResult res{"dual-vs-grid", false, 0.0, 2e-3, ""};
    std::mt19937_64 eng(seed);
    int total = pmfs_k2 + pmfs_k3;
    for (int c = 0; c < total; ++c) {
        const int K = c < pmfs_k2 ? 2 : 3;
        Pmf p = random_pmf(eng, K);
        const double h = shannon_entropy(p);
        const double t0 = theta_feasible_min(p);
        const double tinf = theta_saturation(p);
        const double tmax = theta_support_max(p);
        std::uniform_real_distribution<double> u01(0.1, 0.9);
        // r(theta) in its strictly rising range
        double theta_r = t0 + u01(eng) * (tinf - t0);
        double dual_r = r_of_theta(p, theta_r).value();
        double grid_r = bruteforce::r_of_theta_grid(p, theta_r);
        res.max_deviation = std::max(res.max_deviation, std::abs(dual_r - grid_r));
        // E(theta) in its finite rising range
        double theta_e = h + u01(eng) * (tmax - h);
        double dual_e = helper_failure_exponent(p, theta_e).value();
        double grid_e = bruteforce::helper_failure_grid(p, theta_e);
        res.max_deviation = std::max(res.max_deviation, std::abs(dual_e - grid_e));
    }
    res.pass = res.max_deviation <= res.tolerance;
    res.detail = std::to_string(total) + " pmfs, max dev " + format_dev(res.max_deviation);
    return res;
}

SuiteResult suite_counting_law(long long t_lo, long long t_hi) {
    SuiteResult res{"counting-law", false, 0.0, 2.0, ""};
    const Pmf p({0.9, 0.1});
    const double theta = 1.0;
    const double r = r_of_theta(p, theta).value();
    for (long long t = t_lo; t <= t_hi; ++t) {
        double lsize = helper_set_log_size(p, t, theta).value();
        double gap = std::abs(lsize / static_cast<double>(t) - r);
        double c = gap * static_cast<double>(t) / std::log(static_cast<double>(t));
        res.max_deviation = std::max(res.max_deviation, c);
    }
    res.pass = res.max_deviation <= res.tolerance;
    res.detail = "fitted C " + format_dev(res.max_deviation) + " over t in [" +
                 std::to_string(t_lo) + "," + std::to_string(t_hi) + "]";
    return res;
}

SuiteResult suite_mc_vs_exact(long long trials, std::uint64_t seed) {
    // deviation: |observed - expected| counts in units of the 99% interval halfwidth
    SuiteResult res{"mc-vs-exact", false, 0.0, 1.0, ""};
    auto normalized = [&](long long k, double p_exact, long long n) {
        CountInterval ci = binomial_central_interval(p_exact, n, 0.99);
        double mid = p_exact * static_cast<double>(n);
        double halfwidth = std::max({mid - static_cast<double>(ci.lo),
                                     static_cast<double>(ci.hi) - mid, 1.0});
        return std::abs(static_cast<double>(k) - mid) / halfwidth;
    };
    {
        ModuloParams mp{Pmf({0.9, 0.1})};
        const double p_exact = exact_error_modulo_fixed(mp, 1.0, 12);
        SimResult sr = simulate_modulo_fixed(mp, 1.0, 12, trials, RngPlan{seed, 0});
        res.max_deviation = std::max(res.max_deviation, normalized(sr.errors_total, p_exact, trials));
    }
    {
        AwgnFlashConfig cfg{AwgnParams(1.0, 1.0), FlashDesign(0.5, 0.1, 1.0), 64, 1.0};
        SphereTail tail = gaussian_sphere_tail(64, 1.0);
        double chernoff_bound = std::exp(-64.0 * chernoff_sphere_exponent(1.0));
        if (tail.prob > chernoff_bound) res.max_deviation = kInf;
        SimResult sr = simulate_flash_awgn(cfg, trials, RngPlan{seed + 1, 0});
        res.max_deviation =
            std::max(res.max_deviation, normalized(sr.helper_failures, tail.prob, trials));
    }
    res.pass = res.max_deviation <= res.tolerance;
    res.detail = std::to_string(trials) + " trials, worst interval position " +
                 format_dev(res.max_deviation);
    return res;
}

SuiteResult suite_sandwich_awgn(int grid_points) {
    SuiteResult res{"sandwich-awgn", false, 0.0, 1e-12, ""};
    for (double gamma : {0.5, 1.0, 2.0}) {
        for (double rh : {0.0, 0.3}) {
            auto provider = default_awgn_provider(gamma);
            const double c0 = capacity_awgn(gamma);
            for (int i = 0; i < grid_points; ++i) {
                double r = (static_cast<double>(i) + 0.37) * (rh + c0 + 0.3) / grid_points;
                ExponentValue ach = achievable_exponent_limit(r, gamma, rh, provider);
                ExponentValue wsp = wsp_awgn(r, gamma, rh);
                if (r < rh) {
                    if (!(ach.is_infinite() && wsp.is_infinite())) res.max_deviation = kInf;
                } else if (r >= rh + c0) {
                    if (!(ach.is_zero() && wsp.is_zero())) res.max_deviation = kInf;
                } else {
                    if (ach.is_infinite() || wsp.is_infinite()) {
                        res.max_deviation = kInf;
                    } else {
                        res.max_deviation =
                            std::max(res.max_deviation, ach.value() - wsp.value());
                    }
                }
            }
        }
    }
    res.pass = res.max_deviation <= res.tolerance;
    res.detail = "max(achievable - wsp) " + format_dev(res.max_deviation);
    return res;
}

SuiteResult suite_wsp_modulo_grid(int cases, std::uint64_t seed) {
    SuiteResult res{"wsp-modulo-grid", false, 0.0, 2e-3, ""};
    std::mt19937_64 eng(seed);
    std::uniform_real_distribution<double> u01(0.1, 0.9);
    for (int c = 0; c < cases; ++c) {
        const int K = (c % 2 == 0) ? 2 : 3;
        Pmf p = random_pmf(eng, K);
        const double lnk = std::log(static_cast<double>(K));
        const double ip = lnk - shannon_entropy(p);
        const double rh = 0.1;
        const double rate = rh + u01(eng) * ip;
        ExponentValue w = wsp_modulo(p, rate, rh);
        if (!w.is_finite()) {
            res.max_deviation = kInf;
            continue;
        }
        double grid = bruteforce::min_divergence_entropy_at_least(p, lnk - (rate - rh));
        res.max_deviation = std::max(res.max_deviation, std::abs(w.value() - grid));
    }
    res.pass = res.max_deviation <= res.tolerance;
    res.detail = std::to_string(cases) + " cases, max dev " + format_dev(res.max_deviation);
    return res;
}

SuiteResult suite_mac_split_sweep(int cases, std::uint64_t seed) {
    SuiteResult res{"mac-split-sweep", false, 0.0, 1e-3, ""};
    std::mt19937_64 eng(seed);
    std::uniform_real_distribution<double> urate(0.0, 0.4);
    std::uniform_real_distribution<double> uhelp(0.02, 0.3);
    const double gamma = 1.0;
    const int sweep_points = 1000;
    for (int c = 0; c < cases; ++c) {
        RatePair rp{urate(eng), urate(eng)};
        double rh = uhelp(eng);
        HelpSplit split = optimal_help_split(rp, rh);
        double closed = helped_rc_exponent_symmetric(rp, gamma, split).as_double();
        double best = -kInf;
        for (int i = 0; i <= sweep_points; ++i) {
            double h1 = rh * (static_cast<double>(i) / sweep_points);
            double h2 = std::max(0.0, rh - h1);
            best = std::max(best, helped_rc_exponent_symmetric(rp, gamma, {h1, h2}).as_double());
        }
        double dev;
        if (std::isinf(best) || std::isinf(closed))
            dev = (best == closed) ? 0.0 : kInf;
        else
            dev = std::max(0.0, best - closed);
        res.max_deviation = std::max(res.max_deviation, dev);
    }
    res.pass = res.max_deviation <= res.tolerance;
    res.detail = std::to_string(cases) + " triples, max sweep gain " +
                 format_dev(res.max_deviation);
    return res;
}

std::vector<SuiteResult> run_verify_suites(bool quick, std::uint64_t seed) {
    std::vector<SuiteResult> suites;
    if (quick) {
        suites.push_back(suite_dual_vs_grid(7, 3, seed));
        suites.push_back(suite_counting_law(8, 14));
        suites.push_back(suite_mc_vs_exact(20000, seed));
        suites.push_back(suite_sandwich_awgn(100));
        suites.push_back(suite_wsp_modulo_grid(6, seed));
        suites.push_back(suite_mac_split_sweep(10, seed));
    } else {
        suites.push_back(suite_dual_vs_grid(30, 20, seed));
        suites.push_back(suite_counting_law(8, 20));
        suites.push_back(suite_mc_vs_exact(200000, seed));
        suites.push_back(suite_sandwich_awgn(400));
        suites.push_back(suite_wsp_modulo_grid(16, seed));
        suites.push_back(suite_mac_split_sweep(50, seed));
    }
    if (const char* tamper = std::getenv("FLASHHELP_VERIFY_TAMPER")) {
        for (auto& s : suites) {
            if (s.name == tamper) {
                s.tolerance = 0.0;
                s.pass = s.max_deviation <= s.tolerance;
                s.detail += " [tampered tolerance]";
            }
        }
    }
    return suites;
}

}  // namespace flashhelp
