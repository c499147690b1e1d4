#include "flashhelp/modulo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "flashhelp/entropy.hpp"
#include "flashhelp/optim.hpp"
#include "flashhelp/typeclass.hpp"

namespace flashhelp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> support_log_probs(const Pmf& p) {
    std::vector<double> lp;
    lp.reserve(static_cast<std::size_t>(p.size()));
    for (double q : p.probs())
        if (q > 0.0) lp.push_back(std::log(q));
    return lp;
}

// mean of lp under weights proportional to exp(a * lp_z)
double weighted_mean_logp(const std::vector<double>& lp, double a) {
    double m = -kInf;
    for (double x : lp) m = std::max(m, a * x);
    double wsum = 0.0, acc = 0.0;
    for (double x : lp) {
        double w = std::exp(a * x - m);
        wsum += w;
        acc += w * x;
    }
    return acc / wsum;
}

double lse_scaled(const std::vector<double>& lp, double a) {
    std::vector<double> terms(lp.size());
    for (std::size_t i = 0; i < lp.size(); ++i) terms[i] = a * lp[i];
    return log_sum_exp(terms);
}

struct GeomPoint {
    double entropy;
    double divergence;
};

// Q_beta proportional to p^beta on the support of p
GeomPoint geom_family_point(const std::vector<double>& lp, double beta) {
    std::vector<double> terms(lp.size());
    for (std::size_t i = 0; i < lp.size(); ++i) terms[i] = beta * lp[i];
    double lnz = log_sum_exp(terms);
    double elp = 0.0;
    for (std::size_t i = 0; i < lp.size(); ++i) elp += std::exp(terms[i] - lnz) * lp[i];
    return {lnz - beta * elp, (beta - 1.0) * elp - lnz};
}

// min D(Q||p) over the geometric family subject to H(Q) == target entropy,
// with H(p) < target < ln|support|; H(Q_beta) decreases in beta on [0,1]
double geom_family_divergence_at_entropy(const std::vector<double>& lp, double target) {
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (geom_family_point(lp, mid).entropy >= target)
            lo = mid;
        else
            hi = mid;
    }
    return std::max(0.0, geom_family_point(lp, 0.5 * (lo + hi)).divergence);
}

double logaddexp(double a, double b) {
    if (a == -kInf) return b;
    if (b == -kInf) return a;
    double m = std::max(a, b);
    return m + std::log(std::exp(a - m) + std::exp(b - m));
}

}  // namespace

double theta_feasible_min(const Pmf& p) {
    return -std::log(p.max_prob());
}

double theta_saturation(const Pmf& p) {
    auto lp = support_log_probs(p);
    double s = 0.0;
    for (double x : lp) s -= x;
    return s / static_cast<double>(lp.size());
}

double theta_support_max(const Pmf& p) {
    return -std::log(p.min_positive());
}

ExponentValue r_of_theta(const Pmf& p, double theta) {
    if (theta < 0.0) throw std::invalid_argument("r_of_theta: theta must be >= 0");
    auto lp = support_log_probs(p);
    const double ln_keff = std::log(static_cast<double>(lp.size()));
    if (theta < theta_feasible_min(p)) return ExponentValue::neg_infinite();
    if (theta >= theta_saturation(p)) return ExponentValue::finite(ln_keff);
    // dual: minimize F(lambda) = lambda*theta + ln(sum p^lambda) over lambda >= 0
    auto slope_positive = [&](double lam) { return theta + weighted_mean_logp(lp, lam) > 0.0; };
    double hi = grow_bracket(slope_positive);
    auto F = [&](double lam) { return lam * theta + lse_scaled(lp, lam); };
    double lam = golden_min(F, 0.0, hi);
    return ExponentValue::finite(std::clamp(F(lam), 0.0, ln_keff));
}

double theta_of_r(const Pmf& p, double r) {
    auto lp = support_log_probs(p);
    const double ln_keff = std::log(static_cast<double>(lp.size()));
    if (r > ln_keff + 1e-9) throw std::invalid_argument("theta_of_r: r exceeds ln|support|");
    if (r >= ln_keff) return theta_saturation(p);
    double theta_lo = theta_feasible_min(p);
    int n_max = 0;
    for (double q : p.probs())
        if (q == p.max_prob()) ++n_max;
    if (r <= std::log(static_cast<double>(n_max))) return theta_lo;
    double theta_hi = theta_saturation(p);
    for (int it = 0; it < 120; ++it) {
        double mid = 0.5 * (theta_lo + theta_hi);
        if (r_of_theta(p, mid) >= ExponentValue::finite(r))
            theta_hi = mid;
        else
            theta_lo = mid;
    }
    return theta_hi;
}

ExponentValue helper_failure_exponent(const Pmf& p, double theta) {
    if (theta < 0.0) throw std::invalid_argument("helper_failure_exponent: theta must be >= 0");
    if (theta <= shannon_entropy(p)) return ExponentValue::zero();
    const double theta_max = theta_support_max(p);
    if (theta > theta_max) return ExponentValue::infinite();
    auto lp = support_log_probs(p);
    if (theta == theta_max) {
        // constraint forces all mass on the least likely symbols
        int n_min = 0;
        for (double q : p.probs())
            if (q > 0.0 && q == p.min_positive()) ++n_min;
        return ExponentValue::finite(theta_max - std::log(static_cast<double>(n_min)));
    }
    // dual: maximize G(lambda) = lambda*theta - ln(sum p^(1-lambda)) over lambda >= 0
    auto slope_negative = [&](double lam) {
        return theta + weighted_mean_logp(lp, 1.0 - lam) < 0.0;
    };
    double hi = grow_bracket(slope_negative);
    auto G = [&](double lam) { return lam * theta - lse_scaled(lp, 1.0 - lam); };
    double lam = golden_max(G, 0.0, hi);
    return ExponentValue::finite(std::max(0.0, G(lam)));
}

ExponentValue overflow_exponent(const Pmf& p, double helper_rate, double tau) {
    if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("overflow_exponent: tau in (0,1)");
    if (helper_rate < 0.0) throw std::invalid_argument("overflow_exponent: helper rate >= 0");
    auto lp = support_log_probs(p);
    const double ln_keff = std::log(static_cast<double>(lp.size()));
    const double target = helper_rate / tau;  // entropy the overflow set must reach
    if (target > ln_keff) return ExponentValue::infinite();
    if (target <= shannon_entropy(p)) return ExponentValue::zero();
    return ExponentValue::finite(geom_family_divergence_at_entropy(lp, target));
}

ExponentValue wsp_modulo(const Pmf& p, double rate, double helper_rate) {
    if (rate < 0.0 || helper_rate < 0.0) throw std::invalid_argument("wsp_modulo: negative rate");
    const double ln_k = std::log(static_cast<double>(p.size()));
    if (rate >= ln_k) return ExponentValue::zero();
    if (rate <= helper_rate) return ExponentValue::infinite();
    const double target = ln_k - (rate - helper_rate);  // need H(Q) > target
    if (target <= shannon_entropy(p)) return ExponentValue::zero();
    auto lp = support_log_probs(p);
    const double ln_keff = std::log(static_cast<double>(lp.size()));
    if (target >= ln_keff) return ExponentValue::infinite();  // unreachable within support
    return ExponentValue::finite(geom_family_divergence_at_entropy(lp, target));
}

ExponentValue helper_set_log_size(const Pmf& p, long long t, double theta) {
    if (theta < 0.0) throw std::invalid_argument("helper_set_log_size: theta must be >= 0");
    auto lp = p.log_probs();
    TypeEnumeration en(p.size(), t);
    const double budget = static_cast<double>(t) * theta;
    double acc = -kInf;
    while (auto tp = en.next()) {
        double cost = 0.0;  // -ln P(z^t) for sequences of this type
        bool off_support = false;
        const auto& c = tp->counts();
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (c[i] == 0) continue;
            if (p[static_cast<int>(i)] == 0.0) {
                off_support = true;
                break;
            }
            cost -= static_cast<double>(c[i]) * lp[i];
        }
        if (off_support) continue;  // zero-probability sequences never qualify
        if (cost <= budget) acc = logaddexp(acc, log_multinomial(*tp));
    }
    if (acc == -kInf) return ExponentValue::neg_infinite();
    return ExponentValue::finite(std::max(0.0, acc));
}

ExponentValue default_modulo_exponent(double rate, const Pmf& noise) {
    if (rate < 0.0) throw std::invalid_argument("default_modulo_exponent: rate must be >= 0");
    const double ln_k = std::log(static_cast<double>(noise.size()));
    if (rate >= ln_k - shannon_entropy(noise)) return ExponentValue::zero();
    auto lp = support_log_probs(noise);
    auto e0 = [&](double rho) {
        return rho * ln_k - (1.0 + rho) * lse_scaled(lp, 1.0 / (1.0 + rho));
    };
    auto objective = [&](double rho) { return e0(rho) - rho * rate; };
    double rho_star = golden_max(objective, 0.0, 1.0, 1e-10);
    return ExponentValue::finite(std::max(0.0, objective(rho_star)));
}

ExponentProvider default_modulo_provider(const Pmf& noise) {
    return [noise](double rate) { return default_modulo_exponent(rate, noise); };
}

double modulo_default_tau(int K, double helper_rate) {
    if (K < 2) throw std::invalid_argument("modulo_default_tau: K must be >= 2");
    if (!(helper_rate > 0.0)) throw std::invalid_argument("modulo_default_tau: helper rate > 0");
    return std::min(helper_rate / std::log(static_cast<double>(K)), 1.0 - 1e-9);
}

ExponentValue modulo_achievable_exponent(const Pmf& p, double rate, double helper_rate,
                                         double tau, const ExponentProvider& provider) {
    if (rate < 0.0 || helper_rate < 0.0)
        throw std::invalid_argument("modulo_achievable_exponent: negative rate");
    const double ln_k = std::log(static_cast<double>(p.size()));
    if (!(tau > 0.0 && tau < 1.0))
        throw std::invalid_argument("modulo_achievable_exponent: tau in (0,1)");
    if (tau > helper_rate / ln_k + 1e-12)
        throw std::invalid_argument(
            "modulo_achievable_exponent: tau > R_h/ln K, helper cannot index all sequences");
    if (rate <= tau * ln_k) return ExponentValue::infinite();
    return provider((rate - tau * ln_k) / (1.0 - tau)).scaled(1.0 - tau);
}

std::vector<TauSweepPoint> modulo_achievable_tau_sweep(const Pmf& p, double rate,
                                                       double helper_rate,
                                                       const ExponentProvider& provider,
                                                       int points) {
    if (points < 2) throw std::invalid_argument("modulo_achievable_tau_sweep: points >= 2");
    double tau_max = modulo_default_tau(p.size(), helper_rate);
    std::vector<TauSweepPoint> out;
    out.reserve(static_cast<std::size_t>(points));
    for (int i = 1; i <= points; ++i) {
        double tau = tau_max * static_cast<double>(i) / static_cast<double>(points);
        out.push_back({tau, modulo_achievable_exponent(p, rate, helper_rate, tau, provider)});
    }
    return out;
}

}  // namespace flashhelp
