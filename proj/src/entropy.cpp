#include "flashhelp/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace flashhelp {

double xlogx(double x) {
    return x > 0.0 ? x * std::log(x) : 0.0;
}

double log_sum_exp(std::span<const double> xs) {
    double m = -std::numeric_limits<double>::infinity();
    for (double x : xs) m = std::max(m, x);
    if (!std::isfinite(m)) return m;  // empty or all -inf
    double acc = 0.0;
    for (double x : xs) acc += std::exp(x - m);
    return m + std::log(acc);
}

double shannon_entropy(const Pmf& p) {
    double h = 0.0;
    for (double q : p.probs()) h -= xlogx(q);
    return std::max(0.0, h);
}

ExponentValue kl_divergence(const Pmf& q, const Pmf& p) {
    if (q.size() != p.size())
        throw std::invalid_argument("kl_divergence: dimension mismatch");
    double d = 0.0;
    for (int i = 0; i < q.size(); ++i) {
        if (q[i] == 0.0) continue;
        if (p[i] == 0.0) return ExponentValue::infinite();
        d += q[i] * std::log(q[i] / p[i]);
    }
    if (d <= 0.0) return ExponentValue::zero();  // exact only at q == p
    return ExponentValue::finite(d);
}

double renyi_entropy(const Pmf& p, double order) {
    if (order == 1.0) return shannon_entropy(p);
    if (order == 0.0) return std::log(static_cast<double>(p.support_size()));
    if (order < 0.0 && p.support_size() < p.size())
        return std::numeric_limits<double>::infinity();
    // ln(sum p^order) via log-sum-exp over order*ln(p) on the support
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(p.size()));
    for (double q : p.probs())
        if (q > 0.0) terms.push_back(order * std::log(q));
    return log_sum_exp(terms) / (1.0 - order);
}

}  // namespace flashhelp
