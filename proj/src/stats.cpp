#include "flashhelp/stats.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/distributions/binomial.hpp>
#include <boost/math/special_functions/beta.hpp>

namespace flashhelp {

ConfInterval clopper_pearson(long long k, long long n, double confidence) {
    if (n <= 0) throw std::invalid_argument("clopper_pearson: n must be > 0");
    if (k < 0 || k > n) throw std::invalid_argument("clopper_pearson: k out of range");
    if (!(confidence > 0.0 && confidence < 1.0))
        throw std::invalid_argument("clopper_pearson: confidence out of (0,1)");
    const double alpha = 1.0 - confidence;
    ConfInterval ci;
    ci.lo = (k == 0) ? 0.0
                     : boost::math::ibeta_inv(static_cast<double>(k),
                                              static_cast<double>(n - k + 1), alpha / 2.0);
    ci.hi = (k == n) ? 1.0
                     : boost::math::ibeta_inv(static_cast<double>(k + 1),
                                              static_cast<double>(n - k), 1.0 - alpha / 2.0);
    return ci;
}

CountInterval binomial_central_interval(double p, long long n, double confidence) {
    if (n <= 0) throw std::invalid_argument("binomial_central_interval: n must be > 0");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("binomial_central_interval: p out of [0,1]");
    CountInterval ci;
    if (p == 0.0) return {0, 0};
    if (p == 1.0) return {n, n};
    const double alpha = 1.0 - confidence;
    boost::math::binomial_distribution<double> dist(static_cast<double>(n), p);
    // default rounding policy widens outward, which keeps the interval conservative
    ci.lo = static_cast<long long>(boost::math::quantile(dist, alpha / 2.0));
    ci.hi = static_cast<long long>(boost::math::quantile(dist, 1.0 - alpha / 2.0));
    return ci;
}

double rule_of_three(long long n) {
    if (n <= 0) throw std::invalid_argument("rule_of_three: n must be > 0");
    return 3.0 / static_cast<double>(n);
}

}  // namespace flashhelp
