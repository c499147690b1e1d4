#pragma once

namespace flashhelp {

struct ConfInterval {
    double lo = 0.0;
    double hi = 1.0;
};

/// Exact (Clopper-Pearson) two-sided confidence interval for a binomial
/// proportion with k successes out of n trials.
ConfInterval clopper_pearson(long long k, long long n, double confidence = 0.95);

struct CountInterval {
    long long lo = 0;
    long long hi = 0;
};

/// Central acceptance interval for the success count of Binomial(n, p):
/// counts outside it occur with probability at most 1-confidence.
CountInterval binomial_central_interval(double p, long long n, double confidence = 0.99);

/// Rule-of-three upper bound on p after n error-free trials.
double rule_of_three(long long n);

}  // namespace flashhelp
