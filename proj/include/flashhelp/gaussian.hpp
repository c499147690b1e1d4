#pragma once

namespace flashhelp {

/// D(N(0, v*s2) || N(0, s2)) as a function of the variance ratio v only:
/// (v - ln v - 1)/2. Strictly convex, zero exactly at v = 1. Throws for v <= 0.
double gaussian_kl_variance_ratio(double v);

struct SphereTail {
    double prob = 0.0;
    bool underflow = false;  // true when the exact value is positive but rounds to 0
};

/// Pr{ sum_{i=1}^{t} Z_i^2 > t*sigma2*(1+s) } for Z_i iid N(0, sigma2).
/// Scale-free in sigma2: the upper tail of a chi-square with t degrees of
/// freedom at t*(1+s), via the regularized incomplete gamma function.
SphereTail gaussian_sphere_tail(long t, double s);

}  // namespace flashhelp
