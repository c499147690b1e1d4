#pragma once

#include <cmath>

namespace flashhelp {

/// Golden-section minimizer for a unimodal f on [lo, hi]. Returns the argmin.
/// Derivative-free and robust at boundary minimizers.
template <class F>
double golden_min(F&& f, double lo, double hi, double xtol = 1e-12) {
    constexpr double invphi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    while (b - a > xtol * (1.0 + std::abs(a) + std::abs(b))) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

template <class F>
double golden_max(F&& f, double lo, double hi, double xtol = 1e-12) {
    return golden_min([&](double x) { return -f(x); }, lo, hi, xtol);
}

/// Grows hi geometrically from 1 until pred(hi) holds or the cap is reached.
/// Used to bracket one-dimensional lambda optimizations whose domain is
/// [0, infinity): pred tests the objective's slope sign at hi.
template <class Pred>
double grow_bracket(Pred&& pred, double cap = 1e8) {
    double hi = 1.0;
    while (hi < cap && !pred(hi)) hi *= 2.0;
    return hi < cap ? hi : cap;
}

}  // namespace flashhelp
