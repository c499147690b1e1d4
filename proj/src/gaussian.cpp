#include "flashhelp/gaussian.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

namespace flashhelp {

double gaussian_kl_variance_ratio(double v) {
    if (!(v > 0.0)) throw std::invalid_argument("gaussian_kl_variance_ratio: ratio must be > 0");
    return 0.5 * (v - std::log(v) - 1.0);
}

SphereTail gaussian_sphere_tail(long t, double s) {
    if (t < 1) throw std::invalid_argument("gaussian_sphere_tail: t must be >= 1");
    if (s < 0.0) throw std::invalid_argument("gaussian_sphere_tail: s must be >= 0");
    SphereTail out;
    out.prob = boost::math::gamma_q(static_cast<double>(t) / 2.0,
                                    static_cast<double>(t) * (1.0 + s) / 2.0);
    out.underflow = (out.prob == 0.0);
    return out;
}

}  // namespace flashhelp
