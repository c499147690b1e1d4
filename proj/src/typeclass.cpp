#include "flashhelp/typeclass.hpp"

#include <cmath>
#include <stdexcept>

#include "flashhelp/errors.hpp"

namespace flashhelp {

namespace {
constexpr double kMaxTypes = 1e7;
}

double count_types(int K, long long t) {
    // C(t+K-1, K-1) through lgamma; exact enough for the guard
    return std::exp(std::lgamma(static_cast<double>(t + K)) -
                    std::lgamma(static_cast<double>(t + 1)) -
                    std::lgamma(static_cast<double>(K)));
}

TypeEnumeration::TypeEnumeration(int K, long long t)
    : K_(K), t_(t), total_(count_types(K, t)), done_(false), first_(true) {
    if (K < 2) throw std::invalid_argument("TypeEnumeration: K must be >= 2");
    if (t < 1) throw std::invalid_argument("TypeEnumeration: t must be >= 1");
    if (total_ > kMaxTypes)
        throw GuardError("TypeEnumeration: " + std::to_string(total_) +
                         " types exceeds the 1e7 enumeration guard");
    counts_.assign(static_cast<std::size_t>(K_), 0);
    counts_[0] = t_;
}

std::optional<EmpiricalType> TypeEnumeration::next() {
    if (done_) return std::nullopt;
    if (first_) {
        first_ = false;
        return EmpiricalType(counts_, t_);
    }
    // advance: move one unit right from the rightmost positive entry among the
    // first K-1, folding the tail remainder into the next position
    int i = K_ - 2;
    while (i >= 0 && counts_[static_cast<std::size_t>(i)] == 0) --i;
    if (i < 0) {
        done_ = true;
        return std::nullopt;
    }
    long long tail = counts_[static_cast<std::size_t>(K_ - 1)];
    counts_[static_cast<std::size_t>(K_ - 1)] = 0;
    counts_[static_cast<std::size_t>(i)] -= 1;
    counts_[static_cast<std::size_t>(i + 1)] += tail + 1;
    return EmpiricalType(counts_, t_);
}

double log_multinomial(const EmpiricalType& tp) {
    double v = std::lgamma(static_cast<double>(tp.t()) + 1.0);
    for (long long c : tp.counts()) v -= std::lgamma(static_cast<double>(c) + 1.0);
    return std::max(0.0, v);
}

}  // namespace flashhelp
