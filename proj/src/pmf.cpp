#include "flashhelp/pmf.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace flashhelp {

namespace {
constexpr double kSumTolerance = 1e-12;
}

Pmf::Pmf(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.size() < 2) throw std::invalid_argument("Pmf: alphabet size must be >= 2");
    double sum = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0) || !std::isfinite(p))
            throw std::invalid_argument("Pmf: entries must be finite and >= 0");
        sum += p;
    }
    if (std::abs(sum - 1.0) > kSumTolerance)
        throw std::invalid_argument("Pmf: entries sum to " + std::to_string(sum) +
                                    ", expected 1 within 1e-12 (renormalization refused)");
}

Pmf Pmf::uniform(int K) {
    if (K < 2) throw std::invalid_argument("Pmf::uniform: K must be >= 2");
    return Pmf(std::vector<double>(static_cast<std::size_t>(K), 1.0 / K));
}

std::vector<int> Pmf::support() const {
    std::vector<int> idx;
    for (int i = 0; i < size(); ++i)
        if (probs_[static_cast<std::size_t>(i)] > 0.0) idx.push_back(i);
    return idx;
}

int Pmf::support_size() const {
    int n = 0;
    for (double p : probs_)
        if (p > 0.0) ++n;
    return n;
}

double Pmf::max_prob() const {
    double m = 0.0;
    for (double p : probs_) m = std::max(m, p);
    return m;
}

double Pmf::min_positive() const {
    double m = std::numeric_limits<double>::infinity();
    for (double p : probs_)
        if (p > 0.0) m = std::min(m, p);
    return m;
}

std::vector<double> Pmf::log_probs() const {
    std::vector<double> lp(probs_.size());
    for (std::size_t i = 0; i < probs_.size(); ++i)
        lp[i] = probs_[i] > 0.0 ? std::log(probs_[i]) : -std::numeric_limits<double>::infinity();
    return lp;
}

EmpiricalType::EmpiricalType(std::vector<long long> counts, long long t)
    : counts_(std::move(counts)), t_(t) {
    if (counts_.size() < 2) throw std::invalid_argument("EmpiricalType: alphabet size must be >= 2");
    if (t_ < 1) throw std::invalid_argument("EmpiricalType: t must be >= 1");
    long long sum = 0;
    for (long long c : counts_) {
        if (c < 0) throw std::invalid_argument("EmpiricalType: counts must be >= 0");
        sum += c;
    }
    if (sum != t_) throw std::invalid_argument("EmpiricalType: counts must sum to t");
}

Pmf EmpiricalType::to_pmf() const {
    std::vector<double> q(counts_.size());
    for (std::size_t i = 0; i < counts_.size(); ++i)
        q[i] = static_cast<double>(counts_[i]) / static_cast<double>(t_);
    return Pmf(q);
}

}  // namespace flashhelp
