#pragma once

#include <cstddef>
#include <vector>

namespace flashhelp {

/// Finite probability vector over the alphabet {0, ..., K-1}.
///
/// Construction validates: K >= 2, all entries >= 0, and the entries sum to 1
/// within 1e-12 absolute. Off-by-more-than-tolerance vectors are rejected
/// rather than renormalized.
class Pmf {
  public:
    explicit Pmf(std::vector<double> probs);
    static Pmf uniform(int K);

    int size() const { return static_cast<int>(probs_.size()); }
    double operator[](int i) const { return probs_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& probs() const { return probs_; }

    std::vector<int> support() const;
    int support_size() const;
    double max_prob() const;
    /// Smallest strictly positive entry.
    double min_positive() const;
    /// ln p_z per symbol, -inf for zero entries.
    std::vector<double> log_probs() const;

    bool operator==(const Pmf&) const = default;

  private:
    std::vector<double> probs_;
};

/// Empirical distribution of a length-t sequence: per-symbol counts summing to t.
class EmpiricalType {
  public:
    EmpiricalType(std::vector<long long> counts, long long t);

    const std::vector<long long>& counts() const { return counts_; }
    long long t() const { return t_; }
    int alphabet_size() const { return static_cast<int>(counts_.size()); }
    Pmf to_pmf() const;

  private:
    std::vector<long long> counts_;
    long long t_;
};

}  // namespace flashhelp
