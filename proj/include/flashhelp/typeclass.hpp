#pragma once

#include <optional>
#include <vector>

#include "flashhelp/pmf.hpp"

namespace flashhelp {

/// Number of compositions of t into K nonnegative parts, C(t+K-1, K-1),
/// evaluated in floating point (used for the enumeration guard).
double count_types(int K, long long t);

/// Streams every empirical type (composition of t into K parts) exactly once,
/// in lexicographic order starting from (t, 0, ..., 0).
///
/// The constructor refuses instances with more than 10^7 types (GuardError).
class TypeEnumeration {
  public:
    TypeEnumeration(int K, long long t);

    /// Next type, or nullopt when exhausted.
    std::optional<EmpiricalType> next();

    double total() const { return total_; }

  private:
    int K_;
    long long t_;
    double total_;
    bool done_;
    bool first_;
    std::vector<long long> counts_;
};

/// Exact ln of the multinomial coefficient t! / prod(counts_z!), via lgamma.
double log_multinomial(const EmpiricalType& tp);

}  // namespace flashhelp
