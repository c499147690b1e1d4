#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace flashhelp {

/// Extended-real value of an exponent function.
///
/// Exponent curves in this library take values on three regimes (exactly
/// zero, finite positive, infinite), and one feasibility sentinel (negative
/// infinity, used e.g. by r(theta) below its feasibility threshold). The
/// regimes are represented by explicit tags rather than large floats so that
/// region boundaries are exact. Zero and Finite(0) compare equal.
class ExponentValue {
  public:
    enum class Kind { NegInf, Zero, Finite, Inf };

    ExponentValue() : kind_(Kind::Zero), value_(0.0) {}

    static ExponentValue zero() { return ExponentValue(Kind::Zero, 0.0); }
    static ExponentValue infinite() { return ExponentValue(Kind::Inf, 0.0); }
    static ExponentValue neg_infinite() { return ExponentValue(Kind::NegInf, 0.0); }
    static ExponentValue finite(double v) {
        if (!(v >= 0.0))
            throw std::invalid_argument("ExponentValue::finite: payload must be >= 0");
        return ExponentValue(Kind::Finite, v);
    }

    Kind kind() const { return kind_; }
    bool is_infinite() const { return kind_ == Kind::Inf; }
    bool is_neg_infinite() const { return kind_ == Kind::NegInf; }
    bool is_finite() const { return kind_ == Kind::Zero || kind_ == Kind::Finite; }
    bool is_zero() const { return kind_ == Kind::Zero || (kind_ == Kind::Finite && value_ == 0.0); }

    /// Finite payload; Zero maps to 0. Throws on either infinity.
    double value() const {
        if (!is_finite()) throw std::logic_error("ExponentValue::value: not finite");
        return kind_ == Kind::Zero ? 0.0 : value_;
    }

    /// Extended-real mapping (+/-inf for the sentinels), for comparisons and display.
    double as_double() const {
        switch (kind_) {
            case Kind::NegInf: return -std::numeric_limits<double>::infinity();
            case Kind::Zero: return 0.0;
            case Kind::Finite: return value_;
            case Kind::Inf: return std::numeric_limits<double>::infinity();
        }
        return 0.0;
    }

    friend bool operator==(const ExponentValue& a, const ExponentValue& b) {
        return a.as_double() == b.as_double();
    }
    friend bool operator<(const ExponentValue& a, const ExponentValue& b) {
        return a.as_double() < b.as_double();
    }
    friend bool operator<=(const ExponentValue& a, const ExponentValue& b) {
        return a.as_double() <= b.as_double();
    }
    friend bool operator>(const ExponentValue& a, const ExponentValue& b) { return b < a; }
    friend bool operator>=(const ExponentValue& a, const ExponentValue& b) { return b <= a; }

    friend ExponentValue min(const ExponentValue& a, const ExponentValue& b) {
        return a <= b ? a : b;
    }

    /// Multiply by a positive scale factor (segment-length weighting).
    ExponentValue scaled(double c) const {
        if (!(c > 0.0)) throw std::invalid_argument("ExponentValue::scaled: factor must be > 0");
        if (kind_ == Kind::Finite) return finite(c * value_);
        return *this;
    }

  private:
    ExponentValue(Kind k, double v) : kind_(k), value_(v) {}
    Kind kind_;
    double value_;
};

}  // namespace flashhelp
