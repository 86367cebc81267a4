#pragma once

// Closed real intervals with MPFR endpoints and outward (directed) rounding.
// Every operation returns an enclosure of the exact result, so a sign read off
// an interval that excludes zero is a proof of that sign.

#include "gcdlab/rational.hpp"

#include <mpfr.h>

#include <functional>
#include <string>

namespace gcdlab {

inline constexpr long kDefaultPrecision = 128;

enum class Sign { negative = -1, zero = 0, positive = 1 };

inline Sign sign_of(int s) { return s < 0 ? Sign::negative : (s > 0 ? Sign::positive : Sign::zero); }
std::string to_string(Sign s);

class Interval {
public:
    explicit Interval(long precision = kDefaultPrecision);
    Interval(const Interval& other);
    Interval(Interval&& other) noexcept;
    Interval& operator=(Interval other) noexcept;
    ~Interval();

    static Interval exact(const Rational& q, long precision);
    static Interval log_of(const Integer& positive, long precision);
    static Interval log_of(const Rational& positive, long precision);

    long precision() const { return precision_; }

    Interval operator+(const Interval& rhs) const;
    Interval operator-(const Interval& rhs) const;
    Interval operator*(const Interval& rhs) const;
    Interval operator-() const;
    Interval sqrt() const;

    /// Positive/negative when the enclosure excludes zero; zero otherwise
    /// (which means "undecided at this precision", not "equals zero").
    Sign strict_sign() const;
    bool contains_zero() const { return strict_sign() == Sign::zero; }

    /// Midpoint rendered with `digits` significant decimal digits.
    std::string midpoint_string(int digits = 12) const;
    double midpoint_double() const;

    mpfr_srcptr lower() const { return lo_; }
    mpfr_srcptr upper() const { return hi_; }

private:
    void swap(Interval& other) noexcept;

    long precision_;
    mpfr_t lo_;
    mpfr_t hi_;
};

/// Sign of a real quantity that is known to be nonzero unless `exact_zero`
/// says so. `enclose` must return an enclosure at the requested precision;
/// precision doubles until the enclosure excludes zero.
Sign certified_sign(const std::function<Interval(long)>& enclose, long start_precision = kDefaultPrecision,
                    long max_precision = 1L << 20);

}  // namespace gcdlab
