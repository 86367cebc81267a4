#pragma once

#include "gcdlab/interval.hpp"
#include "gcdlab/rational.hpp"

#include <map>
#include <string>

namespace gcdlab {

/// An exact real number of the form sum_k c_k * log(b_k) with rational c_k.
///
/// The bases b_k are pairwise coprime integers > 1. Bases below 2^64 are
/// always certified primes; larger bases are primes or cofactors that
/// resisted factoring. Pairwise coprimality makes the logarithms linearly
/// independent over Q, so a value is zero exactly when its map is empty, and
/// two values are equal exactly when their difference is empty.
class LogReal {
public:
    using Terms = std::map<Integer, Rational>;

    LogReal() = default;

    /// log(q) for q > 0, factoring numerator and denominator.
    static LogReal log_of(const Rational& positive);
    static LogReal log_of(const Integer& positive);
    /// coeff * log(p) for a prime p.
    static LogReal log_prime(const Integer& prime, const Rational& coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    const Terms& terms() const { return terms_; }

    /// Rational coefficient on `base` (0 if absent). Meaningful for prime bases.
    Rational coefficient(const Integer& base) const;

    LogReal& operator+=(const LogReal& rhs);
    LogReal& operator-=(const LogReal& rhs);
    LogReal& operator*=(const Rational& scale);
    friend LogReal operator+(LogReal lhs, const LogReal& rhs) { return lhs += rhs; }
    friend LogReal operator-(LogReal lhs, const LogReal& rhs) { return lhs -= rhs; }
    friend LogReal operator*(LogReal lhs, const Rational& scale) { return lhs *= scale; }
    friend LogReal operator*(const Rational& scale, LogReal rhs) { return rhs *= scale; }
    LogReal operator-() const;

    friend bool operator==(const LogReal& a, const LogReal& b) { return (a - b).is_zero(); }

    /// Enclosure of the value in natural-log units.
    Interval enclose(long precision) const;

    /// Exact sign, by escalating interval evaluation (nonzero maps always
    /// separate from zero).
    Sign sign(long precision = kDefaultPrecision) const;

    /// Sorted "c*log(p)" terms, e.g. "log(3) - log(2)" or "2*log(2) + 1/3*log(5)".
    std::string to_string() const;
    /// Decimal approximation with `digits` significant digits.
    std::string to_decimal(int digits = 12, long precision = kDefaultPrecision) const;
    double to_double() const;

private:
    void add_scaled(const LogReal& rhs, const Rational& scale);

    Terms terms_;
};

/// Sign of a; convenience wrapper over LogReal::sign.
inline Sign logreal_sign(const LogReal& a, long precision = kDefaultPrecision) { return a.sign(precision); }

/// Three-way certified comparison of a and b.
inline Sign compare(const LogReal& a, const LogReal& b, long precision = kDefaultPrecision) {
    return (a - b).sign(precision);
}

/// Sign of a - q, where q is a rational number of nats. Terminates because a
/// nonzero log of a rational is transcendental, so a - q = 0 only when both
/// sides vanish.
Sign compare(const LogReal& a, const Rational& q, long precision = kDefaultPrecision);

/// Sign of a - s * sqrt(r) * b for r >= 0 (used for the square-root
/// thresholds of the polynomial gcd bounds).
Sign compare_sqrt_scaled(const LogReal& a, const Rational& s, const Rational& r, const LogReal& b,
                         long precision = kDefaultPrecision);

}  // namespace gcdlab
