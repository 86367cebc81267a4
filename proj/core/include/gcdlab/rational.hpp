#pragma once

// Exact integers and rationals backed by GMP.
//
// mpq_class keeps values canonical (reduced, positive denominator) as long as
// every constructor path goes through canonicalize(); the helpers below do.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gcdlab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised for inputs outside an operation's domain (zero where a nonzero
/// value is required, points on a hypersurface, malformed configs, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Parses "a/b" or "a" with optional sign. Decimal points, exponents and
/// whitespace inside the number are rejected.
Rational parse_rational(std::string_view text);

/// "a/b" for non-integers, "a" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline Integer pow(const Integer& base, unsigned long exp) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

/// base^exp for any integer exponent; negative exponents require base != 0.
Rational pow(const Rational& base, long exp);

inline int sign(const Rational& q) { return sgn(q); }
inline int sign(const Integer& z) { return sgn(z); }

inline bool fits_u64(const Integer& z) {
    return z >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Integer& z);
Integer from_u64(std::uint64_t v);

/// Binomial coefficient with the convention C(a, b) = 0 when a < b or b < 0,
/// including negative tops.
Integer binomial(long top, long bottom);

/// floor(sqrt(q)) for q >= 0, exact.
Integer floor_sqrt(const Rational& q);

/// True when q is the square of a rational; writes the root to *root.
bool is_rational_square(const Rational& q, Rational* root = nullptr);

}  // namespace gcdlab
