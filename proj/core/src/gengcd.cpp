#include "gcdlab/gengcd.hpp"

#include "gcdlab/primes.hpp"

#include <algorithm>

namespace gcdlab {

namespace {

void check_not_both_zero(const Rational& a, const Rational& b) {
    if (a == 0 && b == 0) throw DomainError("log gcd of (0, 0) is undefined");
}

// min(v_p(a), v_p(b)) with v_p(0) = +infinity.
long min_valuation(const Rational& a, const Rational& b, const Integer& p) {
    if (a == 0) return valuation(b, p);
    if (b == 0) return valuation(a, p);
    return std::min(valuation(a, p), valuation(b, p));
}

LogReal archimedean_term(const Rational& a, const Rational& b) {
    Rational m = std::max(Rational(abs(a)), Rational(abs(b)));
    if (m >= 1) return {};
    return LogReal::log_of(Rational(1 / m));
}

// Finite places where both |a|_p < 1 and |b|_p < 1 are exactly the primes
// dividing both numerators.
Integer common_numerator_part(const Rational& a, const Rational& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    return g;
}

struct Split {
    LogReal within_finite;
    LogReal outside_finite;
};

Split finite_terms(const Rational& a, const Rational& b, const PlaceSet& S) {
    Split out;
    Integer g = common_numerator_part(a, b);
    for (const auto& p : S.finite_primes()) {
        if (mpz_divisible_p(g.get_mpz_t(), p.get_mpz_t()) == 0) continue;
        out.within_finite += LogReal::log_prime(p, Rational(min_valuation(a, b, p)));
        while (mpz_divisible_p(g.get_mpz_t(), p.get_mpz_t()) != 0) {
            mpz_divexact(g.get_mpz_t(), g.get_mpz_t(), p.get_mpz_t());
        }
    }
    if (g == 1) return out;
    for (const auto& f : factorize(g)) {
        // Certified primes go through the place-by-place minimum; unsplit
        // cofactors carry the multiplicity they have in the common part.
        long e = f.prime ? min_valuation(a, b, f.base) : f.exponent;
        out.outside_finite += LogReal::log_of(f.base) * Rational(e);
    }
    return out;
}

}  // namespace

LogReal gcd_local_term(const Rational& a, const Rational& b, const Place& v) {
    check_not_both_zero(a, b);
    if (v.is_archimedean()) return archimedean_term(a, b);
    long e = min_valuation(a, b, v.prime());
    return e > 0 ? LogReal::log_prime(v.prime(), Rational(e)) : LogReal{};
}

GcdValue log_gcd(const Rational& a, const Rational& b) {
    check_not_both_zero(a, b);
    Split s = finite_terms(a, b, PlaceSet{});
    return {archimedean_term(a, b) + s.outside_finite};
}

GcdValue log_gcd_outside(const Rational& a, const Rational& b, const PlaceSet& S) {
    check_not_both_zero(a, b);
    Split s = finite_terms(a, b, S);
    if (!S.contains_archimedean()) s.outside_finite += archimedean_term(a, b);
    return {std::move(s.outside_finite)};
}

GcdValue log_gcd_within(const Rational& a, const Rational& b, const PlaceSet& S) {
    check_not_both_zero(a, b);
    Split s = finite_terms(a, b, S);
    if (S.contains_archimedean()) s.within_finite += archimedean_term(a, b);
    return {std::move(s.within_finite)};
}

}  // namespace gcdlab
