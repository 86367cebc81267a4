#pragma once

// Places of Q and the normalized absolute values |x|_inf = |x|, |x|_p = p^{-v_p(x)}.

#include "gcdlab/logreal.hpp"
#include "gcdlab/rational.hpp"

#include <compare>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace gcdlab {

class Place {
public:
    static Place archimedean() { return Place(); }
    /// Throws DomainError unless p is a certified prime.
    static Place finite(const Integer& p);
    static Place finite(unsigned long p) { return finite(Integer(p)); }

    bool is_archimedean() const { return !prime_.has_value(); }
    /// Precondition: finite place.
    const Integer& prime() const;

    /// "inf" or the prime in decimal.
    std::string to_string() const;
    /// Inverse of to_string; also accepts "oo" and "infinity".
    static Place parse(std::string_view text);

    friend bool operator==(const Place& a, const Place& b) = default;
    /// Archimedean first, then primes ascending.
    friend std::strong_ordering operator<=>(const Place& a, const Place& b);

private:
    Place() = default;
    std::optional<Integer> prime_;
};

/// A finite set of places. Theorem contexts use it as S with the archimedean
/// place included; S_0 of a pair of recurrences may omit it.
class PlaceSet {
public:
    PlaceSet() = default;
    PlaceSet(bool archimedean, std::set<Integer> primes);
    /// {inf} together with the given primes (each certified).
    static PlaceSet with_archimedean(std::initializer_list<unsigned long> primes);
    static PlaceSet from_places(const std::vector<Place>& places);

    bool contains_archimedean() const { return archimedean_; }
    const std::set<Integer>& finite_primes() const { return primes_; }
    bool contains(const Place& v) const;
    bool contains_prime(const Integer& p) const { return primes_.count(p) != 0; }

    PlaceSet united(const PlaceSet& other) const;
    std::vector<Place> places() const;
    std::string to_string() const;

    friend bool operator==(const PlaceSet&, const PlaceSet&) = default;

private:
    bool archimedean_ = false;
    std::set<Integer> primes_;
};

/// v_p(x) for x != 0.
long valuation(const Rational& x, const Integer& p);
long valuation(const Integer& x, const Integer& p);

/// log|x|_v as an exact LogReal; x != 0.
LogReal log_abs(const Rational& x, const Place& v);

/// All places where |x|_v != 1; x != 0.
std::set<Place> support(const Rational& x);

/// Finite places dividing numerator or denominator of any of the values
/// (zeros ignored), plus the archimedean place.
std::set<Place> joint_support(const std::vector<Rational>& values);

}  // namespace gcdlab
