#pragma once

// Generalized logarithmic gcd over Q:
//   log gcd(a, b) = - sum_v log^- max(|a|_v, |b|_v),   log^- z = min(0, log z).
//
// Only places where both |a|_v < 1 and |b|_v < 1 contribute. At a prime p that
// means p divides both numerators; at infinity it means |a|, |b| < 1.

#include "gcdlab/logreal.hpp"
#include "gcdlab/places.hpp"

namespace gcdlab {

/// A value of the generalized log gcd; always nonnegative.
struct GcdValue {
    LogReal value;

    friend bool operator==(const GcdValue&, const GcdValue&) = default;
};

/// Sum over all places. (0, 0) is rejected.
GcdValue log_gcd(const Rational& a, const Rational& b);

/// Sum restricted to places outside S.
GcdValue log_gcd_outside(const Rational& a, const Rational& b, const PlaceSet& S);

/// Sum restricted to places inside S.
GcdValue log_gcd_within(const Rational& a, const Rational& b, const PlaceSet& S);

/// The single-place term -log^- max(|a|_v, |b|_v).
LogReal gcd_local_term(const Rational& a, const Rational& b, const Place& v);

}  // namespace gcdlab
