#pragma once

#include "gcdlab/rational.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace gcdlab {

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

/// Certified primality: deterministic below 2^64, and above that only when
/// GMP reports the value as definitely prime. Probable primes are rejected.
bool is_certified_prime(const Integer& n);

/// Primes below `limit`, ascending.
const std::vector<std::uint32_t>& small_primes();

/// One entry of a (possibly partial) factorization.
///
/// `prime` is false for a cofactor that resisted splitting within the effort
/// budget. Such atoms are still pairwise coprime with every other entry of
/// the same factorization, so logarithms over them stay linearly independent.
struct Factor {
    Integer base;
    long exponent = 0;
    bool prime = true;
};

/// Factorization of |n| (n != 0) into pairwise coprime bases, sorted by base.
/// Every part below 2^64 is fully split into certified primes.
std::vector<Factor> factorize(const Integer& n);

/// Refines `values` (each > 1) into a pairwise coprime multiplicative basis:
/// every input is a product of powers of the returned elements. Sorted.
std::vector<Integer> coprime_base(std::span<const Integer> values);

/// Multiplicity of `base` (> 1) in n != 0.
long multiplicity(const Integer& n, const Integer& base);

}  // namespace gcdlab
