#pragma once

// Desk-scale enumeration of x_0 + ... + x_n = 1 over a box of S-units.

#include "gcdlab/places.hpp"
#include "gcdlab/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <vector>

namespace gcdlab::harness {

struct UnitEqConfig {
    PlaceSet S = PlaceSet::with_archimedean({2, 3});
    long n = 1;               ///< number of summands is n + 1
    long exponent_bound = 1;  ///< |e_p| <= bound for every prime of S
    std::optional<Rational> delta;
    /// Extra candidate values (perturbed inputs); with delta they enter the
    /// pool only when they are almost (S, delta)-units.
    std::vector<Rational> extra_values;
    /// Enumerated prefixes (x_0, ..., x_{n-1}) before giving up.
    std::size_t budget = 10'000'000;
};

struct UnitEqSolution {
    std::vector<Rational> x;
    /// Per coordinate, when delta is given: almost (S, delta)-unit.
    std::vector<bool> almost_unit;
};

struct UnitEqReport {
    std::size_t pool_size = 0;
    std::vector<UnitEqSolution> solutions;   ///< no vanishing proper subsum, sorted
    std::vector<UnitEqSolution> degenerate;  ///< some proper subsum vanishes, sorted
    /// Occurrences of each value among the coordinates of all solutions.
    std::map<Rational, std::size_t> frequency;
    /// Greedy set of values meeting every solution in at least one coordinate.
    std::vector<Rational> hitting_set;
    /// delta < 1 / ((n + 1)(n + 2)), the range of the finiteness statement.
    std::optional<bool> delta_in_range;
    bool truncated = false;
};

/// The candidate pool: +-prod p^e over the primes of S with |e| <= bound, sorted.
std::vector<Rational> s_unit_pool(const PlaceSet& S, long exponent_bound);

/// True when some nonempty proper subset of the coordinates sums to zero.
bool has_vanishing_subsum(const std::vector<Rational>& x);

/// Throws DomainError unless n >= 1, exponent_bound >= 1 and S contains the archimedean place.
UnitEqReport solve_unit_equation(const UnitEqConfig& cfg);

/// Columns kind,x,almost_unit; kind is "solution" or "degenerate".
void write_unit_eq_csv(std::ostream& out, const UnitEqReport& report);
void write_unit_eq_summary(std::ostream& out, const UnitEqReport& report);

}  // namespace gcdlab::harness
