#pragma once

// Sampling experiments for the polynomial gcd bounds on almost S-unit points.

#include "gcdlab/heights.hpp"
#include "gcdlab/interval.hpp"
#include "gcdlab/logreal.hpp"
#include "gcdlab/multipoly.hpp"
#include "gcdlab/places.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gcdlab::harness {

struct SampleConfig {
    MultiPoly f = MultiPoly(2);
    MultiPoly g = MultiPoly(2);
    PlaceSet S = PlaceSet::with_archimedean({2});
    Rational delta = Rational(1, 4);
    std::size_t count = 100;
    long generator_exponent_bound = 5;
    /// Perturbation a/b with 1 <= a, b <= bound, both free of S primes; 1 gives pure S-units.
    long perturbation_bound = 1;
    std::uint64_t seed = 1;
    /// Draws per requested sample before it is reported as a sampler failure.
    std::size_t max_attempts = 64;
    /// Used instead of the sampler when nonempty; still delta-filtered.
    std::vector<TorusPoint> points;
    long precision = kDefaultPrecision;
    unsigned jobs = 1;
};

/// A bound that applies to the configuration, compared exactly to its lhs.
struct BoundCheck {
    bool applies = false;
    bool violated = false;
    std::string rhs_decimal;
};

struct SampleRow {
    std::size_t index = 0;
    TorusPoint u{std::vector<Rational>{Rational(1)}};
    bool almost_unit = false;  ///< passed the (S, delta) filter
    bool degenerate = false;   ///< f(u) = 0 or g(u) = 0; no gcd values
    LogReal lhs_outside;
    LogReal lhs_within;
    LogReal lhs_total;
    LogReal sum_heights;       ///< sum_i h(u_i)
    BoundCheck main;           ///< lhs_outside vs C_main sqrt(delta) sum h
    BoundCheck spart;          ///< lhs_within vs 4 n d delta sum h
    BoundCheck combined;       ///< lhs_total vs C_combined sqrt(delta) sum h
    std::string notes;
};

struct SampleReport {
    std::vector<SampleRow> rows;
    Integer C_main;
    Integer C_combined;
    std::optional<Integer> C_spart;  ///< absent when f and g both vanish at the origin
    std::size_t sampler_failures = 0;
    std::size_t rejected_points = 0;  ///< explicit points failing the filter
    std::size_t violations = 0;       ///< rows with any violated bound
};

/// Throws DomainError if f, g are not coprime, have mismatched variable
/// counts, S lacks the archimedean place, or delta is outside (0, 1).
SampleReport run_poly_gcd_experiment(const SampleConfig& cfg);

/// Columns index,u,almost_unit,degenerate,lhs_outside,lhs_within,lhs_total,
/// rhs_main,rhs_spart,rhs_combined,violation_main,violation_spart,violation_combined,notes.
void write_sample_csv(std::ostream& out, const SampleReport& report, long precision = kDefaultPrecision);
void write_sample_summary(std::ostream& out, const SampleReport& report);

}  // namespace gcdlab::harness
