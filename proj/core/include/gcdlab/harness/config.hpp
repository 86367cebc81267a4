#pragma once

// JSON configuration for the harness subcommands. Every field is optional and
// falls back to the struct default; unknown keys are rejected.
//
//   Rational   "3/5" or 3
//   PowerSum   {"terms": [{"coeff": ["1", "2"], "root": "3/2"}]}   coeff is little-endian in n
//              or {"relation": [c1, ..., ck], "initial": [F(0), ..., F(k-1)]}
//              with F(n+k) = c1 F(n+k-1) + ... + ck F(n)
//   PlaceSet   ["inf", 2, "3"]
//   Place      "inf" or 5

#include "gcdlab/harness/hilbert_sweep.hpp"
#include "gcdlab/harness/lrs_scan.hpp"
#include "gcdlab/harness/poly_gcd.hpp"
#include "gcdlab/harness/unit_equation.hpp"

#include <string>
#include <string_view>

namespace gcdlab::harness {

/// Malformed or out-of-schema configuration.
class ConfigError : public DomainError {
public:
    using DomainError::DomainError;
};

struct PkConfig {
    Integer p = 2;
    Rational epsilon = Rational(3, 5);
    long kmax = 10;
};

struct SharpnessConfig {
    Integer p = 2;
    Rational delta = Rational(1, 5);
    long trials = 10;
    long m_start = 1;
};

struct Rec1Config {
    PowerSum F;
    Place v = Place::archimedean();
    Rational epsilon = Rational(1, 10);
    long N = 200;
};

PowerSum parse_power_sum_json(std::string_view text);

/// Each loader merges the JSON object in `text` over `base`.
ScanConfig load_scan_config(std::string_view text, ScanConfig base);
SampleConfig load_sample_config(std::string_view text, SampleConfig base);
PkConfig load_pk_config(std::string_view text, PkConfig base);
SharpnessConfig load_sharpness_config(std::string_view text, SharpnessConfig base);
Rec1Config load_rec1_config(std::string_view text, Rec1Config base);
UnitEqConfig load_unit_eq_config(std::string_view text, UnitEqConfig base);
HilbertSweepConfig load_hilbert_config(std::string_view text, HilbertSweepConfig base);

}  // namespace gcdlab::harness
