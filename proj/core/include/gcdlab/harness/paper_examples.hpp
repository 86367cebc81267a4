#pragma once

// Worked examples: the (p^k, p^k + k) family, the sharpness construction for
// the linear dependence on delta, and single-place scans of -log|F(n)|_v.

#include "gcdlab/interval.hpp"
#include "gcdlab/logreal.hpp"
#include "gcdlab/lrs.hpp"
#include "gcdlab/places.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace gcdlab::harness {

struct PkRow {
    long k = 0;
    Integer m;  ///< p^k
    Integer n;  ///< p^k + k
    bool values_equal = false;  ///< m p^m + 1 == p^n + 1
    LogReal lhs;                ///< log gcd(F(m), G(n))
    Rational threshold;         ///< eps * n
    bool flagged = false;
    long kappa = 0;             ///< smallest tube width around m = n
};

struct PkReport {
    Integer p;
    Rational epsilon;
    std::vector<PkRow> rows;
    long max_kappa = 0;
    /// Most rows on one line; small values mean no single line carries the family.
    std::size_t max_collinear = 0;
    bool all_equal = true;
    bool all_flagged = true;
};

/// F(m) = m p^m + 1, G(n) = p^n + 1 at (m, n) = (p^k, p^k + k), k = 1..kmax.
/// Throws DomainError unless p is prime, 0 < eps < log p, 1 <= kmax <= 20.
PkReport run_example_pk(const Integer& p, const Rational& epsilon, long kmax);

struct SharpnessRow {
    long m = 0;
    long n = 0;
    LogReal h;           ///< h(P) for P = (p^m, p^n (p^m + 1))
    LogReal h_sbar;      ///< non-S height with S = {inf, p}
    LogReal lhs;         ///< log gcd(f(P), g(P)), f = x1 + 1, g = x2
    bool bound_holds = false;  ///< lhs >= delta h / 2
    std::string ratio;   ///< lhs / (delta h), decimal
};

struct SharpnessReport {
    Integer p;
    Rational delta;
    std::vector<SharpnessRow> rows;
    std::vector<long> unsatisfiable_m;  ///< m without any n in the window
    bool all_hold = true;
};

/// Exact window test delta h(P) / 2 <= h_Sbar(P) <= delta h(P).
bool sharpness_window(const Integer& p, const Rational& delta, long m, long n);
/// Smallest n >= 1 in the window for this m, if any.
std::optional<long> sharpness_smallest_n(const Integer& p, const Rational& delta, long m);

/// One trial per m = m_start .. m_start + trials - 1.
/// Throws DomainError unless p is prime, 0 < delta < 1, trials >= 1, m_start >= 1.
SharpnessReport run_sharpness(const Integer& p, const Rational& delta, long trials, long m_start = 1);

struct Rec1Row {
    long n = 0;
    bool zero = false;          ///< F(n) = 0, skipped
    std::string lhs_decimal;    ///< -log|F(n)|_v
    std::optional<LogReal> lhs; ///< exact value, kept for violators and finite places
    bool violator = false;      ///< -log|F(n)|_v >= eps n
};

struct Rec1Report {
    Place v = Place::archimedean();
    Rational epsilon;
    std::vector<Rec1Row> rows;
    std::vector<long> violators;
    std::optional<long> max_violator;
};

/// n = 1..N. Throws DomainError when F is degenerate or every root has |alpha|_v < 1.
Rec1Report run_rec1_scan(const PowerSum& F, const Place& v, const Rational& epsilon, long N,
                         long precision = kDefaultPrecision);

void write_pk_csv(std::ostream& out, const PkReport& report, long precision = kDefaultPrecision);
void write_pk_summary(std::ostream& out, const PkReport& report);
void write_sharpness_csv(std::ostream& out, const SharpnessReport& report, long precision = kDefaultPrecision);
void write_sharpness_summary(std::ostream& out, const SharpnessReport& report);
void write_rec1_csv(std::ostream& out, const Rec1Report& report);
void write_rec1_summary(std::ostream& out, const Rec1Report& report);

}  // namespace gcdlab::harness
