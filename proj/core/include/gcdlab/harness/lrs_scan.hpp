#pragma once

// Grid scans of the generalized gcd of two recurrence sequences against the
// threshold eps * max(m, n), with clustering of flagged pairs into log-tubes
// around rational lines.

#include "gcdlab/interval.hpp"
#include "gcdlab/logreal.hpp"
#include "gcdlab/lrs.hpp"
#include "gcdlab/places.hpp"

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace gcdlab::harness {

enum class ScanMode { diagonal, full_grid };
enum class RowFilter { all, nonzero, flagged };

struct ScanConfig {
    PowerSum F;
    PowerSum G;
    Rational epsilon = Rational(1, 2);
    long N = 100;
    PlaceSet extra_S;
    ScanMode mode = ScanMode::full_grid;
    RowFilter rows = RowFilter::flagged;
    long slope_bound = 8;   ///< coprime directions (a, b) with 0 <= a, b <= slope_bound
    long kappa_max = 16;
    std::size_t min_cluster_size = 2;
    long precision = kDefaultPrecision;
    unsigned jobs = 1;
};

struct ScanRow {
    long m = 0;
    long n = 0;
    LogReal lhs;          ///< exact only for emitted rows
    Rational threshold;   ///< eps * max(m, n)
    bool flagged = false;
    bool skipped = false;  ///< F(m) = 0 or G(n) = 0
    std::optional<std::size_t> cluster;
    std::string notes;
};

/// Pairs near the line b m = a n: |b m - a n| <= kappa log max(m, n).
struct Cluster {
    std::size_t id = 0;
    long a = 0;
    long b = 0;
    long kappa = 0;
    std::vector<std::pair<long, long>> members;
};

struct ScanReport {
    PlaceSet S0;
    PlaceSet S;  ///< S0 together with extra_S
    std::vector<ScanRow> rows;
    std::vector<std::pair<long, long>> flagged;
    std::vector<Cluster> clusters;
    std::vector<std::pair<long, long>> sporadic;
    std::vector<long> zeros_F;  ///< indices m with F(m) = 0, skipped
    std::vector<long> zeros_G;
    std::size_t pairs_scanned = 0;
    /// Largest max(m, n) over flagged pairs.
    std::optional<long> max_flagged_index;
};

/// Throws DomainError on an invalid configuration.
ScanReport run_lrs_scan(const ScanConfig& cfg);

/// Exact test of |b m - a n| <= kappa log max(m, n).
bool tube_contains(long a, long b, long kappa, long m, long n);
/// Smallest kappa >= 0 with tube_contains, or nullopt when none exists (max(m, n) = 1 off the line).
std::optional<long> tube_kappa(long a, long b, long m, long n);

/// Greedy cover of flagged pairs by tubes: each round takes the direction
/// whose tube (kappa <= kappa_max) covers the most unassigned pairs, ties
/// going to smaller kappa, then to smaller a + b. Stops when the best cover is
/// below min_cluster_size; the rest are sporadic.
void cluster_pairs(const std::vector<std::pair<long, long>>& flagged, long slope_bound, long kappa_max,
                   std::size_t min_cluster_size, std::vector<Cluster>& clusters,
                   std::vector<std::pair<long, long>>& sporadic);

/// Columns m,n,lhs_logreal,lhs_decimal,threshold_decimal,flagged,cluster_id,notes.
void write_scan_csv(std::ostream& out, const ScanReport& report, long precision = kDefaultPrecision);
/// Human-readable summary: S, counts, clusters, sporadic pairs, zeros.
void write_scan_summary(std::ostream& out, const ScanReport& report);

}  // namespace gcdlab::harness
