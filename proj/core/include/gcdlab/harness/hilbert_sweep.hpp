#pragma once

// Oracle sweep over random coprime pairs of forms: the quotient dimension
// formula against brute-force rank, the order-sum bounds on quotient bases,
// and the N' estimates on the matching affine truncated ideals.

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace gcdlab::harness {

struct HilbertSweepConfig {
    long max_n = 3;       ///< projective dimensions 1..max_n
    long max_degree = 3;  ///< d1, d2 in 1..max_degree
    long extra_l = 3;     ///< l in 0..d1+d2+extra_l
    std::size_t pairs_per_cell = 5;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
};

struct HilbertCell {
    long n = 0;
    long d1 = 0;
    long d2 = 0;
    long l = 0;
    std::size_t pair = 0;
    std::string F1;
    std::string F2;
    std::string formula;     ///< dim_quotient_formula
    std::string brute;       ///< rank computation
    bool dim_match = false;
    bool ord_ok = false;     ///< ord_sum_check for every variable
    std::string nprime_bound_ok = "n/a";  ///< "true", "false" or "n/a"
    std::string ratio_ok = "n/a";
    std::string affine_match = "n/a";     ///< affine N' equals the homogeneous quotient dimension
};

struct HilbertSweepReport {
    std::vector<HilbertCell> cells;
    std::size_t failures = 0;
};

bool cell_ok(const HilbertCell& c);

HilbertSweepReport run_hilbert_sweep(const HilbertSweepConfig& cfg);

void write_hilbert_csv(std::ostream& out, const HilbertSweepReport& report);
void write_hilbert_summary(std::ostream& out, const HilbertSweepReport& report);

}  // namespace gcdlab::harness
