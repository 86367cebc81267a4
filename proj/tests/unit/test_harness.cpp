#include "gcdlab/harness/config.hpp"
#include "gcdlab/harness/csv.hpp"
#include "gcdlab/harness/hilbert_sweep.hpp"
#include "gcdlab/harness/lrs_scan.hpp"
#include "gcdlab/harness/paper_examples.hpp"
#include "gcdlab/harness/poly_gcd.hpp"
#include "gcdlab/harness/unit_equation.hpp"
#include "gcdlab/gengcd.hpp"
#include "gcdlab/heights.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

using namespace gcdlab;
using namespace gcdlab::harness;

namespace {

PowerSum g(const Rational& r, const Rational& c = 1) { return PowerSum::geometric(r, c); }

bool has_pair(const std::vector<std::pair<long, long>>& v, long m, long n) {
    return std::find(v.begin(), v.end(), std::make_pair(m, n)) != v.end();
}

ScanConfig pk_scan(long N) {
    ScanConfig cfg;
    cfg.F = PowerSum::index() * g(2) + g(1);
    cfg.G = g(2) + g(1);
    cfg.epsilon = Rational(3, 5);
    cfg.N = N;
    return cfg;
}

}  // namespace

TEST(Csv, QuotesFields) {
    std::ostringstream out;
    CsvWriter csv(out);
    csv.row({"a", "b,c", "d\"e"});
    EXPECT_EQ(out.str(), "a,\"b,c\",\"d\"\"e\"\n");
}

TEST(Tube, ContainsAndKappa) {
    EXPECT_TRUE(tube_contains(1, 1, 0, 5, 5));
    EXPECT_FALSE(tube_contains(1, 1, 0, 5, 6));
    EXPECT_TRUE(tube_contains(1, 1, 1, 4, 5));   // 1 <= log 5
    EXPECT_FALSE(tube_contains(1, 1, 1, 2, 4));  // 2 > log 4
    EXPECT_EQ(tube_kappa(1, 1, 2, 4), 2);
    EXPECT_EQ(tube_kappa(1, 2, 3, 6), 0);
    EXPECT_FALSE(tube_kappa(1, 1, 1, 0).has_value());
}

TEST(Tube, ClusterPairs) {
    const std::vector<std::pair<long, long>> flagged{{2, 3}, {4, 6}, {8, 11}, {16, 20}, {10, 30}, {20, 60}, {7, 1}};
    std::vector<Cluster> clusters;
    std::vector<std::pair<long, long>> sporadic;
    cluster_pairs(flagged, 8, 2, 2, clusters, sporadic);
    ASSERT_GE(clusters.size(), 2u);
    EXPECT_EQ(clusters[0].a, 1);
    EXPECT_EQ(clusters[0].b, 1);
    EXPECT_EQ(clusters[0].members.size(), 4u);
    EXPECT_EQ(clusters[1].a, 1);
    EXPECT_EQ(clusters[1].b, 3);
    EXPECT_TRUE(has_pair(sporadic, 7, 1));

    // A wide tube swallows everything.
    clusters.clear();
    sporadic.clear();
    cluster_pairs(flagged, 8, 16, 2, clusters, sporadic);
    ASSERT_EQ(clusters.size(), 1u);
    EXPECT_EQ(clusters[0].members.size(), flagged.size());
}

TEST(Scan, PkFamilySmallGrid) {
    const ScanReport r = run_lrs_scan(pk_scan(70));
    EXPECT_TRUE(has_pair(r.flagged, 4, 6));
    EXPECT_TRUE(has_pair(r.flagged, 64, 70));
    EXPECT_EQ(r.S0, PlaceSet());
    ASSERT_FALSE(r.clusters.empty());
    EXPECT_EQ(r.clusters[0].a, 1);
    EXPECT_EQ(r.clusters[0].b, 1);
    EXPECT_EQ(r.pairs_scanned, 70u * 70u);
    for (const auto& row : r.rows) {
        EXPECT_TRUE(row.flagged);
        EXPECT_EQ(compare(row.lhs, row.threshold), Sign::positive);
    }
}

TEST(Scan, DeterministicAcrossJobs) {
    ScanConfig a = pk_scan(60);
    a.rows = RowFilter::nonzero;
    ScanConfig b = a;
    b.jobs = 3;
    std::ostringstream oa, ob;
    write_scan_csv(oa, run_lrs_scan(a));
    write_scan_csv(ob, run_lrs_scan(b));
    EXPECT_EQ(oa.str(), ob.str());
    EXPECT_EQ(oa.str().substr(0, oa.str().find('\n')),
              "m,n,lhs_logreal,lhs_decimal,threshold_decimal,flagged,cluster_id,notes");
}

TEST(Scan, RowInvariants) {
    ScanConfig cfg = pk_scan(40);
    cfg.rows = RowFilter::nonzero;
    cfg.extra_S = PlaceSet(false, {3});
    const ScanReport r = run_lrs_scan(cfg);
    for (const auto& row : r.rows) {
        const Rational Fm = cfg.F.eval(row.m), Gn = cfg.G.eval(row.n);
        // Partition of the full gcd into places outside and inside S.
        EXPECT_EQ(log_gcd(Fm, Gn).value, row.lhs + log_gcd_within(Fm, Gn, r.S).value);
        // Upper bound by the smaller height.
        EXPECT_NE(compare(row.lhs, height(Fm)), Sign::positive);
        EXPECT_NE(compare(row.lhs, height(Gn)), Sign::positive);
    }
    for (const auto& c : r.clusters) {
        for (const auto& [m, n] : c.members) EXPECT_TRUE(tube_contains(c.a, c.b, c.kappa, m, n));
    }
}

TEST(Scan, FlagMonotoneInEpsilon) {
    ScanConfig hi = pk_scan(50);
    ScanConfig lo = hi;
    lo.epsilon = Rational(1, 5);
    const ScanReport a = run_lrs_scan(hi), b = run_lrs_scan(lo);
    EXPECT_GT(b.flagged.size(), a.flagged.size());
    for (const auto& [m, n] : a.flagged) EXPECT_TRUE(has_pair(b.flagged, m, n));
}

TEST(Scan, IdenticalSequencesDiagonal) {
    ScanConfig cfg;
    cfg.F = g(2) - g(1);
    cfg.G = cfg.F;
    cfg.mode = ScanMode::diagonal;
    cfg.N = 40;
    const ScanReport r = run_lrs_scan(cfg);
    // F(1) = 1, so n = 1 has gcd 1 and is the only unflagged index.
    EXPECT_EQ(r.flagged.size(), 39u);
    EXPECT_FALSE(has_pair(r.flagged, 1, 1));
    ASSERT_EQ(r.clusters.size(), 1u);
    EXPECT_EQ(r.clusters[0].kappa, 0);
}

TEST(Scan, ZerosAreSkipped) {
    ScanConfig cfg;
    cfg.F = g(2) - g(1, 4);
    cfg.G = g(3) + g(1);
    cfg.N = 6;
    cfg.rows = RowFilter::all;
    const ScanReport r = run_lrs_scan(cfg);
    EXPECT_EQ(r.zeros_F, (std::vector<long>{2}));
    std::size_t skipped = 0;
    for (const auto& row : r.rows) skipped += row.skipped ? 1 : 0;
    EXPECT_EQ(skipped, 6u);
}

TEST(Scan, RejectsBadConfig) {
    ScanConfig cfg = pk_scan(10);
    cfg.epsilon = 0;
    EXPECT_THROW(run_lrs_scan(cfg), DomainError);
    cfg = pk_scan(0);
    EXPECT_THROW(run_lrs_scan(cfg), DomainError);
}

TEST(PolyGcd, PureUnitsSatisfyMainBound) {
    SampleConfig cfg;
    cfg.f = MultiPoly::parse("x1 + 1", 2);
    cfg.g = MultiPoly::parse("x2", 2);
    cfg.delta = Rational(1, 25);
    cfg.count = 40;
    const SampleReport r = run_poly_gcd_experiment(cfg);
    EXPECT_EQ(r.C_main, 2 * (4 * 1 + 2 * 1));
    EXPECT_EQ(r.rows.size(), 40u);
    for (const auto& row : r.rows) {
        EXPECT_TRUE(row.main.applies);
        EXPECT_FALSE(row.main.violated);
        EXPECT_EQ(row.lhs_total, row.lhs_outside + row.lhs_within);
    }
}

TEST(PolyGcd, DegenerateRowsMarked) {
    SampleConfig cfg;
    cfg.f = MultiPoly::parse("x1 + 1", 2);
    cfg.g = MultiPoly::parse("x2", 2);
    cfg.points = {TorusPoint({-1, 4}), TorusPoint({2, 4})};
    const SampleReport r = run_poly_gcd_experiment(cfg);
    ASSERT_EQ(r.rows.size(), 2u);
    EXPECT_TRUE(r.rows[0].degenerate);
    EXPECT_FALSE(r.rows[0].main.applies);
    EXPECT_FALSE(r.rows[1].degenerate);
}

TEST(PolyGcd, TranslateFamilyViolates) {
    SampleConfig cfg;
    cfg.f = MultiPoly::parse("x1 - 1", 2);
    cfg.g = MultiPoly::parse("x2 - 1", 2);
    cfg.delta = Rational(1, 10000);
    for (long k = 10; k <= 20; ++k) {
        const Rational u = pow(Rational(2), k);
        cfg.points.emplace_back(std::vector<Rational>{u, u});
    }
    const SampleReport r = run_poly_gcd_experiment(cfg);
    EXPECT_EQ(r.rows.size(), 11u);
    EXPECT_EQ(r.violations, 11u);
}

TEST(PolyGcd, SeedDeterminesCsv) {
    SampleConfig cfg;
    cfg.f = MultiPoly::parse("x1^2 + x2", 2);
    cfg.g = MultiPoly::parse("x2 - 3", 2);
    cfg.perturbation_bound = 3;
    cfg.count = 25;
    cfg.seed = 9;
    SampleConfig par = cfg;
    par.jobs = 4;
    std::ostringstream a, b, c;
    write_sample_csv(a, run_poly_gcd_experiment(cfg));
    write_sample_csv(b, run_poly_gcd_experiment(par));
    cfg.seed = 10;
    write_sample_csv(c, run_poly_gcd_experiment(cfg));
    EXPECT_EQ(a.str(), b.str());
    EXPECT_NE(a.str(), c.str());
}

TEST(PolyGcd, RejectsNonCoprime) {
    SampleConfig cfg;
    cfg.f = MultiPoly::parse("x1^2 - x2^2", 2);
    cfg.g = MultiPoly::parse("x1 - x2", 2);
    EXPECT_THROW(run_poly_gcd_experiment(cfg), DomainError);
}

TEST(ExamplePk, Values) {
    const PkReport r = run_example_pk(2, Rational(3, 5), 10);
    EXPECT_TRUE(r.all_equal);
    EXPECT_TRUE(r.all_flagged);
    EXPECT_EQ(r.rows[1].m, 4);
    EXPECT_EQ(r.rows[1].n, 6);
    EXPECT_EQ(r.rows[1].lhs, LogReal::log_of(Integer(65)));
    EXPECT_EQ(r.rows[4].m, 32);
    EXPECT_EQ(r.rows[4].n, 37);
    EXPECT_EQ(r.rows[4].lhs, LogReal::log_of(Integer(pow(Integer(2), 37) + 1)));
    const PkReport r3 = run_example_pk(3, 1, 1);
    EXPECT_EQ(r3.rows[0].lhs, LogReal::log_of(Integer(82)));
    EXPECT_TRUE(r3.rows[0].flagged);
    EXPECT_THROW(run_example_pk(4, Rational(1, 2), 3), DomainError);
    EXPECT_THROW(run_example_pk(2, 1, 3), DomainError);  // eps >= log 2
}

TEST(Sharpness, Window) {
    EXPECT_TRUE(sharpness_window(2, Rational(1, 5), 10, 41));
    EXPECT_FALSE(sharpness_window(2, Rational(1, 5), 10, 30));
    EXPECT_EQ(sharpness_smallest_n(2, Rational(1, 5), 10), 41);
    const SharpnessReport r = run_sharpness(2, Rational(1, 5), 10);
    EXPECT_TRUE(r.all_hold);
    for (const auto& row : r.rows) {
        EXPECT_TRUE(sharpness_window(2, Rational(1, 5), row.m, row.n));
        EXPECT_EQ(row.lhs, row.h_sbar);
        const double ratio = std::stod(row.ratio);
        EXPECT_GE(ratio, 0.5 - 1e-9);
        EXPECT_LE(ratio, 1.0 + 1e-9);
    }
}

TEST(Rec1, Examples) {
    const PowerSum F = g(2) - g(3);
    const Rec1Report inf = run_rec1_scan(F, Place::archimedean(), Rational(1, 10), 200);
    EXPECT_TRUE(inf.violators.empty());
    const Rec1Report r5 = run_rec1_scan(F, Place::finite(5), Rational(1, 10), 500);
    EXPECT_EQ(r5.max_violator, 30);
    EXPECT_EQ(r5.violators.front(), 2);
    EXPECT_THROW(run_rec1_scan(g(2) + g(-2), Place::archimedean(), Rational(1, 10), 10), DomainError);
}

TEST(UnitEq, SmallCases) {
    UnitEqConfig cfg;
    const UnitEqReport r = solve_unit_equation(cfg);
    EXPECT_EQ(r.pool_size, 18u);
    EXPECT_EQ(r.solutions.size(), 9u);
    EXPECT_FALSE(r.truncated);
    for (const auto& s : r.solutions) EXPECT_EQ(s.x[0] + s.x[1], 1);

    cfg.S = PlaceSet::with_archimedean({2});
    cfg.exponent_bound = 3;
    const UnitEqReport r2 = solve_unit_equation(cfg);
    std::vector<std::vector<Rational>> xs;
    for (const auto& s : r2.solutions) xs.push_back(s.x);
    EXPECT_NE(std::find(xs.begin(), xs.end(), std::vector<Rational>{2, -1}), xs.end());
    EXPECT_NE(std::find(xs.begin(), xs.end(), std::vector<Rational>{Rational(1, 2), Rational(1, 2)}), xs.end());
    EXPECT_EQ(xs.size(), 3u);
}

TEST(UnitEq, ListedSolutionsAtBoundTwo) {
    UnitEqConfig cfg;
    cfg.exponent_bound = 2;
    const UnitEqReport r = solve_unit_equation(cfg);
    std::vector<std::vector<Rational>> xs;
    for (const auto& s : r.solutions) xs.push_back(s.x);
    const std::vector<std::pair<Rational, Rational>> listed{
        {3, -2}, {-2, 3}, {2, -1}, {-1, 2}, {Rational(1, 3), Rational(2, 3)}, {Rational(2, 3), Rational(1, 3)},
        {Rational(3, 4), Rational(1, 4)}, {Rational(1, 4), Rational(3, 4)}, {4, -3}, {-3, 4},
        {Rational(3, 2), Rational(-1, 2)}, {Rational(-1, 2), Rational(3, 2)}, {Rational(4, 3), Rational(-1, 3)},
        {Rational(-1, 3), Rational(4, 3)}};
    for (const auto& [x, y] : listed) {
        EXPECT_NE(std::find(xs.begin(), xs.end(), std::vector<Rational>{x, y}), xs.end()) << x << " + " << y;
    }
}

TEST(UnitEq, DegenerateSeparated) {
    EXPECT_TRUE(has_vanishing_subsum({1, 2, -2}));
    EXPECT_FALSE(has_vanishing_subsum({2, -1}));
    UnitEqConfig cfg;
    cfg.S = PlaceSet::with_archimedean({2});
    cfg.n = 2;
    const UnitEqReport r = solve_unit_equation(cfg);
    bool found = false;
    for (const auto& s : r.degenerate) found = found || s.x == std::vector<Rational>{1, 2, -2};
    EXPECT_TRUE(found);
    for (const auto& s : r.solutions) EXPECT_FALSE(has_vanishing_subsum(s.x));
}

TEST(UnitEq, Truncation) {
    UnitEqConfig cfg;
    cfg.n = 2;
    cfg.exponent_bound = 2;
    cfg.budget = 100;
    EXPECT_TRUE(solve_unit_equation(cfg).truncated);
}

TEST(HilbertSweep, Tiny) {
    HilbertSweepConfig cfg;
    cfg.max_n = 2;
    cfg.max_degree = 2;
    cfg.extra_l = 1;
    cfg.pairs_per_cell = 2;
    const auto r = run_hilbert_sweep(cfg);
    EXPECT_EQ(r.failures, 0u);
    EXPECT_FALSE(r.cells.empty());
}

TEST(Config, LoadsAndRejects) {
    const ScanConfig s = load_scan_config(
        R"({"F": {"terms": [{"coeff": ["0", "1"], "root": "2"}, {"coeff": [1], "root": 1}]},
            "G": {"relation": [3, -2], "initial": [2, 3]}, "epsilon": "1/2", "N": 5, "mode": "diagonal"})",
        ScanConfig{});
    EXPECT_EQ(s.F, PowerSum::index() * g(2) + g(1));
    EXPECT_EQ(s.G, g(2) + g(1));
    EXPECT_EQ(s.mode, ScanMode::diagonal);
    EXPECT_EQ(s.N, 5);
    EXPECT_THROW(load_scan_config(R"({"bogus": 1})", ScanConfig{}), ConfigError);
    EXPECT_THROW(load_scan_config(R"({"mode": 3})", ScanConfig{}), ConfigError);
    EXPECT_THROW(load_scan_config("[1]", ScanConfig{}), ConfigError);
    EXPECT_THROW(load_scan_config("{", ScanConfig{}), ConfigError);

    const SampleConfig p = load_sample_config(
        R"({"nvars": 2, "f": "x1 + 1", "g": "x2", "S": ["inf", 2, "3"], "points": [["2", "3/4"]]})", SampleConfig{});
    EXPECT_EQ(p.S, PlaceSet::with_archimedean({2, 3}));
    ASSERT_EQ(p.points.size(), 1u);
    EXPECT_EQ(p.points[0][1], Rational(3, 4));
    EXPECT_THROW(load_sample_config(R"({"points": [["0"]]})", SampleConfig{}), ConfigError);

    const UnitEqConfig u = load_unit_eq_config(R"({"S": ["inf", 2], "n": 2, "delta": "1/20"})", UnitEqConfig{});
    EXPECT_EQ(u.n, 2);
    EXPECT_EQ(u.delta, Rational(1, 20));
    EXPECT_THROW(load_unit_eq_config(R"({"S": [4]})", UnitEqConfig{}), ConfigError);
    EXPECT_EQ(load_rec1_config(R"({"place": 5})", Rec1Config{}).v, Place::finite(5));
    EXPECT_EQ(load_pk_config("", PkConfig{}).kmax, 10);
}
