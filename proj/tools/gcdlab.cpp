// gcdlab command-line runner. CSV goes to --out (default stdout); the
// human-readable summary goes to stdout, or to stderr when the CSV does.
//
// Exit codes: 0 success, 1 verification failure, 2 precondition failure,
// 3 enumeration budget exhausted.

#include "gcdlab/harness/config.hpp"
#include "gcdlab/harness/hilbert_sweep.hpp"
#include "gcdlab/harness/lrs_scan.hpp"
#include "gcdlab/harness/paper_examples.hpp"
#include "gcdlab/harness/poly_gcd.hpp"
#include "gcdlab/harness/unit_equation.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace gcdlab;
using namespace gcdlab::harness;

constexpr int kExitVerification = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitTruncated = 3;

struct Common {
    std::string config;
    std::string out = "-";
    long prec = kDefaultPrecision;
    std::optional<std::uint64_t> seed;
    unsigned jobs = 1;
};

std::string read_config(const Common& c) {
    if (c.config.empty()) return {};
    std::ifstream in(c.config);
    if (!in) throw DomainError("cannot read config file " + c.config);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Runs `body` with the CSV stream and the summary stream.
int with_output(const Common& c, const std::function<int(std::ostream&, std::ostream&)>& body) {
    if (c.out == "-") return body(std::cout, std::cerr);
    std::ofstream file(c.out);
    if (!file) throw DomainError("cannot write " + c.out);
    const int code = body(file, std::cout);
    file.close();
    if (!file) throw std::runtime_error("write to " + c.out + " failed");
    return code;
}

void add_common(CLI::App* sub, Common& c, bool seeded) {
    // Accepted everywhere; only sampled subcommands consume it.
    sub->add_option("--config", c.config, "JSON configuration file")->check(CLI::ExistingFile);
    sub->add_option("--out", c.out, "CSV output path, or - for stdout");
    sub->add_option("--prec", c.prec, "starting interval precision in bits")->check(CLI::Range(16L, 1L << 20));
    sub->add_option("--seed", c.seed, seeded ? "random seed" : "random seed (unused: deterministic)");
    sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::Range(1u, 256u));
}

PowerSum two_pow() { return PowerSum::geometric(2); }
PowerSum one() { return PowerSum::constant(1); }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact experiments on greatest common divisors of polynomial values and recurrence terms"};
    app.require_subcommand(1);
    Common common;

    // lrs-scan
    auto* scan = app.add_subcommand("lrs-scan", "grid scan of log gcd(F(m), G(n)) against eps*max(m,n)");
    add_common(scan, common, false);
    std::string scan_rows, scan_mode;
    scan->add_option("--rows", scan_rows, "rows to emit")->check(CLI::IsMember({"all", "nonzero", "flagged"}));
    scan->add_option("--mode", scan_mode, "grid shape")->check(CLI::IsMember({"diagonal", "full_grid", "full-grid"}));

    // poly-gcd
    auto* poly = app.add_subcommand("poly-gcd", "sampled audit of the polynomial gcd bounds");
    add_common(poly, common, true);

    // example-pk
    auto* pk = app.add_subcommand("example-pk", "the (p^k, p^k + k) family for F = n p^n + 1, G = p^n + 1");
    add_common(pk, common, false);
    std::optional<long> pk_kmax;
    pk->add_option("--kmax", pk_kmax, "largest k");

    // sharpness
    auto* sharp = app.add_subcommand("sharpness", "points P = (p^m, p^n (p^m + 1)) in the delta window");
    add_common(sharp, common, false);
    std::optional<long> sharp_trials;
    sharp->add_option("--trials", sharp_trials, "number of m values");

    // rec1-scan
    auto* rec1 = app.add_subcommand("rec1-scan", "-log|F(n)|_v against eps*n at one place");
    add_common(rec1, common, false);
    std::optional<std::string> rec1_place;
    rec1->add_option("--place", rec1_place, "inf or a prime");

    // unit-eq
    auto* unit = app.add_subcommand("unit-eq", "S-unit solutions of x_0 + ... + x_n = 1");
    add_common(unit, common, false);

    // hilbert-verify
    auto* hilbert = app.add_subcommand("hilbert-verify", "quotient dimension and order-sum oracle sweep");
    add_common(hilbert, common, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitPrecondition;
    }

    try {
        const std::string text = read_config(common);
        const long prec = common.prec;

        if (scan->parsed()) {
            ScanConfig base;
            base.F = PowerSum::index() * two_pow() + one();
            base.G = two_pow() + one();
            base.epsilon = Rational(3, 5);
            base.N = 70;
            ScanConfig cfg = load_scan_config(text, base);
            if (!scan_rows.empty()) {
                cfg.rows = scan_rows == "all" ? RowFilter::all
                                              : (scan_rows == "nonzero" ? RowFilter::nonzero : RowFilter::flagged);
            }
            if (!scan_mode.empty()) cfg.mode = scan_mode == "diagonal" ? ScanMode::diagonal : ScanMode::full_grid;
            cfg.precision = prec;
            cfg.jobs = common.jobs;
            const ScanReport r = run_lrs_scan(cfg);
            return with_output(common, [&](std::ostream& csv, std::ostream& summary) {
                write_scan_csv(csv, r, prec);
                summary << "F = " << cfg.F.to_string() << ", G = " << cfg.G.to_string() << '\n';
                write_scan_summary(summary, r);
                return 0;
            });
        }
        if (poly->parsed()) {
            SampleConfig base;
            base.f = MultiPoly::parse("x1 + 1", 2);
            base.g = MultiPoly::parse("x2", 2);
            base.S = PlaceSet::with_archimedean({2});
            base.delta = Rational(1, 25);
            SampleConfig cfg = load_sample_config(text, base);
            if (common.seed) cfg.seed = *common.seed;
            cfg.precision = prec;
            cfg.jobs = common.jobs;
            const SampleReport r = run_poly_gcd_experiment(cfg);
            return with_output(common, [&](std::ostream& csv, std::ostream& summary) {
                write_sample_csv(csv, r, prec);
                summary << "f = " << cfg.f.to_string() << ", g = " << cfg.g.to_string()
                        << ", S = " << cfg.S.to_string() << ", delta = " << to_string(cfg.delta) << '\n';
                write_sample_summary(summary, r);
                return 0;
            });
        }
        if (pk->parsed()) {
            PkConfig cfg = load_pk_config(text, PkConfig{});
            if (pk_kmax) cfg.kmax = *pk_kmax;
            const PkReport r = run_example_pk(cfg.p, cfg.epsilon, cfg.kmax);
            return with_output(common, [&](std::ostream& csv, std::ostream& summary) {
                write_pk_csv(csv, r, prec);
                write_pk_summary(summary, r);
                return r.all_equal ? 0 : kExitVerification;
            });
        }
        if (sharp->parsed()) {
            SharpnessConfig cfg = load_sharpness_config(text, SharpnessConfig{});
            if (sharp_trials) cfg.trials = *sharp_trials;
            const SharpnessReport r = run_sharpness(cfg.p, cfg.delta, cfg.trials, cfg.m_start);
            return with_output(common, [&](std::ostream& csv, std::ostream& summary) {
                write_sharpness_csv(csv, r, prec);
                write_sharpness_summary(summary, r);
                return r.all_hold ? 0 : kExitVerification;
            });
        }
        if (rec1->parsed()) {
            Rec1Config base;
            base.F = two_pow() - PowerSum::geometric(3);
            base.v = Place::finite(5);
            base.N = 500;
            Rec1Config cfg = load_rec1_config(text, base);
            if (rec1_place) cfg.v = Place::parse(*rec1_place);
            const Rec1Report r = run_rec1_scan(cfg.F, cfg.v, cfg.epsilon, cfg.N, prec);
            return with_output(common, [&](std::ostream& csv, std::ostream& summary) {
                write_rec1_csv(csv, r);
                summary << "F = " << cfg.F.to_string() << '\n';
                write_rec1_summary(summary, r);
                return 0;
            });
        }
        if (unit->parsed()) {
            const UnitEqConfig cfg = load_unit_eq_config(text, UnitEqConfig{});
            const UnitEqReport r = solve_unit_equation(cfg);
            return with_output(common, [&](std::ostream& csv, std::ostream& summary) {
                write_unit_eq_csv(csv, r);
                write_unit_eq_summary(summary, r);
                return r.truncated ? kExitTruncated : 0;
            });
        }
        if (hilbert->parsed()) {
            HilbertSweepConfig cfg = load_hilbert_config(text, HilbertSweepConfig{});
            if (common.seed) cfg.seed = *common.seed;
            cfg.jobs = common.jobs;
            const HilbertSweepReport r = run_hilbert_sweep(cfg);
            return with_output(common, [&](std::ostream& csv, std::ostream& summary) {
                write_hilbert_csv(csv, r);
                write_hilbert_summary(summary, r);
                return r.failures == 0 ? 0 : kExitVerification;
            });
        }
    } catch (const DomainError& e) {
        std::cerr << "gcdlab: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "gcdlab: internal error: " << e.what() << '\n';
        return kExitVerification;
    }
    return 0;
}
