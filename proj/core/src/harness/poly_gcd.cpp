#include "gcdlab/harness/poly_gcd.hpp"

#include "gcdlab/gengcd.hpp"
#include "gcdlab/harness/csv.hpp"
#include "gcdlab/hilbert.hpp"
#include "gcdlab/rng.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace gcdlab::harness {

namespace {

bool free_of(long x, const PlaceSet& S) {
    for (const auto& p : S.finite_primes()) {
        if (x % p.get_si() == 0) return false;
    }
    return true;
}

Rational draw_coordinate(Rng& rng, const SampleConfig& cfg) {
    Rational x = rng.coin() ? Rational(-1) : Rational(1);
    for (const auto& p : cfg.S.finite_primes()) {
        const long e = rng.uniform(-cfg.generator_exponent_bound, cfg.generator_exponent_bound);
        x *= pow(Rational(p), e);
    }
    if (cfg.perturbation_bound > 1) {
        long a, b;
        do {
            a = rng.uniform(1, cfg.perturbation_bound);
            b = rng.uniform(1, cfg.perturbation_bound);
        } while (!free_of(a, cfg.S) || !free_of(b, cfg.S) || std::gcd(a, b) != 1);
        x *= Rational(a, b);
    }
    return x;
}

std::string interval_decimal(const Interval& v) { return v.midpoint_string(12); }

std::string point_string(const TorusPoint& u) {
    std::string s;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i) s += ';';
        s += to_string(u[i]);
    }
    return s;
}

struct Bounds {
    long n;
    Integer C_main;
    Integer C_combined;
    std::optional<Integer> C_spart;
};

void evaluate(SampleRow& row, const SampleConfig& cfg, const Bounds& B) {
    const std::vector<Rational>& pt = row.u.coords();
    const Rational fu = cfg.f.eval(pt);
    const Rational gu = cfg.g.eval(pt);
    for (const auto& x : pt) row.sum_heights += height(x);
    if (fu == 0 || gu == 0) {
        row.degenerate = true;
        row.notes = fu == 0 ? "f(u)=0" : "g(u)=0";
        return;
    }
    row.lhs_outside = log_gcd_outside(fu, gu, cfg.S).value;
    row.lhs_within = log_gcd_within(fu, gu, cfg.S).value;
    row.lhs_total = log_gcd(fu, gu).value;

    const long prec = cfg.precision;
    const Interval sqrt_delta = Interval::exact(cfg.delta, prec).sqrt();
    const Interval sum_h = row.sum_heights.enclose(prec);

    row.main.applies = true;
    row.main.rhs_decimal = interval_decimal(Interval::exact(Rational(B.C_main), prec) * sqrt_delta * sum_h);
    row.main.violated =
        compare_sqrt_scaled(row.lhs_outside, Rational(B.C_main), cfg.delta, row.sum_heights, prec) == Sign::positive;

    if (B.C_spart) {
        const LogReal rhs = row.sum_heights * (Rational(*B.C_spart) * cfg.delta);
        row.spart.applies = true;
        row.spart.rhs_decimal = rhs.to_decimal(12, prec);
        row.spart.violated = compare(row.lhs_within, rhs, prec) == Sign::positive;

        row.combined.applies = true;
        row.combined.rhs_decimal =
            interval_decimal(Interval::exact(Rational(B.C_combined), prec) * sqrt_delta * sum_h);
        row.combined.violated = compare_sqrt_scaled(row.lhs_total, Rational(B.C_combined), cfg.delta,
                                                    row.sum_heights, prec) == Sign::positive;
    }
    if (row.main.violated || row.spart.violated || row.combined.violated) row.notes = "exceptional-set candidate";
}

}  // namespace

SampleReport run_poly_gcd_experiment(const SampleConfig& cfg) {
    const std::size_t n = cfg.f.nvars();
    if (cfg.g.nvars() != n) throw DomainError("f and g must have the same variables");
    if (cfg.f.is_zero() || cfg.g.is_zero()) throw DomainError("f and g must be nonzero");
    if (!coprime(cfg.f, cfg.g)) throw DomainError("f and g must be coprime");
    if (cfg.delta <= 0 || cfg.delta >= 1) throw DomainError("delta must lie in (0, 1)");
    if (cfg.generator_exponent_bound < 0 || cfg.perturbation_bound < 1) throw DomainError("invalid sampler bounds");
    const AlmostUnitConfig filter(cfg.S, cfg.delta);

    const long df = cfg.f.total_degree(), dg = cfg.g.total_degree();
    const long d1 = std::max(df, dg), d2 = std::min(df, dg);
    const std::vector<Rational> origin(n, Rational(0));
    std::optional<long> d_spart;
    if (cfg.f.eval(origin) != 0) d_spart = df;
    if (cfg.g.eval(origin) != 0) d_spart = d_spart ? std::min(*d_spart, dg) : dg;

    SampleReport report;
    const long nl = static_cast<long>(n);
    report.C_main = 2 * (Integer(nl) * nl * d1 + Integer(nl) * d2);
    report.C_combined = 6 * Integer(d1 + d2) * nl * nl;
    if (d_spart) report.C_spart = 4 * Integer(nl) * *d_spart;
    const Bounds bounds{nl, report.C_main, report.C_combined, report.C_spart};

    if (!cfg.points.empty()) {
        for (const auto& u : cfg.points) {
            if (u.size() != n) throw DomainError("sample point has the wrong number of coordinates");
            if (!is_almost_unit(u, filter)) {
                ++report.rejected_points;
                continue;
            }
            SampleRow row;
            row.u = u;
            row.almost_unit = true;
            report.rows.push_back(std::move(row));
        }
    } else {
        Rng rng(cfg.seed);
        for (std::size_t k = 0; k < cfg.count; ++k) {
            bool found = false;
            for (std::size_t attempt = 0; attempt < cfg.max_attempts && !found; ++attempt) {
                std::vector<Rational> coords;
                for (std::size_t i = 0; i < n; ++i) coords.push_back(draw_coordinate(rng, cfg));
                TorusPoint u(std::move(coords));
                if (!is_almost_unit(u, filter)) continue;
                SampleRow row;
                row.u = std::move(u);
                row.almost_unit = true;
                report.rows.push_back(std::move(row));
                found = true;
            }
            if (!found) ++report.sampler_failures;
        }
    }
    for (std::size_t i = 0; i < report.rows.size(); ++i) report.rows[i].index = i;

    const unsigned jobs = std::max(1u, cfg.jobs);
    {
        std::vector<std::jthread> threads;
        for (unsigned j = 0; j < jobs; ++j) {
            threads.emplace_back([&, j] {
                for (std::size_t i = j; i < report.rows.size(); i += jobs) evaluate(report.rows[i], cfg, bounds);
            });
        }
    }
    for (const auto& r : report.rows) {
        if (r.main.violated || r.spart.violated || r.combined.violated) ++report.violations;
    }
    return report;
}

void write_sample_csv(std::ostream& out, const SampleReport& report, long precision) {
    CsvWriter csv(out);
    csv.row({"index", "u", "almost_unit", "degenerate", "lhs_outside", "lhs_within", "lhs_total", "rhs_main",
             "rhs_spart", "rhs_combined", "violation_main", "violation_spart", "violation_combined", "notes"});
    auto value = [&](const SampleRow& r, const LogReal& x) { return r.degenerate ? "" : x.to_decimal(12, precision); };
    auto rhs = [](const BoundCheck& b) { return b.applies ? b.rhs_decimal : "n/a"; };
    auto flag = [](const BoundCheck& b) { return b.applies ? bool_field(b.violated) : "n/a"; };
    for (const auto& r : report.rows) {
        csv.row({std::to_string(r.index), point_string(r.u), bool_field(r.almost_unit), bool_field(r.degenerate),
                 value(r, r.lhs_outside), value(r, r.lhs_within), value(r, r.lhs_total), rhs(r.main), rhs(r.spart),
                 rhs(r.combined), flag(r.main), flag(r.spart), flag(r.combined), r.notes});
    }
}

void write_sample_summary(std::ostream& out, const SampleReport& report) {
    std::size_t degenerate = 0;
    for (const auto& r : report.rows) degenerate += r.degenerate ? 1 : 0;
    out << "rows: " << report.rows.size() << ", degenerate: " << degenerate << ", violations: " << report.violations
        << '\n';
    out << "C_main = " << report.C_main << ", C_combined = " << report.C_combined << ", C_spart = "
        << (report.C_spart ? report.C_spart->get_str() : std::string("n/a")) << '\n';
    if (report.sampler_failures) out << "sampler failures: " << report.sampler_failures << '\n';
    if (report.rejected_points) out << "explicit points rejected by the filter: " << report.rejected_points << '\n';
}

}  // namespace gcdlab::harness
