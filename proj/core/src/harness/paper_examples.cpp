#include "gcdlab/harness/paper_examples.hpp"

#include "gcdlab/gengcd.hpp"
#include "gcdlab/harness/csv.hpp"
#include "gcdlab/harness/lrs_scan.hpp"
#include "gcdlab/heights.hpp"
#include "gcdlab/primes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

namespace gcdlab::harness {

namespace {

void require_prime(const Integer& p) {
    if (!is_certified_prime(p)) throw DomainError("p must be a prime");
}

Integer ipow(const Integer& p, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), e);
    return r;
}

std::size_t max_collinear(const std::vector<std::pair<Integer, Integer>>& pts) {
    if (pts.size() <= 2) return pts.size();
    std::size_t best = 2;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            std::size_t count = 2;
            const Integer dx = pts[j].first - pts[i].first, dy = pts[j].second - pts[i].second;
            for (std::size_t k = j + 1; k < pts.size(); ++k) {
                if (dx * (pts[k].second - pts[i].second) == dy * (pts[k].first - pts[i].first)) ++count;
            }
            best = std::max(best, count);
        }
    }
    return best;
}

TorusPoint sharpness_point(const Integer& p, long m, long n) {
    const Integer x = ipow(p, static_cast<unsigned long>(m));
    return TorusPoint({Rational(x), Rational(ipow(p, static_cast<unsigned long>(n)) * (x + 1))});
}

PlaceSet sharpness_S(const Integer& p) { return PlaceSet(true, {p}); }

}  // namespace

PkReport run_example_pk(const Integer& p, const Rational& epsilon, long kmax) {
    require_prime(p);
    if (epsilon <= 0 || compare(LogReal::log_of(p), epsilon) != Sign::positive) {
        throw DomainError("epsilon must satisfy 0 < epsilon < log p");
    }
    if (kmax < 1 || kmax > 20) throw DomainError("kmax must lie in 1..20");

    PkReport report;
    report.p = p;
    report.epsilon = epsilon;
    std::vector<std::pair<Integer, Integer>> pts;
    for (long k = 1; k <= kmax; ++k) {
        PkRow row;
        row.k = k;
        row.m = ipow(p, static_cast<unsigned long>(k));
        row.n = row.m + k;
        if (!row.n.fits_ulong_p() || row.n > 1'000'000) throw DomainError("index too large for exact evaluation");
        const Integer F = row.m * ipow(p, row.m.get_ui()) + 1;
        const Integer G = ipow(p, row.n.get_ui()) + 1;
        row.values_equal = F == G;
        row.lhs = log_gcd(Rational(F), Rational(G)).value;
        row.threshold = epsilon * Rational(row.n);
        row.flagged = compare(row.lhs, row.threshold) == Sign::positive;
        row.kappa = tube_kappa(1, 1, row.m.get_si(), row.n.get_si()).value_or(-1);
        report.all_equal = report.all_equal && row.values_equal;
        report.all_flagged = report.all_flagged && row.flagged;
        report.max_kappa = std::max(report.max_kappa, row.kappa);
        pts.emplace_back(row.m, row.n);
        report.rows.push_back(std::move(row));
    }
    report.max_collinear = max_collinear(pts);
    return report;
}

bool sharpness_window(const Integer& p, const Rational& delta, long m, long n) {
    if (m < 1 || n < 1) return false;
    const TorusPoint P = sharpness_point(p, m, n);
    const LogReal h = tuple_heights(P).height;
    const LogReal hs = h_sbar(P, sharpness_S(p));
    return compare(hs, h * delta) != Sign::positive && compare(hs, h * (delta / 2)) != Sign::negative;
}

std::optional<long> sharpness_smallest_n(const Integer& p, const Rational& delta, long m) {
    // h(P) = n log p + L with L = log(p^m + 1); the window is L/delta - L <= n log p <= 2L/delta - L.
    const double logp = std::log(p.get_d());
    const double L = static_cast<double>(m) * logp + std::log1p(std::pow(p.get_d(), -static_cast<double>(m)));
    const double d = delta.get_d();
    const long lo = std::max(1L, static_cast<long>(std::floor((L / d - L) / logp)) - 2);
    const long hi = static_cast<long>(std::ceil((2 * L / d - L) / logp)) + 2;
    for (long n = lo; n <= hi; ++n) {
        if (sharpness_window(p, delta, m, n)) return n;
    }
    return std::nullopt;
}

SharpnessReport run_sharpness(const Integer& p, const Rational& delta, long trials, long m_start) {
    require_prime(p);
    if (delta <= 0 || delta >= 1) throw DomainError("delta must lie in (0, 1)");
    if (trials < 1 || m_start < 1) throw DomainError("trials and m_start must be positive");
    SharpnessReport report;
    report.p = p;
    report.delta = delta;
    const PlaceSet S = sharpness_S(p);
    for (long m = m_start; m < m_start + trials; ++m) {
        const auto n = sharpness_smallest_n(p, delta, m);
        if (!n) {
            report.unsatisfiable_m.push_back(m);
            report.all_hold = false;
            continue;
        }
        SharpnessRow row;
        row.m = m;
        row.n = *n;
        const TorusPoint P = sharpness_point(p, m, *n);
        row.h = tuple_heights(P).height;
        row.h_sbar = h_sbar(P, S);
        row.lhs = log_gcd(P[0] + 1, P[1]).value;
        row.bound_holds = compare(row.lhs, row.h * (delta / 2)) != Sign::negative;
        std::ostringstream ratio;
        ratio.precision(8);
        ratio << row.lhs.to_double() / (row.h * delta).to_double();
        row.ratio = ratio.str();
        report.all_hold = report.all_hold && row.bound_holds;
        report.rows.push_back(std::move(row));
    }
    return report;
}

Rec1Report run_rec1_scan(const PowerSum& F, const Place& v, const Rational& epsilon, long N, long precision) {
    if (F.is_zero()) throw DomainError("F must be nonzero");
    if (is_degenerate(F)) throw DomainError("F is degenerate");
    if (epsilon <= 0) throw DomainError("epsilon must be positive");
    if (N < 1) throw DomainError("N must be at least 1");
    const std::vector<Rational> roots = F.roots();
    const bool some_large = std::any_of(roots.begin(), roots.end(), [&](const Rational& a) {
        return log_abs(a, v).sign() != Sign::negative;
    });
    if (!some_large) throw DomainError("every root is small at " + v.to_string());

    Rec1Report report;
    report.v = v;
    report.epsilon = epsilon;
    for (long n = 1; n <= N; ++n) {
        Rec1Row row;
        row.n = n;
        const Rational value = F.eval(n);
        if (value == 0) {
            row.zero = true;
            report.rows.push_back(std::move(row));
            continue;
        }
        const Rational thr = epsilon * n;
        if (v.is_archimedean()) {
            const Rational a = abs(value);
            const Sign s = certified_sign(
                [&](long prec) { return -Interval::log_of(a, prec) - Interval::exact(thr, prec); }, precision);
            row.violator = s != Sign::negative;
            row.lhs_decimal = (-Interval::log_of(a, precision)).midpoint_string(12);
            if (row.violator) row.lhs = -LogReal::log_of(a);
        } else {
            row.lhs = -log_abs(value, v);
            row.lhs_decimal = row.lhs->is_zero() ? "0" : row.lhs->to_decimal(12, precision);
            row.violator = compare(*row.lhs, thr, precision) != Sign::negative;
        }
        if (row.violator) {
            report.violators.push_back(n);
            report.max_violator = n;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

void write_pk_csv(std::ostream& out, const PkReport& report, long precision) {
    CsvWriter csv(out);
    csv.row({"k", "m", "n", "values_equal", "lhs_logreal", "lhs_decimal", "threshold_decimal", "flagged", "kappa"});
    for (const auto& r : report.rows) {
        csv.row({std::to_string(r.k), r.m.get_str(), r.n.get_str(), bool_field(r.values_equal), r.lhs.to_string(),
                 r.lhs.to_decimal(12, precision), decimal(r.threshold), bool_field(r.flagged),
                 std::to_string(r.kappa)});
    }
}

void write_pk_summary(std::ostream& out, const PkReport& report) {
    out << "p = " << report.p << ", epsilon = " << to_string(report.epsilon) << ", rows: " << report.rows.size()
        << '\n';
    out << "all values equal: " << bool_field(report.all_equal) << ", all flagged: " << bool_field(report.all_flagged)
        << '\n';
    out << "tube around m = n: kappa <= " << report.max_kappa << "; most rows on one line: " << report.max_collinear
        << '\n';
}

void write_sharpness_csv(std::ostream& out, const SharpnessReport& report, long precision) {
    CsvWriter csv(out);
    csv.row({"m", "n", "h_decimal", "h_sbar_logreal", "lhs_logreal", "lhs_decimal", "bound_holds", "ratio"});
    for (const auto& r : report.rows) {
        csv.row({std::to_string(r.m), std::to_string(r.n), r.h.to_decimal(12, precision), r.h_sbar.to_string(),
                 r.lhs.to_string(), r.lhs.to_decimal(12, precision), bool_field(r.bound_holds), r.ratio});
    }
}

void write_sharpness_summary(std::ostream& out, const SharpnessReport& report) {
    out << "p = " << report.p << ", delta = " << to_string(report.delta) << ", trials: " << report.rows.size()
        << ", bound holds in all: " << bool_field(report.all_hold) << '\n';
    if (!report.unsatisfiable_m.empty()) {
        out << "no n in the window for m =";
        for (long m : report.unsatisfiable_m) out << ' ' << m;
        out << '\n';
    }
}

void write_rec1_csv(std::ostream& out, const Rec1Report& report) {
    CsvWriter csv(out);
    csv.row({"n", "zero", "lhs_logreal", "lhs_decimal", "threshold_decimal", "violator"});
    for (const auto& r : report.rows) {
        csv.row({std::to_string(r.n), bool_field(r.zero), r.lhs ? r.lhs->to_string() : "", r.lhs_decimal,
                 decimal(report.epsilon * r.n), bool_field(r.violator)});
    }
}

void write_rec1_summary(std::ostream& out, const Rec1Report& report) {
    out << "v = " << report.v.to_string() << ", epsilon = " << to_string(report.epsilon)
        << ", violators: " << report.violators.size();
    if (report.max_violator) out << ", largest: " << *report.max_violator;
    out << '\n';
}

}  // namespace gcdlab::harness
