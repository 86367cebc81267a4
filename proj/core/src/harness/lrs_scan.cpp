#include "gcdlab/harness/lrs_scan.hpp"

#include "gcdlab/gengcd.hpp"
#include "gcdlab/harness/csv.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace gcdlab::harness {

namespace {

constexpr double kLn2Upper = 0.69314718056;

struct Value {
    Rational q;
    Integer num;  // |numerator|
    std::size_t h_bits = 0;  // h(q) < h_bits * log 2
};

Value make_value(const Rational& q) {
    Value v{q, abs(q.get_num()), 0};
    v.h_bits = std::max(mpz_sizeinbase(v.num.get_mpz_t(), 2), mpz_sizeinbase(q.get_den_mpz_t(), 2));
    return v;
}

struct Worker {
    const ScanConfig& cfg;
    const PlaceSet& S;
    const std::vector<Value>& Fv;
    const std::vector<Value>& Gv;
    double eps_double;

    struct Out {
        std::vector<ScanRow> rows;
        std::vector<std::pair<long, long>> flagged;
        std::size_t scanned = 0;
    };

    // Decides lhs > eps max(m, n); fills lhs only for emitted rows.
    void visit(long m, long n, Out& out) const {
        const Value& a = Fv[static_cast<std::size_t>(m)];
        const Value& b = Gv[static_cast<std::size_t>(n)];
        ++out.scanned;
        const Rational thr = cfg.epsilon * std::max(m, n);
        if (a.q == 0 || b.q == 0) {
            if (cfg.rows == RowFilter::all) {
                ScanRow r;
                r.m = m;
                r.n = n;
                r.threshold = thr;
                r.skipped = true;
                r.notes = a.q == 0 ? "F(m)=0" : "G(n)=0";
                out.rows.push_back(std::move(r));
            }
            return;
        }
        const double thr_d = eps_double * static_cast<double>(std::max(m, n));
        const double bound = static_cast<double>(std::min(a.h_bits, b.h_bits)) * kLn2Upper;
        // lhs <= min(h(a), h(b)) < bound
        if (cfg.rows == RowFilter::flagged && bound * (1 + 1e-12) < thr_d * (1 - 1e-12)) return;

        Integer g;
        mpz_gcd(g.get_mpz_t(), a.num.get_mpz_t(), b.num.get_mpz_t());
        for (const auto& p : S.finite_primes()) {
            if (g == 1) break;
            mpz_remove(g.get_mpz_t(), g.get_mpz_t(), p.get_mpz_t());
        }
        std::optional<Rational> arch;
        if (!S.contains_archimedean()) {
            Rational mx = std::max(Rational(abs(a.q)), Rational(abs(b.q)));
            if (mx < 1) arch = mx;
        }
        const bool zero_lhs = g == 1 && !arch;
        bool flagged = false;
        if (!zero_lhs) {
            const Sign s = certified_sign(
                [&](long prec) {
                    Interval v = Interval::log_of(g, prec) - Interval::exact(thr, prec);
                    if (arch) v = v - Interval::log_of(*arch, prec);
                    return v;
                },
                cfg.precision);
            flagged = s == Sign::positive;
        }
        if (flagged) out.flagged.emplace_back(m, n);
        const bool emit = cfg.rows == RowFilter::all || (cfg.rows == RowFilter::nonzero && !zero_lhs) || flagged;
        if (!emit) return;
        ScanRow r;
        r.m = m;
        r.n = n;
        r.threshold = thr;
        r.flagged = flagged;
        if (!zero_lhs) r.lhs = log_gcd_outside(a.q, b.q, S).value;
        out.rows.push_back(std::move(r));
    }
};

std::vector<std::pair<long, long>> directions(long bound) {
    std::vector<std::pair<long, long>> out;
    for (long a = 0; a <= bound; ++a) {
        for (long b = 0; b <= bound; ++b) {
            if (std::gcd(a, b) == 1) out.emplace_back(a, b);
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        const long sx = x.first + x.second, sy = y.first + y.second;
        if (sx != sy) return sx < sy;
        return std::max(x.first, x.second) < std::max(y.first, y.second);
    });
    return out;
}

}  // namespace

bool tube_contains(long a, long b, long kappa, long m, long n) {
    const Integer D = abs(Integer(b) * m - Integer(a) * n);
    if (D == 0) return true;
    const long M = std::max(m, n);
    if (kappa <= 0 || M <= 1) return false;
    return compare(LogReal::log_of(Integer(M)) * Rational(kappa), Rational(D)) == Sign::positive;
}

std::optional<long> tube_kappa(long a, long b, long m, long n) {
    const long D = std::labs(b * m - a * n);
    if (D == 0) return 0;
    const long M = std::max(m, n);
    if (M <= 1) return std::nullopt;
    long k = std::max(1L, static_cast<long>(std::ceil(static_cast<double>(D) / std::log(static_cast<double>(M)))));
    while (k > 1 && tube_contains(a, b, k - 1, m, n)) --k;
    while (!tube_contains(a, b, k, m, n)) ++k;
    return k;
}

void cluster_pairs(const std::vector<std::pair<long, long>>& flagged, long slope_bound, long kappa_max,
                   std::size_t min_cluster_size, std::vector<Cluster>& clusters,
                   std::vector<std::pair<long, long>>& sporadic) {
    const auto dirs = directions(slope_bound);
    // kappa of every pair for every direction, computed once.
    std::vector<std::vector<std::optional<long>>> kap(dirs.size());
    for (std::size_t d = 0; d < dirs.size(); ++d) {
        for (const auto& [m, n] : flagged) {
            auto k = tube_kappa(dirs[d].first, dirs[d].second, m, n);
            kap[d].push_back(k && *k <= kappa_max ? k : std::nullopt);
        }
    }
    std::vector<bool> taken(flagged.size(), false);
    while (true) {
        std::size_t best_dir = dirs.size(), best_count = 0;
        long best_kappa = 0;
        for (std::size_t d = 0; d < dirs.size(); ++d) {
            std::size_t count = 0;
            long kappa = 0;
            for (std::size_t i = 0; i < flagged.size(); ++i) {
                if (taken[i] || !kap[d][i]) continue;
                ++count;
                kappa = std::max(kappa, *kap[d][i]);
            }
            if (count > best_count || (count == best_count && count > 0 && kappa < best_kappa)) {
                best_dir = d;
                best_count = count;
                best_kappa = kappa;
            }
        }
        if (best_dir == dirs.size() || best_count < std::max<std::size_t>(min_cluster_size, 1)) break;
        Cluster c;
        c.id = clusters.size();
        c.a = dirs[best_dir].first;
        c.b = dirs[best_dir].second;
        c.kappa = best_kappa;
        for (std::size_t i = 0; i < flagged.size(); ++i) {
            if (taken[i] || !kap[best_dir][i]) continue;
            taken[i] = true;
            c.members.push_back(flagged[i]);
        }
        clusters.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < flagged.size(); ++i) {
        if (!taken[i]) sporadic.push_back(flagged[i]);
    }
}

ScanReport run_lrs_scan(const ScanConfig& cfg) {
    if (cfg.epsilon <= 0) throw DomainError("epsilon must be positive");
    if (cfg.N < 1) throw DomainError("scan bound N must be at least 1");
    if (cfg.F.is_zero() || cfg.G.is_zero()) throw DomainError("sequences must be nonzero");
    if (cfg.slope_bound < 1 || cfg.kappa_max < 0) throw DomainError("invalid tube search bounds");

    ScanReport report;
    report.S0 = compute_S0(cfg.F.roots(), cfg.G.roots());
    report.S = report.S0.united(cfg.extra_S);

    std::vector<Value> Fv, Gv;
    for (long k = 0; k <= cfg.N; ++k) {
        Fv.push_back(make_value(k == 0 ? Rational(0) : cfg.F.eval(k)));
        Gv.push_back(make_value(k == 0 ? Rational(0) : cfg.G.eval(k)));
    }
    for (long k = 1; k <= cfg.N; ++k) {
        if (Fv[static_cast<std::size_t>(k)].q == 0) report.zeros_F.push_back(k);
        if (Gv[static_cast<std::size_t>(k)].q == 0) report.zeros_G.push_back(k);
    }

    const Worker worker{cfg, report.S, Fv, Gv, cfg.epsilon.get_d()};
    const unsigned jobs = std::max(1u, cfg.jobs);
    std::vector<Worker::Out> outs(jobs);
    {
        std::vector<std::jthread> threads;
        for (unsigned j = 0; j < jobs; ++j) {
            threads.emplace_back([&, j] {
                // Interleaved outer rows keep the work balanced along the diagonal band.
                for (long m = 1 + static_cast<long>(j); m <= cfg.N; m += static_cast<long>(jobs)) {
                    if (cfg.mode == ScanMode::diagonal) {
                        worker.visit(m, m, outs[j]);
                    } else {
                        for (long n = 1; n <= cfg.N; ++n) worker.visit(m, n, outs[j]);
                    }
                }
            });
        }
    }
    for (auto& o : outs) {
        report.pairs_scanned += o.scanned;
        std::move(o.rows.begin(), o.rows.end(), std::back_inserter(report.rows));
        report.flagged.insert(report.flagged.end(), o.flagged.begin(), o.flagged.end());
    }
    std::sort(report.rows.begin(), report.rows.end(),
              [](const ScanRow& x, const ScanRow& y) { return std::pair(x.m, x.n) < std::pair(y.m, y.n); });
    std::sort(report.flagged.begin(), report.flagged.end());
    for (const auto& [m, n] : report.flagged) {
        report.max_flagged_index = std::max(report.max_flagged_index.value_or(0), std::max(m, n));
    }

    cluster_pairs(report.flagged, cfg.slope_bound, cfg.kappa_max, cfg.min_cluster_size, report.clusters,
                  report.sporadic);
    std::map<std::pair<long, long>, std::size_t> cluster_of;
    for (const auto& c : report.clusters) {
        for (const auto& p : c.members) cluster_of[p] = c.id;
    }
    for (auto& r : report.rows) {
        if (!r.flagged) continue;
        auto it = cluster_of.find({r.m, r.n});
        if (it != cluster_of.end()) {
            r.cluster = it->second;
        } else {
            r.notes = "sporadic";
        }
    }
    return report;
}

void write_scan_csv(std::ostream& out, const ScanReport& report, long precision) {
    CsvWriter csv(out);
    csv.row({"m", "n", "lhs_logreal", "lhs_decimal", "threshold_decimal", "flagged", "cluster_id", "notes"});
    for (const auto& r : report.rows) {
        csv.row({std::to_string(r.m), std::to_string(r.n), r.skipped ? "" : r.lhs.to_string(),
                 r.skipped ? "" : r.lhs.to_decimal(12, precision), decimal(r.threshold), bool_field(r.flagged),
                 r.cluster ? std::to_string(*r.cluster) : "", r.notes});
    }
}

void write_scan_summary(std::ostream& out, const ScanReport& report) {
    out << "S0 = " << report.S0.to_string() << ", S = " << report.S.to_string() << '\n';
    out << "pairs scanned: " << report.pairs_scanned << ", flagged: " << report.flagged.size() << '\n';
    if (report.max_flagged_index) out << "largest flagged max(m,n): " << *report.max_flagged_index << '\n';
    for (const auto& c : report.clusters) {
        out << "cluster " << c.id << ": direction (" << c.a << "," << c.b << "), kappa " << c.kappa << ", "
            << c.members.size() << " pairs\n";
    }
    if (!report.sporadic.empty()) {
        out << "sporadic:";
        for (const auto& [m, n] : report.sporadic) out << " (" << m << "," << n << ")";
        out << '\n';
    }
    auto list = [&](const char* name, const std::vector<long>& zs) {
        if (zs.empty()) return;
        out << name << " vanishes at:";
        for (long z : zs) out << ' ' << z;
        out << '\n';
    };
    list("F", report.zeros_F);
    list("G", report.zeros_G);
}

}  // namespace gcdlab::harness
