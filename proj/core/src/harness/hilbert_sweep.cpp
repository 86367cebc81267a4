#include "gcdlab/harness/hilbert_sweep.hpp"

#include "gcdlab/harness/csv.hpp"
#include "gcdlab/hilbert.hpp"
#include "gcdlab/rng.hpp"

#include <algorithm>
#include <memory>
#include <thread>

namespace gcdlab::harness {

namespace {

struct Job {
    long n, d1, d2, l;
    std::size_t pair;
    const MultiPoly* F1;
    const MultiPoly* F2;
};

bool divisible_by_x0(const MultiPoly& F) {
    for (const auto& [i, c] : F.terms()) {
        if (i[0] == 0) return false;
    }
    return true;
}

std::string tri(bool b) { return bool_field(b); }

HilbertCell evaluate(const Job& job) {
    HilbertCell cell;
    cell.n = job.n;
    cell.d1 = job.d1;
    cell.d2 = job.d2;
    cell.l = job.l;
    cell.pair = job.pair;
    cell.F1 = job.F1->to_string(0);
    cell.F2 = job.F2->to_string(0);

    const Integer formula = dim_quotient_formula(job.n, job.l, job.d1, job.d2);
    const HomogeneousComponent C = homogeneous_component(*job.F1, *job.F2, job.l);
    cell.formula = formula.get_str();
    cell.brute = std::to_string(C.quotient_dim());
    cell.dim_match = formula == C.quotient_dim();

    const auto B = quotient_monomial_basis(C);
    cell.ord_ok = true;
    for (long i = 0; i <= job.n; ++i) {
        cell.ord_ok = cell.ord_ok && ord_sum_check(B, static_cast<std::size_t>(i), job.d1, job.d2, job.l, job.n);
    }

    const long m = job.l;
    const long dmax = std::max(job.d1, job.d2), dmin = std::min(job.d1, job.d2);
    if (m >= 1 && m >= dmax && !divisible_by_x0(*job.F1) && !divisible_by_x0(*job.F2)) {
        const TruncatedIdeal T(job.F1->dehomogenize(0), job.F2->dehomogenize(0), m);
        cell.affine_match = tri(formula == T.Nprime());
        const bool bound_applies = job.n >= 2 || m >= dmax + dmin - 1;
        if (bound_applies) cell.nprime_bound_ok = tri(nprime_bound(job.n, m, dmax, dmin) >= T.Nprime());
        if (bound_applies && m >= dmax * job.n) {
            // N / C(m+n, n) >= 1/n
            cell.ratio_ok = tri(Integer(job.n) * T.N() >= binomial(m + job.n, job.n));
        }
    }
    return cell;
}

}  // namespace

bool cell_ok(const HilbertCell& c) {
    return c.dim_match && c.ord_ok && c.nprime_bound_ok != "false" && c.ratio_ok != "false" &&
           c.affine_match != "false";
}

HilbertSweepReport run_hilbert_sweep(const HilbertSweepConfig& cfg) {
    if (cfg.max_n < 1 || cfg.max_degree < 1 || cfg.extra_l < 0) throw DomainError("invalid sweep bounds");
    Rng rng(cfg.seed);
    // Pairs are drawn up front so the sweep is independent of the job count.
    std::vector<std::unique_ptr<MultiPoly>> store;
    std::vector<Job> jobs;
    for (long n = 1; n <= cfg.max_n; ++n) {
        const std::size_t nvars = static_cast<std::size_t>(n + 1);
        for (long d1 = 1; d1 <= cfg.max_degree; ++d1) {
            for (long d2 = 1; d2 <= cfg.max_degree; ++d2) {
                std::vector<std::pair<const MultiPoly*, const MultiPoly*>> pairs;
                while (pairs.size() < cfg.pairs_per_cell) {
                    MultiPoly F1 = random_form(nvars, d1, rng);
                    MultiPoly F2 = random_form(nvars, d2, rng);
                    if (!coprime(F1, F2)) continue;
                    store.push_back(std::make_unique<MultiPoly>(std::move(F1)));
                    store.push_back(std::make_unique<MultiPoly>(std::move(F2)));
                    pairs.emplace_back(store[store.size() - 2].get(), store.back().get());
                }
                for (long l = 0; l <= d1 + d2 + cfg.extra_l; ++l) {
                    for (std::size_t k = 0; k < pairs.size(); ++k) {
                        jobs.push_back({n, d1, d2, l, k, pairs[k].first, pairs[k].second});
                    }
                }
            }
        }
    }

    HilbertSweepReport report;
    report.cells.resize(jobs.size());
    const unsigned workers = std::max(1u, cfg.jobs);
    {
        std::vector<std::jthread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                for (std::size_t i = w; i < jobs.size(); i += workers) report.cells[i] = evaluate(jobs[i]);
            });
        }
    }
    for (const auto& c : report.cells) report.failures += cell_ok(c) ? 0 : 1;
    return report;
}

void write_hilbert_csv(std::ostream& out, const HilbertSweepReport& report) {
    CsvWriter csv(out);
    csv.row({"n", "d1", "d2", "l", "pair", "F1", "F2", "formula", "brute_force", "dim_match", "ord_sum_ok",
             "nprime_bound_ok", "ratio_ok", "affine_match"});
    for (const auto& c : report.cells) {
        csv.row({std::to_string(c.n), std::to_string(c.d1), std::to_string(c.d2), std::to_string(c.l),
                 std::to_string(c.pair), c.F1, c.F2, c.formula, c.brute, bool_field(c.dim_match),
                 bool_field(c.ord_ok), c.nprime_bound_ok, c.ratio_ok, c.affine_match});
    }
}

void write_hilbert_summary(std::ostream& out, const HilbertSweepReport& report) {
    out << "cells: " << report.cells.size() << ", failures: " << report.failures << '\n';
    for (const auto& c : report.cells) {
        if (cell_ok(c)) continue;
        out << "FAIL n=" << c.n << " d1=" << c.d1 << " d2=" << c.d2 << " l=" << c.l << " F1=" << c.F1
            << " F2=" << c.F2 << '\n';
    }
}

}  // namespace gcdlab::harness
