// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "gcdlab/gengcd.hpp"
#include "gcdlab/heights.hpp"
#include "gcdlab/hilbert.hpp"
#include "gcdlab/lrs.hpp"
#include "gcdlab/places.hpp"
#include "gcdlab/primes.hpp"
#include "gcdlab/rng.hpp"
#include "gcdlab/harness/hilbert_sweep.hpp"
#include "gcdlab/harness/lrs_scan.hpp"
#include "gcdlab/harness/paper_examples.hpp"
#include "gcdlab/harness/unit_equation.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

using namespace gcdlab;
using namespace gcdlab::harness;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;
};

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

PowerSum geo(const Rational& r, const Rational& c = 1) { return PowerSum::geometric(r, c); }

Rational random_nonzero(Rng& rng, long bound) {
    long num = 0;
    while (num == 0) num = rng.uniform(-bound, bound);
    return make_rational(num, rng.uniform(1, bound));
}

// 1. Product formula and local-global height identity.
Outcome product_formula() {
    Outcome o;
    Rng rng(101);
    const auto t0 = Clock::now();
    for (int t = 0; t < 1000; ++t) {
        const Rational x = random_nonzero(rng, 1'000'000);
        std::set<Place> places = support(x);
        places.insert(Place::archimedean());
        LogReal sum_abs, sum_local;
        for (const auto& v : places) {
            sum_abs += log_abs(x, v);
            sum_local += local_height(x, v);
        }
        if (!sum_abs.is_zero() || sum_local != height(x)) {
            o.pass = false;
            o.detail = "mismatch at x = " + to_string(x);
            return o;
        }
    }
    const double secs = seconds_since(t0);
    o.pass = secs < 2.0;
    std::ostringstream d;
    d << "1000 rationals, " << secs << " s";
    o.detail = d.str();
    return o;
}

// 2. Generalized gcd against Euclid, plus the inside/outside partition.
Outcome gcd_vs_euclid() {
    Outcome o;
    Rng rng(202);
    const std::vector<unsigned long> small{2, 3, 5, 7, 11, 13, 17, 19, 23};
    for (int t = 0; t < 1000; ++t) {
        std::uint64_t a, b;
        if (t % 2 == 0) {
            a = static_cast<std::uint64_t>(rng.uniform(0, 1'000'000'000));
            b = static_cast<std::uint64_t>(rng.uniform(1, 1'000'000'000));
        } else {
            const auto d = static_cast<std::uint64_t>(rng.uniform(1, 100'000));
            a = d * static_cast<std::uint64_t>(rng.uniform(1, 1'000'000'000 / static_cast<std::int64_t>(d)));
            b = d * static_cast<std::uint64_t>(rng.uniform(1, 1'000'000'000 / static_cast<std::int64_t>(d)));
        }
        const Rational ra(from_u64(a)), rb(from_u64(b));
        const GcdValue total = log_gcd(ra, rb);
        if (total.value != LogReal::log_of(from_u64(std::gcd(a, b)))) {
            o.pass = false;
            o.detail = "gcd mismatch at (" + std::to_string(a) + ", " + std::to_string(b) + ")";
            return o;
        }
        std::vector<Integer> candidates;
        for (const auto& f : factorize(Integer(from_u64(std::gcd(a, b) == 0 ? 1 : std::gcd(a, b))))) {
            candidates.push_back(f.base);
        }
        for (auto p : small) candidates.emplace_back(p);
        for (int s = 0; s < 5; ++s) {
            std::vector<Place> places;
            if (rng.coin()) places.push_back(Place::archimedean());
            for (const auto& p : candidates) {
                if (rng.coin()) places.push_back(Place::finite(p));
            }
            const PlaceSet S = PlaceSet::from_places(places);
            if (log_gcd_outside(ra, rb, S).value + log_gcd_within(ra, rb, S).value != total.value) {
                o.pass = false;
                o.detail = "partition mismatch at (" + std::to_string(a) + ", " + std::to_string(b) + ") S = " +
                           S.to_string();
                return o;
            }
        }
    }
    o.detail = "1000 pairs, 5000 place sets";
    return o;
}

// 3. Coordinate sum of the multi-indices of weight m.
Outcome multiindex_identity() {
    Outcome o;
    for (long n = 1; n <= 5; ++n) {
        for (long m = 1; m <= 10; ++m) {
            // Oracle: m C(n+m, n) / (n+1) with a locally computed binomial.
            Integer c = 1;
            for (long k = 1; k <= n; ++k) c = c * (m + k) / k;
            const Integer expected = Integer(m) * c / (n + 1);
            const auto sum = multiindex_sum(n, m);
            const auto closed = multiindex_sum_closed_form(n, m);
            bool ok = sum.size() == static_cast<std::size_t>(n + 1) && sum == closed;
            for (const auto& s : sum) ok = ok && s == expected;
            if (!ok) {
                o.pass = false;
                o.detail = "mismatch at n=" + std::to_string(n) + " m=" + std::to_string(m);
                return o;
            }
        }
    }
    o.detail = "n <= 5, m <= 10";
    return o;
}

// 4. Quotient dimension formula against brute-force rank, with the order-sum checks.
Outcome hilbert_formula() {
    Outcome o;
    const auto t0 = Clock::now();
    const HilbertSweepReport r = run_hilbert_sweep(HilbertSweepConfig{});
    const double secs = seconds_since(t0);
    std::size_t dim_bad = 0, ord_bad = 0;
    for (const auto& c : r.cells) {
        dim_bad += c.dim_match ? 0 : 1;
        ord_bad += c.ord_ok ? 0 : 1;
    }
    o.pass = dim_bad == 0 && ord_bad == 0 && r.failures == 0 && r.cells.size() == 1080 && secs < 60.0;
    std::ostringstream d;
    d << r.cells.size() << " cells, dimension mismatches " << dim_bad << ", order-sum failures " << ord_bad
      << ", other failures " << r.failures << ", " << secs << " s";
    o.detail = d.str();
    return o;
}

// 5. Greedy basis dominance on random S-unit points.
Outcome greedy_dominance() {
    Outcome o;
    Rng rng(505);
    auto random_poly = [&](long max_deg) {
        MultiPoly f(2);
        while (f.total_degree() < 1) {
            f = MultiPoly(2);
            const long deg = rng.uniform(1, max_deg);
            for (const auto& i : monomials_up_to(2, deg)) {
                if (rng.uniform(0, 2) != 0) f += MultiPoly::monomial(i, rng.uniform(-3, 3));
            }
        }
        return f;
    };
    const std::vector<Place> places{Place::archimedean(), Place::finite(2), Place::finite(3)};
    std::size_t checked = 0, violations = 0, instances = 0;
    while (instances < 50) {
        const MultiPoly f = random_poly(2), g = random_poly(2);
        if (!coprime(f, g)) continue;
        const long m = rng.uniform(std::max(f.total_degree(), g.total_degree()), 5);
        std::vector<Rational> coords;
        for (int i = 0; i < 2; ++i) {
            Rational x = pow(Rational(2), rng.uniform(-5, 5)) * pow(Rational(3), rng.uniform(-5, 5));
            if (rng.coin()) x = -x;
            coords.push_back(x);
        }
        const Place& v = places[static_cast<std::size_t>(rng.uniform(0, 2))];
        const TruncatedIdeal T(f, g, m);
        const TorusPoint u(coords);
        const GreedyBasis B = greedy_monomial_basis(T, u, v);
        const DominanceReport rep = check_greedy_dominance(T, B);
        checked += rep.monomials_checked;
        violations += rep.violations.size();
        if (B.monomials.size() != T.Nprime()) ++violations;
        ++instances;
    }
    o.pass = violations == 0;
    o.detail = "50 instances, " + std::to_string(checked) + " reductions, " + std::to_string(violations) +
               " violations";
    return o;
}

// 6. The (2^k, 2^k + k) family and the N = 1100 tube check.
Outcome example_pk() {
    Outcome o;
    const auto t0 = Clock::now();
    const PkReport r = run_example_pk(2, Rational(3, 5), 10);
    bool ok = r.rows.size() == 10 && r.all_equal && r.all_flagged;
    for (long k = 1; k <= 10; ++k) {
        const Integer m = pow(Integer(2), static_cast<unsigned long>(k));
        const unsigned long mm = m.get_ui();
        // Oracle: direct big-integer values of m 2^m + 1 and 2^(m+k) + 1.
        const Integer F = m * pow(Integer(2), mm) + 1;
        const Integer G = pow(Integer(2), mm + static_cast<unsigned long>(k)) + 1;
        ok = ok && F == G;
    }
    ScanConfig cfg;
    cfg.F = PowerSum::index() * geo(2) + geo(1);
    cfg.G = geo(2) + geo(1);
    cfg.epsilon = Rational(3, 5);
    cfg.N = 1100;
    cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
    const ScanReport s = run_lrs_scan(cfg);
    std::size_t outside = 0;
    for (const auto& [m, n] : s.flagged) {
        // |m - n| <= 2 log2 max(m, n)  <=>  2^|m - n| <= max(m, n)^2
        const long M = std::max(m, n);
        const Integer lhs = pow(Integer(2), static_cast<unsigned long>(std::labs(m - n)));
        if (lhs > Integer(M) * M) {
            ++outside;
            std::cerr << "  flagged pair outside tube: (" << m << ", " << n << ")\n";
        }
    }
    bool family_flagged = true;
    for (long k = 1; k <= 10; ++k) {
        const long m = 1L << k;
        if (m + k > 1100) continue;
        family_flagged = family_flagged && std::find(s.flagged.begin(), s.flagged.end(),
                                                     std::make_pair(m, m + k)) != s.flagged.end();
    }
    const double secs = seconds_since(t0);
    o.pass = ok && outside == 0 && family_flagged && secs < 300.0;
    std::ostringstream d;
    d << "k=1..10 equal and flagged: " << (ok ? "yes" : "no") << "; grid flagged " << s.flagged.size()
      << ", outside tube " << outside << ", " << secs << " s";
    o.detail = d.str();
    return o;
}

// 7. Sharpness construction.
Outcome sharpness() {
    Outcome o;
    std::size_t trials = 0;
    for (const Rational delta : {Rational(1, 5), Rational(1, 10)}) {
        const SharpnessReport r = run_sharpness(2, delta, 10);
        if (r.rows.size() != 10) o.pass = false;
        for (const auto& row : r.rows) {
            ++trials;
            const Integer x = pow(Integer(2), static_cast<unsigned long>(row.m));
            const Integer y = pow(Integer(2), static_cast<unsigned long>(row.n)) * (x + 1);
            // Oracle: classical gcd of the integer values f(P) = x + 1, g(P) = y.
            Integer gg;
            mpz_gcd(gg.get_mpz_t(), Integer(x + 1).get_mpz_t(), y.get_mpz_t());
            const LogReal lhs = LogReal::log_of(gg);
            const bool window = sharpness_window(2, delta, row.m, row.n);
            const bool holds = compare(lhs, row.h * (delta / 2)) != Sign::negative;
            if (!(window && holds && lhs == row.lhs && row.bound_holds)) {
                o.pass = false;
                o.detail = "failed at delta=" + to_string(delta) + " m=" + std::to_string(row.m);
                return o;
            }
        }
    }
    o.detail = std::to_string(trials) + " window-certified trials";
    return o;
}

// 8. Common-factor diagonal and the independent-roots control.
Outcome common_factor() {
    Outcome o;
    const PowerSum F = (geo(2) - geo(1)) * (geo(3) + geo(1));
    const PowerSum G = (geo(2) - geo(1)) * (geo(5) + geo(1));
    const bool coprime = lrs_coprime(F, G);

    ScanConfig diag;
    diag.F = F;
    diag.G = G;
    diag.epsilon = Rational(1, 2);
    diag.N = 300;
    diag.mode = ScanMode::diagonal;
    diag.jobs = std::max(1u, std::thread::hardware_concurrency());
    const ScanReport d = run_lrs_scan(diag);
    std::size_t missing = 0, below = 0;
    std::set<long> flagged_n;
    for (const auto& [m, n] : d.flagged) flagged_n.insert(n);
    for (long n = 2; n <= 300; ++n) missing += flagged_n.count(n) ? 0 : 1;
    for (const auto& row : d.rows) {
        const Integer c = pow(Integer(2), static_cast<unsigned long>(row.n)) - 1;
        if (compare(row.lhs, LogReal::log_of(c)) == Sign::negative) ++below;
    }

    ScanConfig ctrl;
    ctrl.F = geo(2) + geo(1);
    ctrl.G = geo(3) + geo(1);
    ctrl.epsilon = Rational(1, 2);
    ctrl.N = 200;
    ctrl.jobs = diag.jobs;
    const ScanReport c = run_lrs_scan(ctrl);
    std::size_t late = 0;
    for (const auto& [m, n] : c.flagged) {
        if (std::max(m, n) > 50) {
            ++late;
            std::cerr << "  control flag beyond 50: (" << m << ", " << n << ")\n";
        }
    }
    o.pass = !coprime && missing == 0 && below == 0 && late == 0;
    std::ostringstream s;
    s << "lrs_coprime=" << (coprime ? "true" : "false") << "; diagonal flagged " << d.flagged.size()
      << "/300, missing n>=2: " << missing << "; control flagged " << c.flagged.size() << ", max(m,n) bound "
      << (c.max_flagged_index ? std::to_string(*c.max_flagged_index) : std::string("none"));
    o.detail = s.str();
    return o;
}

// 9. Zero sets of recurrences.
Outcome zero_sets() {
    Outcome o;
    const PowerSum D = geo(2) + geo(-2);
    const ZeroStructure z = zero_scan(D, 200);
    std::vector<long> odd;
    for (long n = 0; n <= 200; ++n) {
        // Oracle: 2^n + (-2)^n evaluated as integers.
        Integer v = pow(Integer(2), static_cast<unsigned long>(n));
        v += (n % 2 == 0) ? v : Integer(-v);
        if (v == 0) odd.push_back(n);
    }
    bool ok = z.progressions == std::vector<Progression>{{2, 1}} && z.sporadic.empty() && z.zeros == odd;

    const PowerSum n = PowerSum::index();
    const std::vector<PowerSum> corpus{
        geo(2) - geo(1, 4),
        geo(2) + geo(3),
        n * geo(2) + geo(1),
        geo(2) - geo(3),
        (geo(2) - geo(1)) * (geo(3) + geo(1)),
        n * n - n * geo(1, 5) + geo(1, 6),  // zeros at 2 and 3
        geo(3) - geo(2, 2) - geo(1, 7) + n * geo(1, 4),
        geo(Rational(1, 2), 8) - geo(1),    // zero at 3
    };
    std::size_t finite = 0, with_zeros = 0;
    for (const auto& F : corpus) {
        if (is_degenerate(F)) {
            ok = false;
            continue;
        }
        const ZeroStructure zs = zero_scan(F, 200);
        std::vector<long> oracle;
        for (long k = 0; k <= 200; ++k) {
            if (F.eval(k) == 0) oracle.push_back(k);
        }
        if (zs.progressions.empty() && zs.sporadic == zs.zeros && zs.zeros == oracle) ++finite;
        with_zeros += zs.zeros.empty() ? 0 : 1;
    }
    ok = ok && finite == corpus.size();
    o.pass = ok;
    o.detail = "2^n+(-2)^n: " + std::to_string(z.zeros.size()) + " zeros in 1 mod 2; corpus " +
               std::to_string(finite) + "/" + std::to_string(corpus.size()) + " finite (" +
               std::to_string(with_zeros) + " with zeros)";
    return o;
}

// 10. -log|2^n - 3^n|_5 against n/10.
Outcome rec1_scan() {
    Outcome o;
    const PowerSum F = geo(2) - geo(3);
    const Rec1Report a = run_rec1_scan(F, Place::finite(5), Rational(1, 10), 500);
    const Rec1Report b = run_rec1_scan(F, Place::finite(5), Rational(1, 10), 500);
    // Oracle: v_5 by repeated division; violator iff v log 5 >= n / 10.
    std::vector<long> oracle;
    for (long n = 1; n <= 500; ++n) {
        Integer v = pow(Integer(2), static_cast<unsigned long>(n)) - pow(Integer(3), static_cast<unsigned long>(n));
        long val = 0;
        while (v % 5 == 0) {
            v /= 5;
            ++val;
        }
        const LogReal lhs = LogReal::log_prime(5, val);
        if (compare(lhs, Rational(n, 10)) != Sign::negative) oracle.push_back(n);
    }
    const bool stable = a.violators == b.violators && a.max_violator == b.max_violator;
    const bool finite = a.max_violator.has_value() && *a.max_violator < 250;
    o.pass = stable && finite && a.violators == oracle;
    std::ostringstream d;
    d << a.violators.size() << " violators, max "
      << (a.max_violator ? std::to_string(*a.max_violator) : std::string("none")) << ", stable across runs: "
      << (stable ? "yes" : "no");
    o.detail = d.str();
    return o;
}

// 11. Unit equation x + y = 1 over S = {inf, 2, 3}, exponents in [-1, 1].
Outcome unit_equation() {
    Outcome o;
    UnitEqConfig cfg;
    cfg.S = PlaceSet::with_archimedean({2, 3});
    cfg.n = 1;
    cfg.exponent_bound = 1;
    const UnitEqReport r = solve_unit_equation(cfg);

    // Oracle: x = +-2^a 3^b over the box, y = 1 - x tested by trial division.
    auto in_box = [](const Rational& y) {
        if (y == 0) return false;
        for (Integer part : {Integer(abs(y.get_num())), Integer(y.get_den())}) {
            for (long p : {2L, 3L}) {
                int e = 0;
                while (part % p == 0) {
                    part /= p;
                    ++e;
                }
                if (e > 1) return false;
            }
            if (part != 1) return false;
        }
        return true;
    };
    std::set<std::vector<Rational>> oracle;
    for (int s : {1, -1}) {
        for (long a = -1; a <= 1; ++a) {
            for (long b = -1; b <= 1; ++b) {
                const Rational x = Rational(s) * pow(Rational(2), a) * pow(Rational(3), b);
                const Rational y = 1 - x;
                if (in_box(y)) oracle.insert({x, y});
            }
        }
    }
    std::set<std::vector<Rational>> found;
    for (const auto& s : r.solutions) found.insert(s.x);
    for (const auto& s : r.degenerate) found.insert(s.x);
    bool coverage = true;
    for (const auto& s : r.solutions) {
        for (const auto& x : s.x) {
            const auto it = r.frequency.find(x);
            coverage = coverage && it != r.frequency.end() && it->second >= 1;
        }
    }
    o.pass = found == oracle && r.degenerate.empty() && coverage && !r.truncated;
    o.detail = std::to_string(r.solutions.size()) + " solutions, oracle " + std::to_string(oracle.size()) +
               ", frequency coverage " + (coverage ? "complete" : "incomplete");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"product formula and local-global height", product_formula},
        {"generalized gcd against Euclid and partition", gcd_vs_euclid},
        {"multi-index coordinate sum identity", multiindex_identity},
        {"quotient dimension formula and order sums", hilbert_formula},
        {"greedy basis dominance", greedy_dominance},
        {"p^k family and log-tube grid scan", example_pk},
        {"sharpness construction", sharpness},
        {"common-factor diagonal and control scan", common_factor},
        {"zero sets of recurrences", zero_sets},
        {"p-adic smallness scan", rec1_scan},
        {"unit equation enumeration", unit_equation},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << " [" << (i + 1) << "] " << criteria[i].first << ": " << o.detail
                  << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
