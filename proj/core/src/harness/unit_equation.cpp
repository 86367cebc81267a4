#include "gcdlab/harness/unit_equation.hpp"

#include "gcdlab/harness/csv.hpp"
#include "gcdlab/heights.hpp"

#include <algorithm>
#include <set>

namespace gcdlab::harness {

namespace {

std::string tuple_string(const std::vector<Rational>& x) {
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += ';';
        s += to_string(x[i]);
    }
    return s;
}

bool tuple_less(const UnitEqSolution& a, const UnitEqSolution& b) {
    return std::lexicographical_compare(a.x.begin(), a.x.end(), b.x.begin(), b.x.end());
}

std::vector<Rational> greedy_hitting_set(const std::vector<const UnitEqSolution*>& all) {
    std::vector<Rational> chosen;
    std::vector<bool> hit(all.size(), false);
    while (true) {
        std::map<Rational, std::size_t> cover;
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (hit[i]) continue;
            for (const auto& v : std::set<Rational>(all[i]->x.begin(), all[i]->x.end())) ++cover[v];
        }
        if (cover.empty()) break;
        // Largest cover; the map order breaks ties toward the smaller value.
        auto best = cover.begin();
        for (auto it = cover.begin(); it != cover.end(); ++it) {
            if (it->second > best->second) best = it;
        }
        chosen.push_back(best->first);
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (std::find(all[i]->x.begin(), all[i]->x.end(), best->first) != all[i]->x.end()) hit[i] = true;
        }
    }
    return chosen;
}

}  // namespace

std::vector<Rational> s_unit_pool(const PlaceSet& S, long exponent_bound) {
    std::vector<Rational> pool{Rational(1)};
    for (const auto& p : S.finite_primes()) {
        std::vector<Rational> next;
        for (const auto& x : pool) {
            for (long e = -exponent_bound; e <= exponent_bound; ++e) next.push_back(x * pow(Rational(p), e));
        }
        pool = std::move(next);
    }
    const std::size_t positive = pool.size();
    for (std::size_t i = 0; i < positive; ++i) pool.push_back(-pool[i]);
    std::sort(pool.begin(), pool.end());
    return pool;
}

bool has_vanishing_subsum(const std::vector<Rational>& x) {
    const std::size_t k = x.size();
    if (k > 20) throw DomainError("too many coordinates for the subsum test");
    const unsigned long full = (1UL << k) - 1;
    for (unsigned long mask = 1; mask < full; ++mask) {
        Rational s = 0;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask >> i & 1UL) s += x[i];
        }
        if (s == 0) return true;
    }
    return false;
}

UnitEqReport solve_unit_equation(const UnitEqConfig& cfg) {
    if (cfg.n < 1) throw DomainError("n must be at least 1");
    if (cfg.exponent_bound < 1) throw DomainError("exponent bound must be at least 1");
    if (!cfg.S.contains_archimedean()) throw DomainError("S must contain the archimedean place");
    std::optional<AlmostUnitConfig> filter;
    if (cfg.delta) filter.emplace(cfg.S, *cfg.delta);

    UnitEqReport report;
    std::vector<Rational> pool = s_unit_pool(cfg.S, cfg.exponent_bound);
    for (const auto& x : cfg.extra_values) {
        if (x == 0) continue;
        if (filter && !is_almost_unit(x, *filter)) continue;
        pool.push_back(x);
    }
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    const std::set<Rational> members(pool.begin(), pool.end());
    report.pool_size = pool.size();
    if (cfg.delta) {
        report.delta_in_range = *cfg.delta < Rational(1, (cfg.n + 1) * (cfg.n + 2));
    }

    // Odometer over the first n coordinates; the last one is forced.
    const std::size_t k = static_cast<std::size_t>(cfg.n);
    std::vector<std::size_t> idx(k, 0);
    std::size_t visited = 0;
    while (true) {
        if (visited++ >= cfg.budget) {
            report.truncated = true;
            break;
        }
        std::vector<Rational> x;
        Rational rest = 1;
        for (std::size_t i = 0; i < k; ++i) {
            x.push_back(pool[idx[i]]);
            rest -= pool[idx[i]];
        }
        if (members.count(rest)) {
            x.push_back(rest);
            UnitEqSolution sol;
            if (filter) {
                for (const auto& c : x) sol.almost_unit.push_back(is_almost_unit(c, *filter));
            }
            sol.x = std::move(x);
            (has_vanishing_subsum(sol.x) ? report.degenerate : report.solutions).push_back(std::move(sol));
        }
        std::size_t pos = k;
        while (pos > 0) {
            --pos;
            if (++idx[pos] < pool.size()) break;
            idx[pos] = 0;
            if (pos == 0) {
                pos = k + 1;
                break;
            }
        }
        if (pos == k + 1) break;
    }
    std::sort(report.solutions.begin(), report.solutions.end(), tuple_less);
    std::sort(report.degenerate.begin(), report.degenerate.end(), tuple_less);

    std::vector<const UnitEqSolution*> all;
    for (const auto* list : {&report.solutions, &report.degenerate}) {
        for (const auto& s : *list) {
            all.push_back(&s);
            for (const auto& c : s.x) ++report.frequency[c];
        }
    }
    report.hitting_set = greedy_hitting_set(all);
    return report;
}

void write_unit_eq_csv(std::ostream& out, const UnitEqReport& report) {
    CsvWriter csv(out);
    csv.row({"kind", "x", "almost_unit"});
    auto emit = [&](const char* kind, const UnitEqSolution& s) {
        std::string flags;
        for (std::size_t i = 0; i < s.almost_unit.size(); ++i) {
            if (i) flags += ';';
            flags += bool_field(s.almost_unit[i]);
        }
        csv.row({kind, tuple_string(s.x), flags});
    };
    for (const auto& s : report.solutions) emit("solution", s);
    for (const auto& s : report.degenerate) emit("degenerate", s);
}

void write_unit_eq_summary(std::ostream& out, const UnitEqReport& report) {
    out << "pool size: " << report.pool_size << ", solutions: " << report.solutions.size()
        << ", degenerate: " << report.degenerate.size() << '\n';
    if (report.truncated) out << "TRUNCATED: enumeration budget exhausted; lists are partial\n";
    if (report.delta_in_range) {
        out << "delta below 1/((n+1)(n+2)): " << bool_field(*report.delta_in_range) << '\n';
    }
    out << "coordinate frequencies:";
    for (const auto& [v, c] : report.frequency) out << ' ' << to_string(v) << ':' << c;
    out << "\nhitting set:";
    for (const auto& v : report.hitting_set) out << ' ' << to_string(v);
    out << '\n';
}

}  // namespace gcdlab::harness
