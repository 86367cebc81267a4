#include "gcdlab/harness/config.hpp"

#include <json.hpp>

#include <initializer_list>
#include <set>

namespace gcdlab::harness {

namespace {

using Json = nlohmann::json;

Json parse(std::string_view text) {
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return Json::object();
    try {
        Json j = Json::parse(text);
        if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
        return j;
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
}

void check_keys(const Json& j, std::initializer_list<const char*> allowed) {
    const std::set<std::string> keys(allowed.begin(), allowed.end());
    for (const auto& [k, v] : j.items()) {
        if (!keys.count(k)) throw ConfigError("unknown configuration key \"" + k + "\"");
    }
}

std::string where(const char* key) { return std::string("field \"") + key + "\""; }

std::string to_text(const Json& v, const char* key) {
    if (!v.is_string()) throw ConfigError(where(key) + ": expected a string");
    return v.get<std::string>();
}

Rational to_rational(const Json& v, const char* key) {
    try {
        if (v.is_number_integer()) return Rational(v.get<long>());
        if (v.is_string()) return parse_rational(v.get<std::string>());
    } catch (const std::exception& e) {
        throw ConfigError(where(key) + ": " + e.what());
    }
    throw ConfigError(where(key) + ": expected a rational as string or integer");
}

long to_long(const Json& v, const char* key) {
    if (!v.is_number_integer()) throw ConfigError(where(key) + ": expected an integer");
    return v.get<long>();
}

Integer to_integer(const Json& v, const char* key) {
    const Rational q = to_rational(v, key);
    if (q.get_den() != 1) throw ConfigError(where(key) + ": expected an integer");
    return q.get_num();
}

Place to_place(const Json& v, const char* key) {
    try {
        if (v.is_number_integer()) return Place::finite(Integer(v.get<long>()));
        if (v.is_string()) return Place::parse(v.get<std::string>());
    } catch (const std::exception& e) {
        throw ConfigError(where(key) + ": " + e.what());
    }
    throw ConfigError(where(key) + ": expected \"inf\" or a prime");
}

PlaceSet to_place_set(const Json& v, const char* key) {
    if (!v.is_array()) throw ConfigError(where(key) + ": expected a list of places");
    std::vector<Place> places;
    for (const auto& e : v) places.push_back(to_place(e, key));
    return PlaceSet::from_places(places);
}

std::vector<Rational> to_rationals(const Json& v, const char* key) {
    if (!v.is_array()) throw ConfigError(where(key) + ": expected a list");
    std::vector<Rational> out;
    for (const auto& e : v) out.push_back(to_rational(e, key));
    return out;
}

PowerSum to_power_sum(const Json& v, const char* key) {
    if (!v.is_object()) throw ConfigError(where(key) + ": expected a power-sum object");
    try {
        if (v.contains("terms")) {
            check_keys(v, {"terms"});
            std::vector<PowerSumTerm> terms;
            for (const auto& t : v.at("terms")) {
                check_keys(t, {"coeff", "root"});
                PowerSumTerm term;
                term.coeff = to_rationals(t.at("coeff"), key);
                term.root = to_rational(t.at("root"), key);
                terms.push_back(std::move(term));
            }
            return PowerSum(std::move(terms));
        }
        check_keys(v, {"relation", "initial"});
        const auto relation = to_rationals(v.at("relation"), key);
        const auto initial = to_rationals(v.at("initial"), key);
        return PowerSum::from_recurrence(relation, initial);
    } catch (const Json::exception& e) {
        throw ConfigError(where(key) + ": " + e.what());
    }
}

MultiPoly to_poly(const Json& v, std::size_t nvars, const char* key) {
    if (!v.is_string()) throw ConfigError(where(key) + ": expected a polynomial string");
    try {
        return MultiPoly::parse(v.get<std::string>(), nvars);
    } catch (const std::exception& e) {
        throw ConfigError(where(key) + ": " + e.what());
    }
}

template <class T, class F>
void set_if(const Json& j, const char* key, T& field, F convert) {
    if (j.contains(key)) field = convert(j.at(key), key);
}

std::uint64_t to_u64(const Json& v, const char* key) {
    if (!v.is_number_unsigned() && !v.is_number_integer()) throw ConfigError(where(key) + ": expected an integer");
    return v.get<std::uint64_t>();
}

std::size_t to_size(const Json& v, const char* key) {
    const long x = to_long(v, key);
    if (x < 0) throw ConfigError(where(key) + ": must be nonnegative");
    return static_cast<std::size_t>(x);
}

}  // namespace

PowerSum parse_power_sum_json(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::exception& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    return to_power_sum(j, "power sum");
}

ScanConfig load_scan_config(std::string_view text, ScanConfig cfg) {
    const Json j = parse(text);
    check_keys(j, {"F", "G", "epsilon", "N", "extra_S", "mode", "rows", "slope_bound", "kappa_max",
                   "min_cluster_size"});
    set_if(j, "F", cfg.F, to_power_sum);
    set_if(j, "G", cfg.G, to_power_sum);
    set_if(j, "epsilon", cfg.epsilon, to_rational);
    set_if(j, "N", cfg.N, to_long);
    set_if(j, "extra_S", cfg.extra_S, to_place_set);
    set_if(j, "slope_bound", cfg.slope_bound, to_long);
    set_if(j, "kappa_max", cfg.kappa_max, to_long);
    set_if(j, "min_cluster_size", cfg.min_cluster_size, to_size);
    if (j.contains("mode")) {
        const std::string mode = to_text(j.at("mode"), "mode");
        if (mode == "diagonal") {
            cfg.mode = ScanMode::diagonal;
        } else if (mode == "full_grid" || mode == "full-grid") {
            cfg.mode = ScanMode::full_grid;
        } else {
            throw ConfigError("field \"mode\": expected diagonal or full_grid");
        }
    }
    if (j.contains("rows")) {
        const std::string rows = to_text(j.at("rows"), "rows");
        if (rows == "all") {
            cfg.rows = RowFilter::all;
        } else if (rows == "nonzero") {
            cfg.rows = RowFilter::nonzero;
        } else if (rows == "flagged") {
            cfg.rows = RowFilter::flagged;
        } else {
            throw ConfigError("field \"rows\": expected all, nonzero or flagged");
        }
    }
    return cfg;
}

SampleConfig load_sample_config(std::string_view text, SampleConfig cfg) {
    const Json j = parse(text);
    check_keys(j, {"nvars", "f", "g", "S", "delta", "count", "generator_exponent_bound", "perturbation_bound", "seed",
                   "max_attempts", "points"});
    std::size_t nvars = cfg.f.nvars();
    set_if(j, "nvars", nvars, to_size);
    if (nvars < 1) throw ConfigError("field \"nvars\": must be positive");
    if (j.contains("f")) cfg.f = to_poly(j.at("f"), nvars, "f");
    if (j.contains("g")) cfg.g = to_poly(j.at("g"), nvars, "g");
    set_if(j, "S", cfg.S, to_place_set);
    set_if(j, "delta", cfg.delta, to_rational);
    set_if(j, "count", cfg.count, to_size);
    set_if(j, "generator_exponent_bound", cfg.generator_exponent_bound, to_long);
    set_if(j, "perturbation_bound", cfg.perturbation_bound, to_long);
    set_if(j, "seed", cfg.seed, to_u64);
    set_if(j, "max_attempts", cfg.max_attempts, to_size);
    if (j.contains("points")) {
        cfg.points.clear();
        for (const auto& p : j.at("points")) {
            try {
                cfg.points.emplace_back(to_rationals(p, "points"));
            } catch (const ConfigError&) {
                throw;
            } catch (const std::exception& e) {
                throw ConfigError(std::string("field \"points\": ") + e.what());
            }
        }
    }
    return cfg;
}

PkConfig load_pk_config(std::string_view text, PkConfig cfg) {
    const Json j = parse(text);
    check_keys(j, {"p", "epsilon", "kmax"});
    set_if(j, "p", cfg.p, to_integer);
    set_if(j, "epsilon", cfg.epsilon, to_rational);
    set_if(j, "kmax", cfg.kmax, to_long);
    return cfg;
}

SharpnessConfig load_sharpness_config(std::string_view text, SharpnessConfig cfg) {
    const Json j = parse(text);
    check_keys(j, {"p", "delta", "trials", "m_start"});
    set_if(j, "p", cfg.p, to_integer);
    set_if(j, "delta", cfg.delta, to_rational);
    set_if(j, "trials", cfg.trials, to_long);
    set_if(j, "m_start", cfg.m_start, to_long);
    return cfg;
}

Rec1Config load_rec1_config(std::string_view text, Rec1Config cfg) {
    const Json j = parse(text);
    check_keys(j, {"F", "place", "epsilon", "N"});
    set_if(j, "F", cfg.F, to_power_sum);
    set_if(j, "place", cfg.v, to_place);
    set_if(j, "epsilon", cfg.epsilon, to_rational);
    set_if(j, "N", cfg.N, to_long);
    return cfg;
}

UnitEqConfig load_unit_eq_config(std::string_view text, UnitEqConfig cfg) {
    const Json j = parse(text);
    check_keys(j, {"S", "n", "exponent_bound", "delta", "extra_values", "budget"});
    set_if(j, "S", cfg.S, to_place_set);
    set_if(j, "n", cfg.n, to_long);
    set_if(j, "exponent_bound", cfg.exponent_bound, to_long);
    if (j.contains("delta")) cfg.delta = to_rational(j.at("delta"), "delta");
    set_if(j, "extra_values", cfg.extra_values, to_rationals);
    set_if(j, "budget", cfg.budget, to_size);
    return cfg;
}

HilbertSweepConfig load_hilbert_config(std::string_view text, HilbertSweepConfig cfg) {
    const Json j = parse(text);
    check_keys(j, {"max_n", "max_degree", "extra_l", "pairs_per_cell", "seed"});
    set_if(j, "max_n", cfg.max_n, to_long);
    set_if(j, "max_degree", cfg.max_degree, to_long);
    set_if(j, "extra_l", cfg.extra_l, to_long);
    set_if(j, "pairs_per_cell", cfg.pairs_per_cell, to_size);
    set_if(j, "seed", cfg.seed, to_u64);
    return cfg;
}

}  // namespace gcdlab::harness
