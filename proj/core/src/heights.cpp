#include "gcdlab/heights.hpp"

#include "gcdlab/multipoly.hpp"
#include "gcdlab/primes.hpp"

#include <algorithm>

namespace gcdlab {

namespace {

// Removes every prime of S from z (> 0) and returns the rest.
Integer strip_primes(Integer z, const PlaceSet& S) {
    for (const auto& p : S.finite_primes()) {
        while (mpz_divisible_p(z.get_mpz_t(), p.get_mpz_t()) != 0) {
            mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
        }
    }
    return z;
}

}  // namespace

ProjPoint::ProjPoint(const std::vector<Rational>& coords) {
    if (coords.empty()) throw DomainError("projective point needs coordinates");
    if (std::all_of(coords.begin(), coords.end(), [](const Rational& q) { return q == 0; })) {
        throw DomainError("projective point with all coordinates zero");
    }
    Integer lcm_den = 1;
    for (const auto& q : coords) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
    Integer g = 0;
    coords_.reserve(coords.size());
    for (const auto& q : coords) {
        Integer c = q.get_num() * (lcm_den / q.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        coords_.push_back(c);
    }
    Integer lead;
    for (const auto& c : coords_) {
        if (c != 0) {
            lead = c;
            break;
        }
    }
    if (lead < 0) g = -g;
    for (auto& c : coords_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

std::vector<Rational> ProjPoint::rational_coords() const {
    std::vector<Rational> out;
    for (const auto& c : coords_) out.emplace_back(c);
    return out;
}

TorusPoint::TorusPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw DomainError("torus point needs coordinates");
    for (const auto& q : coords_) {
        if (q == 0) throw DomainError("torus point with a zero coordinate");
    }
}

TorusPoint TorusPoint::inverse() const {
    std::vector<Rational> inv;
    for (const auto& q : coords_) inv.push_back(1 / q);
    return TorusPoint(std::move(inv));
}

AlmostUnitConfig::AlmostUnitConfig(PlaceSet s, Rational delta) : s_(std::move(s)), delta_(std::move(delta)) {
    if (!s_.contains_archimedean()) throw DomainError("S must contain the archimedean place");
    if (delta_ < 0 || delta_ >= 1) throw DomainError("delta must lie in [0, 1)");
}

LogReal local_height(const Rational& x, const Place& v) {
    if (x == 0) return {};
    if (v.is_archimedean()) {
        Rational a = abs(x);
        return a > 1 ? LogReal::log_of(a) : LogReal{};
    }
    long e = valuation(x, v.prime());
    return e < 0 ? LogReal::log_prime(v.prime(), Rational(-e)) : LogReal{};
}

LogReal height(const Rational& x) {
    if (x == 0) return {};
    Integer num = abs(x.get_num());
    return LogReal::log_of(num > x.get_den() ? num : x.get_den());
}

LogReal proj_height(const ProjPoint& P) {
    Integer best = 0;
    for (const auto& c : P.coords()) {
        Integer a = abs(c);
        if (a > best) best = a;
    }
    return LogReal::log_of(best);
}

LogReal log_max_abs(const std::vector<Rational>& coords, const Place& v) {
    bool any = false;
    if (v.is_archimedean()) {
        Rational best = 0;
        for (const auto& c : coords) {
            if (c == 0) continue;
            any = true;
            if (abs(c) > best) best = abs(c);
        }
        if (!any) throw DomainError("log_max_abs of an all-zero tuple");
        return LogReal::log_of(best);
    }
    long best = 0;
    for (const auto& c : coords) {
        if (c == 0) continue;
        long e = -valuation(c, v.prime());
        if (!any || e > best) best = e;
        any = true;
    }
    if (!any) throw DomainError("log_max_abs of an all-zero tuple");
    return LogReal::log_prime(v.prime(), Rational(best));
}

LogReal tuple_local_height(const TorusPoint& u, const Place& v) {
    std::vector<Rational> with_one{Rational(1)};
    with_one.insert(with_one.end(), u.coords().begin(), u.coords().end());
    return log_max_abs(with_one, v);
}

TupleHeights tuple_heights(const TorusPoint& u) {
    TupleHeights out;
    std::vector<Rational> with_one{Rational(1)};
    with_one.insert(with_one.end(), u.coords().begin(), u.coords().end());
    out.height = proj_height(ProjPoint(with_one));
    for (const auto& v : joint_support(u.coords())) {
        LogReal l = tuple_local_height(u, v);
        if (!l.is_zero()) out.local.emplace(v, std::move(l));
    }
    for (const auto& x : u.coords()) out.standard_height += height(x);
    return out;
}

LogReal h_sbar(const Rational& x, const PlaceSet& S) {
    if (x == 0) throw DomainError("h_Sbar of zero");
    LogReal out = LogReal::log_of(strip_primes(abs(x.get_num()), S));
    out += LogReal::log_of(strip_primes(x.get_den(), S));
    if (!S.contains_archimedean()) {
        out += local_height(x, Place::archimedean());
        out += local_height(1 / x, Place::archimedean());
    }
    return out;
}

LogReal h_sbar(const TorusPoint& u, const PlaceSet& S) {
    // Work over a coprime base of all non-S parts; every numerator and
    // denominator is a product of powers of the base elements, so the
    // multiplicity of a base element agrees with the valuation at each of
    // its prime factors.
    std::vector<Integer> parts;
    std::vector<std::pair<Integer, Integer>> stripped;
    for (const auto& x : u.coords()) {
        Integer n = strip_primes(abs(x.get_num()), S);
        Integer d = strip_primes(x.get_den(), S);
        for (const Integer* z : {&n, &d}) {
            for (const auto& f : factorize(*z)) parts.push_back(f.base);
        }
        stripped.emplace_back(std::move(n), std::move(d));
    }
    LogReal out;
    for (const auto& b : coprime_base(parts)) {
        long max_neg = 0;
        long max_pos = 0;
        for (const auto& [n, d] : stripped) {
            long e = multiplicity(n, b) - multiplicity(d, b);
            max_neg = std::max(max_neg, -e);
            max_pos = std::max(max_pos, e);
        }
        out += LogReal::log_of(b) * Rational(max_neg + max_pos);
    }
    if (!S.contains_archimedean()) {
        out += tuple_local_height(u, Place::archimedean());
        out += tuple_local_height(u.inverse(), Place::archimedean());
    }
    return out;
}

LogReal h_sbar_standard(const TorusPoint& u, const PlaceSet& S) {
    LogReal out;
    for (const auto& x : u.coords()) out += h_sbar(x, S);
    return out;
}

bool is_almost_unit(const Rational& x, const AlmostUnitConfig& cfg) {
    LogReal slack = height(x) * cfg.delta() - h_sbar(x, cfg.S());
    return slack.sign() != Sign::negative;
}

bool is_almost_unit(const TorusPoint& u, const AlmostUnitConfig& cfg) {
    LogReal slack = tuple_heights(u).height * cfg.delta() - h_sbar(u, cfg.S());
    return slack.sign() != Sign::negative;
}

bool is_almost_unit_standard(const TorusPoint& u, const AlmostUnitConfig& cfg) {
    LogReal standard;
    for (const auto& x : u.coords()) standard += height(x);
    LogReal slack = standard * cfg.delta() - h_sbar_standard(u, cfg.S());
    return slack.sign() != Sign::negative;
}

bool is_quasi_s_integer(const Rational& x, const PlaceSet& S, const Rational& eps) {
    LogReal inside;
    for (const auto& v : S.places()) inside += local_height(x, v);
    return (inside - height(x) * eps).sign() != Sign::negative;
}

LogReal hypersurface_local_height(const MultiPoly& F, const std::vector<Rational>& coords, const Place& v) {
    if (F.nvars() != coords.size()) throw DomainError("hypersurface and point live in different spaces");
    if (!F.is_homogeneous()) throw DomainError("hypersurface polynomial must be homogeneous");
    Rational value = F.eval(coords);
    if (value == 0) throw DomainError("point lies on the hypersurface");
    LogReal out = log_max_abs(coords, v) * Rational(F.total_degree());
    out -= log_abs(value, v);
    return out;
}

LogReal hypersurface_local_height(const MultiPoly& F, const ProjPoint& P, const Place& v) {
    return hypersurface_local_height(F, P.rational_coords(), v);
}

}  // namespace gcdlab
