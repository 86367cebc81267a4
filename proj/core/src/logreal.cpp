#include "gcdlab/logreal.hpp"

#include "gcdlab/primes.hpp"

#include <vector>

namespace gcdlab {

namespace {

bool is_big(const Integer& key) { return !fits_u64(key); }

// Replaces any composite key below 2^64 by its prime factorization. Such keys
// only appear transiently, as gcds of two unsplit large cofactors.
void split_small_composites(LogReal::Terms& terms) {
    std::vector<std::pair<Integer, Rational>> pending;
    for (auto it = terms.begin(); it != terms.end();) {
        if (!is_big(it->first) && !is_prime_u64(to_u64(it->first))) {
            pending.emplace_back(it->first, it->second);
            it = terms.erase(it);
        } else {
            ++it;
        }
    }
    for (const auto& [key, coeff] : pending) {
        for (const auto& f : factorize(key)) {
            Rational& slot = terms[f.base];
            slot += coeff * f.exponent;
            if (slot == 0) terms.erase(f.base);
        }
    }
}

bool needs_refinement(const LogReal::Terms& a, const LogReal::Terms& b) {
    Integer g;
    auto check = [&](const LogReal::Terms& bigs, const LogReal::Terms& others) {
        for (const auto& [k, c] : bigs) {
            if (!is_big(k)) continue;
            for (const auto& [j, d] : others) {
                if (j == k) continue;
                mpz_gcd(g.get_mpz_t(), k.get_mpz_t(), j.get_mpz_t());
                if (g != 1) return true;
            }
        }
        return false;
    };
    return check(a, b) || check(b, a);
}

void accumulate(LogReal::Terms& into, const Integer& key, const Rational& value) {
    if (value == 0) return;
    auto [it, inserted] = into.try_emplace(key, value);
    if (!inserted) {
        it->second += value;
        if (it->second == 0) into.erase(it);
    }
}

}  // namespace

LogReal LogReal::log_of(const Integer& positive) {
    if (positive <= 0) throw DomainError("log of a non-positive integer");
    LogReal out;
    if (positive == 1) return out;
    for (const auto& f : factorize(positive)) accumulate(out.terms_, f.base, Rational(f.exponent));
    split_small_composites(out.terms_);
    return out;
}

LogReal LogReal::log_of(const Rational& positive) {
    if (positive <= 0) throw DomainError("log of a non-positive rational");
    LogReal out = log_of(positive.get_num());
    out -= log_of(positive.get_den());
    return out;
}

LogReal LogReal::log_prime(const Integer& prime, const Rational& coeff) {
    LogReal out;
    if (prime <= 1) throw DomainError("log_prime requires a prime");
    accumulate(out.terms_, prime, coeff);
    return out;
}

Rational LogReal::coefficient(const Integer& base) const {
    auto it = terms_.find(base);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LogReal::add_scaled(const LogReal& rhs, const Rational& scale) {
    if (scale == 0 || rhs.is_zero()) return;
    if (!needs_refinement(terms_, rhs.terms_)) {
        for (const auto& [k, c] : rhs.terms_) accumulate(terms_, k, c * scale);
        return;
    }
    std::vector<Integer> keys;
    for (const auto& [k, c] : terms_) keys.push_back(k);
    for (const auto& [k, c] : rhs.terms_) keys.push_back(k);
    const std::vector<Integer> base = coprime_base(keys);

    Terms merged;
    auto spread = [&](const Terms& src, const Rational& s) {
        for (const auto& [k, c] : src) {
            for (const auto& b : base) {
                if (mpz_divisible_p(k.get_mpz_t(), b.get_mpz_t()) == 0) continue;
                accumulate(merged, b, c * s * multiplicity(k, b));
            }
        }
    };
    spread(terms_, 1);
    spread(rhs.terms_, scale);
    split_small_composites(merged);
    terms_ = std::move(merged);
}

LogReal& LogReal::operator+=(const LogReal& rhs) {
    add_scaled(rhs, 1);
    return *this;
}

LogReal& LogReal::operator-=(const LogReal& rhs) {
    add_scaled(rhs, -1);
    return *this;
}

LogReal& LogReal::operator*=(const Rational& scale) {
    if (scale == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= scale;
    return *this;
}

LogReal LogReal::operator-() const {
    LogReal out = *this;
    out *= -1;
    return out;
}

Interval LogReal::enclose(long precision) const {
    Interval sum = Interval::exact(0, precision);
    for (const auto& [k, c] : terms_) {
        sum = sum + Interval::exact(c, precision) * Interval::log_of(k, precision);
    }
    return sum;
}

Sign LogReal::sign(long precision) const {
    if (terms_.empty()) return Sign::zero;
    bool all_pos = true;
    bool all_neg = true;
    for (const auto& [k, c] : terms_) {
        all_pos = all_pos && c > 0;
        all_neg = all_neg && c < 0;
    }
    if (all_pos) return Sign::positive;
    if (all_neg) return Sign::negative;
    return certified_sign([this](long prec) { return enclose(prec); }, precision);
}

std::string LogReal::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rational mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1) out += gcdlab::to_string(mag) + "*";
        out += "log(" + k.get_str() + ")";
        first = false;
    }
    return out;
}

std::string LogReal::to_decimal(int digits, long precision) const {
    if (terms_.empty()) return "0";
    return enclose(precision).midpoint_string(digits);
}

double LogReal::to_double() const {
    if (terms_.empty()) return 0.0;
    return enclose(64).midpoint_double();
}

Sign compare(const LogReal& a, const Rational& q, long precision) {
    if (q == 0) return a.sign(precision);
    if (a.is_zero()) return sign_of(-sgn(q));
    return certified_sign([&](long prec) { return a.enclose(prec) - Interval::exact(q, prec); }, precision);
}

Sign compare_sqrt_scaled(const LogReal& a, const Rational& s, const Rational& r, const LogReal& b,
                         long precision) {
    if (r < 0) throw DomainError("compare_sqrt_scaled: negative radicand");
    if (s == 0 || r == 0 || b.is_zero()) return a.sign(precision);
    Rational root;
    if (is_rational_square(r, &root)) return (a - b * (s * root)).sign(precision);
    // sqrt(r) is irrational; by linear independence of logarithms over the
    // algebraic numbers the difference vanishes only if a and b both do.
    return certified_sign(
        [&](long prec) {
            return a.enclose(prec) - Interval::exact(s, prec) * Interval::exact(r, prec).sqrt() * b.enclose(prec);
        },
        precision);
}

}  // namespace gcdlab
